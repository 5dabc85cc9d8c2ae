#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modlearn/combinators.hpp"
#include "oracle_helpers.hpp"

using namespace modlearn;
using namespace testhelp;

namespace {

Point pt(long long v) { return Point::integer(v); }
Point pv(std::vector<long long> vals) {
  std::vector<Point> coords;
  for (long long v : vals) coords.push_back(pt(v));
  return Point::vec(std::move(coords));
}
Point pp(const char* s, long long v) {
  return Point::pair(prefix_str_from_string(s), v);
}
ConceptDesc iv(long long lo, long long hi) { return ConceptDesc::interval(lo, hi); }
ConceptDesc sg(long long j) { return ConceptDesc::singleton(j); }
ConceptDesc cp(const char* s) {
  return ConceptDesc::prefix(prefix_str_from_string(s));
}

std::vector<ClassId> class_parts(const ClassId& cls) {
  if (cls.arity() == 1) return {cls};
  return cls.parts();
}

std::vector<SublearnerSpec> subs_for(const ClassId& product, QueryKind kind) {
  std::vector<SublearnerSpec> subs;
  for (const auto& part : class_parts(product)) subs.push_back(make_sublearner(part, kind));
  return subs;
}

long long standalone_sum(const ClassId& product, QueryKind kind,
                         const ConceptDesc& target) {
  long long sum = 0;
  auto parts = target.parts_or_self(product.arity());
  auto classes = class_parts(product);
  for (int i = 0; i < product.arity(); ++i) {
    sum += measure_standalone(make_sublearner(classes[i], kind), parts[i]).total;
  }
  return sum;
}

long long standalone_max(const ClassId& product, QueryKind kind,
                         const ConceptDesc& target) {
  long long best = 0;
  auto parts = target.parts_or_self(product.arity());
  auto classes = class_parts(product);
  for (int i = 0; i < product.arity(); ++i) {
    best = std::max(best,
                    measure_standalone(make_sublearner(classes[i], kind), parts[i])
                        .total);
  }
  return best;
}

// Replays every answer a combinator fed to its sublearners against the
// honest contract for that sublearner's component target.
void check_sub_feeds(const CombinatorLearner& learner, const ClassId& product,
                     const ConceptDesc& target) {
  auto parts = target.parts_or_self(product.arity());
  auto classes = class_parts(product);
  for (int i = 0; i < product.arity(); ++i) {
    for (const auto& entry : learner.sub_feeds()[static_cast<size_t>(i)]) {
      REQUIRE(answer_is_valid(classes[i], parts[i], entry.query, entry.answer));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Superset queries

TEST_CASE("superset combinator learns interval products within the summed counts") {
  ClassId product = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(3, 5), iv(2, 8)});
  long long bound = standalone_sum(product, QueryKind::Sup, target);
  HonestOracle oracle(product, target);
  std::vector<SublearnerSpec> subs = subs_for(product, QueryKind::Sup);
  ProductSupLearner learner(subs);
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  CHECK(result.stats.count(QueryKind::Sup) <= bound);
  CHECK(result.stats.total == result.stats.count(QueryKind::Sup));
  check_sub_feeds(learner, product, target);
}

TEST_CASE("one-dimensional products degenerate to the standalone sublearner") {
  ClassId cls = ClassId::intervals(16);
  ConceptDesc target = iv(3, 5);
  HonestOracle standalone_oracle(cls, target);
  auto standalone = make_sublearner(cls, QueryKind::Sup).make();
  SessionResult standalone_result = run_session(*standalone, standalone_oracle);

  HonestOracle oracle(cls, target);
  SessionResult combined =
      learn_product_sup({make_sublearner(cls, QueryKind::Sup)}, oracle);
  CHECK(serialize_transcript(cls, combined.transcript) ==
        serialize_transcript(cls, standalone_result.transcript));
  CHECK(combined.hypothesis == standalone_result.hypothesis);
}

TEST_CASE("an empty product is settled by the single initial empty query") {
  ClassId product = ClassId::product({ClassId::finite_sets(3), ClassId::finite_sets(3)});
  HonestOracle oracle(product, ConceptDesc::empty());
  SessionResult result = learn_product_sup(subs_for(product, QueryKind::Sup), oracle);
  CHECK(result.hypothesis == ConceptDesc::empty());
  CHECK(result.stats.total == 1);
  REQUIRE(result.transcript.size() == 1);
  CHECK(*result.transcript[0].query.concept_ == ConceptDesc::empty());

  // A nonempty target in the same class spends the check and keeps going.
  ConceptDesc target = ConceptDesc::product(
      {ConceptDesc::finite_set({0}), ConceptDesc::finite_set({1, 2})});
  HonestOracle oracle2(product, target);
  SessionResult result2 = learn_product_sup(subs_for(product, QueryKind::Sup), oracle2);
  CHECK(extensionally_equal(product, result2.hypothesis, target));
}

// ---------------------------------------------------------------------------
// EQ/Sub with membership and one positive example

TEST_CASE("subset mode recovers interval products within both bounds") {
  ClassId product = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(3, 5), iv(2, 8)});
  long long sum = standalone_sum(product, QueryKind::Sub, target);
  HonestOracle oracle(product, target);
  std::vector<SublearnerSpec> subs = subs_for(product, QueryKind::Sub);
  ProductCexMemPosLearner learner(subs, pv({4, 2}), QueryKind::Sub);
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  CHECK(result.stats.count(QueryKind::Sub) <= sum);
  CHECK(result.stats.count(QueryKind::Mem) <= 2 * sum);
  check_sub_feeds(learner, product, target);
}

TEST_CASE("negative counterexamples are attributed through the positive example") {
  // Pending sub-queries [4,4] and [2,12]; counterexample (4,12) must be
  // blamed on dimension 2 because (4,2) is a member and (4,12) is not.
  std::vector<SublearnerSpec> subs;
  subs.push_back({ClassId::intervals(16), QueryKind::Sub, [] {
                    return std::make_unique<ScriptedLearner>(std::vector<LearnerEvent>{
                        LearnerEvent::need(Query::sub(iv(4, 4))),
                        LearnerEvent::finished(iv(4, 4))});
                  }});
  subs.push_back({ClassId::intervals(16), QueryKind::Sub, [] {
                    return std::make_unique<ScriptedLearner>(std::vector<LearnerEvent>{
                        LearnerEvent::need(Query::sub(iv(2, 12))),
                        LearnerEvent::finished(iv(2, 8))});
                  }});
  ProductCexMemPosLearner learner(subs, pv({4, 2}), QueryKind::Sub);

  LearnerEvent e = learner.next();
  CHECK(*e.query.concept_ == ConceptDesc::product({iv(4, 4), iv(2, 12)}));
  learner.feed(Answer::counterexample(pv({4, 12})));

  e = learner.next();  // validation of the positive example
  CHECK(e.query.kind == QueryKind::Mem);
  CHECK(*e.query.point == pv({4, 2}));
  learner.feed(Answer::yes());

  e = learner.next();  // dimension 1 probe: p[1 <- 4] is p itself
  CHECK(*e.query.point == pv({4, 2}));
  learner.feed(Answer::yes());

  e = learner.next();  // dimension 2 probe
  CHECK(*e.query.point == pv({4, 12}));
  learner.feed(Answer::no());

  // Dimension 2 received 12; dimension 1 received nothing.
  REQUIRE(learner.sub_feeds()[1].size() == 1);
  CHECK(learner.sub_feeds()[1][0].answer == Answer::counterexample(pt(12)));
  CHECK(learner.sub_feeds()[0].empty());

  e = learner.next();
  CHECK(*e.query.concept_ == ConceptDesc::product({iv(4, 4), iv(2, 8)}));
  learner.feed(Answer::yes());
  e = learner.next();
  REQUIRE(e.done);
  CHECK(e.hypothesis == ConceptDesc::product({iv(4, 4), iv(2, 8)}));
}

TEST_CASE("an immediately correct guess costs one EQ query and no memberships") {
  ClassId product = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(0, 0), iv(0, 0)});
  HonestOracle oracle(product, target);
  SessionResult result = learn_product_cex_mem_pos(subs_for(product, QueryKind::EQ),
                                                   oracle, pv({0, 0}), QueryKind::EQ);
  CHECK(result.stats.count(QueryKind::EQ) == 1);
  CHECK(result.stats.count(QueryKind::Mem) == 0);
  CHECK(extensionally_equal(product, result.hypothesis, target));
}

TEST_CASE("an invalid positive example is rejected when first used") {
  ClassId product = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(3, 5), iv(2, 8)});
  HonestOracle oracle(product, target);
  CHECK_THROWS_AS(learn_product_cex_mem_pos(subs_for(product, QueryKind::Sub), oracle,
                                            pv({0, 15}), QueryKind::Sub),
                  Error);
}

TEST_CASE("equivalence mode with positive counterexamples stays sound") {
  ClassId product = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(3, 5), iv(2, 8)});
  // Preferring positive witnesses forces the x in target-minus-query branch.
  HonestOracle oracle(product, target, CexPreference::PreferPositive);
  std::vector<SublearnerSpec> subs = subs_for(product, QueryKind::EQ);
  ProductCexMemPosLearner learner(subs, pv({4, 2}), QueryKind::EQ);
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  check_sub_feeds(learner, product, target);
}

// ---------------------------------------------------------------------------
// Membership with one positive example

TEST_CASE("sequential simulation through a positive example") {
  ClassId product = ClassId::product({ClassId::singletons(4), ClassId::singletons(4)});
  ConceptDesc target = ConceptDesc::product({sg(2), sg(3)});
  long long sum = standalone_sum(product, QueryKind::Mem, target);
  HonestOracle oracle(product, target);
  std::vector<SublearnerSpec> subs = subs_for(product, QueryKind::Mem);
  ProductMemPosLearner learner(subs, pv({2, 3}));
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  CHECK(result.stats.count(QueryKind::Mem) <= 2 * sum);
  check_sub_feeds(learner, product, target);
}

TEST_CASE("three-dimensional membership simulation stays within the bound") {
  ClassId part = ClassId::intervals(8);
  ClassId product = ClassId::product({part, part, part});
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    ConceptDesc target = sample_concept(product, rng);
    long long sum = standalone_sum(product, QueryKind::Mem, target);
    HonestOracle oracle(product, target);
    SessionResult result = learn_product_mem_pos(subs_for(product, QueryKind::Mem),
                                                 oracle, *witness(product, target));
    CHECK(extensionally_equal(product, result.hypothesis, target));
    CHECK(result.stats.count(QueryKind::Mem) <= 3 * sum);
  }
}

TEST_CASE("a single-concept class asks no membership queries") {
  ClassId product = ClassId::product({ClassId::singletons(0), ClassId::singletons(3)});
  ConceptDesc target = ConceptDesc::product({sg(0), sg(1)});
  HonestOracle oracle(product, target);
  SessionResult result = learn_product_mem_pos(subs_for(product, QueryKind::Mem),
                                               oracle, pv({0, 1}));
  CHECK(extensionally_equal(product, result.hypothesis, target));
  // Dimension one contributes nothing; dimension two costs its standalone
  // count plus the one-time validation query.
  long long dim2 = measure_standalone(make_sublearner(ClassId::singletons(3),
                                                      QueryKind::Mem),
                                      sg(1))
                       .total;
  CHECK(result.stats.count(QueryKind::Mem) <= dim2 + 1);
}

// ---------------------------------------------------------------------------
// Membership only

TEST_CASE("membership-only learning finds a positive product point") {
  ClassId product = ClassId::product({ClassId::singletons(2), ClassId::singletons(2)});
  ConceptDesc target = ConceptDesc::product({sg(1), sg(2)});
  HonestOracle oracle(product, target);
  std::vector<SublearnerSpec> subs = subs_for(product, QueryKind::Mem);
  ProductMemOnlyLearner learner(subs);
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  CHECK(result.stats.count(QueryKind::Mem) <= 9);
  bool found_positive = false;
  for (const auto& e : result.transcript) {
    if (e.answer.is_yes() && *e.query.point == pv({1, 2})) found_positive = true;
  }
  CHECK(found_positive);
  check_sub_feeds(learner, product, target);

  // Distinct queries only: no product point is asked twice.
  std::set<Point> seen;
  for (const auto& e : result.transcript) {
    CHECK(seen.insert(*e.query.point).second);
  }
}

TEST_CASE("membership-only learning of interval products") {
  ClassId product = ClassId::product({ClassId::intervals(8), ClassId::intervals(8)});
  ConceptDesc target = ConceptDesc::product({iv(6, 7), iv(0, 1)});
  long long max_mem = standalone_max(product, QueryKind::Mem, target);
  HonestOracle oracle(product, target);
  SessionResult result = learn_product_mem_only(subs_for(product, QueryKind::Mem),
                                                oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  CHECK(result.stats.count(QueryKind::Mem) <= (max_mem + 2) * (max_mem + 2));
}

TEST_CASE("a seeded fallback witness yields a round-one positive") {
  // Both components are the all-negative output {2}, so the seeded pools
  // already contain the target point (2,2).
  ClassId product = ClassId::product({ClassId::singletons(2), ClassId::singletons(2)});
  ConceptDesc target = ConceptDesc::product({sg(2), sg(2)});
  HonestOracle oracle(product, target);
  SessionResult result = learn_product_mem_only(subs_for(product, QueryKind::Mem),
                                                oracle);
  CHECK(extensionally_equal(product, result.hypothesis, target));
  bool positive_answer = false;
  for (size_t i = 0; i < result.transcript.size() && i < 4; ++i) {
    if (result.transcript[i].answer.is_yes()) positive_answer = true;
  }
  CHECK(positive_answer);
}

TEST_CASE("classes containing the empty concept are rejected upfront") {
  std::vector<SublearnerSpec> subs = {
      make_sublearner(ClassId::finite_sets(3), QueryKind::Mem),
      make_sublearner(ClassId::singletons(2), QueryKind::Mem)};
  try {
    ProductMemOnlyLearner learner(subs);
    FAIL("expected EmptyConceptClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyConceptClass);
  }
}

// ---------------------------------------------------------------------------
// Prefix class

TEST_CASE("prefix learner walks the counterexample chain") {
  ClassId cls = ClassId::prefix_class(8, 3);
  HonestOracle oracle(cls, cp("12"));
  SessionResult result = learn_prefix_eq(oracle);
  CHECK(result.hypothesis == cp("12"));
  REQUIRE(result.transcript.size() == 3);
  CHECK(*result.transcript[0].query.concept_ == cp(""));
  CHECK(result.transcript[0].answer == Answer::counterexample(pp("", 1)));
  CHECK(*result.transcript[1].query.concept_ == cp("1"));
  CHECK(result.transcript[1].answer == Answer::counterexample(pp("1", 2)));
  CHECK(*result.transcript[2].query.concept_ == cp("12"));
  CHECK(result.transcript[2].answer == Answer::yes());
}

TEST_CASE("the empty string needs a single query") {
  ClassId cls = ClassId::prefix_class(8, 3);
  HonestOracle oracle(cls, cp(""));
  SessionResult result = learn_prefix_eq(oracle);
  CHECK(result.stats.total == 1);
  CHECK(result.hypothesis == cp(""));
}

TEST_CASE("positive counterexamples jump straight to the longer string") {
  ClassId cls = ClassId::prefix_class(8, 3);
  HonestOracle oracle(cls, cp("12"), CexPreference::PreferPositive);
  SessionResult result = learn_prefix_eq(oracle);
  CHECK(result.hypothesis == cp("12"));
  REQUIRE(result.transcript.size() == 3);
  // The positive witness ("1", 0) jumps lambda -> "1", then ("12", 0)
  // jumps "1" -> "12".
  CHECK(result.transcript[0].answer == Answer::counterexample(pp("1", 0)));
  CHECK(result.transcript[1].answer == Answer::counterexample(pp("12", 0)));
  CHECK(result.transcript[2].answer == Answer::yes());
}

TEST_CASE("subset queries drive the same prefix learner") {
  ClassId cls = ClassId::prefix_class(8, 4);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    ConceptDesc target = sample_concept(cls, rng);
    HonestOracle oracle(cls, target);
    SessionResult result = learn_prefix_eq(oracle, QueryKind::Sub);
    CHECK(result.hypothesis == target);
    CHECK(result.stats.total <=
          static_cast<long long>(target.prefix_str().size()) + 1);
  }
}

// ---------------------------------------------------------------------------
// Disjoint unions

TEST_CASE("union of a pair demo component and intervals, equivalence mode") {
  ClassId uni = ClassId::union_of({ClassId::pair_demo_left(), ClassId::intervals(10)});
  ConceptDesc target =
      ConceptDesc::union_of({ConceptDesc::finite_set({0}), iv(2, 5)});
  long long sum = 0;
  sum += measure_standalone(make_sublearner(uni.parts()[0], QueryKind::EQ),
                            target.parts()[0])
             .total;
  sum += measure_standalone(make_sublearner(uni.parts()[1], QueryKind::EQ),
                            target.parts()[1])
             .total;
  HonestOracle oracle(uni, target);
  std::vector<SublearnerSpec> subs = subs_for(uni, QueryKind::EQ);
  DisjointUnionLearner learner(subs, QueryKind::EQ);
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(uni, result.hypothesis, target));
  CHECK(result.stats.count(QueryKind::EQ) <= sum);
  check_sub_feeds(learner, uni, target);
}

TEST_CASE("membership mode routes tagged queries to their dimension") {
  ClassId uni = ClassId::union_of({ClassId::singletons(3), ClassId::singletons(3)});
  ConceptDesc target = ConceptDesc::union_of({sg(1), sg(2)});
  HonestOracle oracle(uni, target);
  SessionResult result = learn_disjoint_union(subs_for(uni, QueryKind::Mem), oracle,
                                              QueryKind::Mem);
  CHECK(extensionally_equal(uni, result.hypothesis, target));

  // The tagged transcript splits into the two standalone transcripts.
  std::vector<std::vector<TranscriptEntry>> per_dim(2);
  for (const auto& e : result.transcript) {
    const Point& x = *e.query.point;
    REQUIRE(x.kind() == Point::Kind::Tagged);
    per_dim[static_cast<size_t>(x.tag())].push_back(
        {Query::mem(x.inner()), e.answer});
  }
  for (int i = 0; i < 2; ++i) {
    HonestOracle part_oracle(uni.parts()[i], target.parts()[i]);
    auto standalone = make_sublearner(uni.parts()[i], QueryKind::Mem).make();
    SessionResult expected = run_session(*standalone, part_oracle);
    REQUIRE(per_dim[i].size() == expected.transcript.size());
    for (size_t q = 0; q < per_dim[i].size(); ++q) {
      CHECK(*per_dim[i][q].query.point == *expected.transcript[q].query.point);
      CHECK(per_dim[i][q].answer == expected.transcript[q].answer);
    }
  }
}

TEST_CASE("a composite yes reaches every pending sublearner") {
  ClassId uni = ClassId::union_of({ClassId::intervals(6), ClassId::intervals(6)});
  ConceptDesc target = ConceptDesc::union_of({iv(0, 0), iv(0, 0)});
  HonestOracle oracle(uni, target);
  std::vector<SublearnerSpec> subs = subs_for(uni, QueryKind::Sup);
  DisjointUnionLearner learner(subs, QueryKind::Sup);
  SessionResult result = run_session(learner, oracle);
  CHECK(extensionally_equal(uni, result.hypothesis, target));
  bool dim0_yes = false, dim1_yes = false;
  for (const auto& e : learner.sub_feeds()[0]) dim0_yes |= e.answer.is_yes();
  for (const auto& e : learner.sub_feeds()[1]) dim1_yes |= e.answer.is_yes();
  CHECK(dim0_yes);
  CHECK(dim1_yes);
}

TEST_CASE("disjoint unions stay within the summed counts in all four modes") {
  ClassId uni = ClassId::union_of({ClassId::pair_demo_left(), ClassId::intervals(10)});
  std::mt19937_64 rng(31);
  for (QueryKind mode : {QueryKind::EQ, QueryKind::Sub, QueryKind::Sup, QueryKind::Mem}) {
    for (int t = 0; t < 15; ++t) {
      ConceptDesc target = sample_concept(uni, rng);
      long long sum = 0;
      for (size_t i = 0; i < 2; ++i) {
        sum += measure_standalone(make_sublearner(uni.parts()[i], mode),
                                  target.parts()[i])
                   .total;
      }
      HonestOracle oracle(uni, target);
      DisjointUnionLearner learner(subs_for(uni, mode), mode);
      SessionResult result = run_session(learner, oracle);
      CHECK(extensionally_equal(uni, result.hypothesis, target));
      CHECK(result.stats.total <= sum);
      check_sub_feeds(learner, uni, target);
    }
  }
}

// ---------------------------------------------------------------------------
// Randomized bound compliance across the configuration matrix

TEST_CASE("combinator bounds hold across the randomized matrix") {
  struct Config {
    ClassId product;
    ClassId small;  // universe <= 8 for the mem-only runs
  };
  std::vector<Config> configs;
  for (int k = 1; k <= 3; ++k) {
    std::vector<ClassId> parts(static_cast<size_t>(k), ClassId::intervals(16));
    std::vector<ClassId> small(static_cast<size_t>(k), ClassId::intervals(8));
    configs.push_back({ClassId::product(parts), ClassId::product(small)});
    std::vector<ClassId> sing(static_cast<size_t>(k), ClassId::singletons(4));
    std::vector<ClassId> sing_small(static_cast<size_t>(k), ClassId::singletons(3));
    configs.push_back({ClassId::product(sing), ClassId::product(sing_small)});
  }
  std::mt19937_64 rng(2026);
  for (const auto& config : configs) {
    int k = config.product.arity();
    for (int t = 0; t < 30; ++t) {
      ConceptDesc target = sample_concept(config.product, rng);
      auto positive = witness(config.product, target);
      REQUIRE(positive.has_value());

      {  // superset queries
        HonestOracle oracle(config.product, target);
        ProductSupLearner learner(subs_for(config.product, QueryKind::Sup));
        SessionResult r = run_session(learner, oracle);
        REQUIRE(extensionally_equal(config.product, r.hypothesis, target));
        CHECK(r.stats.count(QueryKind::Sup) <=
              standalone_sum(config.product, QueryKind::Sup, target));
        check_sub_feeds(learner, config.product, target);
      }
      for (QueryKind mode : {QueryKind::Sub, QueryKind::EQ}) {
        HonestOracle oracle(config.product, target);
        ProductCexMemPosLearner learner(subs_for(config.product, mode), *positive,
                                        mode);
        SessionResult r = run_session(learner, oracle);
        REQUIRE(extensionally_equal(config.product, r.hypothesis, target));
        long long sum = standalone_sum(config.product, mode, target);
        CHECK(r.stats.count(mode) <= sum);
        CHECK(r.stats.count(QueryKind::Mem) <= k * sum);
        check_sub_feeds(learner, config.product, target);
      }
      {  // membership plus one positive example
        HonestOracle oracle(config.product, target);
        ProductMemPosLearner learner(subs_for(config.product, QueryKind::Mem),
                                     *positive);
        SessionResult r = run_session(learner, oracle);
        REQUIRE(extensionally_equal(config.product, r.hypothesis, target));
        CHECK(r.stats.count(QueryKind::Mem) <=
              k * standalone_sum(config.product, QueryKind::Mem, target));
        check_sub_feeds(learner, config.product, target);
      }
      {  // membership only, on the small universe
        ConceptDesc small_target = sample_concept(config.small, rng);
        long long max_mem = standalone_max(config.small, QueryKind::Mem, small_target);
        long long bound = 1;
        for (int i = 0; i < k; ++i) bound *= (max_mem + 2);
        HonestOracle oracle(config.small, small_target);
        ProductMemOnlyLearner learner(subs_for(config.small, QueryKind::Mem));
        SessionResult r = run_session(learner, oracle);
        REQUIRE(extensionally_equal(config.small, r.hypothesis, small_target));
        CHECK(r.stats.count(QueryKind::Mem) <= bound);
      }
    }
  }
}
