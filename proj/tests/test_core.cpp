#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modlearn/combinators.hpp"
#include "modlearn/core.hpp"
#include "modlearn/learners.hpp"
#include "oracle_helpers.hpp"

using namespace modlearn;
using namespace testhelp;

namespace {

Point pt(long long v) { return Point::integer(v); }
Point pp(const char* s, long long v) {
  return Point::pair(prefix_str_from_string(s), v);
}
ConceptDesc iv(long long lo, long long hi) { return ConceptDesc::interval(lo, hi); }
ConceptDesc cp(const char* s) {
  return ConceptDesc::prefix(prefix_str_from_string(s));
}

// A learner that needs Pos answers forever.
class NeverDoneLearner : public Learner {
 public:
  LearnerEvent next() override { return LearnerEvent::need(Query::pos()); }
  void feed(const Answer&) override {}
};

// Checks every honest-oracle transcript entry: valid per the query contract
// and, for counterexamples, minimal under the canonical order.
void check_honest_transcript(const ClassId& cls, const ConceptDesc& target,
                             const std::vector<TranscriptEntry>& transcript) {
  std::set<Point> issued;
  for (const auto& entry : transcript) {
    REQUIRE(answer_is_valid(cls, target, entry.query, entry.answer, &issued));
    if (entry.answer.kind() == Answer::Kind::Positive &&
        entry.query.kind == QueryKind::Pos) {
      issued.insert(entry.answer.point());
    }
    if (entry.answer.kind() == Answer::Kind::Counterexample) {
      const Point& x = entry.answer.point();
      std::optional<Point> least;
      switch (entry.query.kind) {
        case QueryKind::Sub:
          least = brute_diff_witness(cls, *entry.query.concept_, target);
          break;
        case QueryKind::Sup:
          least = brute_diff_witness(cls, target, *entry.query.concept_);
          break;
        case QueryKind::EQ: {
          auto a = brute_diff_witness(cls, *entry.query.concept_, target);
          auto b = brute_diff_witness(cls, target, *entry.query.concept_);
          if (a && b) least = std::min(*a, *b);
          else least = a ? a : b;
          break;
        }
        default:
          break;
      }
      REQUIRE(least.has_value());
      REQUIRE(*least == x);
    }
  }
}

}  // namespace

TEST_CASE("honest oracle answers from the query table") {
  ClassId cls = ClassId::intervals(16);
  HonestOracle oracle(cls, iv(2, 5));
  CHECK(oracle.answer(Query::mem(pt(3))).is_yes());
  CHECK(oracle.answer(Query::mem(pt(6))).kind() == Answer::Kind::No);

  Answer sup = oracle.answer(Query::sup(iv(4, 9)));
  REQUIRE(sup.kind() == Answer::Kind::Counterexample);
  CHECK(sup.point() == pt(2));
  CHECK(oracle.answer(Query::sup(iv(0, 9))).is_yes());

  Answer sub = oracle.answer(Query::sub(iv(4, 9)));
  REQUIRE(sub.kind() == Answer::Kind::Counterexample);
  CHECK(sub.point() == pt(6));
  CHECK(oracle.answer(Query::sub(iv(3, 5))).is_yes());

  CHECK(oracle.answer(Query::eq(iv(2, 5))).is_yes());
  Answer one = oracle.answer(Query::one_pos());
  REQUIRE(one.kind() == Answer::Kind::Positive);
  CHECK(one.point() == pt(2));

  CHECK_THROWS_AS(oracle.answer(Query::ex()), Error);
}

TEST_CASE("honest equivalence counterexample on prefix concepts") {
  ClassId cls = ClassId::prefix_class(8, 3);
  HonestOracle oracle(cls, cp("12"));
  Answer a = oracle.answer(Query::eq(cp("1")));
  REQUIRE(a.kind() == Answer::Kind::Counterexample);
  // Least point of the symmetric difference, verified by enumeration.
  auto left = brute_diff_witness(cls, cp("1"), cp("12"));
  auto right = brute_diff_witness(cls, cp("12"), cp("1"));
  REQUIRE(left.has_value());
  REQUIRE(right.has_value());
  CHECK(a.point() == std::min(*left, *right));
  CHECK(a.point() == pp("1", 2));
}

TEST_CASE("positive answers never repeat and exhaust cleanly") {
  ClassId cls = ClassId::intervals(8);
  HonestOracle oracle(cls, iv(2, 4));
  std::set<Point> seen;
  for (int i = 0; i < 3; ++i) {
    Answer a = oracle.answer(Query::pos());
    REQUIRE(a.kind() == Answer::Kind::Positive);
    CHECK(seen.insert(a.point()).second);
  }
  CHECK(oracle.answer(Query::pos()).kind() == Answer::Kind::NoSuchExample);
  CHECK(seen == std::set<Point>{pt(2), pt(3), pt(4)});
}

TEST_CASE("record_query counts one kind at a time") {
  QueryStats stats;
  stats = record_query(stats, QueryKind::Mem);
  CHECK(stats.count(QueryKind::Mem) == 1);
  CHECK(stats.total == 1);
  stats = record_query(stats, QueryKind::EQ);
  stats = record_query(stats, QueryKind::Mem);
  CHECK(stats.count(QueryKind::Mem) == 2);
  CHECK(stats.count(QueryKind::EQ) == 1);
  CHECK(stats.total == 3);

  QueryStats many;
  for (int i = 0; i < 17; ++i) many = record_query(many, QueryKind::Sup);
  CHECK(many.total == 17);
  CHECK(many.count(QueryKind::Sup) == 17);
}

TEST_CASE("a learner that is already done makes no queries") {
  ClassId cls = ClassId::intervals(8);
  HonestOracle oracle(cls, iv(0, 7));
  ScriptedLearner learner({LearnerEvent::finished(iv(0, 7))});
  SessionResult result = run_session(learner, oracle);
  CHECK(result.stats.total == 0);
  CHECK(result.transcript.empty());
}

TEST_CASE("singleton membership learner queries 0,1,2 in order") {
  ClassId cls = ClassId::singletons(4);
  HonestOracle oracle(cls, ConceptDesc::singleton(2));
  VersionSpaceLearner learner(cls, QueryKind::Mem);
  SessionResult result = run_session(learner, oracle);
  CHECK(result.hypothesis == ConceptDesc::singleton(2));
  CHECK(result.stats.count(QueryKind::Mem) <= 4);
  REQUIRE(result.transcript.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(*result.transcript[i].query.point == pt(i));
  }
}

TEST_CASE("budget exhaustion reports the spent stats") {
  ClassId cls = ClassId::intervals(8);
  HonestOracle oracle(cls, iv(2, 4));
  NeverDoneLearner learner;
  try {
    run_session(learner, oracle, 3);
    FAIL("expected BudgetExhaustedError");
  } catch (const BudgetExhaustedError& e) {
    CHECK(e.stats.total == 3);
    CHECK(e.transcript.size() == 3);
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
  CHECK_THROWS_AS(run_session(learner, oracle, 0), Error);
}

TEST_CASE("honest transcripts satisfy the query contracts with least witnesses") {
  struct Config {
    ClassId cls;
    ConceptDesc target;
    QueryKind kind;
  };
  std::vector<Config> configs = {
      {ClassId::intervals(16), iv(3, 5), QueryKind::Sup},
      {ClassId::intervals(16), iv(3, 5), QueryKind::Sub},
      {ClassId::intervals(16), iv(0, 15), QueryKind::EQ},
      {ClassId::singletons(4), ConceptDesc::singleton(3), QueryKind::Mem},
      {ClassId::finite_sets(4), ConceptDesc::finite_set({1, 3}), QueryKind::Sup},
      {ClassId::prefix_class(6, 2), cp("41"), QueryKind::EQ},
      {ClassId::pair_demo_right(6), iv(-6, -1), QueryKind::Pos},
  };
  for (const auto& config : configs) {
    HonestOracle oracle(config.cls, config.target);
    VersionSpaceLearner learner(config.cls, config.kind);
    SessionResult result = run_session(learner, oracle);
    CHECK(extensionally_equal(config.cls, result.hypothesis, config.target));
    check_honest_transcript(config.cls, config.target, result.transcript);
    CHECK(result.stats.total == static_cast<long long>(result.transcript.size()));

    // Recount: per-kind counters match the transcript.
    QueryStats recount;
    for (const auto& e : result.transcript) recount.record(e.query.kind);
    CHECK(recount.total == result.stats.total);
    for (int k = 0; k < kQueryKindCount; ++k) {
      CHECK(recount.counts[k] == result.stats.counts[k]);
    }
  }
}

TEST_CASE("sessions are deterministic") {
  ClassId cls = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(3, 5), iv(2, 8)});
  auto run_once = [&]() {
    HonestOracle oracle(cls, target);
    std::vector<SublearnerSpec> subs = {
        make_sublearner(ClassId::intervals(16), QueryKind::Sup),
        make_sublearner(ClassId::intervals(16), QueryKind::Sup)};
    return learn_product_sup(subs, oracle);
  };
  SessionResult a = run_once();
  SessionResult b = run_once();
  CHECK(serialize_transcript(cls, a.transcript) ==
        serialize_transcript(cls, b.transcript));
}

TEST_CASE("golden transcript of the superset product session") {
  ClassId cls = ClassId::product({ClassId::intervals(16), ClassId::intervals(16)});
  ConceptDesc target = ConceptDesc::product({iv(3, 5), iv(2, 8)});
  HonestOracle oracle(cls, target);
  std::vector<SublearnerSpec> subs = {
      make_sublearner(ClassId::intervals(16), QueryKind::Sup),
      make_sublearner(ClassId::intervals(16), QueryKind::Sup)};
  SessionResult result = learn_product_sup(subs, oracle);
  CHECK(serialize_transcript(cls, result.transcript) ==
        "0 Sup prod([0,0],[0,0]) -> CE (3,2)\n"
        "1 Sup prod([3,3],[2,2]) -> CE (3,3)\n"
        "2 Sup prod([3,3],[2,3]) -> CE (3,4)\n"
        "3 Sup prod([3,3],[2,4]) -> CE (3,5)\n"
        "4 Sup prod([3,3],[2,5]) -> CE (3,6)\n"
        "5 Sup prod([3,3],[2,6]) -> CE (3,7)\n"
        "6 Sup prod([3,3],[2,7]) -> CE (3,8)\n"
        "7 Sup prod([3,3],[2,8]) -> CE (4,2)\n"
        "8 Sup prod([3,4],[2,8]) -> CE (5,2)\n"
        "9 Sup prod([3,5],[2,8]) -> Yes\n");
}

TEST_CASE("learner events freeze after completion") {
  ClassId cls = ClassId::singletons(2);
  HonestOracle oracle(cls, ConceptDesc::singleton(0));
  VersionSpaceLearner learner(cls, QueryKind::Mem);
  run_session(learner, oracle);
  LearnerEvent e1 = learner.next();
  LearnerEvent e2 = learner.next();
  CHECK(e1.done);
  CHECK(e2.done);
  CHECK(e1.hypothesis == e2.hypothesis);
  CHECK_THROWS_AS(learner.feed(Answer::no()), Error);
}
