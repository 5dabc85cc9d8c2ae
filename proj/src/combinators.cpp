#include "modlearn/combinators.hpp"

#include <algorithm>

namespace modlearn {

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::ProtocolViolation, what);
}

Point substitute(const Point& p, int k, int dim, const Point& value) {
  auto coords = p.coords_or_self(k);
  coords[dim] = value;
  return Point::vec(std::move(coords));
}

}  // namespace

// ---------------------------------------------------------------------------
// Superset-query product learner

ProductSupLearner::ProductSupLearner(std::vector<SublearnerSpec> subs) {
  if (subs.empty()) throw Error(ErrorCode::Config, "no sublearners");
  sub_feeds_.resize(subs.size());
  for (auto& s : subs) {
    if (s.kind != QueryKind::Sup) {
      throw Error(ErrorCode::Config, "superset combinator needs Sup sublearners");
    }
    Dim d;
    d.spec = std::move(s);
    d.learner = d.spec.make();
    dims_.push_back(std::move(d));
  }
  for (const auto& d : dims_) {
    if (class_contains_empty(d.spec.cls)) empty_check_pending_ = true;
  }
  for (size_t i = 0; i < dims_.size(); ++i) pump(static_cast<int>(i));
}

void ProductSupLearner::pump(int i) {
  LearnerEvent ev = dims_[i].learner->next();
  if (ev.done) {
    dims_[i].hypothesis = ev.hypothesis;
    dims_[i].pending.reset();
    return;
  }
  if (ev.query.kind != QueryKind::Sup || !ev.query.concept_) {
    violation("sublearner asked a non-superset query");
  }
  dims_[i].pending = ev.query.concept_;
}

ConceptDesc ProductSupLearner::composite() const {
  std::vector<ConceptDesc> parts;
  for (const auto& d : dims_) parts.push_back(d.pending ? *d.pending : *d.hypothesis);
  return ConceptDesc::product(std::move(parts));
}

LearnerEvent ProductSupLearner::next() {
  if (result_) return LearnerEvent::finished(*result_);
  if (empty_check_pending_) return LearnerEvent::need(Query::sup(ConceptDesc::empty()));
  bool all_done = std::all_of(dims_.begin(), dims_.end(),
                              [](const Dim& d) { return d.hypothesis.has_value(); });
  if (all_done) {
    std::vector<ConceptDesc> parts;
    for (const auto& d : dims_) parts.push_back(*d.hypothesis);
    result_ = ConceptDesc::product(std::move(parts));
    return LearnerEvent::finished(*result_);
  }
  return LearnerEvent::need(Query::sup(composite()));
}

void ProductSupLearner::feed(const Answer& answer) {
  if (result_) violation("learner is already done");
  if (empty_check_pending_) {
    empty_check_pending_ = false;
    if (answer.is_yes()) result_ = ConceptDesc::empty();
    // A counterexample only confirms the target is nonempty.
    return;
  }
  int k = static_cast<int>(dims_.size());
  if (answer.is_yes()) {
    for (int i = 0; i < k; ++i) {
      if (!dims_[i].pending) continue;
      sub_feeds_[i].push_back({Query::sup(*dims_[i].pending), Answer::yes()});
      dims_[i].learner->feed(Answer::yes());
      pump(i);
    }
    return;
  }
  if (answer.kind() != Answer::Kind::Counterexample) {
    violation("unexpected superset answer");
  }
  auto coords = answer.point().coords_or_self(k);
  bool attributed = false;
  for (int i = 0; i < k; ++i) {
    if (dims_[i].pending) {
      if (!contains(dims_[i].spec.cls, *dims_[i].pending, coords[i])) {
        sub_feeds_[i].push_back(
            {Query::sup(*dims_[i].pending), Answer::counterexample(coords[i])});
        dims_[i].learner->feed(Answer::counterexample(coords[i]));
        pump(i);
        attributed = true;
      }
    } else if (!contains(dims_[i].spec.cls, *dims_[i].hypothesis, coords[i])) {
      violation("counterexample contradicts a finished dimension");
    }
  }
  if (!attributed) violation("counterexample lies inside the queried product");
}

// ---------------------------------------------------------------------------
// EQ/Sub + Mem + one positive example

ProductCexMemPosLearner::ProductCexMemPosLearner(std::vector<SublearnerSpec> subs,
                                                 Point positive, QueryKind mode)
    : mode_(mode), positive_(std::move(positive)) {
  if (subs.empty()) throw Error(ErrorCode::Config, "no sublearners");
  if (mode_ != QueryKind::EQ && mode_ != QueryKind::Sub) {
    throw Error(ErrorCode::Config, "mode must be EQ or Sub");
  }
  sub_feeds_.resize(subs.size());
  for (auto& s : subs) {
    if (s.kind != mode_) {
      throw Error(ErrorCode::Config, "sublearner kind must match the mode");
    }
    Dim d;
    d.spec = std::move(s);
    d.learner = d.spec.make();
    dims_.push_back(std::move(d));
  }
  // With one dimension the combinator is the identity; the example is unused.
  validated_ = dims_.size() == 1;
  for (size_t i = 0; i < dims_.size(); ++i) pump(static_cast<int>(i));
}

void ProductCexMemPosLearner::pump(int i) {
  LearnerEvent ev = dims_[i].learner->next();
  if (ev.done) {
    dims_[i].hypothesis = ev.hypothesis;
    dims_[i].pending.reset();
    return;
  }
  if (ev.query.kind != mode_ || !ev.query.concept_) {
    violation("sublearner asked a query of the wrong kind");
  }
  dims_[i].pending = ev.query.concept_;
}

void ProductCexMemPosLearner::deliver(int i, const Answer& answer) {
  Query q = mode_ == QueryKind::EQ ? Query::eq(*dims_[i].pending)
                                   : Query::sub(*dims_[i].pending);
  sub_feeds_[i].push_back({std::move(q), answer});
  dims_[i].learner->feed(answer);
  pump(i);
}

ConceptDesc ProductCexMemPosLearner::composite() const {
  std::vector<ConceptDesc> parts;
  for (const auto& d : dims_) parts.push_back(d.pending ? *d.pending : *d.hypothesis);
  return ConceptDesc::product(std::move(parts));
}

Query ProductCexMemPosLearner::attribution_query() const {
  int k = static_cast<int>(dims_.size());
  return Query::mem(substitute(positive_, k, attribute_dim_, cex_[attribute_dim_]));
}

void ProductCexMemPosLearner::finish_attribution() {
  if (!any_attributed_) violation("counterexample could not be attributed");
  cex_.clear();
  phase_ = Phase::Mode;
}

LearnerEvent ProductCexMemPosLearner::next() {
  if (result_) return LearnerEvent::finished(*result_);
  switch (phase_) {
    case Phase::ValidatePositive:
      return LearnerEvent::need(Query::mem(positive_));
    case Phase::Attribute:
      return LearnerEvent::need(attribution_query());
    case Phase::Mode: {
      bool all_done = std::all_of(dims_.begin(), dims_.end(),
                                  [](const Dim& d) { return d.hypothesis.has_value(); });
      if (all_done) {
        std::vector<ConceptDesc> parts;
        for (const auto& d : dims_) parts.push_back(*d.hypothesis);
        result_ = ConceptDesc::product(std::move(parts));
        return LearnerEvent::finished(*result_);
      }
      Query q = mode_ == QueryKind::EQ ? Query::eq(composite()) : Query::sub(composite());
      return LearnerEvent::need(q);
    }
  }
  violation("unreachable");
}

void ProductCexMemPosLearner::feed(const Answer& answer) {
  if (result_) violation("learner is already done");
  int k = static_cast<int>(dims_.size());
  switch (phase_) {
    case Phase::ValidatePositive: {
      if (!answer.is_yes()) {
        throw Error(ErrorCode::InvalidPositiveExample,
                    "the given positive example is not in the target");
      }
      validated_ = true;
      phase_ = Phase::Attribute;
      return;
    }
    case Phase::Attribute: {
      int j = attribute_dim_;
      bool member = answer.is_yes();
      if (!member) {
        // A non-member substitution pins the blame: cex_[j] is outside
        // the j-th target component.
        if (dims_[j].pending) {
          if (contains(dims_[j].spec.cls, *dims_[j].pending, cex_[j])) {
            deliver(j, Answer::counterexample(cex_[j]));
            any_attributed_ = true;
          }
        } else if (contains(dims_[j].spec.cls, *dims_[j].hypothesis, cex_[j])) {
          violation("membership test contradicts a finished dimension");
        }
      }
      ++attribute_dim_;
      if (attribute_dim_ == k) finish_attribution();
      return;
    }
    case Phase::Mode: {
      if (answer.is_yes()) {
        for (int i = 0; i < k; ++i) {
          if (dims_[i].pending) deliver(i, Answer::yes());
        }
        return;
      }
      if (answer.kind() != Answer::Kind::Counterexample) {
        violation("unexpected answer to a concept query");
      }
      auto coords = answer.point().coords_or_self(k);
      bool in_queried = true;
      for (int i = 0; i < k && in_queried; ++i) {
        const ConceptDesc& si = dims_[i].pending ? *dims_[i].pending : *dims_[i].hypothesis;
        in_queried = contains(dims_[i].spec.cls, si, coords[i]);
      }
      if (!in_queried) {
        // Positive counterexample: a target point missed by the query (EQ only).
        if (mode_ != QueryKind::EQ) violation("subset counterexample outside the query");
        bool attributed = false;
        for (int i = 0; i < k; ++i) {
          if (dims_[i].pending) {
            if (!contains(dims_[i].spec.cls, *dims_[i].pending, coords[i])) {
              deliver(i, Answer::counterexample(coords[i]));
              attributed = true;
            }
          } else if (!contains(dims_[i].spec.cls, *dims_[i].hypothesis, coords[i])) {
            violation("positive counterexample contradicts a finished dimension");
          }
        }
        if (!attributed) violation("counterexample could not be attributed");
        return;
      }
      // Negative counterexample: attribute through the positive example.
      if (k == 1) {
        deliver(0, Answer::counterexample(coords[0]));
        return;
      }
      cex_ = coords;
      attribute_dim_ = 0;
      any_attributed_ = false;
      phase_ = validated_ ? Phase::Attribute : Phase::ValidatePositive;
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Mem + one positive example

ProductMemPosLearner::ProductMemPosLearner(std::vector<SublearnerSpec> subs,
                                           Point positive)
    : positive_(std::move(positive)) {
  if (subs.empty()) throw Error(ErrorCode::Config, "no sublearners");
  sub_feeds_.resize(subs.size());
  for (auto& s : subs) {
    if (s.kind != QueryKind::Mem) {
      throw Error(ErrorCode::Config, "mem+1pos combinator needs Mem sublearners");
    }
    Dim d;
    d.spec = std::move(s);
    d.learner = d.spec.make();
    dims_.push_back(std::move(d));
  }
  validated_ = dims_.size() == 1;
}

LearnerEvent ProductMemPosLearner::next() {
  if (result_) return LearnerEvent::finished(*result_);
  int k = static_cast<int>(dims_.size());
  while (active_ < dims_.size()) {
    LearnerEvent ev = dims_[active_].learner->next();
    if (ev.done) {
      dims_[active_].hypothesis = ev.hypothesis;
      ++active_;
      continue;
    }
    if (ev.query.kind != QueryKind::Mem || !ev.query.point) {
      violation("sublearner asked a non-membership query");
    }
    if (!validated_) {
      validating_ = true;
      return LearnerEvent::need(Query::mem(positive_));
    }
    return LearnerEvent::need(
        Query::mem(substitute(positive_, k, static_cast<int>(active_), *ev.query.point)));
  }
  std::vector<ConceptDesc> parts;
  for (const auto& d : dims_) parts.push_back(*d.hypothesis);
  result_ = ConceptDesc::product(std::move(parts));
  return LearnerEvent::finished(*result_);
}

void ProductMemPosLearner::feed(const Answer& answer) {
  if (result_) violation("learner is already done");
  if (validating_) {
    validating_ = false;
    if (!answer.is_yes()) {
      throw Error(ErrorCode::InvalidPositiveExample,
                  "the given positive example is not in the target");
    }
    validated_ = true;
    return;
  }
  LearnerEvent ev = dims_[active_].learner->next();
  sub_feeds_[active_].push_back({ev.query, answer});
  dims_[active_].learner->feed(answer);
}

// ---------------------------------------------------------------------------
// Mem only

ProductMemOnlyLearner::ProductMemOnlyLearner(std::vector<SublearnerSpec> subs) {
  if (subs.empty()) throw Error(ErrorCode::Config, "no sublearners");
  sub_feeds_.resize(subs.size());
  for (auto& s : subs) {
    if (s.kind != QueryKind::Mem) {
      throw Error(ErrorCode::Config, "mem-only combinator needs Mem sublearners");
    }
    if (class_contains_empty(s.cls)) {
      throw Error(ErrorCode::EmptyConceptClass,
                  "mem-only learning requires every class to exclude the empty concept");
    }
    Dim d;
    d.spec = std::move(s);
    dims_.push_back(std::move(d));
  }
  for (auto& d : dims_) {
    std::vector<Point> seq;
    auto profile = all_negative_profile(d.spec, &seq);
    d.allneg_seq = std::move(seq);
    if (profile) {
      d.fallback = profile->first;
      d.pool.push_back(profile->second);
    }
  }
}

void ProductMemOnlyLearner::grow_round() {
  for (auto& d : dims_) {
    d.last_new.clear();
    if (d.seq_pos < d.allneg_seq.size()) {
      const Point& q = d.allneg_seq[d.seq_pos++];
      auto it = std::lower_bound(d.pool.begin(), d.pool.end(), q);
      if (it == d.pool.end() || !(*it == q)) {
        d.pool.insert(it, q);
        d.last_new.push_back(q);
      }
    }
  }
  if (!primed_) {
    // First round: everything in the pools (seeds included) is new.
    for (auto& d : dims_) d.last_new = d.pool;
    primed_ = true;
  }
}

void ProductMemOnlyLearner::refill_queue() {
  // The queue walks pool products in canonical order, keeping only tuples
  // that use at least one point added this round; older tuples were queued
  // (and cached) by an earlier round.
  queue_.clear();
  queue_pos_ = 0;
  for (const auto& d : dims_) {
    if (d.pool.empty()) return;  // no product points yet
  }
  std::vector<size_t> idx(dims_.size(), 0);
  while (true) {
    bool any_new = false;
    for (size_t i = 0; i < dims_.size() && !any_new; ++i) {
      const auto& added = dims_[i].last_new;
      any_new = std::binary_search(added.begin(), added.end(), dims_[i].pool[idx[i]]);
    }
    if (any_new) {
      std::vector<Point> coords;
      for (size_t i = 0; i < dims_.size(); ++i) coords.push_back(dims_[i].pool[idx[i]]);
      queue_.push_back(Point::vec(std::move(coords)));
    }
    size_t i = dims_.size();
    bool carry = true;
    while (i > 0 && carry) {
      --i;
      if (++idx[i] < dims_[i].pool.size()) {
        carry = false;
      } else {
        idx[i] = 0;
      }
    }
    if (carry) break;
  }
}

bool ProductMemOnlyLearner::feed_cached_to_delegate() {
  // Serves the delegate from the cache; returns false when the delegate
  // needs a fresh oracle call.
  while (true) {
    LearnerEvent ev = delegate_->next();
    if (ev.done) {
      result_ = ev.hypothesis;
      for (size_t i = 0; i < sub_feeds_.size(); ++i) {
        sub_feeds_[i] = delegate_->sub_feeds()[i];
      }
      return true;
    }
    if (ev.query.kind != QueryKind::Mem || !ev.query.point) {
      violation("delegate asked a non-membership query");
    }
    auto it = cache_.find(*ev.query.point);
    if (it == cache_.end()) return false;
    delegate_->feed(it->second ? Answer::yes() : Answer::no());
  }
}

LearnerEvent ProductMemOnlyLearner::next() {
  if (result_) return LearnerEvent::finished(*result_);
  if (delegate_) {
    if (feed_cached_to_delegate()) return LearnerEvent::finished(*result_);
    return LearnerEvent::need(delegate_->next().query);
  }
  while (true) {
    if (queue_pos_ < queue_.size()) {
      return LearnerEvent::need(Query::mem(queue_[queue_pos_]));
    }
    bool can_grow = std::any_of(dims_.begin(), dims_.end(), [](const Dim& d) {
      return d.seq_pos < d.allneg_seq.size();
    });
    if (!can_grow) {
      std::vector<ConceptDesc> parts;
      for (const auto& d : dims_) {
        if (!d.fallback) {
          violation("every membership answer was negative but no consistent product remains");
        }
        parts.push_back(*d.fallback);
      }
      result_ = ConceptDesc::product(std::move(parts));
      return LearnerEvent::finished(*result_);
    }
    grow_round();
    refill_queue();
  }
}

void ProductMemOnlyLearner::feed(const Answer& answer) {
  if (result_) violation("learner is already done");
  if (delegate_) {
    LearnerEvent ev = delegate_->next();
    cache_[*ev.query.point] = answer.is_yes();
    delegate_->feed(answer);
    return;
  }
  const Point& x = queue_[queue_pos_++];
  bool member = answer.is_yes();
  cache_[x] = member;
  if (member) {
    std::vector<SublearnerSpec> fresh;
    for (const auto& d : dims_) fresh.push_back(d.spec);
    delegate_ = std::make_unique<ProductMemPosLearner>(std::move(fresh), x);
  }
}

// ---------------------------------------------------------------------------
// Prefix-class learner (equivalence or subset queries)

PrefixEqLearner::PrefixEqLearner(QueryKind mode) : mode_(mode) {
  if (mode_ != QueryKind::EQ && mode_ != QueryKind::Sub) {
    throw Error(ErrorCode::Config, "prefix learner answers EQ or Sub oracles");
  }
}

LearnerEvent PrefixEqLearner::next() {
  if (result_) return LearnerEvent::finished(*result_);
  ConceptDesc c = ConceptDesc::prefix(s_);
  return LearnerEvent::need(mode_ == QueryKind::EQ ? Query::eq(std::move(c))
                                                   : Query::sub(std::move(c)));
}

void PrefixEqLearner::feed(const Answer& answer) {
  if (result_) violation("learner is already done");
  if (answer.is_yes()) {
    result_ = ConceptDesc::prefix(s_);
    return;
  }
  if (answer.kind() != Answer::Kind::Counterexample ||
      answer.point().kind() != Point::Kind::Pair) {
    violation("expected a (string, value) counterexample");
  }
  const PrefixStr& t = answer.point().prefix();
  long long a = answer.point().value();
  if (prefix_contains(s_, t, a)) {
    // Negative: the point is in c(s) but not in the target.
    if (t != s_) violation("negative counterexample does not extend the query");
    if (a < 0) violation("negative symbol in counterexample");
    s_.push_back(static_cast<int>(a));
    return;
  }
  // Positive: a target point outside c(s); only an EQ oracle can produce one.
  if (mode_ != QueryKind::EQ) violation("subset counterexample outside the query");
  s_ = t;
}

// ---------------------------------------------------------------------------
// Disjoint unions

DisjointUnionLearner::DisjointUnionLearner(std::vector<SublearnerSpec> subs,
                                           QueryKind mode)
    : mode_(mode) {
  if (subs.empty()) throw Error(ErrorCode::Config, "no sublearners");
  if (mode_ != QueryKind::EQ && mode_ != QueryKind::Sub && mode_ != QueryKind::Sup &&
      mode_ != QueryKind::Mem) {
    throw Error(ErrorCode::Config, "union modes are EQ, Sub, Sup, Mem");
  }
  sub_feeds_.resize(subs.size());
  for (auto& s : subs) {
    if (s.kind != mode_) {
      throw Error(ErrorCode::Config, "sublearner kind must match the mode");
    }
    Dim d;
    d.spec = std::move(s);
    d.learner = d.spec.make();
    dims_.push_back(std::move(d));
  }
  if (mode_ != QueryKind::Mem) {
    for (size_t i = 0; i < dims_.size(); ++i) pump(static_cast<int>(i));
  }
}

void DisjointUnionLearner::pump(int i) {
  LearnerEvent ev = dims_[i].learner->next();
  if (ev.done) {
    dims_[i].hypothesis = ev.hypothesis;
    dims_[i].pending.reset();
    return;
  }
  if (ev.query.kind != mode_ || !ev.query.concept_) {
    violation("sublearner asked a query of the wrong kind");
  }
  dims_[i].pending = ev.query.concept_;
}

ConceptDesc DisjointUnionLearner::composite() const {
  std::vector<ConceptDesc> parts;
  for (const auto& d : dims_) parts.push_back(d.pending ? *d.pending : *d.hypothesis);
  return ConceptDesc::union_of(std::move(parts));
}

LearnerEvent DisjointUnionLearner::next() {
  if (result_) return LearnerEvent::finished(*result_);
  if (mode_ == QueryKind::Mem) {
    while (active_ < dims_.size()) {
      LearnerEvent ev = dims_[active_].learner->next();
      if (ev.done) {
        dims_[active_].hypothesis = ev.hypothesis;
        ++active_;
        continue;
      }
      if (ev.query.kind != QueryKind::Mem || !ev.query.point) {
        violation("sublearner asked a non-membership query");
      }
      return LearnerEvent::need(
          Query::mem(Point::tagged(static_cast<int>(active_), *ev.query.point)));
    }
  } else {
    bool all_done = std::all_of(dims_.begin(), dims_.end(),
                                [](const Dim& d) { return d.hypothesis.has_value(); });
    if (!all_done) {
      Query q;
      switch (mode_) {
        case QueryKind::EQ: q = Query::eq(composite()); break;
        case QueryKind::Sub: q = Query::sub(composite()); break;
        default: q = Query::sup(composite()); break;
      }
      return LearnerEvent::need(std::move(q));
    }
  }
  std::vector<ConceptDesc> parts;
  for (const auto& d : dims_) parts.push_back(*d.hypothesis);
  result_ = ConceptDesc::union_of(std::move(parts));
  return LearnerEvent::finished(*result_);
}

void DisjointUnionLearner::feed(const Answer& answer) {
  if (result_) violation("learner is already done");
  if (mode_ == QueryKind::Mem) {
    LearnerEvent ev = dims_[active_].learner->next();
    sub_feeds_[active_].push_back({ev.query, answer});
    dims_[active_].learner->feed(answer);
    return;
  }
  if (answer.is_yes()) {
    for (size_t i = 0; i < dims_.size(); ++i) {
      if (!dims_[i].pending) continue;
      Query q;
      switch (mode_) {
        case QueryKind::EQ: q = Query::eq(*dims_[i].pending); break;
        case QueryKind::Sub: q = Query::sub(*dims_[i].pending); break;
        default: q = Query::sup(*dims_[i].pending); break;
      }
      sub_feeds_[i].push_back({q, Answer::yes()});
      dims_[i].learner->feed(Answer::yes());
      pump(static_cast<int>(i));
    }
    return;
  }
  if (answer.kind() != Answer::Kind::Counterexample ||
      answer.point().kind() != Point::Kind::Tagged) {
    violation("expected a tagged counterexample");
  }
  int i = answer.point().tag();
  if (i < 0 || i >= static_cast<int>(dims_.size())) {
    violation("counterexample tag outside the union");
  }
  if (!dims_[i].pending) violation("counterexample hits a finished dimension");
  Query q;
  switch (mode_) {
    case QueryKind::EQ: q = Query::eq(*dims_[i].pending); break;
    case QueryKind::Sub: q = Query::sub(*dims_[i].pending); break;
    default: q = Query::sup(*dims_[i].pending); break;
  }
  sub_feeds_[i].push_back({q, Answer::counterexample(answer.point().inner())});
  dims_[i].learner->feed(Answer::counterexample(answer.point().inner()));
  pump(i);
}

// ---------------------------------------------------------------------------
// Session wrappers

SessionResult learn_product_sup(const std::vector<SublearnerSpec>& subs,
                                Oracle& oracle, long long budget) {
  ProductSupLearner learner(subs);
  return run_session(learner, oracle, budget);
}

SessionResult learn_product_cex_mem_pos(const std::vector<SublearnerSpec>& subs,
                                        Oracle& oracle, const Point& positive,
                                        QueryKind mode, long long budget) {
  ProductCexMemPosLearner learner(subs, positive, mode);
  return run_session(learner, oracle, budget);
}

SessionResult learn_product_mem_pos(const std::vector<SublearnerSpec>& subs,
                                    Oracle& oracle, const Point& positive,
                                    long long budget) {
  ProductMemPosLearner learner(subs, positive);
  return run_session(learner, oracle, budget);
}

SessionResult learn_product_mem_only(const std::vector<SublearnerSpec>& subs,
                                     Oracle& oracle, long long budget) {
  ProductMemOnlyLearner learner(subs);
  return run_session(learner, oracle, budget);
}

SessionResult learn_prefix_eq(Oracle& oracle, QueryKind mode, long long budget) {
  PrefixEqLearner learner(mode);
  return run_session(learner, oracle, budget);
}

SessionResult learn_disjoint_union(const std::vector<SublearnerSpec>& subs,
                                   Oracle& oracle, QueryKind mode, long long budget) {
  DisjointUnionLearner learner(subs, mode);
  return run_session(learner, oracle, budget);
}

}  // namespace modlearn
