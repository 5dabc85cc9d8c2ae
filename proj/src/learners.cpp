#include "modlearn/learners.hpp"

#include <algorithm>

namespace modlearn {

VersionSpaceLearner::VersionSpaceLearner(ClassId cls, QueryKind kind)
    : cls_(std::move(cls)), kind_(kind) {
  switch (kind_) {
    case QueryKind::Mem:
    case QueryKind::EQ:
    case QueryKind::Sub:
    case QueryKind::Sup:
    case QueryKind::Pos:
      break;
    default:
      throw Error(ErrorCode::UnsupportedQuery,
                  std::string("no version-space learner for ") + to_string(kind_));
  }
}

void VersionSpaceLearner::ensure_init() {
  if (initialized_) return;
  candidates_ = enumerate_concepts(cls_);
  if (kind_ == QueryKind::Mem) universe_ = enumerate_universe(cls_);
  initialized_ = true;
}

long long VersionSpaceLearner::candidate_count() {
  ensure_init();
  return static_cast<long long>(candidates_.size());
}

void VersionSpaceLearner::filter(const std::function<bool(const ConceptDesc&)>& keep) {
  std::vector<ConceptDesc> kept;
  for (const auto& c : candidates_) {
    if (keep(c)) kept.push_back(c);
  }
  candidates_ = std::move(kept);
}

void VersionSpaceLearner::compute_pending() {
  if (pending_) return;
  if (candidates_.empty()) {
    throw Error(ErrorCode::ProtocolViolation,
                "no concept of " + cls_.to_string() + " is consistent with the answers");
  }
  if (candidates_.size() == 1) {
    pending_ = LearnerEvent::finished(candidates_.front());
    return;
  }
  switch (kind_) {
    case QueryKind::Mem: {
      // Least point on which the candidates disagree.
      for (const auto& x : universe_) {
        bool first = contains(cls_, candidates_.front(), x);
        for (size_t i = 1; i < candidates_.size(); ++i) {
          if (contains(cls_, candidates_[i], x) != first) {
            pending_ = LearnerEvent::need(Query::mem(x));
            return;
          }
        }
      }
      // Extensionally distinct candidates always disagree somewhere.
      throw Error(ErrorCode::Internal, "version space stuck on Mem");
    }
    case QueryKind::EQ:
      pending_ = LearnerEvent::need(Query::eq(candidates_.front()));
      return;
    case QueryKind::Sub: {
      // A candidate below every other candidate gains nothing from a `yes`;
      // pick the least one that some candidate fails to include.
      for (const auto& c : candidates_) {
        bool below_all = true;
        for (const auto& other : candidates_) {
          if (!subset_of(cls_, c, other)) {
            below_all = false;
            break;
          }
        }
        if (!below_all) {
          pending_ = LearnerEvent::need(Query::sub(c));
          return;
        }
      }
      throw Error(ErrorCode::Internal, "version space stuck on Sub");
    }
    case QueryKind::Sup: {
      // Least subset-minimal candidate: a `yes` pins it exactly.
      for (const auto& c : candidates_) {
        bool minimal = true;
        for (const auto& other : candidates_) {
          if (!(other == c) && subset_of(cls_, other, c) &&
              !subset_of(cls_, c, other)) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          pending_ = LearnerEvent::need(Query::sup(c));
          return;
        }
      }
      throw Error(ErrorCode::Internal, "version space stuck on Sup");
    }
    case QueryKind::Pos:
      pending_ = LearnerEvent::need(Query::pos());
      return;
    default:
      throw Error(ErrorCode::Internal, "unreachable");
  }
}

LearnerEvent VersionSpaceLearner::next() {
  ensure_init();
  compute_pending();
  return *pending_;
}

void VersionSpaceLearner::feed(const Answer& answer) {
  ensure_init();
  compute_pending();
  if (pending_->done) {
    throw Error(ErrorCode::ProtocolViolation, "learner is already done");
  }
  Query asked = pending_->query;
  pending_.reset();
  switch (asked.kind) {
    case QueryKind::Mem: {
      bool member = answer.is_yes();
      filter([&](const ConceptDesc& c) { return contains(cls_, c, *asked.point) == member; });
      return;
    }
    case QueryKind::EQ: {
      if (answer.is_yes()) {
        candidates_ = {*asked.concept_};
        return;
      }
      const Point& x = answer.point();
      bool in_query = contains(cls_, *asked.concept_, x);
      // x in query: x is outside the target; otherwise x is inside it.
      filter([&](const ConceptDesc& c) { return contains(cls_, c, x) != in_query; });
      return;
    }
    case QueryKind::Sub: {
      if (answer.is_yes()) {
        filter([&](const ConceptDesc& c) { return subset_of(cls_, *asked.concept_, c); });
        return;
      }
      const Point& x = answer.point();
      if (!contains(cls_, *asked.concept_, x)) {
        throw Error(ErrorCode::ProtocolViolation,
                    "Sub counterexample outside the queried concept");
      }
      filter([&](const ConceptDesc& c) { return !contains(cls_, c, x); });
      return;
    }
    case QueryKind::Sup: {
      if (answer.is_yes()) {
        filter([&](const ConceptDesc& c) { return subset_of(cls_, c, *asked.concept_); });
        return;
      }
      const Point& x = answer.point();
      if (contains(cls_, *asked.concept_, x)) {
        throw Error(ErrorCode::ProtocolViolation,
                    "Sup counterexample inside the queried concept");
      }
      filter([&](const ConceptDesc& c) { return contains(cls_, c, x); });
      return;
    }
    case QueryKind::Pos: {
      if (answer.kind() == Answer::Kind::Positive) {
        const Point x = answer.point();
        issued_positives_.push_back(x);
        filter([&](const ConceptDesc& c) { return contains(cls_, c, x); });
        return;
      }
      if (answer.kind() != Answer::Kind::NoSuchExample) {
        throw Error(ErrorCode::ProtocolViolation, "unexpected Pos answer");
      }
      // The target has no fresh positives: it is exactly the issued set.
      filter([&](const ConceptDesc& c) {
        for (const auto& x : enumerate_universe(cls_)) {
          if (contains(cls_, c, x) &&
              std::find(issued_positives_.begin(), issued_positives_.end(), x) ==
                  issued_positives_.end()) {
            return false;
          }
        }
        return true;
      });
      return;
    }
    default:
      throw Error(ErrorCode::Internal, "unreachable");
  }
}

// Classic membership learner for intervals: scan upward to the first member
// (the lower bound), keep scanning while inside, stop at the first point
// outside. Fed only negative answers it exhausts the universe with nothing
// consistent, so interval classes have no all-negative fallback.
class IntervalScanMemLearner : public Learner {
 public:
  explicit IntervalScanMemLearner(ClassId cls) : cls_(std::move(cls)) {
    if (cls_.kind() != ClassId::Kind::Intervals) {
      throw Error(ErrorCode::Config, "interval scan learner needs an interval class");
    }
  }

  LearnerEvent next() override {
    if (result_) return LearnerEvent::finished(*result_);
    if (pos_ >= cls_.universe()) {
      if (!lo_) {
        throw Error(ErrorCode::ProtocolViolation,
                    "no interval is consistent with all-negative answers");
      }
      result_ = ConceptDesc::interval(*lo_, cls_.universe() - 1);
      return LearnerEvent::finished(*result_);
    }
    return LearnerEvent::need(Query::mem(Point::integer(pos_)));
  }

  void feed(const Answer& answer) override {
    if (result_) {
      throw Error(ErrorCode::ProtocolViolation, "learner is already done");
    }
    bool member = answer.is_yes();
    if (!lo_) {
      if (member) lo_ = pos_;
      ++pos_;
      return;
    }
    if (member) {
      ++pos_;
      return;
    }
    result_ = ConceptDesc::interval(*lo_, pos_ - 1);
  }

 private:
  ClassId cls_;
  long long pos_ = 0;
  std::optional<long long> lo_;
  std::optional<ConceptDesc> result_;
};

SublearnerSpec make_sublearner(const ClassId& cls, QueryKind kind) {
  SublearnerSpec spec;
  spec.cls = cls;
  spec.kind = kind;
  if (cls.kind() == ClassId::Kind::Intervals && kind == QueryKind::Mem) {
    spec.make = [cls]() -> std::unique_ptr<Learner> {
      return std::make_unique<IntervalScanMemLearner>(cls);
    };
    return spec;
  }
  spec.make = [cls, kind]() -> std::unique_ptr<Learner> {
    return std::make_unique<VersionSpaceLearner>(cls, kind);
  };
  return spec;
}

QueryStats measure_standalone(const SublearnerSpec& spec, const ConceptDesc& target,
                              long long budget) {
  auto learner = spec.make();
  HonestOracle oracle(spec.cls, target);
  SessionResult result = run_session(*learner, oracle, budget);
  if (!extensionally_equal(spec.cls, result.hypothesis, target)) {
    throw Error(ErrorCode::Internal,
                "reference sublearner failed to identify its target");
  }
  return result.stats;
}

std::optional<std::pair<ConceptDesc, Point>> all_negative_profile(
    const SublearnerSpec& spec, std::vector<Point>* sequence) {
  if (spec.kind != QueryKind::Mem) {
    throw Error(ErrorCode::UnsupportedQuery,
                "all-negative profiles are defined for membership learners");
  }
  auto learner = spec.make();
  long long limit = static_cast<long long>(enumerate_universe(spec.cls).size()) + 1;
  for (long long step = 0; step <= limit; ++step) {
    LearnerEvent event;
    try {
      event = learner->next();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ProtocolViolation) return std::nullopt;
      throw;
    }
    if (event.done) {
      auto n = witness(spec.cls, event.hypothesis);
      if (!n) return std::nullopt;
      return std::make_pair(event.hypothesis, *n);
    }
    if (event.query.kind != QueryKind::Mem) {
      throw Error(ErrorCode::UnsupportedQuery, "non-membership query in profile");
    }
    if (sequence) sequence->push_back(*event.query.point);
    learner->feed(Answer::no());
  }
  return std::nullopt;
}

}  // namespace modlearn
