#include "modlearn/core.hpp"

#include <sstream>

namespace modlearn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Config: return "Config";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::UnsupportedQuery: return "UnsupportedQuery";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::ProtocolViolation: return "ProtocolViolation";
    case ErrorCode::InvalidPositiveExample: return "InvalidPositiveExample";
    case ErrorCode::EmptyConceptClass: return "EmptyConceptClass";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::UniverseExhausted: return "UniverseExhausted";
    case ErrorCode::FreshValuesExhausted: return "FreshValuesExhausted";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConsistentHypothesis: return "NoConsistentHypothesis";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

const char* to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::OnePos: return "1Pos";
    case QueryKind::Pos: return "Pos";
    case QueryKind::Mem: return "Mem";
    case QueryKind::EQ: return "EQ";
    case QueryKind::Sub: return "Sub";
    case QueryKind::Sup: return "Sup";
    case QueryKind::EX: return "EX";
  }
  return "?";
}

std::optional<QueryKind> query_kind_from_string(const std::string& name) {
  if (name == "1Pos" || name == "1pos" || name == "onepos") return QueryKind::OnePos;
  if (name == "Pos" || name == "pos") return QueryKind::Pos;
  if (name == "Mem" || name == "mem") return QueryKind::Mem;
  if (name == "EQ" || name == "eq") return QueryKind::EQ;
  if (name == "Sub" || name == "sub") return QueryKind::Sub;
  if (name == "Sup" || name == "sup") return QueryKind::Sup;
  if (name == "EX" || name == "ex") return QueryKind::EX;
  return std::nullopt;
}

Query Query::one_pos() { return Query{QueryKind::OnePos, std::nullopt, std::nullopt}; }
Query Query::pos() { return Query{QueryKind::Pos, std::nullopt, std::nullopt}; }
Query Query::mem(Point x) { return Query{QueryKind::Mem, std::move(x), std::nullopt}; }
Query Query::eq(ConceptDesc c) { return Query{QueryKind::EQ, std::nullopt, std::move(c)}; }
Query Query::sub(ConceptDesc c) { return Query{QueryKind::Sub, std::nullopt, std::move(c)}; }
Query Query::sup(ConceptDesc c) { return Query{QueryKind::Sup, std::nullopt, std::move(c)}; }
Query Query::ex() { return Query{QueryKind::EX, std::nullopt, std::nullopt}; }

Answer Answer::yes() {
  Answer a;
  a.kind_ = Kind::Yes;
  return a;
}

Answer Answer::no() {
  Answer a;
  a.kind_ = Kind::No;
  return a;
}

Answer Answer::counterexample(Point x) {
  Answer a;
  a.kind_ = Kind::Counterexample;
  a.point_ = std::move(x);
  return a;
}

Answer Answer::positive(Point x) {
  Answer a;
  a.kind_ = Kind::Positive;
  a.point_ = std::move(x);
  return a;
}

Answer Answer::no_such_example() {
  Answer a;
  a.kind_ = Kind::NoSuchExample;
  return a;
}

Answer Answer::labeled(Point x, bool label) {
  Answer a;
  a.kind_ = Kind::Labeled;
  a.point_ = std::move(x);
  a.label_ = label;
  return a;
}

bool operator==(const Answer& a, const Answer& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Answer::Kind::Counterexample:
    case Answer::Kind::Positive:
      return a.point_ == b.point_;
    case Answer::Kind::Labeled:
      return a.point_ == b.point_ && a.label_ == b.label_;
    default:
      return true;
  }
}

void QueryStats::record(QueryKind kind) {
  ++counts[static_cast<size_t>(kind)];
  ++total;
}

long long QueryStats::count(QueryKind kind) const {
  return counts[static_cast<size_t>(kind)];
}

QueryStats record_query(QueryStats stats, QueryKind kind) {
  stats.record(kind);
  return stats;
}

LearnerEvent LearnerEvent::need(Query q) {
  LearnerEvent e;
  e.done = false;
  e.query = std::move(q);
  return e;
}

LearnerEvent LearnerEvent::finished(ConceptDesc hypothesis) {
  LearnerEvent e;
  e.done = true;
  e.hypothesis = std::move(hypothesis);
  return e;
}

// ---------------------------------------------------------------------------
// Honest oracle

Answer honest_answer(const ConceptDesc& target, const ClassId& cls,
                     const Query& query, std::set<Point>& issued,
                     CexPreference pref) {
  switch (query.kind) {
    case QueryKind::Mem: {
      if (!query.point) throw Error(ErrorCode::UniverseMismatch, "Mem needs a point");
      return contains(cls, target, *query.point) ? Answer::yes() : Answer::no();
    }
    case QueryKind::Sub: {
      if (!query.concept_) throw Error(ErrorCode::UniverseMismatch, "Sub needs a concept");
      validate_concept(cls, *query.concept_);
      auto cex = diff_witness(cls, *query.concept_, target);
      return cex ? Answer::counterexample(*cex) : Answer::yes();
    }
    case QueryKind::Sup: {
      if (!query.concept_) throw Error(ErrorCode::UniverseMismatch, "Sup needs a concept");
      validate_concept(cls, *query.concept_);
      auto cex = diff_witness(cls, target, *query.concept_);
      return cex ? Answer::counterexample(*cex) : Answer::yes();
    }
    case QueryKind::EQ: {
      if (!query.concept_) throw Error(ErrorCode::UniverseMismatch, "EQ needs a concept");
      validate_concept(cls, *query.concept_);
      auto neg = diff_witness(cls, *query.concept_, target);  // query \ target
      auto pos = diff_witness(cls, target, *query.concept_);  // target \ query
      if (!neg && !pos) return Answer::yes();
      if (pref == CexPreference::PreferPositive && pos) {
        return Answer::counterexample(*pos);
      }
      if (neg && pos) return Answer::counterexample(std::min(*neg, *pos));
      return Answer::counterexample(neg ? *neg : *pos);
    }
    case QueryKind::OnePos: {
      auto w = witness(cls, target);
      return w ? Answer::positive(*w) : Answer::no_such_example();
    }
    case QueryKind::Pos: {
      // Least target point not yet issued; the universe is bounded, so scan.
      for (const auto& x : enumerate_universe(cls)) {
        if (contains(cls, target, x) && !issued.count(x)) {
          issued.insert(x);
          return Answer::positive(x);
        }
      }
      return Answer::no_such_example();
    }
    case QueryKind::EX:
      throw Error(ErrorCode::UnsupportedQuery,
                  "EX queries carry a distribution and are answered by the PAC module");
  }
  throw Error(ErrorCode::UnsupportedQuery, "unknown query kind");
}

HonestOracle::HonestOracle(ClassId cls, ConceptDesc target, CexPreference pref)
    : cls_(std::move(cls)), target_(std::move(target)), pref_(pref) {
  validate_concept(cls_, target_);
}

Answer HonestOracle::answer(const Query& query) {
  return honest_answer(target_, cls_, query, issued_, pref_);
}

// ---------------------------------------------------------------------------
// Sessions

BudgetExhaustedError::BudgetExhaustedError(QueryStats stats_in,
                                           std::vector<TranscriptEntry> transcript_in)
    : Error(ErrorCode::BudgetExhausted,
            "learner did not finish within " + std::to_string(stats_in.total) +
                " queries"),
      stats(stats_in),
      transcript(std::move(transcript_in)) {}

SessionResult run_session(Learner& learner, Oracle& oracle, long long budget) {
  if (budget <= 0) throw Error(ErrorCode::Config, "budget must be positive");
  SessionResult result;
  while (true) {
    LearnerEvent event = learner.next();
    if (event.done) {
      result.hypothesis = event.hypothesis;
      return result;
    }
    if (result.stats.total >= budget) {
      throw BudgetExhaustedError(result.stats, std::move(result.transcript));
    }
    Answer answer = oracle.answer(event.query);
    result.stats.record(event.query.kind);
    result.transcript.push_back({event.query, answer});
    learner.feed(answer);
  }
}

bool answer_is_valid(const ClassId& cls, const ConceptDesc& target,
                     const Query& query, const Answer& answer,
                     const std::set<Point>* issued_before) {
  switch (query.kind) {
    case QueryKind::Mem:
      if (!query.point) return false;
      return contains(cls, target, *query.point) ? answer.is_yes()
                                                 : answer.kind() == Answer::Kind::No;
    case QueryKind::Sub: {
      if (!query.concept_) return false;
      if (answer.is_yes()) return subset_of(cls, *query.concept_, target);
      if (answer.kind() != Answer::Kind::Counterexample) return false;
      return contains(cls, *query.concept_, answer.point()) &&
             !contains(cls, target, answer.point());
    }
    case QueryKind::Sup: {
      if (!query.concept_) return false;
      if (answer.is_yes()) return subset_of(cls, target, *query.concept_);
      if (answer.kind() != Answer::Kind::Counterexample) return false;
      return contains(cls, target, answer.point()) &&
             !contains(cls, *query.concept_, answer.point());
    }
    case QueryKind::EQ: {
      if (!query.concept_) return false;
      if (answer.is_yes()) return extensionally_equal(cls, *query.concept_, target);
      if (answer.kind() != Answer::Kind::Counterexample) return false;
      return contains(cls, *query.concept_, answer.point()) !=
             contains(cls, target, answer.point());
    }
    case QueryKind::OnePos:
      if (answer.kind() == Answer::Kind::NoSuchExample) {
        return is_empty_concept(cls, target);
      }
      return answer.kind() == Answer::Kind::Positive &&
             contains(cls, target, answer.point());
    case QueryKind::Pos: {
      if (answer.kind() == Answer::Kind::Positive) {
        if (!contains(cls, target, answer.point())) return false;
        return !issued_before || !issued_before->count(answer.point());
      }
      if (answer.kind() != Answer::Kind::NoSuchExample) return false;
      if (!issued_before) return is_empty_concept(cls, target);
      for (const auto& x : enumerate_universe(cls)) {
        if (contains(cls, target, x) && !issued_before->count(x)) return false;
      }
      return true;
    }
    case QueryKind::EX:
      return answer.kind() == Answer::Kind::Labeled &&
             answer.label() == contains(cls, target, answer.point());
  }
  return false;
}

std::string render_query(const ClassId& cls, const Query& query) {
  std::string payload = "-";
  if (query.point) payload = render_point(cls, *query.point);
  if (query.concept_) payload = render_concept(cls, *query.concept_);
  return std::string(to_string(query.kind)) + " " + payload;
}

std::string render_answer(const ClassId& cls, const Answer& answer) {
  switch (answer.kind()) {
    case Answer::Kind::Yes: return "Yes";
    case Answer::Kind::No: return "No";
    case Answer::Kind::Counterexample: return "CE " + render_point(cls, answer.point());
    case Answer::Kind::Positive: return "Pos " + render_point(cls, answer.point());
    case Answer::Kind::NoSuchExample: return "NoSuchExample";
    case Answer::Kind::Labeled:
      return "Labeled " + render_point(cls, answer.point()) +
             (answer.label() ? " 1" : " 0");
  }
  return "?";
}

std::string serialize_transcript(const ClassId& cls,
                                 const std::vector<TranscriptEntry>& transcript) {
  std::ostringstream out;
  for (size_t i = 0; i < transcript.size(); ++i) {
    out << i << " " << render_query(cls, transcript[i].query) << " -> "
        << render_answer(cls, transcript[i].answer) << "\n";
  }
  return out.str();
}

}  // namespace modlearn
