#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modlearn/concepts.hpp"
#include "modlearn/errors.hpp"

namespace modlearn {

enum class QueryKind { OnePos, Pos, Mem, EQ, Sub, Sup, EX };
inline constexpr int kQueryKindCount = 7;

const char* to_string(QueryKind kind);
std::optional<QueryKind> query_kind_from_string(const std::string& name);

// A query to the oracle. The payload shape is fixed by the kind: Mem carries
// a point, EQ/Sub/Sup carry a concept, the rest carry nothing.
struct Query {
  QueryKind kind = QueryKind::Mem;
  std::optional<Point> point;
  std::optional<ConceptDesc> concept_;

  static Query one_pos();
  static Query pos();
  static Query mem(Point x);
  static Query eq(ConceptDesc c);
  static Query sub(ConceptDesc c);
  static Query sup(ConceptDesc c);
  static Query ex();
};

class Answer {
 public:
  enum class Kind { Yes, No, Counterexample, Positive, NoSuchExample, Labeled };

  static Answer yes();
  static Answer no();
  static Answer counterexample(Point x);
  static Answer positive(Point x);
  static Answer no_such_example();
  static Answer labeled(Point x, bool label);

  Kind kind() const { return kind_; }
  const Point& point() const { return point_; }
  bool label() const { return label_; }

  bool is_yes() const { return kind_ == Kind::Yes; }

  friend bool operator==(const Answer& a, const Answer& b);

 private:
  Kind kind_ = Kind::No;
  Point point_;
  bool label_ = false;
};

// Per-kind query counters; total always equals the sum of the counts.
struct QueryStats {
  std::array<long long, kQueryKindCount> counts{};
  long long total = 0;

  void record(QueryKind kind);
  long long count(QueryKind kind) const;
};

QueryStats record_query(QueryStats stats, QueryKind kind);

struct TranscriptEntry {
  Query query;
  Answer answer;
};

struct SessionResult {
  ConceptDesc hypothesis;
  QueryStats stats;
  std::vector<TranscriptEntry> transcript;
};

// What a resumable learner reports: either a query it needs answered or a
// final hypothesis. next() must keep returning the same event until the
// pending query is fed an answer; after Done a learner never needs again.
struct LearnerEvent {
  bool done = false;
  Query query;
  ConceptDesc hypothesis;

  static LearnerEvent need(Query q);
  static LearnerEvent finished(ConceptDesc hypothesis);
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual LearnerEvent next() = 0;
  virtual void feed(const Answer& answer) = 0;
};

class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual Answer answer(const Query& query) = 0;
};

// Which side of a symmetric difference an EQ counterexample is drawn from
// when both are nonempty. LeastOverall is the canonical policy.
enum class CexPreference { LeastOverall, PreferPositive };

// Answers queries truthfully against an explicit target concept.
// Counterexamples are the least element of the relevant difference under
// the class's canonical order; Pos never repeats a point.
class HonestOracle : public Oracle {
 public:
  HonestOracle(ClassId cls, ConceptDesc target,
               CexPreference pref = CexPreference::LeastOverall);

  Answer answer(const Query& query) override;

  const ClassId& cls() const { return cls_; }
  const ConceptDesc& target() const { return target_; }

 private:
  ClassId cls_;
  ConceptDesc target_;
  CexPreference pref_;
  std::set<Point> issued_;
};

// Functional form of the honest oracle; `issued` is the Pos-memory state.
Answer honest_answer(const ConceptDesc& target, const ClassId& cls,
                     const Query& query, std::set<Point>& issued,
                     CexPreference pref = CexPreference::LeastOverall);

inline constexpr long long kDefaultBudget = 1'000'000;

class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(QueryStats stats, std::vector<TranscriptEntry> transcript);

  QueryStats stats;
  std::vector<TranscriptEntry> transcript;
};

// Pumps learner events, routing each needed query through the oracle.
// Throws BudgetExhaustedError when the learner has not finished within
// `budget` oracle calls.
SessionResult run_session(Learner& learner, Oracle& oracle,
                          long long budget = kDefaultBudget);

// Checks the Table-1 contract of a (query, answer) pair against a target.
// `issued_before` holds the Pos points issued before this query, for the
// no-repeat clause.
bool answer_is_valid(const ClassId& cls, const ConceptDesc& target,
                     const Query& query, const Answer& answer,
                     const std::set<Point>* issued_before = nullptr);

std::string render_query(const ClassId& cls, const Query& query);
std::string render_answer(const ClassId& cls, const Answer& answer);

// Line-oriented golden form: "<index> <kind> <payload> -> <answer>".
std::string serialize_transcript(const ClassId& cls,
                                 const std::vector<TranscriptEntry>& transcript);

}  // namespace modlearn
