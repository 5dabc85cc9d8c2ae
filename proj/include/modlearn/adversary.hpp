#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modlearn/core.hpp"

namespace modlearn {

// Counts the concepts of an enumerable class consistent with a transcript of
// answered queries (the certificate used by the lower-bound arguments).
long long consistent_count(const ClassId& cls,
                           const std::vector<TranscriptEntry>& transcript);

// Adversarial Pos oracle for the pair_demo product: issues fresh positive
// points only from {a} x [0, U), so both {a} x [0,U) and {a,b} x [0,U) stay
// consistent no matter how many answers are drawn.
class AdversarialPosOracle : public Oracle {
 public:
  explicit AdversarialPosOracle(int universe);

  Answer answer(const Query& query) override;

  const ClassId& cls() const { return cls_; }
  int issued() const { return issued_; }

 private:
  ClassId cls_;
  int universe_;
  int issued_ = 0;
};

// Adversarial oracle for k-fold products of Singletons(m): answers No to
// membership queries and returns the queried singleton's own point as the
// counterexample to Sub/EQ queries while at least two candidate targets
// remain; once a single candidate survives it commits to it and answers
// truthfully. Forces (m+1)^k - 1 queries out of any learner.
class AdversarialSingletonOracle : public Oracle {
 public:
  AdversarialSingletonOracle(int m, int k);

  Answer answer(const Query& query) override;

  const ClassId& cls() const { return cls_; }
  long long remaining() const { return static_cast<long long>(candidates_.size()); }
  // Lexicographically last surviving candidate point.
  Point survivor() const;
  bool committed() const { return committed_; }

 private:
  void eliminate(const Point& p);

  ClassId cls_;
  std::set<Point> candidates_;
  bool committed_ = false;
};

// Supplies values that have not appeared in any query or counterexample of
// the session. Values are drawn from [1, bound); crossing the bound throws
// FreshValuesExhausted.
class FreshValueSource {
 public:
  explicit FreshValueSource(int bound);

  int take();
  void observe(int value);

 private:
  int next_ = 1;
  int bound_;
  std::set<int> seen_;
};

// Which product-of-prefix concepts are reachable by extending answered
// queries with their counterexample coordinates, and which of those were
// actually queried while justifiable.
struct JustifiabilityLog {
  std::map<std::vector<PrefixStr>, std::vector<Point>> answered;
  std::set<std::vector<PrefixStr>> justifiable;
  std::set<std::vector<PrefixStr>> justifiably_queried;
};

int string_length_sum(const std::vector<PrefixStr>& concept_strings);

// Adversarial oracle for Sub/EQ queries over k-fold products of prefix
// concepts: never answers yes, repeats the memoized counterexample on a
// repeated query, and answers a new query c(s_1) x ... x c(s_k) with the
// point ((s_1, a_1), ..., (s_k, a_k)) for fresh values a_i.
class PrefixAdversaryOracle : public Oracle {
 public:
  PrefixAdversaryOracle(int k, int fresh_bound);

  Answer answer(const Query& query) override;

  int k() const { return k_; }
  const JustifiabilityLog& log() const { return log_; }

 private:
  int k_;
  FreshValueSource fresh_;
  JustifiabilityLog log_;
};

// Number of justifiable concepts whose string-length sum equals `level`.
// Requires every justifiable concept below that level to have been queried;
// throws PreconditionUnmet otherwise. Equals k^level for the breadth-first
// learner.
long long count_justifiable(const JustifiabilityLog& log, int level);

// Justifiable concepts with string-length sum <= max_level not yet queried.
std::vector<std::vector<PrefixStr>> unqueried_justifiable(const JustifiabilityLog& log,
                                                          int max_level);

// Whether a candidate target Prod c(s_i) is consistent with every answered
// (query, counterexample) pair in the log: each counterexample must lie in
// the queried concept but outside the candidate.
bool consistent_with_log(const std::vector<PrefixStr>& candidate,
                         const JustifiabilityLog& log);

// Drives the breadth-first reference learner: queries every justifiable
// concept level by level, for levels 0 .. max_level-1. Returns the queried
// concepts in order.
std::vector<std::vector<PrefixStr>> drive_breadth_first(PrefixAdversaryOracle& oracle,
                                                        int max_level);

// Replays the first n queries of a breadth-first run and exhibits an
// unqueried justifiable concept of string-length sum <= max_level that is
// consistent with those n answers, or nullopt when none exists.
std::optional<std::vector<PrefixStr>> exhibit_consistent_candidate(
    const std::vector<std::vector<PrefixStr>>& queried_order,
    const JustifiabilityLog& full_log, size_t n, int max_level);

// Tree rendering of the justifiability log (node = query with its
// counterexample, children = the concepts it justifies).
std::string render_justifiability_tree(const JustifiabilityLog& log, int k);

}  // namespace modlearn
