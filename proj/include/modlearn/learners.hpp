#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "modlearn/core.hpp"

namespace modlearn {

// Reference sublearner for a component class: maintains the version space of
// extensionally distinct candidates and asks deterministic queries until one
// candidate remains (or the queried candidate is confirmed).
//
//   Mem: ask the least point that splits the candidates.
//   EQ:  ask the least candidate.
//   Sub: ask the least candidate that is not a subset of every candidate.
//   Sup: ask the least subset-minimal candidate.
//   Pos: ask for fresh positives until one candidate is consistent.
//
// On Singletons(m) the Mem learner asks 0,1,2,... and outputs {m} after m
// negative answers, matching the class's textbook learner.
class VersionSpaceLearner : public Learner {
 public:
  VersionSpaceLearner(ClassId cls, QueryKind kind);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

  long long candidate_count();

 private:
  void ensure_init();
  void compute_pending();
  void filter(const std::function<bool(const ConceptDesc&)>& keep);

  ClassId cls_;
  QueryKind kind_;
  bool initialized_ = false;
  std::vector<ConceptDesc> candidates_;
  std::vector<Point> universe_;
  std::vector<Point> issued_positives_;
  std::optional<LearnerEvent> pending_;
};

using LearnerFactory = std::function<std::unique_ptr<Learner>()>;

// A component class plus the query kind its reference learner uses.
struct SublearnerSpec {
  ClassId cls;
  QueryKind kind = QueryKind::Mem;
  LearnerFactory make;
};

SublearnerSpec make_sublearner(const ClassId& cls, QueryKind kind);

// Query count of the reference sublearner run standalone against the honest
// oracle for `target` (the #q_i(c*_i) of the complexity bounds).
QueryStats measure_standalone(const SublearnerSpec& spec, const ConceptDesc& target,
                              long long budget = kDefaultBudget);

// Runs the given class's learner feeding only negative answers. If that query
// sequence is finite and leaves exactly one consistent concept N with a
// least member n, returns (N, n); otherwise nullopt. The sequence itself
// (in order) is appended to `sequence` when non-null.
std::optional<std::pair<ConceptDesc, Point>> all_negative_profile(
    const SublearnerSpec& spec, std::vector<Point>* sequence = nullptr);

}  // namespace modlearn
