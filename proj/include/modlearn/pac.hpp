#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "modlearn/core.hpp"

namespace modlearn {

struct PacParams {
  double epsilon = 0.1;
  double delta = 0.1;
  double b = 4.0;  // sample-complexity constant
  int d1 = 0;
  int d2 = 0;
};

// a1 * log(k * a2) * sum(dims) with a1 = 2.28, a2 = 3.92 (natural log).
double vc_product_bound(const std::vector<int>& dims, int k);

// ceil(b * (d*log(1/eps) + log(1/delta)) / eps) with d = d1 + d2.
long long sample_size(const PacParams& params);

// (e*m/d)^d, valid for m > d + 1; throws DomainError outside that range.
double growth_bound(long long m, int d);

// Growth value used inside delta' of the subconcept search: the
// Sauer-Shelah bound where it applies, 2^m for m <= d+1, 1 for m = 0.
double growth_bound_clamped(long long m, int d);

// Explicit probability table over a finite universe.
struct Distribution {
  std::vector<Point> points;
  std::vector<double> probs;

  static Distribution uniform(const ClassId& cls);
};

struct LabeledExample {
  Point point;
  bool label = false;
};

struct LabeledSample {
  std::vector<LabeledExample> entries;
};

// m independent draws labeled by target membership; deterministic per seed.
LabeledSample draw_sample(const Distribution& dist, const ClassId& cls,
                          const ConceptDesc& target, long long m, uint64_t seed);

// Exact error of `hypothesis` against `target` under the distribution.
double exact_error(const Distribution& dist, const ClassId& cls,
                   const ConceptDesc& target, const ConceptDesc& hypothesis);

// Number of distinct labelings the class induces on the given points
// (the exact growth function evaluated at those points).
long long count_realizable_labelings(const ClassId& cls,
                                     const std::vector<Point>& points);

// Returns a concept consistent with every labeled point, or nullopt when
// none exists. The epsilon/delta arguments mirror the recursive search's
// pseudocode interface; the exact finders ignore them.
struct ConsistencyFinder {
  ClassId cls;
  std::function<std::optional<ConceptDesc>(const std::vector<LabeledExample>&,
                                           double eps, double delta)>
      find;
};

// Generic exact finder (least consistent concept in canonical order); for
// interval classes the finder returns the minimal cover of the positives.
ConsistencyFinder exact_finder(const ClassId& cls);

struct FindSubconceptsResult {
  std::optional<std::pair<ConceptDesc, ConceptDesc>> pair;
  long long nodes = 0;  // gated recursive calls
  double delta_prime = 0.0;
  double eps_prime = 0.0;
};

// Recursive search for (c1, c2) with c1 x c2 consistent with the sample:
// positives fix true labels on both projections; each negative (x1, x2) is
// blamed on dimension 1 ((x1, false) into L1) or on dimension 2 ((x1, true)
// into L1 and (x2, false) into L2), pruning blame assignments the dimension-1
// finder rejects.
FindSubconceptsResult find_subconcepts(const std::vector<Point>& splus,
                                       const std::vector<Point>& sminus,
                                       double delta,
                                       const ConsistencyFinder& f1,
                                       const ConsistencyFinder& f2);

// EX_D oracle over an explicit distribution and target; draws are labeled
// truthfully and counted.
class ExampleOracle {
 public:
  ExampleOracle(Distribution dist, ClassId cls, ConceptDesc target, uint64_t seed);

  LabeledSample draw(long long m);
  long long ex_count() const { return ex_count_; }

  const ClassId& cls() const { return cls_; }
  const ConceptDesc& target() const { return target_; }
  const Distribution& dist() const { return dist_; }

 private:
  Distribution dist_;
  ClassId cls_;
  ConceptDesc target_;
  uint64_t seed_;
  long long draws_ = 0;
  long long ex_count_ = 0;
};

struct PacResult {
  ConceptDesc hypothesis;
  long long m = 0;
  long long nodes = 0;
  long long mem_count = 0;
  // Per-dimension labeled samples built by the membership splitter.
  std::vector<std::vector<LabeledExample>> dim_samples;
};

// PAC-learns a 2-fold product from labeled examples alone via the recursive
// consistent-subconcept search.
PacResult pac_learn_product(const PacParams& params, ExampleOracle& ex,
                            const ConsistencyFinder& f1, const ConsistencyFinder& f2);

// PAC-learns a k-fold product from labeled examples plus membership queries:
// negatives are split per dimension by membership probes through a drawn
// positive example, and each subfinder runs with eps/k, delta/k.
PacResult pac_learn_with_mem(const PacParams& params, ExampleOracle& ex,
                             Oracle& mem_oracle, int k,
                             const std::vector<ConsistencyFinder>& subfinders);

}  // namespace modlearn
