#include "modlearn/pac.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <set>

namespace modlearn {

double vc_product_bound(const std::vector<int>& dims, int k) {
  constexpr double a1 = 2.28;
  constexpr double a2 = 3.92;
  long long sum = 0;
  for (int d : dims) {
    if (d < 0) throw Error(ErrorCode::DomainError, "negative VC dimension");
    sum += d;
  }
  return a1 * std::log(k * a2) * static_cast<double>(sum);
}

long long sample_size(const PacParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0) ||
      !(params.delta > 0.0 && params.delta < 1.0) || !(params.b > 0.0)) {
    throw Error(ErrorCode::Config, "epsilon and delta must lie in (0,1) and b > 0");
  }
  double d = static_cast<double>(params.d1 + params.d2);
  double raw = params.b *
               (d * std::log(1.0 / params.epsilon) + std::log(1.0 / params.delta)) /
               params.epsilon;
  return static_cast<long long>(std::ceil(raw));
}

double growth_bound(long long m, int d) {
  if (d < 1 || m <= d + 1) {
    throw Error(ErrorCode::DomainError, "growth bound needs m > d+1 and d >= 1");
  }
  double e = std::exp(1.0);
  return std::pow(e * static_cast<double>(m) / d, d);
}

double growth_bound_clamped(long long m, int d) {
  if (m <= 0) return 1.0;
  if (d < 1 || m <= d + 1) return std::pow(2.0, static_cast<double>(m));
  return growth_bound(m, d);
}

Distribution Distribution::uniform(const ClassId& cls) {
  Distribution dist;
  dist.points = enumerate_universe(cls);
  if (dist.points.empty()) throw Error(ErrorCode::Config, "empty universe");
  dist.probs.assign(dist.points.size(), 1.0 / static_cast<double>(dist.points.size()));
  return dist;
}

namespace {

// Deterministic uniform double in [0, 1) from the engine's raw output.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

size_t sample_index(const Distribution& dist, std::mt19937_64& rng) {
  double u = next_unit(rng);
  double acc = 0.0;
  for (size_t i = 0; i < dist.probs.size(); ++i) {
    acc += dist.probs[i];
    if (u < acc) return i;
  }
  return dist.probs.size() - 1;
}

}  // namespace

LabeledSample draw_sample(const Distribution& dist, const ClassId& cls,
                          const ConceptDesc& target, long long m, uint64_t seed) {
  if (m < 0) throw Error(ErrorCode::Config, "sample size must be non-negative");
  std::mt19937_64 rng(seed);
  LabeledSample sample;
  sample.entries.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const Point& x = dist.points[sample_index(dist, rng)];
    sample.entries.push_back({x, contains(cls, target, x)});
  }
  return sample;
}

double exact_error(const Distribution& dist, const ClassId& cls,
                   const ConceptDesc& target, const ConceptDesc& hypothesis) {
  double err = 0.0;
  for (size_t i = 0; i < dist.points.size(); ++i) {
    if (contains(cls, target, dist.points[i]) !=
        contains(cls, hypothesis, dist.points[i])) {
      err += dist.probs[i];
    }
  }
  return err;
}

long long count_realizable_labelings(const ClassId& cls,
                                     const std::vector<Point>& points) {
  std::set<std::vector<bool>> labelings;
  for (const auto& c : enumerate_concepts(cls)) {
    std::vector<bool> row;
    row.reserve(points.size());
    for (const auto& x : points) row.push_back(contains(cls, c, x));
    labelings.insert(std::move(row));
  }
  return static_cast<long long>(labelings.size());
}

// ---------------------------------------------------------------------------
// Consistency finders

namespace {

bool labels_contradictory(const std::vector<LabeledExample>& sample) {
  for (size_t i = 0; i < sample.size(); ++i) {
    for (size_t j = i + 1; j < sample.size(); ++j) {
      if (sample[i].point == sample[j].point && sample[i].label != sample[j].label) {
        return true;
      }
    }
  }
  return false;
}

std::optional<ConceptDesc> interval_find(const ClassId& cls,
                                         const std::vector<LabeledExample>& sample) {
  if (labels_contradictory(sample)) return std::nullopt;
  bool have_pos = false;
  long long lo = 0, hi = 0;
  for (const auto& e : sample) {
    if (!e.label) continue;
    long long v = e.point.value();
    if (!have_pos) {
      lo = hi = v;
      have_pos = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (have_pos) {
    // Tightest fit: the minimal cover of the positives.
    for (const auto& e : sample) {
      if (!e.label && e.point.value() >= lo && e.point.value() <= hi) {
        return std::nullopt;
      }
    }
    return ConceptDesc::interval(lo, hi);
  }
  // No positives: the least universe point not labeled negative.
  std::set<long long> negatives;
  for (const auto& e : sample) negatives.insert(e.point.value());
  for (long long v = 0; v < cls.universe(); ++v) {
    if (!negatives.count(v)) return ConceptDesc::interval(v, v);
  }
  return std::nullopt;
}

}  // namespace

ConsistencyFinder exact_finder(const ClassId& cls) {
  ConsistencyFinder finder;
  finder.cls = cls;
  if (cls.kind() == ClassId::Kind::Intervals) {
    finder.find = [cls](const std::vector<LabeledExample>& sample, double,
                        double) -> std::optional<ConceptDesc> {
      return interval_find(cls, sample);
    };
    return finder;
  }
  auto concepts = std::make_shared<std::vector<ConceptDesc>>(enumerate_concepts(cls));
  finder.find = [cls, concepts](const std::vector<LabeledExample>& sample, double,
                                double) -> std::optional<ConceptDesc> {
    for (const auto& c : *concepts) {
      bool ok = true;
      for (const auto& e : sample) {
        if (contains(cls, c, e.point) != e.label) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
    }
    return std::nullopt;
  };
  return finder;
}

// ---------------------------------------------------------------------------
// Recursive consistent-subconcept search

namespace {

struct SearchState {
  const std::vector<std::pair<Point, Point>>* negatives;
  const ConsistencyFinder* f1;
  const ConsistencyFinder* f2;
  double eps_prime;
  double delta_prime;
  long long nodes = 0;
};

std::optional<std::pair<ConceptDesc, ConceptDesc>> search(
    SearchState& st, std::vector<LabeledExample>& l1, std::vector<LabeledExample>& l2,
    size_t idx) {
  if (idx == st.negatives->size()) {
    auto c2 = st.f2->find(l2, st.eps_prime, st.delta_prime);
    if (!c2) return std::nullopt;
    auto c1 = st.f1->find(l1, st.eps_prime, st.delta_prime);
    if (!c1) return std::nullopt;
    return std::make_pair(*c1, *c2);
  }
  const auto& [x1, x2] = (*st.negatives)[idx];

  // Blame dimension 1: x1 outside c1.
  l1.push_back({x1, false});
  if (st.f1->find(l1, st.eps_prime, st.delta_prime)) {
    ++st.nodes;
    auto r = search(st, l1, l2, idx + 1);
    if (r) {
      l1.pop_back();
      return r;
    }
  }
  l1.pop_back();

  // Blame dimension 2: x1 stays inside c1, so x2 must leave c2.
  l1.push_back({x1, true});
  if (st.f1->find(l1, st.eps_prime, st.delta_prime)) {
    ++st.nodes;
    l2.push_back({x2, false});
    auto r = search(st, l1, l2, idx + 1);
    l2.pop_back();
    l1.pop_back();
    return r;
  }
  l1.pop_back();
  return std::nullopt;
}

}  // namespace

FindSubconceptsResult find_subconcepts(const std::vector<Point>& splus,
                                       const std::vector<Point>& sminus,
                                       double delta, const ConsistencyFinder& f1,
                                       const ConsistencyFinder& f2) {
  int d1 = vc_dimension(f1.cls);
  int d2 = vc_dimension(f2.cls);
  long long m = static_cast<long long>(sminus.size());
  FindSubconceptsResult result;
  result.delta_prime =
      delta / (static_cast<double>(m) * growth_bound_clamped(m, d1) +
               growth_bound_clamped(m, d2));
  size_t total = splus.size() + sminus.size();
  result.eps_prime = total > 0 ? 1.0 / static_cast<double>(total) : 1.0;

  std::vector<LabeledExample> l1, l2;
  for (const auto& p : splus) {
    auto coords = p.coords_or_self(2);
    l1.push_back({coords[0], true});
    l2.push_back({coords[1], true});
  }
  std::vector<std::pair<Point, Point>> negatives;
  for (const auto& p : sminus) {
    auto coords = p.coords_or_self(2);
    negatives.emplace_back(coords[0], coords[1]);
  }
  std::sort(negatives.begin(), negatives.end());

  SearchState st{&negatives, &f1, &f2, result.eps_prime, result.delta_prime, 0};
  result.pair = search(st, l1, l2, 0);
  result.nodes = st.nodes;
  return result;
}

// ---------------------------------------------------------------------------
// PAC learners

ExampleOracle::ExampleOracle(Distribution dist, ClassId cls, ConceptDesc target,
                             uint64_t seed)
    : dist_(std::move(dist)), cls_(std::move(cls)), target_(std::move(target)),
      seed_(seed) {
  validate_concept(cls_, target_);
}

LabeledSample ExampleOracle::draw(long long m) {
  // Each draw call reseeds from (seed, draw index) so repeated draws on one
  // oracle give distinct, reproducible streams.
  std::mt19937_64 rng(seed_ + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(draws_));
  ++draws_;
  ex_count_ += m;
  LabeledSample sample;
  sample.entries.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const Point& x = dist_.points[sample_index(dist_, rng)];
    sample.entries.push_back({x, contains(cls_, target_, x)});
  }
  return sample;
}

PacResult pac_learn_product(const PacParams& params, ExampleOracle& ex,
                            const ConsistencyFinder& f1, const ConsistencyFinder& f2) {
  PacResult out;
  out.m = sample_size(params);
  LabeledSample sample = ex.draw(out.m);
  std::vector<Point> splus, sminus;
  for (const auto& e : sample.entries) {
    (e.label ? splus : sminus).push_back(e.point);
  }
  ClassId product = ClassId::product({f1.cls, f2.cls});
  if (splus.empty() && class_contains_empty(product)) {
    out.hypothesis = ConceptDesc::empty();
    return out;
  }
  FindSubconceptsResult found = find_subconcepts(splus, sminus, params.delta, f1, f2);
  out.nodes = found.nodes;
  if (!found.pair) {
    throw Error(ErrorCode::NoConsistentHypothesis,
                "no consistent product hypothesis; the sample is not realizable");
  }
  out.hypothesis = ConceptDesc::product({found.pair->first, found.pair->second});
  return out;
}

PacResult pac_learn_with_mem(const PacParams& params, ExampleOracle& ex,
                             Oracle& mem_oracle, int k,
                             const std::vector<ConsistencyFinder>& subfinders) {
  if (k < 1 || static_cast<int>(subfinders.size()) != k) {
    throw Error(ErrorCode::Config, "need one subfinder per dimension");
  }
  PacResult out;
  out.m = sample_size(params);
  out.dim_samples.resize(static_cast<size_t>(k));
  LabeledSample sample = ex.draw(out.m);

  const LabeledExample* positive = nullptr;
  for (const auto& e : sample.entries) {
    if (e.label) {
      positive = &e;
      break;
    }
  }
  std::vector<ClassId> part_classes;
  for (const auto& f : subfinders) part_classes.push_back(f.cls);
  ClassId product = ClassId::product(std::move(part_classes));

  if (!positive) {
    if (class_contains_empty(product)) {
      out.hypothesis = ConceptDesc::empty();
      return out;
    }
    // No positive example and no empty concept: fall back to the subfinders
    // with unconstrained samples.
    std::vector<ConceptDesc> parts;
    for (int i = 0; i < k; ++i) {
      auto c = subfinders[i].find({}, params.epsilon / k, params.delta / k);
      if (!c) {
        throw Error(ErrorCode::NoConsistentHypothesis, "subfinder found no concept");
      }
      parts.push_back(*c);
    }
    out.hypothesis = ConceptDesc::product(std::move(parts));
    return out;
  }

  auto p_coords = positive->point.coords_or_self(k);
  for (const auto& e : sample.entries) {
    auto coords = e.point.coords_or_self(k);
    if (e.label) {
      for (int i = 0; i < k; ++i) out.dim_samples[i].push_back({coords[i], true});
      continue;
    }
    // Split the negative per dimension through the positive example.
    for (int i = 0; i < k; ++i) {
      auto probe = p_coords;
      probe[i] = coords[i];
      Answer a = mem_oracle.answer(Query::mem(Point::vec(std::move(probe))));
      ++out.mem_count;
      out.dim_samples[i].push_back({coords[i], a.is_yes()});
    }
  }

  std::vector<ConceptDesc> parts;
  for (int i = 0; i < k; ++i) {
    auto c = subfinders[i].find(out.dim_samples[i], params.epsilon / k,
                                params.delta / k);
    if (!c) {
      throw Error(ErrorCode::NoConsistentHypothesis,
                  "per-dimension sample admits no consistent concept");
    }
    parts.push_back(*c);
  }
  out.hypothesis = ConceptDesc::product(std::move(parts));
  return out;
}

}  // namespace modlearn
