// Test-only brute-force oracles, independent of the library's closed forms.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "modlearn/concepts.hpp"
#include "modlearn/core.hpp"

namespace testhelp {

using namespace modlearn;

// The paper-style recursive definition of the prefix concept:
//   c(lambda) = {lambda} x N
//   c(s)      = {s} x N  union  c_sub(s)
//   c_sub(sa) = {s} x (N \ {a})  union  c_sub(s)
inline bool recursive_sub_contains(const PrefixStr& sa, const PrefixStr& t,
                                   long long value) {
  if (sa.empty()) return false;
  PrefixStr s(sa.begin(), sa.end() - 1);
  int a = sa.back();
  if (t == s && value != a) return true;
  return recursive_sub_contains(s, t, value);
}

inline bool recursive_prefix_contains(const PrefixStr& s, const PrefixStr& t,
                                      long long value) {
  if (t == s) return true;
  return recursive_sub_contains(s, t, value);
}

// Membership by enumeration-backed definitions only.
inline std::vector<Point> members_of(const ClassId& cls, const ConceptDesc& c) {
  std::vector<Point> out;
  for (const auto& x : enumerate_universe(cls)) {
    if (contains(cls, c, x)) out.push_back(x);
  }
  return out;
}

inline bool brute_subset(const ClassId& cls, const ConceptDesc& c1,
                         const ConceptDesc& c2) {
  for (const auto& x : enumerate_universe(cls)) {
    if (contains(cls, c1, x) && !contains(cls, c2, x)) return false;
  }
  return true;
}

inline std::optional<Point> brute_diff_witness(const ClassId& cls,
                                               const ConceptDesc& c1,
                                               const ConceptDesc& c2) {
  for (const auto& x : enumerate_universe(cls)) {  // canonical order
    if (contains(cls, c1, x) && !contains(cls, c2, x)) return x;
  }
  return std::nullopt;
}

inline std::optional<Point> brute_witness(const ClassId& cls, const ConceptDesc& c) {
  for (const auto& x : enumerate_universe(cls)) {
    if (contains(cls, c, x)) return x;
  }
  return std::nullopt;
}

// Deterministic sampler for property tests.
inline ConceptDesc sample_concept(const ClassId& cls, std::mt19937_64& rng) {
  auto pick = [&rng](long long n) {
    return static_cast<long long>(rng() % static_cast<uint64_t>(n));
  };
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
      return ConceptDesc::singleton(pick(cls.m() + 1));
    case ClassId::Kind::Intervals: {
      long long lo = pick(cls.universe());
      long long hi = lo + pick(cls.universe() - lo);
      return ConceptDesc::interval(lo, hi);
    }
    case ClassId::Kind::FiniteSets: {
      std::vector<long long> elems;
      for (int v = 0; v < cls.universe(); ++v) {
        if (rng() & 1) elems.push_back(v);
      }
      return ConceptDesc::finite_set(std::move(elems));
    }
    case ClassId::Kind::PairDemoLeft:
      return pick(2) == 0 ? ConceptDesc::finite_set({0})
                          : ConceptDesc::finite_set({0, 1});
    case ClassId::Kind::PairDemoRight:
      return pick(2) == 0 ? ConceptDesc::interval(0, cls.universe() - 1)
                          : ConceptDesc::interval(-cls.universe(), -1);
    case ClassId::Kind::PrefixClass: {
      PrefixStr s;
      long long len = pick(cls.max_len() + 1);
      for (long long i = 0; i < len; ++i) {
        s.push_back(static_cast<int>(pick(cls.universe())));
      }
      return ConceptDesc::prefix(std::move(s));
    }
    case ClassId::Kind::Product:
    case ClassId::Kind::Union: {
      std::vector<ConceptDesc> parts;
      for (const auto& part : cls.parts()) parts.push_back(sample_concept(part, rng));
      return cls.kind() == ClassId::Kind::Product
                 ? ConceptDesc::product(std::move(parts))
                 : ConceptDesc::union_of(std::move(parts));
    }
  }
  return ConceptDesc::empty();
}

// A learner that replays a fixed list of events; answers are ignored.
class ScriptedLearner : public Learner {
 public:
  explicit ScriptedLearner(std::vector<LearnerEvent> events)
      : events_(std::move(events)) {}

  LearnerEvent next() override { return events_.at(pos_); }
  void feed(const Answer&) override { ++pos_; }

 private:
  std::vector<LearnerEvent> events_;
  size_t pos_ = 0;
};

}  // namespace testhelp
