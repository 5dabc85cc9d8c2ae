#include "modlearn/concepts.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace modlearn {

namespace {

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorCode::UniverseMismatch, what);
}

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::Config, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Prefix strings

std::string prefix_str_to_string(const PrefixStr& s) {
  bool single_digit = std::all_of(s.begin(), s.end(),
                                  [](int v) { return v >= 0 && v <= 9; });
  std::ostringstream out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!single_digit && i > 0) out << '.';
    out << s[i];
  }
  return out.str();
}

PrefixStr prefix_str_from_string(const std::string& text) {
  PrefixStr s;
  if (text.empty()) return s;
  if (text.find('.') != std::string::npos) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, '.')) {
      if (item.empty()) bad_config("malformed prefix string: " + text);
      s.push_back(std::stoi(item));
    }
    return s;
  }
  for (char c : text) {
    if (c < '0' || c > '9') bad_config("malformed prefix string: " + text);
    s.push_back(c - '0');
  }
  return s;
}

bool prefix_contains(const PrefixStr& s, const PrefixStr& t, long long value) {
  if (t.size() > s.size()) return false;
  if (!std::equal(t.begin(), t.end(), s.begin())) return false;
  if (t.size() == s.size()) return true;  // t == s: all values
  return value != s[t.size()];            // proper prefix: all but the next symbol
}

// ---------------------------------------------------------------------------
// Point

Point Point::integer(long long v) {
  Point p;
  p.kind_ = Kind::Int;
  p.value_ = v;
  return p;
}

Point Point::pair(PrefixStr s, long long value) {
  Point p;
  p.kind_ = Kind::Pair;
  p.str_ = std::move(s);
  p.value_ = value;
  return p;
}

Point Point::vec(std::vector<Point> coords) {
  if (coords.size() == 1) return coords.front();
  Point p;
  p.kind_ = Kind::Vec;
  p.coords_ = std::move(coords);
  return p;
}

Point Point::tagged(int dim, Point inner) {
  Point p;
  p.kind_ = Kind::Tagged;
  p.value_ = dim;
  p.coords_.push_back(std::move(inner));
  return p;
}

std::vector<Point> Point::coords_or_self(int arity) const {
  if (arity == 1) return {*this};
  if (kind_ != Kind::Vec || static_cast<int>(coords_.size()) != arity) {
    mismatch("expected a point of arity " + std::to_string(arity));
  }
  return coords_;
}

bool operator==(const Point& a, const Point& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Point::Kind::Int:
      return a.value_ <=> b.value_;
    case Point::Kind::Pair: {
      // (length, lexicographic, value)
      if (auto c = a.str_.size() <=> b.str_.size(); c != 0) return c;
      if (auto c = a.str_ <=> b.str_; c != 0) return c;
      return a.value_ <=> b.value_;
    }
    case Point::Kind::Vec: {
      if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
      for (size_t i = 0; i < a.coords_.size(); ++i) {
        if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
    case Point::Kind::Tagged: {
      if (auto c = a.value_ <=> b.value_; c != 0) return c;
      return a.coords_.front() <=> b.coords_.front();
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// ConceptDesc

ConceptDesc ConceptDesc::empty() { return ConceptDesc(); }

ConceptDesc ConceptDesc::interval(long long lo, long long hi) {
  if (lo > hi) bad_config("interval with lo > hi");
  ConceptDesc c;
  c.kind_ = Kind::Interval;
  c.lo_ = lo;
  c.hi_ = hi;
  return c;
}

ConceptDesc ConceptDesc::singleton(long long j) {
  ConceptDesc c;
  c.kind_ = Kind::Singleton;
  c.lo_ = c.hi_ = j;
  return c;
}

ConceptDesc ConceptDesc::finite_set(std::vector<long long> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) return empty();
  ConceptDesc c;
  c.kind_ = Kind::FiniteSet;
  c.elems_ = std::move(elems);
  return c;
}

ConceptDesc ConceptDesc::prefix(PrefixStr s) {
  ConceptDesc c;
  c.kind_ = Kind::Prefix;
  c.str_ = std::move(s);
  return c;
}

ConceptDesc ConceptDesc::product(std::vector<ConceptDesc> parts) {
  for (const auto& p : parts) {
    if (p.kind_ == Kind::Empty) return empty();
  }
  if (parts.size() == 1) return parts.front();
  ConceptDesc c;
  c.kind_ = Kind::Product;
  c.parts_ = std::move(parts);
  return c;
}

ConceptDesc ConceptDesc::union_of(std::vector<ConceptDesc> parts) {
  bool all_empty = std::all_of(parts.begin(), parts.end(), [](const ConceptDesc& p) {
    return p.kind_ == Kind::Empty;
  });
  if (all_empty) return empty();
  ConceptDesc c;
  c.kind_ = Kind::Union;
  c.parts_ = std::move(parts);
  return c;
}

std::vector<ConceptDesc> ConceptDesc::parts_or_self(int arity) const {
  if (arity == 1) return {*this};
  if (kind_ == Kind::Empty) return std::vector<ConceptDesc>(arity, empty());
  if ((kind_ != Kind::Product && kind_ != Kind::Union) ||
      static_cast<int>(parts_.size()) != arity) {
    mismatch("expected a concept of arity " + std::to_string(arity));
  }
  return parts_;
}

bool operator==(const ConceptDesc& a, const ConceptDesc& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ConceptDesc& a, const ConceptDesc& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case ConceptDesc::Kind::Empty:
      return std::strong_ordering::equal;
    case ConceptDesc::Kind::Interval:
      if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
      return a.hi_ <=> b.hi_;
    case ConceptDesc::Kind::Singleton:
      return a.lo_ <=> b.lo_;
    case ConceptDesc::Kind::FiniteSet:
      return a.elems_ <=> b.elems_;
    case ConceptDesc::Kind::Prefix:
      if (auto c = a.str_.size() <=> b.str_.size(); c != 0) return c;
      return a.str_ <=> b.str_;
    case ConceptDesc::Kind::Product:
    case ConceptDesc::Kind::Union: {
      if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
      for (size_t i = 0; i < a.parts_.size(); ++i) {
        if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// ClassId

ClassId ClassId::singletons(int m) {
  if (m < 0) bad_config("singletons(m) needs m >= 0");
  ClassId c;
  c.kind_ = Kind::Singletons;
  c.param_ = m;
  return c;
}

ClassId ClassId::intervals(int universe) {
  if (universe < 1) bad_config("intervals(U) needs U >= 1");
  ClassId c;
  c.kind_ = Kind::Intervals;
  c.param_ = universe;
  return c;
}

ClassId ClassId::prefix_class(int universe, int max_len) {
  if (universe < 1 || max_len < 0) bad_config("prefix(U,maxLen) needs U >= 1, maxLen >= 0");
  ClassId c;
  c.kind_ = Kind::PrefixClass;
  c.param_ = universe;
  c.max_len_ = max_len;
  return c;
}

ClassId ClassId::finite_sets(int universe) {
  if (universe < 0 || universe > 20) bad_config("finitesets(U) needs 0 <= U <= 20");
  ClassId c;
  c.kind_ = Kind::FiniteSets;
  c.param_ = universe;
  return c;
}

ClassId ClassId::pair_demo_left() {
  ClassId c;
  c.kind_ = Kind::PairDemoLeft;
  c.param_ = 2;
  return c;
}

ClassId ClassId::pair_demo_right(int universe) {
  if (universe < 1) bad_config("pairdemo_right(U) needs U >= 1");
  ClassId c;
  c.kind_ = Kind::PairDemoRight;
  c.param_ = universe;
  return c;
}

ClassId ClassId::pair_demo(int universe) {
  return product({pair_demo_left(), pair_demo_right(universe)});
}

ClassId ClassId::product(std::vector<ClassId> parts) {
  if (parts.empty()) bad_config("product of no classes");
  if (parts.size() == 1) return parts.front();
  ClassId c;
  c.kind_ = Kind::Product;
  c.parts_ = std::move(parts);
  return c;
}

ClassId ClassId::union_of(std::vector<ClassId> parts) {
  if (parts.empty()) bad_config("union of no classes");
  ClassId c;
  c.kind_ = Kind::Union;
  c.parts_ = std::move(parts);
  return c;
}

int ClassId::arity() const {
  if (kind_ == Kind::Product || kind_ == Kind::Union) {
    return static_cast<int>(parts_.size());
  }
  return 1;
}

std::string ClassId::to_string() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Singletons: out << "singletons(" << param_ << ")"; break;
    case Kind::Intervals: out << "intervals(" << param_ << ")"; break;
    case Kind::PrefixClass: out << "prefix(" << param_ << "," << max_len_ << ")"; break;
    case Kind::FiniteSets: out << "finitesets(" << param_ << ")"; break;
    case Kind::PairDemoLeft: out << "pairdemo_left"; break;
    case Kind::PairDemoRight: out << "pairdemo_right(" << param_ << ")"; break;
    case Kind::Product:
    case Kind::Union: {
      out << (kind_ == Kind::Product ? "prod(" : "union(");
      for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out << ",";
        out << parts_[i].to_string();
      }
      out << ")";
      break;
    }
  }
  return out.str();
}

bool operator==(const ClassId& a, const ClassId& b) {
  return a.to_string() == b.to_string();
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// Inclusive scalar universe bounds.
std::pair<long long, long long> scalar_bounds(const ClassId& cls) {
  switch (cls.kind()) {
    case ClassId::Kind::Singletons: return {0, cls.m()};
    case ClassId::Kind::Intervals: return {0, cls.universe() - 1};
    case ClassId::Kind::FiniteSets: return {0, cls.universe() - 1};
    case ClassId::Kind::PairDemoLeft: return {0, 1};
    case ClassId::Kind::PairDemoRight: return {-cls.universe(), cls.universe() - 1};
    default: mismatch("not a scalar class: " + cls.to_string());
  }
}

// The concept's elements as a sorted vector; scalar classes only.
std::vector<long long> scalar_elements(const ConceptDesc& c) {
  switch (c.kind()) {
    case ConceptDesc::Kind::Empty:
      return {};
    case ConceptDesc::Kind::Interval: {
      std::vector<long long> out;
      out.reserve(static_cast<size_t>(c.hi() - c.lo() + 1));
      for (long long v = c.lo(); v <= c.hi(); ++v) out.push_back(v);
      return out;
    }
    case ConceptDesc::Kind::Singleton:
      return {c.value()};
    case ConceptDesc::Kind::FiniteSet:
      return c.elements();
    default:
      mismatch("not a scalar concept");
  }
}

bool scalar_contains(const ConceptDesc& c, long long v) {
  switch (c.kind()) {
    case ConceptDesc::Kind::Empty: return false;
    case ConceptDesc::Kind::Interval: return c.lo() <= v && v <= c.hi();
    case ConceptDesc::Kind::Singleton: return c.value() == v;
    case ConceptDesc::Kind::FiniteSet:
      return std::binary_search(c.elements().begin(), c.elements().end(), v);
    default: mismatch("not a scalar concept");
  }
}

}  // namespace

void validate_point(const ClassId& cls, const Point& x) {
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
    case ClassId::Kind::Intervals:
    case ClassId::Kind::FiniteSets:
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight: {
      if (x.kind() != Point::Kind::Int) mismatch("expected a scalar point");
      auto [lo, hi] = scalar_bounds(cls);
      if (x.value() < lo || x.value() > hi) {
        mismatch("point outside the universe of " + cls.to_string());
      }
      return;
    }
    case ClassId::Kind::PrefixClass: {
      if (x.kind() != Point::Kind::Pair) mismatch("expected a (string, value) point");
      if (static_cast<int>(x.prefix().size()) > cls.max_len()) {
        mismatch("prefix string longer than maxLen");
      }
      for (int sym : x.prefix()) {
        if (sym < 0 || sym >= cls.universe()) mismatch("prefix symbol outside [0,U)");
      }
      if (x.value() < 0 || x.value() >= cls.universe()) {
        mismatch("pair value outside [0,U)");
      }
      return;
    }
    case ClassId::Kind::Product: {
      auto coords = x.coords_or_self(cls.arity());
      for (size_t i = 0; i < coords.size(); ++i) {
        validate_point(cls.parts()[i], coords[i]);
      }
      return;
    }
    case ClassId::Kind::Union: {
      if (x.kind() != Point::Kind::Tagged) mismatch("expected a tagged point");
      if (x.tag() < 0 || x.tag() >= cls.arity()) mismatch("tag outside the union");
      validate_point(cls.parts()[x.tag()], x.inner());
      return;
    }
  }
}

void validate_concept(const ClassId& cls, const ConceptDesc& c) {
  if (c.kind() == ConceptDesc::Kind::Empty) {
    if (!class_contains_empty(cls)) {
      mismatch("the empty concept is not a member of " + cls.to_string());
    }
    return;
  }
  switch (cls.kind()) {
    case ClassId::Kind::Singletons: {
      if (c.kind() != ConceptDesc::Kind::Singleton) mismatch("expected {j}");
      if (c.value() < 0 || c.value() > cls.m()) mismatch("singleton outside [0,m]");
      return;
    }
    case ClassId::Kind::Intervals: {
      if (c.kind() != ConceptDesc::Kind::Interval) mismatch("expected [lo,hi]");
      if (c.lo() < 0 || c.hi() >= cls.universe()) mismatch("interval outside [0,U)");
      return;
    }
    case ClassId::Kind::FiniteSets: {
      if (c.kind() != ConceptDesc::Kind::FiniteSet) mismatch("expected a finite set");
      auto [lo, hi] = scalar_bounds(cls);
      for (long long v : c.elements()) {
        if (v < lo || v > hi) mismatch("set element outside [0,U)");
      }
      return;
    }
    case ClassId::Kind::PairDemoLeft: {
      if (c.kind() != ConceptDesc::Kind::FiniteSet) mismatch("expected {a} or {a,b}");
      if (!(c.elements() == std::vector<long long>{0} ||
            c.elements() == std::vector<long long>{0, 1})) {
        mismatch("pair_demo_left concepts are {a} and {a,b}");
      }
      return;
    }
    case ClassId::Kind::PairDemoRight: {
      if (c.kind() != ConceptDesc::Kind::Interval) mismatch("expected a half range");
      bool nonneg = c.lo() == 0 && c.hi() == cls.universe() - 1;
      bool neg = c.lo() == -cls.universe() && c.hi() == -1;
      if (!nonneg && !neg) mismatch("pair_demo_right concepts are the two halves");
      return;
    }
    case ClassId::Kind::PrefixClass: {
      if (c.kind() != ConceptDesc::Kind::Prefix) mismatch("expected c(s)");
      if (static_cast<int>(c.prefix_str().size()) > cls.max_len()) {
        mismatch("prefix concept longer than maxLen");
      }
      for (int sym : c.prefix_str()) {
        if (sym < 0 || sym >= cls.universe()) mismatch("prefix symbol outside [0,U)");
      }
      return;
    }
    case ClassId::Kind::Product: {
      if (c.kind() != ConceptDesc::Kind::Product ||
          static_cast<int>(c.parts().size()) != cls.arity()) {
        mismatch("expected prod(...) of arity " + std::to_string(cls.arity()));
      }
      for (size_t i = 0; i < c.parts().size(); ++i) {
        validate_concept(cls.parts()[i], c.parts()[i]);
      }
      return;
    }
    case ClassId::Kind::Union: {
      if (c.kind() != ConceptDesc::Kind::Union ||
          static_cast<int>(c.parts().size()) != cls.arity()) {
        mismatch("expected union(...) of arity " + std::to_string(cls.arity()));
      }
      for (size_t i = 0; i < c.parts().size(); ++i) {
        validate_concept(cls.parts()[i], c.parts()[i]);
      }
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Semantics

bool contains(const ClassId& cls, const ConceptDesc& c, const Point& x) {
  validate_point(cls, x);
  if (c.kind() == ConceptDesc::Kind::Empty) return false;
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
    case ClassId::Kind::Intervals:
    case ClassId::Kind::FiniteSets:
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight:
      return scalar_contains(c, x.value());
    case ClassId::Kind::PrefixClass:
      return prefix_contains(c.prefix_str(), x.prefix(), x.value());
    case ClassId::Kind::Product: {
      auto parts = c.parts_or_self(cls.arity());
      auto coords = x.coords_or_self(cls.arity());
      for (size_t i = 0; i < parts.size(); ++i) {
        if (!contains(cls.parts()[i], parts[i], coords[i])) return false;
      }
      return true;
    }
    case ClassId::Kind::Union: {
      auto parts = c.parts_or_self(cls.arity());
      return contains(cls.parts()[x.tag()], parts[x.tag()], x.inner());
    }
  }
  return false;
}

bool subset_of(const ClassId& cls, const ConceptDesc& c1, const ConceptDesc& c2) {
  if (c1.kind() == ConceptDesc::Kind::Empty) return true;
  if (c2.kind() == ConceptDesc::Kind::Empty) {
    // Non-empty descriptions denote nonempty sets by normalization, except
    // unions whose parts may individually be empty.
    if (c1.kind() == ConceptDesc::Kind::Union) {
      return is_empty_concept(cls, c1);
    }
    return false;
  }
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
    case ClassId::Kind::Intervals:
    case ClassId::Kind::FiniteSets:
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight: {
      auto e1 = scalar_elements(c1);
      auto e2 = scalar_elements(c2);
      return std::includes(e2.begin(), e2.end(), e1.begin(), e1.end());
    }
    case ClassId::Kind::PrefixClass:
      // c(s) is a subset of c(s') iff s = s' (the class is an antichain).
      return c1.prefix_str() == c2.prefix_str();
    case ClassId::Kind::Product: {
      // Componentwise inclusion; sound because c1 is nonempty here.
      auto p1 = c1.parts_or_self(cls.arity());
      auto p2 = c2.parts_or_self(cls.arity());
      for (size_t i = 0; i < p1.size(); ++i) {
        if (!subset_of(cls.parts()[i], p1[i], p2[i])) return false;
      }
      return true;
    }
    case ClassId::Kind::Union: {
      auto p1 = c1.parts_or_self(cls.arity());
      auto p2 = c2.parts_or_self(cls.arity());
      for (size_t i = 0; i < p1.size(); ++i) {
        if (!subset_of(cls.parts()[i], p1[i], p2[i])) return false;
      }
      return true;
    }
  }
  return false;
}

bool extensionally_equal(const ClassId& cls, const ConceptDesc& c1,
                         const ConceptDesc& c2) {
  return subset_of(cls, c1, c2) && subset_of(cls, c2, c1);
}

bool is_empty_concept(const ClassId& cls, const ConceptDesc& c) {
  return !witness(cls, c).has_value();
}

namespace {

// Value set of c(s) at a fixed string t: nothing, everything, or everything
// except one symbol.
struct PrefixValues {
  enum class Kind { None, All, CoSingle } kind = Kind::None;
  int excluded = 0;
};

PrefixValues prefix_values_at(const PrefixStr& s, const PrefixStr& t) {
  if (t.size() > s.size() || !std::equal(t.begin(), t.end(), s.begin())) {
    return {PrefixValues::Kind::None, 0};
  }
  if (t.size() == s.size()) return {PrefixValues::Kind::All, 0};
  return {PrefixValues::Kind::CoSingle, s[t.size()]};
}

// Least value of a \ b within [0, limit), or -1 when empty.
long long least_value_diff(PrefixValues a, PrefixValues b, long long limit) {
  auto least_not = [&](long long excluded) -> long long {
    long long v = (excluded == 0) ? 1 : 0;
    return v < limit ? v : -1;
  };
  switch (a.kind) {
    case PrefixValues::Kind::None:
      return -1;
    case PrefixValues::Kind::All:
      switch (b.kind) {
        case PrefixValues::Kind::None: return limit > 0 ? 0 : -1;
        case PrefixValues::Kind::All: return -1;
        case PrefixValues::Kind::CoSingle:
          return b.excluded < limit ? b.excluded : -1;
      }
      break;
    case PrefixValues::Kind::CoSingle:
      switch (b.kind) {
        case PrefixValues::Kind::None: return least_not(a.excluded);
        case PrefixValues::Kind::All: return -1;
        case PrefixValues::Kind::CoSingle:
          if (a.excluded == b.excluded) return -1;
          return b.excluded < limit ? b.excluded : -1;
      }
      break;
  }
  return -1;
}

std::optional<Point> prefix_diff_witness(const ClassId& cls, const PrefixStr& s1,
                                         const ConceptDesc& c2) {
  long long limit = cls.universe();
  // Differences can only occur at prefixes of s1; scanning them by length
  // follows the canonical (length, lex, value) point order.
  for (size_t len = 0; len <= s1.size(); ++len) {
    PrefixStr t(s1.begin(), s1.begin() + len);
    PrefixValues v1 = prefix_values_at(s1, t);
    PrefixValues v2 = c2.kind() == ConceptDesc::Kind::Empty
                          ? PrefixValues{PrefixValues::Kind::None, 0}
                          : prefix_values_at(c2.prefix_str(), t);
    long long v = least_value_diff(v1, v2, limit);
    if (v >= 0) return Point::pair(t, v);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Point> witness(const ClassId& cls, const ConceptDesc& c) {
  if (c.kind() == ConceptDesc::Kind::Empty) return std::nullopt;
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
    case ClassId::Kind::Intervals:
    case ClassId::Kind::FiniteSets:
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight: {
      auto elems = scalar_elements(c);
      if (elems.empty()) return std::nullopt;
      return Point::integer(elems.front());
    }
    case ClassId::Kind::PrefixClass: {
      const PrefixStr& s = c.prefix_str();
      for (size_t len = 0; len <= s.size(); ++len) {
        PrefixStr t(s.begin(), s.begin() + len);
        PrefixValues v = prefix_values_at(s, t);
        long long val = least_value_diff(v, {PrefixValues::Kind::None, 0},
                                         cls.universe());
        if (val >= 0) return Point::pair(t, val);
      }
      return std::nullopt;
    }
    case ClassId::Kind::Product: {
      auto parts = c.parts_or_self(cls.arity());
      std::vector<Point> coords;
      for (size_t i = 0; i < parts.size(); ++i) {
        auto w = witness(cls.parts()[i], parts[i]);
        if (!w) return std::nullopt;
        coords.push_back(*w);
      }
      return Point::vec(std::move(coords));
    }
    case ClassId::Kind::Union: {
      auto parts = c.parts_or_self(cls.arity());
      for (size_t i = 0; i < parts.size(); ++i) {
        auto w = witness(cls.parts()[i], parts[i]);
        if (w) return Point::tagged(static_cast<int>(i), *w);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Point> diff_witness(const ClassId& cls, const ConceptDesc& c1,
                                  const ConceptDesc& c2) {
  if (c1.kind() == ConceptDesc::Kind::Empty) return std::nullopt;
  if (c2.kind() == ConceptDesc::Kind::Empty) return witness(cls, c1);
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
    case ClassId::Kind::Intervals:
    case ClassId::Kind::FiniteSets:
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight: {
      for (long long v : scalar_elements(c1)) {
        if (!scalar_contains(c2, v)) return Point::integer(v);
      }
      return std::nullopt;
    }
    case ClassId::Kind::PrefixClass:
      return prefix_diff_witness(cls, c1.prefix_str(), c2);
    case ClassId::Kind::Product: {
      // Least vector in prod(A_i) \ prod(B_i): walk dimensions picking the
      // least member everywhere, switching to the least violating value at
      // the last dimension that still needs one.
      int k = cls.arity();
      auto a = c1.parts_or_self(k);
      auto b = c2.parts_or_self(k);
      std::vector<Point> mins(k);
      std::vector<std::optional<Point>> viol(k);
      for (int i = 0; i < k; ++i) {
        auto w = witness(cls.parts()[i], a[i]);
        if (!w) return std::nullopt;  // empty product: no difference
        mins[i] = *w;
        viol[i] = diff_witness(cls.parts()[i], a[i], b[i]);
      }
      // suffix_viol[i]: some dimension >= i has a violating value.
      std::vector<bool> suffix_viol(k + 1, false);
      for (int i = k - 1; i >= 0; --i) {
        suffix_viol[i] = suffix_viol[i + 1] || viol[i].has_value();
      }
      if (!suffix_viol[0]) return std::nullopt;
      std::vector<Point> coords(k);
      for (int i = 0; i < k; ++i) {
        bool min_violates = viol[i] && *viol[i] == mins[i];
        if (min_violates) {
          // The least member already violates; everything after can be least.
          coords[i] = mins[i];
          for (int j = i + 1; j < k; ++j) coords[j] = mins[j];
          break;
        }
        if (suffix_viol[i + 1]) {
          coords[i] = mins[i];
          continue;
        }
        // Last chance to violate: take the least violating value here.
        coords[i] = *viol[i];
        for (int j = i + 1; j < k; ++j) coords[j] = mins[j];
        break;
      }
      return Point::vec(std::move(coords));
    }
    case ClassId::Kind::Union: {
      int k = cls.arity();
      auto a = c1.parts_or_self(k);
      auto b = c2.parts_or_self(k);
      for (int i = 0; i < k; ++i) {
        auto w = diff_witness(cls.parts()[i], a[i], b[i]);
        if (w) return Point::tagged(i, *w);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool class_contains_empty(const ClassId& cls) {
  switch (cls.kind()) {
    case ClassId::Kind::FiniteSets:
      return true;
    case ClassId::Kind::Product:
      return std::any_of(cls.parts().begin(), cls.parts().end(), class_contains_empty);
    case ClassId::Kind::Union:
      return std::all_of(cls.parts().begin(), cls.parts().end(), class_contains_empty);
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Point> enumerate_universe(const ClassId& cls) {
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
    case ClassId::Kind::Intervals:
    case ClassId::Kind::FiniteSets:
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight: {
      auto [lo, hi] = scalar_bounds(cls);
      std::vector<Point> out;
      for (long long v = lo; v <= hi; ++v) out.push_back(Point::integer(v));
      return out;
    }
    case ClassId::Kind::PrefixClass: {
      std::vector<Point> out;
      std::vector<PrefixStr> level = {PrefixStr{}};
      for (int len = 0; len <= cls.max_len(); ++len) {
        for (const auto& t : level) {
          for (int v = 0; v < cls.universe(); ++v) out.push_back(Point::pair(t, v));
        }
        if (len == cls.max_len()) break;
        std::vector<PrefixStr> next;
        for (const auto& t : level) {
          for (int sym = 0; sym < cls.universe(); ++sym) {
            PrefixStr u = t;
            u.push_back(sym);
            next.push_back(std::move(u));
          }
        }
        level = std::move(next);
      }
      return out;
    }
    case ClassId::Kind::Product: {
      std::vector<std::vector<Point>> per_dim;
      for (const auto& part : cls.parts()) per_dim.push_back(enumerate_universe(part));
      std::vector<Point> out;
      std::vector<size_t> idx(per_dim.size(), 0);
      while (true) {
        std::vector<Point> coords;
        for (size_t i = 0; i < per_dim.size(); ++i) coords.push_back(per_dim[i][idx[i]]);
        out.push_back(Point::vec(std::move(coords)));
        size_t i = per_dim.size();
        while (i > 0) {
          --i;
          if (++idx[i] < per_dim[i].size()) break;
          idx[i] = 0;
          if (i == 0) return out;
        }
      }
    }
    case ClassId::Kind::Union: {
      std::vector<Point> out;
      for (size_t i = 0; i < cls.parts().size(); ++i) {
        for (const auto& p : enumerate_universe(cls.parts()[i])) {
          out.push_back(Point::tagged(static_cast<int>(i), p));
        }
      }
      return out;
    }
  }
  return {};
}

std::vector<ConceptDesc> enumerate_concepts(const ClassId& cls) {
  switch (cls.kind()) {
    case ClassId::Kind::Singletons: {
      std::vector<ConceptDesc> out;
      for (int j = 0; j <= cls.m(); ++j) out.push_back(ConceptDesc::singleton(j));
      return out;
    }
    case ClassId::Kind::Intervals: {
      std::vector<ConceptDesc> out;
      for (int lo = 0; lo < cls.universe(); ++lo) {
        for (int hi = lo; hi < cls.universe(); ++hi) {
          out.push_back(ConceptDesc::interval(lo, hi));
        }
      }
      return out;
    }
    case ClassId::Kind::FiniteSets: {
      std::vector<ConceptDesc> out;
      int u = cls.universe();
      for (long long mask = 0; mask < (1LL << u); ++mask) {
        std::vector<long long> elems;
        for (int v = 0; v < u; ++v) {
          if (mask & (1LL << v)) elems.push_back(v);
        }
        out.push_back(ConceptDesc::finite_set(std::move(elems)));
      }
      return out;
    }
    case ClassId::Kind::PairDemoLeft:
      return {ConceptDesc::finite_set({0}), ConceptDesc::finite_set({0, 1})};
    case ClassId::Kind::PairDemoRight:
      return {ConceptDesc::interval(-cls.universe(), -1),
              ConceptDesc::interval(0, cls.universe() - 1)};
    case ClassId::Kind::PrefixClass: {
      std::vector<ConceptDesc> out;
      std::vector<PrefixStr> level = {PrefixStr{}};
      for (int len = 0; len <= cls.max_len(); ++len) {
        for (const auto& s : level) out.push_back(ConceptDesc::prefix(s));
        if (len == cls.max_len()) break;
        std::vector<PrefixStr> next;
        for (const auto& s : level) {
          for (int sym = 0; sym < cls.universe(); ++sym) {
            PrefixStr u = s;
            u.push_back(sym);
            next.push_back(std::move(u));
          }
        }
        level = std::move(next);
      }
      return out;
    }
    case ClassId::Kind::Product:
    case ClassId::Kind::Union: {
      std::vector<std::vector<ConceptDesc>> per_dim;
      for (const auto& part : cls.parts()) per_dim.push_back(enumerate_concepts(part));
      std::vector<ConceptDesc> out;
      std::set<ConceptDesc> seen;  // Empty normalization may produce duplicates
      std::vector<size_t> idx(per_dim.size(), 0);
      bool is_product = cls.kind() == ClassId::Kind::Product;
      while (true) {
        std::vector<ConceptDesc> parts;
        for (size_t i = 0; i < per_dim.size(); ++i) parts.push_back(per_dim[i][idx[i]]);
        ConceptDesc c = is_product ? ConceptDesc::product(std::move(parts))
                                   : ConceptDesc::union_of(std::move(parts));
        if (seen.insert(c).second) out.push_back(c);
        size_t i = per_dim.size();
        bool carry = true;
        while (i > 0 && carry) {
          --i;
          if (++idx[i] < per_dim[i].size()) {
            carry = false;
          } else {
            idx[i] = 0;
          }
        }
        if (carry) return out;
      }
    }
  }
  return {};
}

int vc_dimension(const ClassId& cls) {
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
      return cls.m() >= 1 ? 1 : 0;
    case ClassId::Kind::Intervals:
      if (cls.universe() >= 3) return 2;
      return cls.universe() == 2 ? 1 : 0;
    case ClassId::Kind::FiniteSets:
      return cls.universe();
    case ClassId::Kind::PairDemoLeft:
    case ClassId::Kind::PairDemoRight:
      return 1;
    default:
      throw Error(ErrorCode::DomainError,
                  "vc_dimension is defined for component classes only");
  }
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_scalar(const ClassId& cls, long long v) {
  if (cls.kind() == ClassId::Kind::PairDemoLeft) return v == 0 ? "a" : "b";
  return std::to_string(v);
}

}  // namespace

std::string render_point(const ClassId& cls, const Point& x) {
  switch (x.kind()) {
    case Point::Kind::Int:
      return render_scalar(cls, x.value());
    case Point::Kind::Pair: {
      std::ostringstream out;
      out << "(\"" << prefix_str_to_string(x.prefix()) << "\"," << x.value() << ")";
      return out.str();
    }
    case Point::Kind::Vec: {
      std::ostringstream out;
      out << "(";
      for (size_t i = 0; i < x.coords().size(); ++i) {
        if (i > 0) out << ",";
        const ClassId& part = cls.kind() == ClassId::Kind::Product
                                  ? cls.parts()[i]
                                  : cls;
        out << render_point(part, x.coords()[i]);
      }
      out << ")";
      return out.str();
    }
    case Point::Kind::Tagged: {
      const ClassId& part = cls.kind() == ClassId::Kind::Union
                                ? cls.parts()[x.tag()]
                                : cls;
      return std::to_string(x.tag() + 1) + ":" + render_point(part, x.inner());
    }
  }
  return "?";
}

std::string render_concept(const ClassId& cls, const ConceptDesc& c) {
  switch (c.kind()) {
    case ConceptDesc::Kind::Empty:
      return "{}";
    case ConceptDesc::Kind::Interval: {
      std::ostringstream out;
      out << "[" << c.lo() << "," << c.hi() << "]";
      return out.str();
    }
    case ConceptDesc::Kind::Singleton:
      return "{" + render_scalar(cls, c.value()) + "}";
    case ConceptDesc::Kind::FiniteSet: {
      std::ostringstream out;
      out << "{";
      for (size_t i = 0; i < c.elements().size(); ++i) {
        if (i > 0) out << ",";
        out << render_scalar(cls, c.elements()[i]);
      }
      out << "}";
      return out.str();
    }
    case ConceptDesc::Kind::Prefix:
      return "c(\"" + prefix_str_to_string(c.prefix_str()) + "\")";
    case ConceptDesc::Kind::Product:
    case ConceptDesc::Kind::Union: {
      bool is_product = c.kind() == ConceptDesc::Kind::Product;
      std::ostringstream out;
      out << (is_product ? "prod(" : "union(");
      for (size_t i = 0; i < c.parts().size(); ++i) {
        if (i > 0) out << ",";
        const ClassId& part = (cls.kind() == ClassId::Kind::Product ||
                               cls.kind() == ClassId::Kind::Union)
                                  ? cls.parts()[i]
                                  : cls;
        out << render_concept(part, c.parts()[i]);
      }
      out << ")";
      return out.str();
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Splits "a,b,c" at top-level commas (ignoring commas inside (), [], {}, "").
std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  bool quoted = false;
  std::string cur;
  for (char ch : text) {
    if (quoted) {
      cur.push_back(ch);
      if (ch == '"') quoted = false;
      continue;
    }
    switch (ch) {
      case '"': quoted = true; cur.push_back(ch); break;
      case '(': case '[': case '{': ++depth; cur.push_back(ch); break;
      case ')': case ']': case '}': --depth; cur.push_back(ch); break;
      case ',':
        if (depth == 0) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(ch);
        }
        break;
      default: cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

long long parse_scalar_token(const ClassId& cls, const std::string& tok) {
  if (cls.kind() == ClassId::Kind::PairDemoLeft) {
    if (tok == "a") return 0;
    if (tok == "b") return 1;
  }
  try {
    return std::stoll(tok);
  } catch (const std::exception&) {
    bad_config("malformed scalar '" + tok + "'");
  }
}

// "name(arg1,arg2)" -> {name, inner}; plain names yield an empty inner.
bool split_call(const std::string& text, std::string* name, std::string* inner) {
  size_t open = text.find('(');
  if (open == std::string::npos) {
    *name = text;
    inner->clear();
    return false;
  }
  if (text.back() != ')') bad_config("malformed spec '" + text + "'");
  *name = text.substr(0, open);
  *inner = text.substr(open + 1, text.size() - open - 2);
  return true;
}

}  // namespace

ClassId parse_class(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) bad_config("empty class spec");
  std::string name, inner;
  bool call = split_call(text, &name, &inner);
  try {
    if (name == "singletons" && call) return ClassId::singletons(std::stoi(inner));
    if (name == "intervals" && call) return ClassId::intervals(std::stoi(inner));
    if (name == "finitesets" && call) return ClassId::finite_sets(std::stoi(inner));
    if (name == "prefix" && call) {
      auto args = split_args(inner);
      if (args.size() != 2) bad_config("prefix(U,maxLen) takes two arguments");
      return ClassId::prefix_class(std::stoi(trim(args[0])), std::stoi(trim(args[1])));
    }
    if (name == "pairdemo_left") return ClassId::pair_demo_left();
    if (name == "pairdemo_right" && call) return ClassId::pair_demo_right(std::stoi(inner));
    if (name == "pairdemo" && call) return ClassId::pair_demo(std::stoi(inner));
    if ((name == "prod" || name == "union") && call) {
      std::vector<ClassId> parts;
      for (const auto& arg : split_args(inner)) parts.push_back(parse_class(arg));
      return name == "prod" ? ClassId::product(std::move(parts))
                            : ClassId::union_of(std::move(parts));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad_config("malformed class spec '" + raw + "'");
  }
  bad_config("unknown class spec '" + raw + "'");
}

ConceptDesc parse_concept(const ClassId& cls, const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) bad_config("empty concept spec");
  try {
    if (text == "{}" || text == "empty") {
      ConceptDesc c = ConceptDesc::empty();
      validate_concept(cls, c);
      return c;
    }
    if (text.front() == '[' && text.back() == ']') {
      auto args = split_args(text.substr(1, text.size() - 2));
      if (args.size() != 2) bad_config("interval takes two bounds");
      ConceptDesc c = ConceptDesc::interval(std::stoll(trim(args[0])),
                                            std::stoll(trim(args[1])));
      validate_concept(cls, c);
      return c;
    }
    if (text.front() == '{' && text.back() == '}') {
      std::vector<long long> elems;
      for (const auto& arg : split_args(text.substr(1, text.size() - 2))) {
        elems.push_back(parse_scalar_token(cls, trim(arg)));
      }
      ConceptDesc c = cls.kind() == ClassId::Kind::Singletons && elems.size() == 1
                          ? ConceptDesc::singleton(elems[0])
                          : ConceptDesc::finite_set(std::move(elems));
      validate_concept(cls, c);
      return c;
    }
    std::string name, inner;
    bool call = split_call(text, &name, &inner);
    if (name == "c" && call) {
      if (inner.size() < 2 || inner.front() != '"' || inner.back() != '"') {
        bad_config("prefix concept needs a quoted string");
      }
      ConceptDesc c = ConceptDesc::prefix(
          prefix_str_from_string(inner.substr(1, inner.size() - 2)));
      validate_concept(cls, c);
      return c;
    }
    if ((name == "prod" || name == "union") && call) {
      auto args = split_args(inner);
      if (static_cast<int>(args.size()) != cls.arity()) {
        bad_config("arity mismatch in '" + raw + "'");
      }
      std::vector<ConceptDesc> parts;
      for (size_t i = 0; i < args.size(); ++i) {
        parts.push_back(parse_concept(cls.parts()[i], args[i]));
      }
      ConceptDesc c = name == "prod" ? ConceptDesc::product(std::move(parts))
                                     : ConceptDesc::union_of(std::move(parts));
      validate_concept(cls, c);
      return c;
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad_config("malformed concept spec '" + raw + "'");
  }
  bad_config("unknown concept spec '" + raw + "'");
}

}  // namespace modlearn
