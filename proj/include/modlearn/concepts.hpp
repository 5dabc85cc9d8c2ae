#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "modlearn/errors.hpp"

namespace modlearn {

// A prefix-class string: a finite sequence of natural-number symbols.
// Rendered as concatenated digits when every symbol fits in one digit,
// dot-separated otherwise ("1.12").
using PrefixStr = std::vector<int>;

std::string prefix_str_to_string(const PrefixStr& s);
PrefixStr prefix_str_from_string(const std::string& text);

// Membership in the prefix concept c(s): (t, a) is in c(s) iff t == s, or
// t is a proper prefix of s and a differs from the symbol of s at |t|.
bool prefix_contains(const PrefixStr& s, const PrefixStr& t, long long value);

// A point of some universe. Scalar universes use Int (pair_demo_left uses
// 0 for 'a' and 1 for 'b'); the prefix class uses Pair; products use Vec
// (arity >= 2; one-dimensional products collapse to the component point);
// disjoint unions use Tagged with a 0-based dimension.
class Point {
 public:
  enum class Kind { Int, Pair, Vec, Tagged };

  Point() = default;

  static Point integer(long long v);
  static Point pair(PrefixStr s, long long value);
  static Point vec(std::vector<Point> coords);
  static Point tagged(int dim, Point inner);

  Kind kind() const { return kind_; }
  long long value() const { return value_; }
  const PrefixStr& prefix() const { return str_; }
  const std::vector<Point>& coords() const { return coords_; }
  int tag() const { return static_cast<int>(value_); }
  const Point& inner() const { return coords_.front(); }

  // Coordinate view: a Vec yields its coordinates, anything else itself.
  std::vector<Point> coords_or_self(int arity) const;

  friend bool operator==(const Point& a, const Point& b);
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  Kind kind_ = Kind::Int;
  long long value_ = 0;       // Int value, Pair value, or Tagged dim
  PrefixStr str_;             // Pair prefix
  std::vector<Point> coords_; // Vec coords or Tagged inner
};

// Symbolic description of a concept. Factories normalize: a finite set with
// no elements is Empty, a product with an Empty part is Empty, a product of
// one part is that part, a union whose parts are all Empty is Empty.
class ConceptDesc {
 public:
  enum class Kind { Empty, Interval, Singleton, FiniteSet, Prefix, Product, Union };

  ConceptDesc() = default;

  static ConceptDesc empty();
  static ConceptDesc interval(long long lo, long long hi);
  static ConceptDesc singleton(long long j);
  static ConceptDesc finite_set(std::vector<long long> elems);
  static ConceptDesc prefix(PrefixStr s);
  static ConceptDesc product(std::vector<ConceptDesc> parts);
  static ConceptDesc union_of(std::vector<ConceptDesc> parts);

  Kind kind() const { return kind_; }
  long long lo() const { return lo_; }
  long long hi() const { return hi_; }
  long long value() const { return lo_; }
  const std::vector<long long>& elements() const { return elems_; }
  const PrefixStr& prefix_str() const { return str_; }
  const std::vector<ConceptDesc>& parts() const { return parts_; }

  std::vector<ConceptDesc> parts_or_self(int arity) const;

  friend bool operator==(const ConceptDesc& a, const ConceptDesc& b);
  friend std::strong_ordering operator<=>(const ConceptDesc& a, const ConceptDesc& b);

 private:
  Kind kind_ = Kind::Empty;
  long long lo_ = 0, hi_ = 0;       // Interval bounds or Singleton value
  std::vector<long long> elems_;    // FiniteSet elements, sorted unique
  PrefixStr str_;                   // Prefix string
  std::vector<ConceptDesc> parts_;  // Product / Union parts
};

// Identifies a concept class together with its (bounded) universe.
class ClassId {
 public:
  enum class Kind {
    Singletons,    // {{j} | j in [0, m]} over universe [0, m]
    Intervals,     // {[lo, hi] | 0 <= lo <= hi < U} over [0, U)
    PrefixClass,   // {c(s) | symbols < U, |s| <= maxLen} over pairs
    FiniteSets,    // all subsets of [0, U), including the empty set
    PairDemoLeft,  // {{a}, {a,b}} over {a, b}
    PairDemoRight, // {[0, U-1], [-U, -1]} over [-U, U)
    Product,
    Union,
  };

  static ClassId singletons(int m);
  static ClassId intervals(int universe);
  static ClassId prefix_class(int universe, int max_len);
  static ClassId finite_sets(int universe);
  static ClassId pair_demo_left();
  static ClassId pair_demo_right(int universe);
  static ClassId pair_demo(int universe);  // product(left, right)
  static ClassId product(std::vector<ClassId> parts);
  static ClassId union_of(std::vector<ClassId> parts);

  Kind kind() const { return kind_; }
  int m() const { return param_; }
  int universe() const { return param_; }
  int max_len() const { return max_len_; }
  const std::vector<ClassId>& parts() const { return parts_; }
  int arity() const;

  std::string to_string() const;

  friend bool operator==(const ClassId& a, const ClassId& b);

 private:
  Kind kind_ = Kind::Singletons;
  int param_ = 0;
  int max_len_ = 0;
  std::vector<ClassId> parts_;
};

// Throws UniverseMismatch when the point or concept does not belong to
// the class's universe.
void validate_point(const ClassId& cls, const Point& x);
void validate_concept(const ClassId& cls, const ConceptDesc& c);

bool contains(const ClassId& cls, const ConceptDesc& c, const Point& x);
bool subset_of(const ClassId& cls, const ConceptDesc& c1, const ConceptDesc& c2);
bool extensionally_equal(const ClassId& cls, const ConceptDesc& c1, const ConceptDesc& c2);
bool is_empty_concept(const ClassId& cls, const ConceptDesc& c);

// Least element of c1 \ c2 under the class's canonical order, or nullopt
// when c1 is a subset of c2.
std::optional<Point> diff_witness(const ClassId& cls, const ConceptDesc& c1,
                                  const ConceptDesc& c2);

// Least member of c, or nullopt when c is empty.
std::optional<Point> witness(const ClassId& cls, const ConceptDesc& c);

// Whether the empty concept is a member of the class.
bool class_contains_empty(const ClassId& cls);

// Full point universe in canonical order. Bounded by construction.
std::vector<Point> enumerate_universe(const ClassId& cls);

// All concepts of the class in canonical order, extensionally distinct.
std::vector<ConceptDesc> enumerate_concepts(const ClassId& cls);

// VC dimension of a component class (not defined for products or unions).
int vc_dimension(const ClassId& cls);

// Canonical text forms, used in transcripts and by the CLI.
std::string render_point(const ClassId& cls, const Point& x);
std::string render_concept(const ClassId& cls, const ConceptDesc& c);
ConceptDesc parse_concept(const ClassId& cls, const std::string& text);
ClassId parse_class(const std::string& text);

}  // namespace modlearn
