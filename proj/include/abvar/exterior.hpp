#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace abvar {

/// Exact rational coefficient. GMP keeps results canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

std::string toString(const Rational& q);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly increasing set of generator positions, stored as a bitmask.
/// Position i (1-based) is bit i-1.
using Mask = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

[[nodiscard]] int maskDegree(Mask m) noexcept;

/// Mask of positions 1..d.
[[nodiscard]] Mask fullMask(int d) noexcept;

/// Mask with the given 1-based positions set. Throws on out-of-range
/// or repeated positions.
[[nodiscard]] Mask maskOf(const std::vector<int>& positions);

/// 1-based positions of a mask in increasing order.
[[nodiscard]] std::vector<int> positionsOf(Mask m);

/// Number of pairs (a, b) with a in `left`, b in `right`, a > b.
/// The parity of this count is the sign of the shuffle e_left ^ e_right.
[[nodiscard]] int inversions(Mask left, Mask right) noexcept;

/// Moves the bits of `m` outside `removed` down so they occupy a
/// contiguous range, preserving order.
[[nodiscard]] Mask compressOut(Mask m, Mask removed) noexcept;

/// Places the low bits of `m` at the positions of `target` in order.
[[nodiscard]] Mask spreadInto(Mask m, Mask target) noexcept;

/// Element of the exterior algebra on D degree-1 generators with exact
/// rational coefficients. Zero coefficients are never stored.
class ExteriorElement {
 public:
  using Terms = std::map<Mask, Rational>;

  explicit ExteriorElement(int generators);

  static ExteriorElement zero(int generators) { return ExteriorElement(generators); }
  static ExteriorElement one(int generators);
  static ExteriorElement scalar(int generators, const Rational& c);
  static ExteriorElement monomial(int generators, Mask m, const Rational& c = 1);
  /// The degree-1 generator at 1-based position i.
  static ExteriorElement generator(int generators, int i);

  [[nodiscard]] int generators() const noexcept { return generators_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool isZero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] Rational coefficient(Mask m) const;

  /// Degree of the element if every term has the same degree.
  /// The zero element reports degree 0 and counts as homogeneous.
  [[nodiscard]] bool isHomogeneous() const noexcept;
  [[nodiscard]] int degree() const;
  [[nodiscard]] int maxDegree() const noexcept;

  void addTerm(Mask m, const Rational& c);

  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement& operator*=(const Rational& c);

  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

 private:
  int generators_;
  Terms terms_;
};

ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b);
ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b);
ExteriorElement operator-(ExteriorElement a);
ExteriorElement operator*(const Rational& c, ExteriorElement a);

ExteriorElement add(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement scale(const Rational& c, const ExteriorElement& a);

/// Exterior product. Basis monomials with overlapping indices multiply to
/// zero; otherwise the sign is the parity of the merge permutation.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

/// a^{wedge k}; a^0 = 1.
ExteriorElement wedgePower(const ExteriorElement& a, int k);

/// Restriction to the terms of degree k (zero when k is out of range).
ExteriorElement gradedPart(const ExteriorElement& a, int k);

/// Dense rational matrix, row-major.
class LinearMap {
 public:
  LinearMap(int rows, int cols);
  LinearMap(int rows, int cols, std::vector<Rational> entries);

  static LinearMap identity(int d);
  static LinearMap scalar(int d, const Rational& c);

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] const Rational& at(int r, int c) const { return entries_[index(r, c)]; }
  Rational& at(int r, int c) { return entries_[index(r, c)]; }

  [[nodiscard]] LinearMap transpose() const;
  [[nodiscard]] Rational determinant() const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

/// The algebra homomorphism Lambda(L) extending L on degree 1:
/// generator j maps to sum_i L(i, j) e_i. Output has L.rows() generators.
ExteriorElement algebraMap(const LinearMap& l, const ExteriorElement& a);

/// Complement duality with respect to the orientation e_1 ^ ... ^ e_D:
/// e_S maps to sign * e_{S^c} where e_S ^ e_{S^c} = sign * e_{1..D}.
ExteriorElement poincareDual(const ExteriorElement& a);

/// Inverse of poincareDual.
ExteriorElement inversePoincareDual(const ExteriorElement& a);

/// Integration over the fiber block F: keeps terms containing all of F,
/// moves the F-block to the far left (collecting the shuffle sign), strips
/// it and re-indexes the remaining positions over D - |F| generators.
ExteriorElement fiberIntegrate(const ExteriorElement& a, Mask fiber);

/// Sum of a^i / i! for a homogeneous of degree 2. Throws
/// std::invalid_argument on any other input.
ExteriorElement exp2(const ExteriorElement& a);

/// Re-embeds an element on `a.generators()` generators into an algebra on
/// `generators` generators, placing generator i at position of the i-th
/// set bit of `block`.
ExteriorElement embed(const ExteriorElement& a, int generators, Mask block);

}  // namespace abvar
