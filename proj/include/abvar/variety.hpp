#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "abvar/exterior.hpp"

namespace abvar {

class VarietyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnIsogeny : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class VarietyKind { Base, Dual, Product };

/// Generator name prefixes for a base variety and its dual, on both the
/// cohomology and the homology side.
struct GeneratorPrefixes {
  std::string cohomology = "e";
  std::string homology = "x";
  std::string dualCohomology = "f";
  std::string dualHomology = "y";
};

/// Model of a complex abelian variety of dimension n: its rational
/// cohomology is the exterior algebra on 2n degree-1 generators. Products
/// are flat and factor-major (all generators of the first factor, then the
/// second, ...). The dual of a dual is the original variety.
class Variety {
 public:
  static Variety base(std::string name, int n, GeneratorPrefixes prefixes = {});
  static Variety product(const std::vector<Variety>& factors);
  static Variety product(const Variety& a, const Variety& b) { return product({a, b}); }

  [[nodiscard]] Variety dual() const;

  [[nodiscard]] VarietyKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  /// Complex dimension.
  [[nodiscard]] int dim() const noexcept { return n_; }
  /// Number of degree-1 generators, 2 * dim().
  [[nodiscard]] int generators() const noexcept { return 2 * n_; }

  /// Simple factors in block order; a non-product is its own single factor.
  [[nodiscard]] std::vector<Variety> factors() const;
  [[nodiscard]] std::size_t factorCount() const noexcept;
  /// Generator positions of factor i inside this variety.
  [[nodiscard]] Mask block(std::size_t i) const;

  [[nodiscard]] std::vector<std::string> cohomologyNames() const;
  [[nodiscard]] std::vector<std::string> homologyNames() const;

  friend bool operator==(const Variety& a, const Variety& b);

 private:
  Variety() = default;
  [[nodiscard]] std::string cohPrefix() const;
  [[nodiscard]] std::string homPrefix() const;

  VarietyKind kind_ = VarietyKind::Base;
  std::string name_;
  int n_ = 0;
  GeneratorPrefixes prefixes_;
  std::vector<Variety> factors_;
};

/// Integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<long long> entries);

  static IntMatrix identity(int d);

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] long long at(int r, int c) const { return entries_[index(r, c)]; }
  long long& at(int r, int c) { return entries_[index(r, c)]; }

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] LinearMap toLinearMap() const;
  [[nodiscard]] Rational determinant() const { return toLinearMap().determinant(); }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_;
  int cols_;
  std::vector<long long> entries_;
};

/// Homomorphism of abelian varieties, recorded by its integer matrix on
/// degree-1 homology (2 n_target rows, 2 n_source columns).
class Morphism {
 public:
  Morphism(Variety source, Variety target, IntMatrix matrix);

  static Morphism identity(const Variety& x);
  static Morphism mult(const Variety& x, long long m);
  static Morphism neg(const Variety& x) { return mult(x, -1); }
  /// Group law X x X -> X.
  static Morphism sum(const Variety& x);
  static Morphism diagonal(const Variety& x);
  static Morphism projection(const Variety& product, std::size_t factor);
  /// (f, g): X -> Y x Z.
  static Morphism pairing(const Morphism& f, const Morphism& g);
  /// f1 x f2: X1 x X2 -> Y1 x Y2.
  static Morphism product(const Morphism& f1, const Morphism& f2);
  /// Square matrix with nonzero determinant; throws NotAnIsogeny otherwise.
  static Morphism isogeny(const Variety& source, const Variety& target, IntMatrix matrix);

  [[nodiscard]] const Variety& source() const noexcept { return source_; }
  [[nodiscard]] const Variety& target() const noexcept { return target_; }
  [[nodiscard]] const IntMatrix& matrix() const noexcept { return matrix_; }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Variety source_;
  Variety target_;
  IntMatrix matrix_;
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

struct CohClass {
  CohClass(Variety v, ExteriorElement e);
  Variety variety;
  ExteriorElement element;
  friend bool operator==(const CohClass&, const CohClass&) = default;
};

struct HomClass {
  HomClass(Variety v, ExteriorElement e);
  Variety variety;
  ExteriorElement element;
  friend bool operator==(const HomClass&, const HomClass&) = default;
};

/// Cap product with the fundamental class: H^k -> H_{2n-k}.
HomClass toHomology(const CohClass& a);
/// Inverse of toHomology.
CohClass toCohomology(const HomClass& a);

HomClass fundamentalClass(const Variety& x);
HomClass pointClass(const Variety& x);

/// f^* on cohomology: Lambda of the transposed matrix.
CohClass pullback(const Morphism& f, const CohClass& a);
/// f_* on homology: Lambda of the matrix.
HomClass pushHomology(const Morphism& f, const HomClass& a);
/// Gysin map f_! = PD^{-1} o f_* o PD; shifts degree by 2(n_target - n_source).
CohClass gysin(const Morphism& f, const CohClass& a);
/// Homology pullback PD o f^* o PD^{-1}.
HomClass pullbackHomology(const Morphism& f, const HomClass& a);

/// Cup product on one variety.
CohClass cup(const CohClass& a, const CohClass& b);
/// External product p1^* a ^ p2^* b on X x Y.
CohClass cross(const CohClass& a, const CohClass& b);
/// External product of homology classes on X x Y.
HomClass crossHomology(const HomClass& a, const HomClass& b);
/// Intersection product PD(PD^{-1} a ^ PD^{-1} b); degree k + l - 2n.
HomClass intersectHomology(const HomClass& a, const HomClass& b);

}  // namespace abvar
