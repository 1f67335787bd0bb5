#include "abvar/exterior.hpp"

#include <bit>
#include <utility>

namespace abvar {

std::string toString(const Rational& q) { return q.get_str(); }

int maskDegree(Mask m) noexcept { return std::popcount(m); }

Mask fullMask(int d) noexcept {
  if (d <= 0) return 0;
  if (d >= kMaxGenerators) return ~Mask{0};
  return (Mask{1} << d) - 1;
}

Mask maskOf(const std::vector<int>& positions) {
  Mask m = 0;
  for (int p : positions) {
    if (p < 1 || p > kMaxGenerators) throw DimensionError("generator position out of range");
    const Mask bit = Mask{1} << (p - 1);
    if (m & bit) throw DimensionError("repeated generator position");
    m |= bit;
  }
  return m;
}

std::vector<int> positionsOf(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

int inversions(Mask left, Mask right) noexcept {
  int count = 0;
  while (right) {
    const int b = std::countr_zero(right);
    right &= right - 1;
    if (b + 1 < 64) count += std::popcount(left >> (b + 1));
  }
  return count;
}

Mask compressOut(Mask m, Mask removed) noexcept {
  Mask out = 0;
  int dst = 0;
  for (int src = 0; src < 64; ++src) {
    const Mask bit = Mask{1} << src;
    if (removed & bit) continue;
    if (m & bit) out |= Mask{1} << dst;
    ++dst;
  }
  return out;
}

Mask spreadInto(Mask m, Mask target) noexcept {
  Mask out = 0;
  while (m && target) {
    const Mask low = target & (~target + 1);
    if (m & 1) out |= low;
    m >>= 1;
    target &= target - 1;
  }
  return out;
}

namespace {

void checkSame(const ExteriorElement& a, const ExteriorElement& b, const char* op) {
  if (a.generators() != b.generators()) {
    throw DimensionError(std::string(op) + ": generator counts differ (" + std::to_string(a.generators()) +
                         " vs " + std::to_string(b.generators()) + ")");
  }
}

}  // namespace

ExteriorElement::ExteriorElement(int generators) : generators_(generators) {
  if (generators < 0 || generators > kMaxGenerators) throw DimensionError("generator count out of range");
}

ExteriorElement ExteriorElement::one(int generators) { return scalar(generators, 1); }

ExteriorElement ExteriorElement::scalar(int generators, const Rational& c) {
  return monomial(generators, 0, c);
}

ExteriorElement ExteriorElement::monomial(int generators, Mask m, const Rational& c) {
  ExteriorElement e(generators);
  if ((m & ~fullMask(generators)) != 0) throw DimensionError("monomial uses a position beyond D");
  e.addTerm(m, c);
  return e;
}

ExteriorElement ExteriorElement::generator(int generators, int i) {
  if (i < 1 || i > generators) throw DimensionError("generator index out of range");
  return monomial(generators, Mask{1} << (i - 1));
}

Rational ExteriorElement::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ExteriorElement::isHomogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = maskDegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (maskDegree(m) != d) return false;
  }
  return true;
}

int ExteriorElement::degree() const {
  if (!isHomogeneous()) throw std::invalid_argument("degree of an inhomogeneous element");
  return terms_.empty() ? 0 : maskDegree(terms_.begin()->first);
}

int ExteriorElement::maxDegree() const noexcept {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, maskDegree(m));
  return d;
}

void ExteriorElement::addTerm(Mask m, const Rational& c) {
  if ((m & ~fullMask(generators_)) != 0) throw DimensionError("monomial uses a position beyond D");
  // Callers may hand in values built as mpq_class(num, den), which GMP
  // does not reduce on its own.
  Rational q = c;
  q.canonicalize();
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  checkSame(*this, other, "add");
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  checkSame(*this, other, "subtract");
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& c) {
  Rational q = c;
  q.canonicalize();
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= q;
  return *this;
}

ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
ExteriorElement operator-(ExteriorElement a) { return a *= Rational(-1); }
ExteriorElement operator*(const Rational& c, ExteriorElement a) { return a *= c; }

ExteriorElement add(const ExteriorElement& a, const ExteriorElement& b) { return a + b; }
ExteriorElement scale(const Rational& c, const ExteriorElement& a) { return c * a; }

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  checkSame(a, b, "wedge");
  ExteriorElement out(a.generators());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Rational c = ca * cb;
      if (inversions(ma, mb) & 1) c = -c;
      out.addTerm(ma | mb, c);
    }
  }
  return out;
}

ExteriorElement wedgePower(const ExteriorElement& a, int k) {
  if (k < 0) throw std::invalid_argument("negative wedge power");
  ExteriorElement out = ExteriorElement::one(a.generators());
  for (int i = 0; i < k && !out.isZero(); ++i) out = wedge(out, a);
  return out;
}

ExteriorElement gradedPart(const ExteriorElement& a, int k) {
  ExteriorElement out(a.generators());
  for (const auto& [m, c] : a.terms()) {
    if (maskDegree(m) == k) out.addTerm(m, c);
  }
  return out;
}

LinearMap::LinearMap(int rows, int cols) : LinearMap(rows, cols, {}) {}

LinearMap::LinearMap(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  const auto n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (entries_.empty()) entries_.assign(n, Rational(0));
  if (entries_.size() != n) throw DimensionError("matrix entry count does not match its shape");
}

LinearMap LinearMap::identity(int d) { return scalar(d, 1); }

LinearMap LinearMap::scalar(int d, const Rational& c) {
  LinearMap m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = c;
  return m;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Rational LinearMap::determinant() const {
  if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
  LinearMap w = *this;
  Rational det = 1;
  const int n = rows_;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && w.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(w.at(pivot, c), w.at(col, c));
      det = -det;
    }
    const Rational p = w.at(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (w.at(r, col) == 0) continue;
      const Rational f = w.at(r, col) / p;
      for (int c = col; c < n; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  return det;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  LinearMap out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

ExteriorElement algebraMap(const LinearMap& l, const ExteriorElement& a) {
  if (a.generators() != l.cols()) {
    throw DimensionError("algebraMap: element has " + std::to_string(a.generators()) +
                         " generators, map expects " + std::to_string(l.cols()));
  }
  std::vector<ExteriorElement> images;
  images.reserve(static_cast<std::size_t>(l.cols()));
  for (int j = 0; j < l.cols(); ++j) {
    ExteriorElement img(l.rows());
    for (int i = 0; i < l.rows(); ++i) img.addTerm(Mask{1} << i, l.at(i, j));
    images.push_back(std::move(img));
  }
  ExteriorElement out(l.rows());
  for (const auto& [m, c] : a.terms()) {
    ExteriorElement term = ExteriorElement::scalar(l.rows(), c);
    for (int p : positionsOf(m)) {
      term = wedge(term, images[static_cast<std::size_t>(p - 1)]);
      if (term.isZero()) break;
    }
    out += term;
  }
  return out;
}

ExteriorElement poincareDual(const ExteriorElement& a) {
  const Mask full = fullMask(a.generators());
  ExteriorElement out(a.generators());
  for (const auto& [m, c] : a.terms()) {
    const Mask comp = full & ~m;
    out.addTerm(comp, (inversions(m, comp) & 1) ? Rational(-c) : c);
  }
  return out;
}

ExteriorElement inversePoincareDual(const ExteriorElement& a) {
  // PD(PD(x)) = (-1)^{k(D-k)} x on degree k, and the sign is symmetric in k <-> D-k.
  const int d = a.generators();
  ExteriorElement out = poincareDual(a);
  ExteriorElement fixed(d);
  for (const auto& [m, c] : out.terms()) {
    const int k = maskDegree(m);
    fixed.addTerm(m, ((k * (d - k)) & 1) ? Rational(-c) : c);
  }
  return fixed;
}

ExteriorElement fiberIntegrate(const ExteriorElement& a, Mask fiber) {
  const int d = a.generators();
  if ((fiber & ~fullMask(d)) != 0) throw DimensionError("fiber block outside the generator range");
  ExteriorElement out(d - maskDegree(fiber));
  for (const auto& [m, c] : a.terms()) {
    if ((m & fiber) != fiber) continue;
    const Mask rest = m & ~fiber;
    const bool odd = inversions(fiber, rest) & 1;
    out.addTerm(compressOut(rest, fiber), odd ? Rational(-c) : c);
  }
  return out;
}

ExteriorElement exp2(const ExteriorElement& a) {
  if (a.isZero()) return ExteriorElement::one(a.generators());
  if (!a.isHomogeneous() || a.degree() != 2) throw std::invalid_argument("exp2 requires a homogeneous degree-2 element");
  ExteriorElement out = ExteriorElement::one(a.generators());
  ExteriorElement power = out;
  Rational factorial = 1;
  for (int i = 1; 2 * i <= a.generators(); ++i) {
    power = wedge(power, a);
    if (power.isZero()) break;
    factorial *= i;
    out += scale(Rational(1) / factorial, power);
  }
  return out;
}

ExteriorElement embed(const ExteriorElement& a, int generators, Mask block) {
  if (maskDegree(block) != a.generators()) throw DimensionError("embedding block size does not match the element");
  if ((block & ~fullMask(generators)) != 0) throw DimensionError("embedding block outside the target range");
  ExteriorElement out(generators);
  for (const auto& [m, c] : a.terms()) out.addTerm(spreadInto(m, block), c);
  return out;
}

}  // namespace abvar
