#include "abvar/variety.hpp"

#include <utility>

namespace abvar {

Variety Variety::base(std::string name, int n, GeneratorPrefixes prefixes) {
  if (n < 1) throw std::invalid_argument("abelian variety dimension must be positive");
  if (2 * n > kMaxGenerators) throw DimensionError("variety too large for the bitmask basis");
  Variety v;
  v.kind_ = VarietyKind::Base;
  v.name_ = std::move(name);
  v.n_ = n;
  v.prefixes_ = std::move(prefixes);
  return v;
}

Variety Variety::product(const std::vector<Variety>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  Variety v;
  v.kind_ = VarietyKind::Product;
  for (const auto& f : factors) {
    for (auto& simple : f.factors()) {
      v.n_ += simple.n_;
      v.factors_.push_back(std::move(simple));
    }
  }
  if (2 * v.n_ > kMaxGenerators) throw DimensionError("product too large for the bitmask basis");
  if (v.factors_.size() == 1) return v.factors_.front();
  for (std::size_t i = 0; i < v.factors_.size(); ++i) v.name_ += (i ? "x" : "") + v.factors_[i].name_;
  return v;
}

Variety Variety::dual() const {
  switch (kind_) {
    case VarietyKind::Base: {
      Variety d = *this;
      d.kind_ = VarietyKind::Dual;
      return d;
    }
    case VarietyKind::Dual: {
      Variety b = *this;
      b.kind_ = VarietyKind::Base;
      return b;
    }
    case VarietyKind::Product: {
      std::vector<Variety> duals;
      for (const auto& f : factors_) duals.push_back(f.dual());
      return product(duals);
    }
  }
  return *this;
}

std::vector<Variety> Variety::factors() const {
  if (kind_ == VarietyKind::Product) return factors_;
  return {*this};
}

std::size_t Variety::factorCount() const noexcept {
  return kind_ == VarietyKind::Product ? factors_.size() : 1;
}

Mask Variety::block(std::size_t i) const {
  if (i >= factorCount()) throw std::out_of_range("factor index out of range");
  if (kind_ != VarietyKind::Product) return fullMask(generators());
  int offset = 0;
  for (std::size_t j = 0; j < i; ++j) offset += factors_[j].generators();
  return fullMask(factors_[i].generators()) << offset;
}

std::string Variety::cohPrefix() const {
  return kind_ == VarietyKind::Dual ? prefixes_.dualCohomology : prefixes_.cohomology;
}

std::string Variety::homPrefix() const {
  return kind_ == VarietyKind::Dual ? prefixes_.dualHomology : prefixes_.homology;
}

namespace {

std::vector<std::string> namesFor(const std::vector<Variety>& factors, bool homology,
                                  std::string (*prefixOf)(const Variety&, bool)) {
  std::vector<std::string> names;
  std::vector<std::string> seen;
  for (const auto& f : factors) {
    const std::string prefix = prefixOf(f, homology);
    std::string primes;
    for (const auto& s : seen)
      if (s == prefix) primes += '\'';
    seen.push_back(prefix);
    for (int i = 1; i <= f.generators(); ++i) names.push_back(prefix + std::to_string(i) + primes);
  }
  return names;
}

}  // namespace

std::vector<std::string> Variety::cohomologyNames() const {
  return namesFor(factors(), false, [](const Variety& v, bool) { return v.cohPrefix(); });
}

std::vector<std::string> Variety::homologyNames() const {
  return namesFor(factors(), true, [](const Variety& v, bool) { return v.homPrefix(); });
}

bool operator==(const Variety& a, const Variety& b) {
  if (a.kind_ != b.kind_ || a.n_ != b.n_) return false;
  if (a.kind_ == VarietyKind::Product) return a.factors_ == b.factors_;
  return a.name_ == b.name_;
}

IntMatrix::IntMatrix(int rows, int cols) : IntMatrix(rows, cols, {}) {}

IntMatrix::IntMatrix(int rows, int cols, std::vector<long long> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  const auto n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (entries_.empty()) entries_.assign(n, 0);
  if (entries_.size() != n) throw DimensionError("matrix entry count does not match its shape");
}

IntMatrix IntMatrix::identity(int d) {
  IntMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

LinearMap IntMatrix::toLinearMap() const {
  std::vector<Rational> entries;
  entries.reserve(entries_.size());
  for (long long v : entries_) entries.emplace_back(static_cast<signed long>(v));
  return LinearMap(rows_, cols_, std::move(entries));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
  return out;
}

Morphism::Morphism(Variety source, Variety target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators()) {
    throw DimensionError("morphism matrix must be " + std::to_string(target_.generators()) + "x" +
                         std::to_string(source_.generators()));
  }
}

Morphism Morphism::identity(const Variety& x) { return Morphism(x, x, IntMatrix::identity(x.generators())); }

Morphism Morphism::mult(const Variety& x, long long m) {
  IntMatrix a(x.generators(), x.generators());
  for (int i = 0; i < x.generators(); ++i) a.at(i, i) = m;
  return Morphism(x, x, std::move(a));
}

Morphism Morphism::sum(const Variety& x) {
  const int d = x.generators();
  IntMatrix a(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    a.at(i, i) = 1;
    a.at(i, d + i) = 1;
  }
  return Morphism(Variety::product(x, x), x, std::move(a));
}

Morphism Morphism::diagonal(const Variety& x) {
  return pairing(identity(x), identity(x));
}

Morphism Morphism::projection(const Variety& product, std::size_t factor) {
  const Variety target = product.factors().at(factor);
  IntMatrix a(target.generators(), product.generators());
  const auto positions = positionsOf(product.block(factor));
  for (int i = 0; i < target.generators(); ++i) a.at(i, positions[static_cast<std::size_t>(i)] - 1) = 1;
  return Morphism(product, target, std::move(a));
}

Morphism Morphism::pairing(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source())) throw VarietyMismatch("pairing needs a common source");
  const IntMatrix& a = f.matrix();
  const IntMatrix& b = g.matrix();
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    for (int r = 0; r < a.rows(); ++r) m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r) m.at(a.rows() + r, c) = b.at(r, c);
  }
  return Morphism(f.source(), Variety::product(f.target(), g.target()), std::move(m));
}

Morphism Morphism::product(const Morphism& f1, const Morphism& f2) {
  const IntMatrix& a = f1.matrix();
  const IntMatrix& b = f2.matrix();
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return Morphism(Variety::product(f1.source(), f2.source()), Variety::product(f1.target(), f2.target()),
                  std::move(m));
}

Morphism Morphism::isogeny(const Variety& source, const Variety& target, IntMatrix matrix) {
  if (matrix.rows() != matrix.cols()) throw NotAnIsogeny("isogeny matrix must be square");
  if (matrix.determinant() == 0) throw NotAnIsogeny("isogeny matrix is singular");
  return Morphism(source, target, std::move(matrix));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) throw VarietyMismatch("compose: target of f is not the source of g");
  return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

CohClass::CohClass(Variety v, ExteriorElement e) : variety(std::move(v)), element(std::move(e)) {
  if (element.generators() != variety.generators()) throw DimensionError("class does not match its variety");
}

HomClass::HomClass(Variety v, ExteriorElement e) : variety(std::move(v)), element(std::move(e)) {
  if (element.generators() != variety.generators()) throw DimensionError("class does not match its variety");
}

HomClass toHomology(const CohClass& a) { return HomClass(a.variety, poincareDual(a.element)); }

CohClass toCohomology(const HomClass& a) { return CohClass(a.variety, inversePoincareDual(a.element)); }

HomClass fundamentalClass(const Variety& x) {
  return HomClass(x, ExteriorElement::monomial(x.generators(), fullMask(x.generators())));
}

HomClass pointClass(const Variety& x) { return HomClass(x, ExteriorElement::one(x.generators())); }

namespace {

void requireOn(const Variety& expected, const Variety& actual, const char* what) {
  if (!(expected == actual)) throw VarietyMismatch(std::string(what) + ": class lives on " + actual.name() +
                                                   ", expected " + expected.name());
}

}  // namespace

CohClass pullback(const Morphism& f, const CohClass& a) {
  requireOn(f.target(), a.variety, "pullback");
  return CohClass(f.source(), algebraMap(f.matrix().transpose().toLinearMap(), a.element));
}

HomClass pushHomology(const Morphism& f, const HomClass& a) {
  requireOn(f.source(), a.variety, "pushHomology");
  return HomClass(f.target(), algebraMap(f.matrix().toLinearMap(), a.element));
}

CohClass gysin(const Morphism& f, const CohClass& a) {
  requireOn(f.source(), a.variety, "gysin");
  return toCohomology(pushHomology(f, toHomology(a)));
}

HomClass pullbackHomology(const Morphism& f, const HomClass& a) {
  requireOn(f.target(), a.variety, "pullbackHomology");
  return toHomology(pullback(f, toCohomology(a)));
}

CohClass cup(const CohClass& a, const CohClass& b) {
  requireOn(a.variety, b.variety, "cup");
  return CohClass(a.variety, wedge(a.element, b.element));
}

namespace {

ExteriorElement externalProduct(const Variety& xy, const ExteriorElement& a, const ExteriorElement& b) {
  const int d = xy.generators();
  const Mask left = fullMask(a.generators());
  const Mask right = fullMask(b.generators()) << a.generators();
  return wedge(embed(a, d, left), embed(b, d, right));
}

}  // namespace

CohClass cross(const CohClass& a, const CohClass& b) {
  const Variety xy = Variety::product(a.variety, b.variety);
  return CohClass(xy, externalProduct(xy, a.element, b.element));
}

HomClass crossHomology(const HomClass& a, const HomClass& b) {
  const Variety xy = Variety::product(a.variety, b.variety);
  return HomClass(xy, externalProduct(xy, a.element, b.element));
}

HomClass intersectHomology(const HomClass& a, const HomClass& b) {
  requireOn(a.variety, b.variety, "intersectHomology");
  return toHomology(cup(toCohomology(a), toCohomology(b)));
}

}  // namespace abvar
