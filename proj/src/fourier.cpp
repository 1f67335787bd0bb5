#include "abvar/fourier.hpp"

#include <utility>

namespace abvar {

CorrespondenceClass::CorrespondenceClass(Variety s, Variety t, ExteriorElement e)
    : source(std::move(s)), target(std::move(t)), element(std::move(e)) {
  if (element.generators() != source.generators() + target.generators()) {
    throw DimensionError("correspondence does not live on source x target");
  }
}

std::optional<int> CorrespondenceClass::shift() const {
  if (element.isZero() || !element.isHomogeneous()) return std::nullopt;
  const int deg = element.degree();
  if (deg % 2 != 0) return std::nullopt;
  return target.dim() - deg / 2;
}

CorrespondenceClass poincareClass(const Variety& x) {
  if (x.kind() == VarietyKind::Product) throw std::invalid_argument("poincareClass expects a simple variety");
  const int d = x.generators();
  const Rational sign = x.kind() == VarietyKind::Dual ? -1 : 1;
  ExteriorElement p(2 * d);
  for (int i = 0; i < d; ++i) p.addTerm((Mask{1} << i) | (Mask{1} << (d + i)), sign);
  return CorrespondenceClass(x, x.dual(), std::move(p));
}

CorrespondenceClass fourierKernel(const Variety& x) {
  CorrespondenceClass p = poincareClass(x);
  return CorrespondenceClass(p.source, p.target, exp2(p.element));
}

namespace {

ExteriorElement onSource(const CorrespondenceClass& gamma, const ExteriorElement& a) {
  return embed(a, gamma.element.generators(), fullMask(gamma.source.generators()));
}

void requireSource(const CorrespondenceClass& gamma, const Variety& v) {
  if (!(gamma.source == v)) throw VarietyMismatch("class does not live on the correspondence source");
}

// p2_*(kernel . p1^* a) with the kernel on the left.
CohClass pushThroughKernel(const CorrespondenceClass& kernel, const CohClass& a) {
  requireSource(kernel, a.variety);
  const ExteriorElement integrand = wedge(kernel.element, onSource(kernel, a.element));
  return CohClass(kernel.target, fiberIntegrate(integrand, fullMask(kernel.source.generators())));
}

}  // namespace

CohClass fourier(const CohClass& a) { return pushThroughKernel(fourierKernel(a.variety), a); }

HomClass fourierHomology(const HomClass& a) { return toHomology(fourier(toCohomology(a))); }

CohClass fourierComponent(int i, const CohClass& a) {
  if (i < 0) throw std::invalid_argument("fourierComponent: negative power");
  const CorrespondenceClass p = poincareClass(a.variety);
  Rational factorial = 1;
  for (int j = 2; j <= i; ++j) factorial *= j;
  const CorrespondenceClass piece(p.source, p.target, scale(Rational(1) / factorial, wedgePower(p.element, i)));
  return pushThroughKernel(piece, a);
}

CohClass corrAct(const CorrespondenceClass& gamma, const CohClass& a) {
  requireSource(gamma, a.variety);
  const ExteriorElement integrand = wedge(onSource(gamma, a.element), gamma.element);
  return CohClass(gamma.target, fiberIntegrate(integrand, fullMask(gamma.source.generators())));
}

HomClass corrAct(const CorrespondenceClass& gamma, const HomClass& a) {
  return toHomology(corrAct(gamma, toCohomology(a)));
}

CorrespondenceClass composeCorr(const CorrespondenceClass& gamma1, const CorrespondenceClass& gamma2) {
  if (!(gamma1.target == gamma2.source)) throw VarietyMismatch("composeCorr: middle factors differ");
  const int dx = gamma1.source.generators();
  const int dy = gamma1.target.generators();
  const int dz = gamma2.target.generators();
  const int d = dx + dy + dz;
  const Mask bx = fullMask(dx);
  const Mask by = fullMask(dy) << dx;
  const Mask bz = fullMask(dz) << (dx + dy);
  const ExteriorElement left = embed(gamma1.element, d, bx | by);
  const ExteriorElement right = embed(gamma2.element, d, by | bz);
  return CorrespondenceClass(gamma1.source, gamma2.target, fiberIntegrate(wedge(left, right), by));
}

CorrespondenceClass transposeCorr(const CorrespondenceClass& gamma) {
  const int dx = gamma.source.generators();
  const int dy = gamma.target.generators();
  const Mask bx = fullMask(dx);
  ExteriorElement out(dx + dy);
  for (const auto& [m, c] : gamma.element.terms()) {
    const Mask a = m & bx;
    const Mask b = m >> dx;
    const bool odd = (maskDegree(a) * maskDegree(b)) & 1;
    out.addTerm(b | (a << dy), odd ? Rational(-c) : c);
  }
  return CorrespondenceClass(gamma.target, gamma.source, std::move(out));
}

CorrespondenceClass graphClass(const Morphism& f) {
  const Morphism embedding = Morphism::pairing(Morphism::identity(f.source()), f);
  const CohClass g = gysin(embedding, CohClass(f.source(), ExteriorElement::one(f.source().generators())));
  return CorrespondenceClass(f.source(), f.target(), g.element);
}

CorrespondenceClass pullbackCorr(const Morphism& f1, const Morphism& f2, const CorrespondenceClass& z) {
  const Morphism f = Morphism::product(f1, f2);
  const CohClass pulled = pullback(f, CohClass(z.product(), z.element));
  return CorrespondenceClass(f1.source(), f2.source(), pulled.element);
}

CorrespondenceClass pushCorr(const Morphism& f1, const Morphism& f2, const CorrespondenceClass& z) {
  const Morphism f = Morphism::product(f1, f2);
  const CohClass pushed = gysin(f, CohClass(z.product(), z.element));
  return CorrespondenceClass(f1.target(), f2.target(), pushed.element);
}

HomClass pontryagin(const HomClass& a, const HomClass& b) {
  if (!(a.variety == b.variety)) throw VarietyMismatch("pontryagin: classes on different varieties");
  return pushHomology(Morphism::sum(a.variety), crossHomology(a, b));
}

CohClass pontryaginCohomology(const CohClass& a, const CohClass& b) {
  if (!(a.variety == b.variety)) throw VarietyMismatch("pontryagin: classes on different varieties");
  return gysin(Morphism::sum(a.variety), cross(a, b));
}

Morphism dualIsogeny(const Morphism& f) {
  const IntMatrix& m = f.matrix();
  if (m.rows() != m.cols() || m.determinant() == 0) throw NotAnIsogeny("dualIsogeny: not an isogeny");
  return Morphism(f.target().dual(), f.source().dual(), m.transpose());
}

}  // namespace abvar
