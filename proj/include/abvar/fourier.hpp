#pragma once

#include <optional>

#include "abvar/variety.hpp"

namespace abvar {

/// A class on source x target acting from the source to the target.
struct CorrespondenceClass {
  CorrespondenceClass(Variety source, Variety target, ExteriorElement element);

  Variety source;
  Variety target;
  ExteriorElement element;

  [[nodiscard]] Variety product() const { return Variety::product(source, target); }
  /// The d of Corr_d(X, Y) for a homogeneous even-degree class:
  /// degree 2 (n_Y - d). Empty for inhomogeneous or odd classes.
  [[nodiscard]] std::optional<int> shift() const;

  friend bool operator==(const CorrespondenceClass&, const CorrespondenceClass&) = default;
};

/// First Chern class of the Poincare bundle, sum_i e_i ^ f_i on X x X^.
/// For X itself a dual variety the same tensor is read on the swapped
/// product, which puts a -1 on every f_i ^ e_i.
CorrespondenceClass poincareClass(const Variety& x);

/// e^P as a correspondence X -> X^.
CorrespondenceClass fourierKernel(const Variety& x);

/// alpha -> p2_*(e^P . p1^* alpha); maps H^k(X) to H^{2n-k}(X^).
CohClass fourier(const CohClass& a);
/// PD o fourier o PD^{-1}; maps H_k(X) to H_{2n-k}(X^).
HomClass fourierHomology(const HomClass& a);
/// p2_*((P^i / i!) . p1^* alpha), the weight-i summand of fourier(a).
CohClass fourierComponent(int i, const CohClass& a);

/// Gamma_*(alpha) = p2_*(p1^* alpha . Gamma) on cohomology.
CohClass corrAct(const CorrespondenceClass& gamma, const CohClass& a);
/// Homology action, routed through Poincare duality on both ends.
HomClass corrAct(const CorrespondenceClass& gamma, const HomClass& a);

/// Gamma2 o Gamma1 = p13_*(p12^* Gamma1 . p23^* Gamma2).
CorrespondenceClass composeCorr(const CorrespondenceClass& gamma1, const CorrespondenceClass& gamma2);
/// Block swap; a monomial of degree j on the source block and k on the
/// target block picks up (-1)^{jk}.
CorrespondenceClass transposeCorr(const CorrespondenceClass& gamma);
/// (id, f)_*[X] as a class on X x Y.
CorrespondenceClass graphClass(const Morphism& f);

/// f^* on a correspondence for f = f1 x f2.
CorrespondenceClass pullbackCorr(const Morphism& f1, const Morphism& f2, const CorrespondenceClass& z);
/// (f1 x f2)_! on a correspondence.
CorrespondenceClass pushCorr(const Morphism& f1, const Morphism& f2, const CorrespondenceClass& z);

/// mu_*(alpha x beta) on homology.
HomClass pontryagin(const HomClass& a, const HomClass& b);
/// mu_!(p1^* a . p2^* b) on cohomology. This differs from carrying the
/// homology product across Poincare duality by a Koszul sign on pairs of
/// odd classes.
CohClass pontryaginCohomology(const CohClass& a, const CohClass& b);

/// For an isogeny f: X -> Y, the dual isogeny Y^ -> X^ (matrix transpose).
Morphism dualIsogeny(const Morphism& f);

}  // namespace abvar
