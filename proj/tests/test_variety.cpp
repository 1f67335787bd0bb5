#include <gtest/gtest.h>

#include "abvar/variety.hpp"
#include "support/oracle.hpp"

using namespace abvar;

namespace {

ExteriorElement e(int d, std::vector<int> idx, Rational c = 1) { return ExteriorElement::monomial(d, maskOf(idx), c); }

Rational power(long long m, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= static_cast<long>(m);
  return out;
}

const long long kMultipliers[] = {-3, -2, 2, 3};

}  // namespace

TEST(VarietyModel, DualAndProducts) {
  const Variety x = Variety::base("X", 2);
  EXPECT_EQ(x.generators(), 4);
  EXPECT_EQ(x.dual().kind(), VarietyKind::Dual);
  EXPECT_EQ(x.dual().dual(), x);
  EXPECT_FALSE(x.dual() == x);

  const Variety y = Variety::base("Y", 1);
  const Variety xyx = Variety::product({Variety::product(x, y), x});
  EXPECT_EQ(xyx.factorCount(), 3U);
  EXPECT_EQ(xyx.dim(), 5);
  EXPECT_EQ(xyx.block(1), maskOf({5, 6}));
  EXPECT_EQ(xyx.block(2), maskOf({7, 8, 9, 10}));
  EXPECT_EQ(Variety::product(x, y).dual(), Variety::product(x.dual(), y.dual()));
}

TEST(VarietyModel, GeneratorNames) {
  const Variety x = Variety::base("X", 1);
  EXPECT_EQ(x.cohomologyNames(), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(x.homologyNames(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(x.dual().cohomologyNames(), (std::vector<std::string>{"f1", "f2"}));
  EXPECT_EQ(Variety::product(x, x).cohomologyNames(), (std::vector<std::string>{"e1", "e2", "e1'", "e2'"}));
  EXPECT_EQ(Variety::product(x, x.dual()).cohomologyNames(), (std::vector<std::string>{"e1", "e2", "f1", "f2"}));
}

TEST(VarietyModel, InvalidConstruction) {
  EXPECT_THROW(Variety::base("X", 0), std::invalid_argument);
  EXPECT_THROW(Variety::base("X", 33), DimensionError);
  const Variety x = Variety::base("X", 1);
  EXPECT_THROW(Morphism(x, x, IntMatrix(2, 3)), DimensionError);
  EXPECT_THROW(Morphism::isogeny(x, x, IntMatrix(2, 2, {1, 2, 2, 4})), NotAnIsogeny);
  EXPECT_THROW(CohClass(x, ExteriorElement::one(3)), DimensionError);
  EXPECT_THROW(pullback(Morphism::identity(x), CohClass(Variety::base("Y", 1), ExteriorElement::one(2))),
               VarietyMismatch);
}

TEST(Morphisms, StandardMatrices) {
  const Variety x = Variety::base("X", 1);
  EXPECT_EQ(Morphism::sum(x).matrix(), IntMatrix(2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(Morphism::diagonal(x).matrix(), IntMatrix(4, 2, {1, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(Morphism::neg(x).matrix(), IntMatrix(2, 2, {-1, 0, 0, -1}));
  const Variety xy = Variety::product(x, Variety::base("Y", 1));
  EXPECT_EQ(Morphism::projection(xy, 1).matrix(), IntMatrix(2, 4, {0, 0, 1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(compose(Morphism::sum(x), Morphism::diagonal(x)).matrix(), Morphism::mult(x, 2).matrix());
}

TEST(Pullback, Examples) {
  const Variety x = Variety::base("X", 2);
  const CohClass a(x, e(4, {1, 3}) + e(4, {2}, 5));
  EXPECT_EQ(pullback(Morphism::identity(x), a), a);
  EXPECT_EQ(pullback(Morphism::mult(x, 3), CohClass(x, e(4, {1, 3}))), CohClass(x, e(4, {1, 3}, 9)));
  // mu^* e_i = e'_i + e''_i: column i of [I | I]^T has ones at i and i + D.
  const Morphism mu = Morphism::sum(x);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(pullback(mu, CohClass(x, e(4, {i}))).element, e(8, {i}) + e(8, {i + 4}));
  }
}

TEST(PushHomology, Examples) {
  const Variety x = Variety::base("X", 2);
  for (int k = 0; k <= 4; ++k) {
    std::vector<int> idx;
    for (int i = 1; i <= k; ++i) idx.push_back(i);
    const HomClass h(x, e(4, idx));
    EXPECT_EQ(pushHomology(Morphism::mult(x, 2), h), HomClass(x, e(4, idx, power(2, k))));
    EXPECT_EQ(pushHomology(Morphism::neg(x), h), HomClass(x, e(4, idx, power(-1, k))));
  }
  // x'_1 ^ x''_2 on X x X pushes to x_1 ^ x_2.
  EXPECT_EQ(pushHomology(Morphism::sum(x), HomClass(Variety::product(x, x), e(8, {1, 6}))), HomClass(x, e(4, {1, 2})));
}

TEST(Gysin, Examples) {
  const Variety x = Variety::base("X", 1);
  EXPECT_EQ(gysin(Morphism::neg(x), CohClass(x, e(2, {1}))), CohClass(x, e(2, {1}, -1)));

  // p2_*(a x b) = (integral of a) b.
  const Variety y = Variety::base("Y", 1);
  const Variety xy = Variety::product(x, y);
  const Morphism p2 = Morphism::projection(xy, 1);
  const CohClass b(y, e(2, {2}) + e(2, {}, 3));
  EXPECT_EQ(gysin(p2, cross(CohClass(x, e(2, {1, 2}, 4)), b)), CohClass(y, scale(4, b.element)));
  EXPECT_TRUE(gysin(p2, cross(CohClass(x, e(2, {1})), b)).element.isZero());
}

TEST(Gysin, ProjectionsAgreeWithFiberIntegration) {
  Draw draw(31);
  for (int t = 0; t < 200; ++t) {
    const Variety x = Variety::base("X", static_cast<int>(draw.between(1, 2)));
    const Variety y = Variety::base("Y", static_cast<int>(draw.between(1, 2)));
    const Variety xy = Variety::product(x, y);
    const CohClass c(xy, oracle::randomElement(draw, xy.generators(), 10));
    ASSERT_EQ(gysin(Morphism::projection(xy, 1), c).element, fiberIntegrate(c.element, xy.block(0)));
  }
}

TEST(Gysin, DegreeOfMultiplication) {
  for (int n = 1; n <= 3; ++n) {
    const Variety x = Variety::base("X", n);
    for (long long m : kMultipliers) {
      const Morphism mult = Morphism::mult(x, m);
      for (Mask s = 0; s < (Mask{1} << x.generators()); ++s) {
        const CohClass a(x, ExteriorElement::monomial(x.generators(), s));
        ASSERT_EQ(gysin(mult, pullback(mult, a)), CohClass(x, scale(power(m, 2 * n), a.element)));
        const HomClass h(x, a.element);
        ASSERT_EQ(pushHomology(mult, h), HomClass(x, scale(power(m, maskDegree(s)), h.element)));
      }
    }
  }
}

TEST(Cross, Examples) {
  const Variety x = Variety::base("X", 1);
  const Variety xh = x.dual();
  const CohClass b(xh, e(2, {1, 2}) + e(2, {2}));
  EXPECT_EQ(cross(CohClass(x, ExteriorElement::one(2)), b),
            pullback(Morphism::projection(Variety::product(x, xh), 1), b));
  EXPECT_EQ(cross(CohClass(x, e(2, {1})), CohClass(xh, e(2, {1}))).element, e(4, {1, 3}));
  EXPECT_EQ(cross(CohClass(x, e(2, {1})), CohClass(xh, e(2, {1, 2}))).element.degree(), 3);
}

TEST(IntersectHomology, Examples) {
  const Variety x = Variety::base("X", 1);
  const HomClass b(x, e(2, {1}) + e(2, {}, 2));
  EXPECT_EQ(intersectHomology(fundamentalClass(x), b), b);
  EXPECT_TRUE(intersectHomology(pointClass(x), pointClass(x)).element.isZero());
  // PD^{-1} x1 = -e2, PD^{-1} x2 = e1 (from PD e1 = x2, PD e2 = -x1), and
  // PD(-e2 ^ e1) = PD(e1 ^ e2) = 1.
  EXPECT_EQ(intersectHomology(HomClass(x, e(2, {1})), HomClass(x, e(2, {2}))), pointClass(x));
  EXPECT_THROW(intersectHomology(b, HomClass(Variety::base("Y", 1), e(2, {1}))), VarietyMismatch);
}

TEST(Properties, Functoriality) {
  Draw draw(32);
  for (int t = 0; t < 200; ++t) {
    const Variety x = Variety::base("X", static_cast<int>(draw.between(1, 2)));
    const Variety y = Variety::base("Y", static_cast<int>(draw.between(1, 2)));
    const Variety z = Variety::base("Z", static_cast<int>(draw.between(1, 2)));
    const Morphism f(x, y, oracle::randomIntMatrix(draw, y.generators(), x.generators()));
    const Morphism g(y, z, oracle::randomIntMatrix(draw, z.generators(), y.generators()));
    const CohClass c(z, oracle::randomElement(draw, z.generators()));
    const HomClass h(x, oracle::randomElement(draw, x.generators()));
    ASSERT_EQ(pullback(compose(g, f), c), pullback(f, pullback(g, c)));
    ASSERT_EQ(pushHomology(compose(g, f), h), pushHomology(g, pushHomology(f, h)));
  }
}

TEST(Properties, ProjectionFormula) {
  Draw draw(33);
  for (int t = 0; t < 200; ++t) {
    const Variety x = Variety::base("X", static_cast<int>(draw.between(1, 2)));
    const Variety y = Variety::base("Y", static_cast<int>(draw.between(1, 2)));
    const Morphism f(x, y, oracle::randomIntMatrix(draw, y.generators(), x.generators()));
    const CohClass a(y, oracle::randomElement(draw, y.generators()));
    const CohClass b(x, oracle::randomElement(draw, x.generators()));
    ASSERT_EQ(gysin(f, cup(pullback(f, a), b)), cup(a, gysin(f, b)));
  }
}

TEST(Properties, PoincareDualityIntertwinesPushforwards) {
  Draw draw(34);
  for (int t = 0; t < 200; ++t) {
    const Variety x = Variety::base("X", static_cast<int>(draw.between(1, 2)));
    const Variety y = Variety::base("Y", static_cast<int>(draw.between(1, 2)));
    const Morphism f(x, y, oracle::randomIntMatrix(draw, y.generators(), x.generators()));
    const CohClass a(x, oracle::randomElement(draw, x.generators()));
    ASSERT_EQ(pushHomology(f, toHomology(a)), toHomology(gysin(f, a)));
  }
}
