#include "abvar/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "abvar/expr.hpp"
#include "abvar/fourier.hpp"

namespace abvar {

const std::vector<std::string>& identityNames() {
  static const std::vector<std::string> names = {
      "inversion",   "isogeny-exchange", "product-exchange", "compose-functoriality",
      "graph-laws",  "conjugate-laws",   "eigen-components",
  };
  return names;
}

namespace {

constexpr std::size_t kExhaustiveLimit = 64;
const long long kMultipliers[] = {-3, -2, 2, 3};

std::string show(const CohClass& a) { return print(a.element, GeneratorContext::cohomology(a.variety)); }
std::string show(const HomClass& a) { return print(a.element, GeneratorContext::homology(a.variety)); }
std::string show(const CorrespondenceClass& g) {
  return print(g.element, GeneratorContext::cohomology(g.product()));
}

std::string showMatrix(const IntMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    out += r ? "; " : "";
    for (int c = 0; c < m.cols(); ++c) out += (c ? " " : "") + std::to_string(m.at(r, c));
  }
  return out + "]";
}

ExteriorElement randomElement(Draw& draw, int generators) {
  ExteriorElement e(generators);
  const auto terms = draw.between(1, 6);
  for (long long t = 0; t < terms; ++t) {
    const Mask m = draw.bits() & fullMask(generators);
    e.addTerm(m, Rational(static_cast<long>(draw.between(-3, 3))));
  }
  return e;
}

IntMatrix randomMatrix(Draw& draw, int rows, int cols) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = draw.between(-2, 2);
  return m;
}

IntMatrix randomInvertible(Draw& draw, int d) {
  for (;;) {
    IntMatrix m = randomMatrix(draw, d, d);
    if (m.determinant() != 0) return m;
  }
}

Rational power(long long base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= static_cast<long>(base);
  return out;
}

// Applies c_k to the degree-k part of a.
ExteriorElement scaleByDegree(const ExteriorElement& a, long long m) {
  ExteriorElement out(a.generators());
  for (const auto& [mask, c] : a.terms()) out.addTerm(mask, c * power(m, maskDegree(mask)));
  return out;
}

// Collects equalities for one instance and stops the run at the first
// failure.
class Session {
 public:
  explicit Session(IdentityReport& report) : report_(report) {}

  template <class T>
  bool expect(const T& lhs, const T& rhs, const std::string& what, const std::string& context) {
    ++report_.checks;
    if (lhs == rhs) return true;
    report_.passed = false;
    report_.counterexample = what + ": " + context + "; lhs = " + show(lhs) + "; rhs = " + show(rhs);
    return false;
  }

 private:
  IdentityReport& report_;
};

// Runs `body(instance, basisMask?)` over the basis of a D-generator algebra
// when small enough, else over `trials` random instances.
template <class Body>
void sweep(IdentityReport& report, int generators, Body body) {
  const bool exhaustive = generators < 63 && (std::size_t{1} << generators) <= kExhaustiveLimit;
  report.mode = exhaustive ? "exhaustive" : "random";
  report.instances = exhaustive ? (std::size_t{1} << generators) : static_cast<std::size_t>(report.trials);
  Draw draw(report.seed);
  for (std::size_t i = 0; i < report.instances; ++i) {
    const ExteriorElement a = exhaustive ? ExteriorElement::monomial(generators, static_cast<Mask>(i))
                                         : randomElement(draw, generators);
    if (!body(a)) return;
    ++report.verified;
  }
}

template <class Body>
void trials(IdentityReport& report, Body body) {
  report.mode = "random";
  report.instances = static_cast<std::size_t>(report.trials);
  Draw draw(report.seed);
  for (std::size_t i = 0; i < report.instances; ++i) {
    if (!body(draw)) return;
    ++report.verified;
  }
}

void inversion(IdentityReport& report) {
  const Variety x = Variety::base("X", report.n);
  const Rational sign = report.n % 2 ? -1 : 1;
  const Morphism neg = Morphism::neg(x);
  Session s(report);
  sweep(report, x.generators(), [&](const ExteriorElement& e) {
    const CohClass a(x, e);
    const std::string ctx = "alpha = " + show(a);
    const CohClass twice = fourier(fourier(a));
    const CohClass expected(x, scale(sign, pullback(neg, a).element));
    if (!s.expect(twice, expected, "F_Xhat(F_X(alpha)) = (-1)^n (-1)^* alpha", ctx)) return false;
    const HomClass h(x, e);
    const HomClass hTwice = fourierHomology(fourierHomology(h));
    const HomClass hExpected(x, scale(sign, pushHomology(neg, h).element));
    return s.expect(hTwice, hExpected, "homology inversion", "x = " + show(h));
  });
}

void isogenyExchange(IdentityReport& report) {
  const Variety x = Variety::base("X", report.n);
  const Variety y = Variety::base("Y", report.n);
  Session s(report);
  trials(report, [&](Draw& draw) {
    const Morphism f = Morphism::isogeny(x, y, randomInvertible(draw, x.generators()));
    const Morphism fHat = dualIsogeny(f);
    const CohClass a(x, randomElement(draw, x.generators()));
    const CohClass b(y, randomElement(draw, y.generators()));
    const std::string ctx = "f = " + showMatrix(f.matrix());
    if (!s.expect(fourier(gysin(f, a)), pullback(fHat, fourier(a)), "F_Y(f_* alpha) = fhat^* F_X(alpha)",
                  ctx + ", alpha = " + show(a))) {
      return false;
    }
    return s.expect(fourier(pullback(f, b)), gysin(fHat, fourier(b)), "F_X(f^* beta) = fhat_* F_Y(beta)",
                    ctx + ", beta = " + show(b));
  });
}

void productExchange(IdentityReport& report) {
  const Variety x = Variety::base("X", report.n);
  const Rational sign = report.n % 2 ? -1 : 1;
  Session s(report);
  trials(report, [&](Draw& draw) {
    const CohClass a(x, randomElement(draw, x.generators()));
    const CohClass b(x, randomElement(draw, x.generators()));
    const std::string ctx = "alpha = " + show(a) + ", beta = " + show(b);
    if (!s.expect(fourier(pontryaginCohomology(a, b)), cup(fourier(a), fourier(b)),
                  "F(alpha * beta) = F(alpha) . F(beta)", ctx)) {
      return false;
    }
    const CohClass rhs = pontryaginCohomology(fourier(a), fourier(b));
    return s.expect(fourier(cup(a, b)), CohClass(rhs.variety, scale(sign, rhs.element)),
                    "F(alpha . beta) = (-1)^n F(alpha) * F(beta)", ctx);
  });
}

int factorCap(int n) { return std::min(n, 2); }

void composeFunctoriality(IdentityReport& report) {
  const int cap = factorCap(report.n);
  Session s(report);
  trials(report, [&](Draw& draw) {
    const Variety x = Variety::base("X", static_cast<int>(draw.between(1, cap)), {"a", "u", "a", "u"});
    const Variety y = Variety::base("Y", static_cast<int>(draw.between(1, cap)), {"b", "v", "b", "v"});
    const Variety z = Variety::base("Z", static_cast<int>(draw.between(1, cap)), {"c", "w", "c", "w"});
    const CorrespondenceClass g1(x, y, randomElement(draw, x.generators() + y.generators()));
    const CorrespondenceClass g2(y, z, randomElement(draw, y.generators() + z.generators()));
    const CohClass u(x, randomElement(draw, x.generators()));
    const HomClass h(x, randomElement(draw, x.generators()));
    const CorrespondenceClass g21 = composeCorr(g1, g2);
    const std::string ctx = "Gamma1 = " + show(g1) + ", Gamma2 = " + show(g2);
    if (!s.expect(corrAct(g21, u), corrAct(g2, corrAct(g1, u)), "(Gamma2 o Gamma1)_* u = Gamma2_* Gamma1_* u",
                  ctx + ", u = " + show(u))) {
      return false;
    }
    if (!s.expect(corrAct(g21, h), corrAct(g2, corrAct(g1, h)), "homology action of a composite",
                  ctx + ", u = " + show(h))) {
      return false;
    }
    const Morphism f(x, y, randomMatrix(draw, y.generators(), x.generators()));
    const Morphism g(y, z, randomMatrix(draw, z.generators(), y.generators()));
    if (!s.expect(composeCorr(graphClass(f), graphClass(g)), graphClass(compose(g, f)),
                  "Gamma_g o Gamma_f = Gamma_{g o f}",
                  "f = " + showMatrix(f.matrix()) + ", g = " + showMatrix(g.matrix()))) {
      return false;
    }
    return s.expect(composeCorr(g1, graphClass(Morphism::identity(y))), g1, "Gamma_id o Gamma = Gamma", ctx);
  });
}

void graphLaws(IdentityReport& report) {
  const int cap = factorCap(report.n);
  Session s(report);
  trials(report, [&](Draw& draw) {
    const Variety x = Variety::base("X", static_cast<int>(draw.between(1, cap)), {"a", "u", "a", "u"});
    const Variety y = Variety::base("Y", static_cast<int>(draw.between(1, cap)), {"b", "v", "b", "v"});
    const Morphism f(x, y, randomMatrix(draw, y.generators(), x.generators()));
    const CorrespondenceClass gamma = graphClass(f);
    const HomClass h(x, randomElement(draw, x.generators()));
    const CohClass b(y, randomElement(draw, y.generators()));
    const CohClass a(x, randomElement(draw, x.generators()));
    const std::string ctx = "f = " + showMatrix(f.matrix());
    if (!s.expect(corrAct(gamma, h), pushHomology(f, h), "(Gamma_f)_* alpha = f_* alpha",
                  ctx + ", alpha = " + show(h))) {
      return false;
    }
    if (!s.expect(corrAct(transposeCorr(gamma), b), pullback(f, b), "(tGamma_f)_* beta = f^* beta",
                  ctx + ", beta = " + show(b))) {
      return false;
    }
    if (!s.expect(corrAct(graphClass(Morphism::identity(x)), a), a, "(Gamma_id)_* alpha = alpha",
                  "alpha = " + show(a))) {
      return false;
    }
    return s.expect(transposeCorr(transposeCorr(gamma)), gamma, "t(tGamma) = Gamma", ctx);
  });
}

void conjugateLaws(IdentityReport& report) {
  const int cap = factorCap(report.n);
  Session s(report);
  trials(report, [&](Draw& draw) {
    auto dim = [&] { return static_cast<int>(draw.between(1, cap)); };
    const Variety x1 = Variety::base("X1", dim(), {"a", "u", "a", "u"});
    const Variety x2 = Variety::base("X2", dim(), {"b", "v", "b", "v"});
    const Variety y1 = Variety::base("Y1", dim(), {"c", "w", "c", "w"});
    const Variety y2 = Variety::base("Y2", dim(), {"d", "z", "d", "z"});
    const Morphism f1(x1, y1, randomMatrix(draw, y1.generators(), x1.generators()));
    const Morphism f2(x2, y2, randomMatrix(draw, y2.generators(), x2.generators()));
    const CorrespondenceClass z(y1, y2, randomElement(draw, y1.generators() + y2.generators()));
    const CorrespondenceClass zt(x1, x2, randomElement(draw, x1.generators() + x2.generators()));
    const CohClass alpha(x1, randomElement(draw, x1.generators()));
    const CohClass beta(y1, randomElement(draw, y1.generators()));
    const std::string ctx = "f1 = " + showMatrix(f1.matrix()) + ", f2 = " + showMatrix(f2.matrix());

    const CorrespondenceClass pulled = pullbackCorr(f1, f2, z);
    if (!s.expect(pulled, composeCorr(composeCorr(graphClass(f1), z), transposeCorr(graphClass(f2))),
                  "(f1 x f2)^* Z = tGamma_f2 o Z o Gamma_f1", ctx + ", Z = " + show(z))) {
      return false;
    }
    const CorrespondenceClass pushed = pushCorr(f1, f2, zt);
    if (!s.expect(pushed, composeCorr(composeCorr(transposeCorr(graphClass(f1)), zt), graphClass(f2)),
                  "(f1 x f2)_* Z = Gamma_f2 o Z o tGamma_f1", ctx + ", Z = " + show(zt))) {
      return false;
    }
    if (!s.expect(corrAct(pulled, alpha), pullback(f2, corrAct(z, gysin(f1, alpha))),
                  "((f1 x f2)^* Z)_* alpha = f2^* Z_* f1_* alpha", ctx + ", alpha = " + show(alpha))) {
      return false;
    }
    return s.expect(corrAct(pushed, beta), gysin(f2, corrAct(zt, pullback(f1, beta))),
                    "((f1 x f2)_* Z)_* beta = f2_* Z_* f1^* beta", ctx + ", beta = " + show(beta));
  });
}

void eigenComponents(IdentityReport& report) {
  const Variety x = Variety::base("X", report.n);
  const Variety xHat = x.dual();
  const int d = x.generators();
  Session s(report);

  // Class-independent facts about the Poincare class, checked once up front.
  const CorrespondenceClass p = poincareClass(x);
  for (long long m : kMultipliers) {
    const CorrespondenceClass mp(p.source, p.target, scale(Rational(static_cast<long>(m)), p.element));
    const std::string ctx = "m = " + std::to_string(m);
    if (!s.expect(pullbackCorr(Morphism::identity(x), Morphism::mult(xHat, m), p), mp, "(1 x m)^* P = m P", ctx) ||
        !s.expect(pullbackCorr(Morphism::mult(x, m), Morphism::identity(xHat), p), mp, "(m x 1)^* P = m P", ctx)) {
      report.instances = 0;
      return;
    }
  }

  sweep(report, d, [&](const ExteriorElement& e) {
    const CohClass a(x, e);
    const HomClass h(x, e);
    const std::string ctx = "alpha = " + show(a);
    for (long long m : kMultipliers) {
      const std::string mctx = ctx + ", m = " + std::to_string(m);
      const Morphism mult = Morphism::mult(x, m);
      if (!s.expect(pullback(mult, a), CohClass(x, scaleByDegree(e, m)), "m^* = m^k on H^k", mctx)) return false;
      if (!s.expect(pushHomology(mult, h), HomClass(x, scaleByDegree(e, m)), "m_* = m^k on H_k", mctx)) return false;
      if (!s.expect(gysin(mult, pullback(mult, a)), CohClass(x, scale(power(m, 2 * report.n), e)),
                    "m_* m^* = m^{2n}", mctx)) {
        return false;
      }
      for (int i = 0; i <= d; ++i) {
        const CohClass component = fourierComponent(i, a);
        if (!s.expect(pullback(Morphism::mult(xHat, m), component),
                      CohClass(xHat, scale(power(m, i), component.element)), "m^* beta_i = m^i beta_i",
                      mctx + ", i = " + std::to_string(i))) {
          return false;
        }
      }
    }
    ExteriorElement total(d);
    for (int i = 0; i <= d; ++i) total += fourierComponent(i, a).element;
    return s.expect(CohClass(xHat, total), fourier(a), "sum of components = F(alpha)", ctx);
  });
}

using Runner = void (*)(IdentityReport&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"inversion", inversion},
      {"isogeny-exchange", isogenyExchange},
      {"product-exchange", productExchange},
      {"compose-functoriality", composeFunctoriality},
      {"graph-laws", graphLaws},
      {"conjugate-laws", conjugateLaws},
      {"eigen-components", eigenComponents},
  };
  return table;
}

}  // namespace

IdentityReport verifyIdentity(const std::string& name, int n, int trials, std::uint64_t seed) {
  const auto it = runners().find(name);
  if (it == runners().end()) throw UnknownIdentity("unknown identity '" + name + "'");
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  IdentityReport report;
  report.identity = name;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  it->second(report);
  return report;
}

std::string formatText(const IdentityReport& report) {
  std::ostringstream out;
  out << report.identity << " n=" << report.n << " seed=" << report.seed << ": "
      << (report.passed ? "PASS" : "FAIL") << " (" << report.verified << "/" << report.instances << " "
      << (report.mode == "exhaustive" ? "basis classes" : "random trials") << ", " << report.checks
      << " checks)\n";
  if (report.counterexample) out << "  counterexample: " << *report.counterexample << "\n";
  return out.str();
}

nlohmann::ordered_json toJson(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["n"] = report.n;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["status"] = report.passed ? "pass" : "fail";
  j["mode"] = report.mode;
  j["instances"] = report.instances;
  j["verified"] = report.verified;
  j["checks"] = report.checks;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j;
}

}  // namespace abvar
