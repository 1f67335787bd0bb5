#pragma once

// Independent reference implementations for the tests. Monomials are index
// vectors and every sign is found by literally bubble-sorting, so nothing
// here shares code with the bitmask implementation under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "abvar/exterior.hpp"
#include "abvar/variety.hpp"
#include "abvar/verify.hpp"

namespace oracle {

using abvar::ExteriorElement;
using abvar::Mask;
using abvar::Rational;

using Indices = std::vector<int>;
using Naive = std::map<Indices, Rational>;

// Sorts in place by adjacent swaps; returns 0 on a repeated index, else
// the sign of the permutation.
inline int bubbleSort(Indices& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

inline void add(Naive& out, Indices idx, const Rational& c) {
  const int sign = bubbleSort(idx);
  if (sign == 0 || c == 0) return;
  Rational& slot = out[idx];
  slot += sign * c;
  if (slot == 0) out.erase(idx);
}

inline Naive fromElement(const ExteriorElement& a) {
  Naive out;
  for (const auto& [m, c] : a.terms()) {
    Indices idx;
    for (int i = 0; i < 64; ++i)
      if (m >> i & 1) idx.push_back(i + 1);
    out[idx] = c;
  }
  return out;
}

inline ExteriorElement toElement(const Naive& a, int generators) {
  ExteriorElement out(generators);
  for (const auto& [idx, c] : a) out.addTerm(abvar::maskOf(idx), c);
  return out;
}

inline Naive wedge(const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [ia, ca] : a) {
    for (const auto& [ib, cb] : b) {
      Indices joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      add(out, joined, ca * cb);
    }
  }
  return out;
}

inline ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  return toElement(wedge(fromElement(a), fromElement(b)), a.generators());
}

// Determinant by the Leibniz sum over permutations.
inline Rational leibniz(const std::vector<std::vector<Rational>>& m) {
  const std::size_t k = m.size();
  Indices perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    Indices copy = perm;
    const int sign = bubbleSort(copy);
    Rational term = sign;
    for (std::size_t r = 0; r < k; ++r) term *= m[r][static_cast<std::size_t>(perm[r])];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Lambda(L) on a monomial e_J: sum over I of det(L[I, J]) e_I.
inline ExteriorElement minorsMap(const abvar::LinearMap& l, const ExteriorElement& a) {
  Naive out;
  const int rows = l.rows();
  for (const auto& [j, c] : fromElement(a)) {
    const std::size_t k = j.size();
    // Every increasing row subset of size k.
    std::vector<bool> choose(static_cast<std::size_t>(rows), false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(std::min<std::size_t>(k, choose.size())), true);
    if (k > static_cast<std::size_t>(rows)) continue;
    do {
      Indices i;
      for (int r = 0; r < rows; ++r)
        if (choose[static_cast<std::size_t>(r)]) i.push_back(r + 1);
      std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) sub[r][s] = l.at(i[r] - 1, j[s] - 1);
      add(out, i, c * leibniz(sub));
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return toElement(out, rows);
}

// e_S -> sign e_{S^c} with e_S ^ e_{S^c} = sign e_{1..D}, sign by sorting.
inline ExteriorElement complementDual(const ExteriorElement& a) {
  const int d = a.generators();
  Naive out;
  for (const auto& [s, c] : fromElement(a)) {
    Indices rest;
    for (int i = 1; i <= d; ++i)
      if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(i);
    Indices joined = s;
    joined.insert(joined.end(), rest.begin(), rest.end());
    Indices sorted = joined;
    const int sign = bubbleSort(sorted);
    out[rest] += sign * c;
  }
  return toElement(out, d);
}

// Moves the fiber indices to the front of each monomial by adjacent swaps,
// strips them, and renumbers what is left.
inline ExteriorElement integrate(const ExteriorElement& a, const Indices& fiber) {
  const int d = a.generators();
  Naive out;
  for (const auto& [idx, c] : fromElement(a)) {
    if (!std::all_of(fiber.begin(), fiber.end(),
                     [&](int f) { return std::find(idx.begin(), idx.end(), f) != idx.end(); })) {
      continue;
    }
    Indices word = idx;
    int sign = 1;
    // Stable partition by swaps: bubble each fiber index leftwards.
    for (std::size_t placed = 0; placed < fiber.size(); ++placed) {
      auto pos = static_cast<std::size_t>(std::find(word.begin(), word.end(), fiber[placed]) - word.begin());
      while (pos > placed) {
        std::swap(word[pos], word[pos - 1]);
        sign = -sign;
        --pos;
      }
    }
    Indices rest(word.begin() + static_cast<long>(fiber.size()), word.end());
    for (int& r : rest) {
      const int below = static_cast<int>(std::count_if(fiber.begin(), fiber.end(), [&](int f) { return f < r; }));
      r -= below;
    }
    add(out, rest, sign * c);
  }
  return toElement(out, d - static_cast<int>(fiber.size()));
}

// Sum of a^i / i! with powers computed by the naive wedge.
inline ExteriorElement exponential(const ExteriorElement& a) {
  const int d = a.generators();
  Naive total{{Indices{}, Rational(1)}};
  Naive power{{Indices{}, Rational(1)}};
  const Naive base = fromElement(a);
  Rational factorial = 1;
  for (int i = 1; 2 * i <= d; ++i) {
    power = wedge(power, base);
    factorial *= i;
    for (const auto& [idx, c] : power) {
      Rational& slot = total[idx];
      slot += c / factorial;
      if (slot == 0) total.erase(idx);
    }
  }
  return toElement(total, d);
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<long long>> pascal(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    pascal[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j)
      pascal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pascal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          pascal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Random generators shared by the property tests.
inline ExteriorElement randomElement(abvar::Draw& draw, int generators, int maxTerms = 6) {
  ExteriorElement e(generators);
  const auto terms = draw.between(1, maxTerms);
  for (long long t = 0; t < terms; ++t) {
    const Mask m = draw.bits() & abvar::fullMask(generators);
    const auto num = draw.between(-3, 3);
    const auto den = draw.between(1, 3);
    Rational q(static_cast<long>(num));
    q /= static_cast<long>(den);
    e.addTerm(m, q);
  }
  return e;
}

inline ExteriorElement randomHomogeneous(abvar::Draw& draw, int generators, int degree, int maxTerms = 6) {
  ExteriorElement e(generators);
  const auto terms = draw.between(1, maxTerms);
  for (long long t = 0; t < terms; ++t) {
    Indices pool(static_cast<std::size_t>(generators));
    std::iota(pool.begin(), pool.end(), 1);
    Indices chosen;
    for (int i = 0; i < degree; ++i) {
      const auto at = static_cast<std::size_t>(draw.between(0, static_cast<long long>(pool.size()) - 1));
      chosen.push_back(pool[at]);
      pool.erase(pool.begin() + static_cast<long>(at));
    }
    std::sort(chosen.begin(), chosen.end());
    e.addTerm(abvar::maskOf(chosen), Rational(static_cast<long>(draw.between(-3, 3))));
  }
  return e;
}

inline abvar::LinearMap randomLinearMap(abvar::Draw& draw, int rows, int cols) {
  abvar::LinearMap l(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) l.at(r, c) = Rational(static_cast<long>(draw.between(-2, 2)));
  return l;
}

inline abvar::IntMatrix randomIntMatrix(abvar::Draw& draw, int rows, int cols) {
  abvar::IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = draw.between(-2, 2);
  return m;
}

}  // namespace oracle
