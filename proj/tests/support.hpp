////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of pyramidfe                                            //
//                                                                            //
//  Copyright 2026 pyramidfe developers                                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

// Independent oracles for the unit tests. Nothing here calls the library's
// integration, quadrature or linear-algebra code.
#ifndef PYRAMID_TEST_SUPPORT_HPP
#define PYRAMID_TEST_SUPPORT_HPP

#include "pyramid/interp.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using pyr::Poly3;
using pyr::Rational;

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// int_0^1 c^l (1-c)^m dc by binomial expansion of (1-c)^m.
inline Rational beta(int l, int m) {
  Rational sum = 0;
  mpz_class binom = 1;
  for (int j = 0; j <= m; ++j) {
    Rational t(binom, l + j + 1);
    t.canonicalize();
    sum += (j % 2 ? -t : t);
    binom = binom * (m - j) / (j + 1);
  }
  return sum;
}

// Exact integral over the pyramid of a polynomial in (xi, eta, zeta):
// int_0^1 int_0^{1-z} int_0^{1-z} xi^a eta^b zeta^c, summed termwise.
inline Rational pyramid_integral(const Poly3& cartesian) {
  Rational sum = 0;
  for (const auto& [key, coef] : cartesian.terms()) {
    auto e = Poly3::unpack(key);
    // inner integrals give (1-z)^(a+1) (1-z)^(b+1) / ((a+1)(b+1))
    Rational t = coef * beta(e[2], e[0] + e[1] + 2) / Rational((e[0] + 1) * (e[1] + 1));
    sum += t;
  }
  return sum;
}

// Gauss-Legendre on [0,1] by Newton iteration on P_n.
struct Rule {
  std::vector<double> x, w;
};

inline Rule gauss_legendre01(int n) {
  Rule r;
  for (int i = 1; i <= n; ++i) {
    double t = std::cos(M_PI * (i - 0.25) / (n + 0.5)), dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    r.x.push_back(0.5 * (1 - t));
    r.w.push_back(1.0 / ((1 - t * t) * dp * dp));
  }
  return r;
}

// Integral over the pyramid of f(xi,eta,zeta) using a Duffy map and plain
// Gauss-Legendre in every direction.
inline double pyramid_numeric(const std::function<double(double, double, double)>& f, int n) {
  Rule g = gauss_legendre01(n);
  double s = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i)
    for (std::size_t j = 0; j < g.x.size(); ++j)
      for (std::size_t l = 0; l < g.x.size(); ++l) {
        double c = g.x[l], h = 1 - c;
        s += g.w[i] * g.w[j] * g.w[l] * h * h * f(h * g.x[i], h * g.x[j], c);
      }
  return s;
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return q(num(rng), den(rng));
}

// Random polynomial in three variables with per-variable degree <= deg.
inline Poly3 random_poly(std::mt19937_64& rng, int deg, int terms = 6) {
  std::uniform_int_distribution<int> e(0, deg);
  Poly3 p;
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng), e(rng)}, random_rational(rng));
  return p;
}

// Random point strictly inside the pyramid.
inline pyr::Point3 random_finite_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 8);
  Rational z = q(d(rng), 10);
  Rational x = (1 - z) * q(d(rng), 9), y = (1 - z) * q(d(rng), 9);
  return {x, y, z};
}

inline pyr::Point3 random_infinite_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 9), z(0, 30);
  return {q(d(rng), 9), q(d(rng), 9), q(z(rng), 7)};
}

// Gaussian-elimination rank over the rationals, written out here so span
// checks do not depend on the library's own elimination.
inline int rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < int(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(m.size()); ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < int(m.size()); ++i)
      if (i != r && m[i][c] != 0) {
        Rational f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    ++r;
  }
  return r;
}

// Rows of field values at sample points: independent fields give full rank
// for enough generic points.
inline std::vector<std::vector<Rational>> sample_rows(const std::vector<pyr::FormField>& fields, const std::vector<pyr::Point3>& pts) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) {
    std::vector<Rational> r;
    for (const auto& p : pts)
      for (const auto& c : f.comp) r.push_back(c.eval(p));
    rows.push_back(std::move(r));
  }
  return rows;
}

} // namespace oracle

#endif
