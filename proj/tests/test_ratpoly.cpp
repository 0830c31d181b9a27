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

#include "doctest.h"
#include "support.hpp"

#include "pyramid/weighted.hpp"

using namespace pyr;
using oracle::q;

TEST_SUITE("ratpoly") {

TEST_CASE("arithmetic on weighted polynomials") {
  auto x1 = wmono(1, 0, 0, 1);
  CHECK(x1 + x1 == wmono(1, 0, 0, 1, 2));
  CHECK(wmono(0, 0, 1, 1) * wmono(0, 0, 1, 1) == wmono(0, 0, 2, 2));
  auto s = x1 + wmono(1, 0, 0, 0);
  CHECK(s == wmono(1, 0, 0, 1, 2) + wmono(1, 0, 1, 1));
  CHECK(s.numerator() == Poly3::monomial(1, 0, 0, 2) + Poly3::monomial(1, 0, 1));
  CHECK(s.weight() == 1);
  CHECK((x1 - x1).is_zero());
}

TEST_CASE("zero coefficients are dropped") {
  Poly3 p = Poly3::monomial(1, 2, 3) - Poly3::monomial(1, 2, 3);
  CHECK(p.is_zero());
  CHECK(p.total_degree() == -1);
}

TEST_CASE("differentiation") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(wmono(0, 0, k, k).derivative(2) == wmono(0, 0, k - 1, k + 1, k));
  }
  CHECK(wmono(2, 1, 0, 3).derivative(0) == wmono(1, 1, 0, 3, 2));
  CHECK(wmono(1, 0, 0, 1).derivative(2) == wmono(1, 0, 0, 2, -1));
}

TEST_CASE("mixed partials commute") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    WeightedPolynomial f(oracle::random_poly(rng, 3), i % 5);
    CHECK(f.derivative(0).derivative(1) == f.derivative(1).derivative(0));
    CHECK(f.derivative(0).derivative(2) == f.derivative(2).derivative(0));
    CHECK(f.derivative(1).derivative(2) == f.derivative(2).derivative(1));
  }
}

TEST_CASE("integration over the infinite pyramid") {
  CHECK(integrate_infinite(wmono(0, 0, 0, 4)) == q(1, 3));
  CHECK(integrate_infinite(wmono(1, 0, 0, 4)) == q(1, 6));
  CHECK_THROWS_AS(integrate_infinite(wmono(0, 0, 0, 1)), DivergenceError);
  CHECK_THROWS_AS(integrate_infinite(wmono(0, 0, 2, 3)), DivergenceError);
  // int_0^inf z^c/(1+z)^w dz = B(c+1, w-c-1), compared with the binomial oracle
  // after the substitution t = z/(1+z).
  for (int w = 2; w <= 8; ++w)
    for (int c = 0; c + 2 <= w; ++c) CHECK(integrate_infinite(wmono(0, 0, c, w)) == oracle::beta(c, w - c - 2));
}

TEST_CASE("integration over the finite pyramid") {
  CHECK(integrate_collapsed(Poly3(1)) == q(1, 3));
  CHECK(integrate_collapsed(Poly3::var(2)) == q(1, 12));
  CHECK(integrate_collapsed(Poly3::var(0)) == q(1, 6));
  CHECK_THROWS_AS(integrate_collapsed(Poly3(1), -3), SingularIntegrand);
  CHECK(integrate_collapsed(Poly3::affine(2, 1, -1), -3) == q(1, 1));
}

TEST_CASE("finite integrals agree with a Cartesian oracle") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    Poly3 p = oracle::random_poly(rng, 3);
    CHECK(integrate_collapsed(cartesian_to_collapsed(p)) == oracle::pyramid_integral(p));
  }
}

TEST_CASE("change of variables: infinite and finite integrals agree") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    Poly3 g = oracle::random_poly(rng, 3);
    // volume form of phi: 1/(1+z)^4
    WeightedPolynomial f = from_collapsed(g) * wmono(0, 0, 0, 4);
    CHECK(integrate_infinite(f) == integrate_collapsed(g));
  }
}

TEST_CASE("collapsed and Cartesian conversions") {
  // x -> xi/(1-zeta) is a in collapsed coordinates
  CHECK(to_collapsed(wmono(1, 0, 0, 0)) == Poly3::var(0));
  // 1/(1+z) -> 1 - c
  CHECK(to_collapsed(wmono(0, 0, 0, 1)) == Poly3::affine(2, 1, -1));
  CHECK_THROWS_AS(to_collapsed(wmono(0, 0, 1, 0)), RepresentationError);
  auto zk = to_cartesian(wmono(0, 0, 3, 3));
  REQUIRE(zk.has_value());
  CHECK(*zk == Poly3::monomial(0, 0, 3));
  CHECK_FALSE(to_cartesian(wmono(1, 0, 0, 0)).has_value());
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10; ++i) {
    Poly3 p = oracle::random_poly(rng, 2);
    auto back = to_cartesian(from_cartesian(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
}

TEST_CASE("membership in weighted polynomial spaces") {
  CHECK(wmono(0, 0, 2, 2).in_Q(2, 2, 2, 2));
  CHECK_FALSE(wmono(0, 0, 2, 2).in_Q(2, 2, 2, 1));
  CHECK(wmono(1, 0, 1, 3).in_P(3, 2));
  CHECK_FALSE(wmono(1, 0, 1, 3).in_P(3, 1));
  // x(1+z)/(1+z)^3 reduces to x/(1+z)^2 and sits in the weight-3 space once raised
  WeightedPolynomial f(Poly3::monomial(1, 0, 0) * Poly3::affine(2, 1, 1), 3);
  CHECK(f == wmono(1, 0, 0, 2));
  CHECK(f.in_P(3, 2));
  CHECK(wmono(1, 0, 0, 2).in_Q(3, 1, 0, 1));
}

TEST_CASE("raising the weight and lowering it again is the identity") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    WeightedPolynomial f(oracle::random_poly(rng, 3), 2);
    auto up = f.raised_to(5);
    CHECK(up.weight() == 5);
    CHECK(up == f);
    auto down = up.at_weight(2);
    REQUIRE(down.has_value());
    CHECK(down->numerator() == f.numerator());
  }
}

TEST_CASE("product degree bound") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    Poly3 a = oracle::random_poly(rng, 3), b = oracle::random_poly(rng, 2);
    Exp da = a.max_degrees(), db = b.max_degrees(), dp = (a * b).max_degrees();
    for (int v = 0; v < 3; ++v) CHECK(dp[v] <= da[v] + db[v]);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK(to_string(q(-3, 2)) == "-3/2");
  CHECK(to_string(q(4)) == "4/1");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

}
