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

#include "pyramid/interp.hpp"

#include <set>

using namespace pyr;
using oracle::q;

namespace {

bool all_pass(const std::vector<CheckResult>& r) {
  for (const auto& c : r) {
    if (c.status == CheckStatus::Fail) {
      MESSAGE(c.name << " s=" << c.s << " k=" << c.k << ": " << c.message);
      return false;
    }
  }
  return true;
}

const CheckResult* find(const std::vector<CheckResult>& r, const std::string& name, int s = -2) {
  for (const auto& c : r)
    if (c.name == name && (s == -2 || c.s == s)) return &c;
  return nullptr;
}

FormField random_member(std::mt19937_64& rng, int s, int k) {
  const auto& b = basis(s, k);
  FormField f = FormField::zero(s, Frame::FinitePyramid);
  for (const auto& x : b.functions) f += oracle::random_rational(rng) * x.finite;
  return f;
}

} // namespace

TEST_SUITE("interp") {

TEST_CASE("interpolation reproduces simple members") {
  for (int k = 1; k <= 3; ++k) {
    auto zk = finite_from_cartesian(0, {Poly3::monomial(0, 0, k)});
    auto p = interpolate(0, k, zk);
    CHECK(p.field() == zk);
    for (const auto& r : p.residual_dofs) CHECK(r == 0);
    auto one = finite_from_cartesian(3, {Poly3(1)});
    CHECK(interpolate(3, k, one).field() == one);
  }
}

TEST_CASE("interpolation is a projection") {
  std::mt19937_64 rng(41);
  for (int k = 1; k <= 2; ++k)
    for (int s = 0; s <= 3; ++s) {
      auto u = random_member(rng, s, k);
      auto once = interpolate(s, k, u).field();
      CHECK(once == u);
      CHECK(interpolate(s, k, once).field() == once);
    }
}

TEST_CASE("numeric interpolation of a smooth field leaves tiny DOF residuals") {
  SmoothField f;
  f.degree = 0;
  f.value = [](double x, double y, double z) { return std::vector<double>{std::sin(x + 2 * y) * std::exp(z)}; };
  f.derivative = [](double x, double y, double z) {
    double c = std::cos(x + 2 * y) * std::exp(z);
    return std::vector<double>{c, 2 * c, std::sin(x + 2 * y) * std::exp(z)};
  };
  for (int k = 1; k <= 3; ++k) {
    auto p = interpolate(0, k, f);
    for (double r : p.numeric_residual_dofs) CHECK(std::abs(r) <= 1e-10);
  }
}

TEST_CASE("face DOF values depend only on the closure of the face") {
  // the bump is supported near the far corner (1,1,0), away from the closure of S1
  auto bump = [](double x, double y, double z) {
    double r2 = (x - 1) * (x - 1) + (y - 1) * (y - 1) + z * z;
    return r2 < 0.25 ? std::pow(0.25 - r2, 4) : 0.0;
  };
  auto bump_grad = [](double x, double y, double z) {
    double r2 = (x - 1) * (x - 1) + (y - 1) * (y - 1) + z * z;
    if (r2 >= 0.25) return std::vector<double>{0, 0, 0};
    double g = -8 * std::pow(0.25 - r2, 3);
    return std::vector<double>{g * (x - 1), g * (y - 1), g * z};
  };
  SmoothField a, b;
  a.degree = b.degree = 0;
  a.value = [](double x, double y, double z) { return std::vector<double>{std::cos(x) + y * z}; };
  a.derivative = [](double x, double y, double z) { return std::vector<double>{-std::sin(x), z, y}; };
  b.value = [=](double x, double y, double z) { return std::vector<double>{a.value(x, y, z)[0] + bump(x, y, z)}; };
  b.derivative = [=](double x, double y, double z) {
    auto d = a.derivative(x, y, z);
    auto e = bump_grad(x, y, z);
    return std::vector<double>{d[0] + e[0], d[1] + e[1], d[2] + e[2]};
  };
  const int k = 3;
  auto pa = interpolate(0, k, a), pb = interpolate(0, k, b);
  const auto& d = dof_set(0, k);
  const auto& v = vandermonde_cached(0, k);
  const std::set<std::string> closure = {"S1", "e1", "e2", "b1", "v1", "v2", "v5"};
  int compared = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!closure.count(d[i].entity)) continue;
    // m_i(Pi a) and m_i(Pi b)
    double va = 0, vb = 0;
    for (int j = 0; j < v.cols(); ++j) {
      va += v(int(i), j).get_d() * pa.numeric_coefficients[j];
      vb += v(int(i), j).get_d() * pb.numeric_coefficients[j];
    }
    CHECK(std::abs(va - vb) <= 1e-10);
    ++compared;
  }
  CHECK(compared == 3 + 3 * 2 + 1); // vertices, edge moments, one face moment
  // the bump does change the interpolant elsewhere
  double diff = 0;
  for (std::size_t j = 0; j < pa.numeric_coefficients.size(); ++j)
    diff = std::max(diff, std::abs(pa.numeric_coefficients[j] - pb.numeric_coefficients[j]));
  CHECK(diff > 1e-8);
}

TEST_CASE("commuting diagram on examples") {
  // s = 0, p = xi eta zeta, k = 2
  auto p = finite_from_cartesian(0, {Poly3::monomial(1, 1, 1)});
  auto lhs = exterior_derivative(interpolate(0, 2, p).field());
  auto rhs = interpolate(1, 2, exterior_derivative(p)).field();
  CHECK(lhs == rhs);
  // s = 2, p = (0, 0, xi)
  auto w = finite_from_cartesian(2, {Poly3(), Poly3(), Poly3::var(0)});
  for (int k = 1; k <= 2; ++k)
    CHECK(exterior_derivative(interpolate(2, k, w).field()) == interpolate(3, k, exterior_derivative(w)).field());
  // constants
  auto c = finite_from_cartesian(0, {Poly3(3)});
  CHECK(exterior_derivative(interpolate(0, 1, c).field()).is_zero());
  // derivative matrix against a direct computation
  const auto& D = derivative_matrix(0, 2);
  const auto& b0 = basis(0, 2);
  const auto& b1 = basis(1, 2);
  for (std::size_t j = 0; j < b0.size(); ++j) {
    FormField sum = FormField::zero(1, Frame::FinitePyramid);
    for (std::size_t i = 0; i < b1.size(); ++i) sum += D(int(i), int(j)) * b1.functions[i].finite;
    CHECK(sum == exterior_derivative(b0.functions[j].finite));
  }
}

TEST_CASE("exact sequence ranks") {
  auto r1 = verify_exact_sequence(1);
  CHECK(all_pass(r1));
  auto r2 = verify_exact_sequence(2);
  CHECK(all_pass(r2));
  // direct rank computations at k = 1 and k = 2
  auto grad_rank = [](int k) {
    std::vector<FormField> d;
    for (const auto& f : basis(0, k).functions) d.push_back(exterior_derivative(f.field));
    return compare_spans(d, d).rank_a;
  };
  CHECK(grad_rank(1) == 4);
  CHECK(dimension(0, 1) - grad_rank(1) == 1);
  std::vector<FormField> curls;
  for (const auto& f : basis(1, 1).functions) curls.push_back(exterior_derivative(f.field));
  CHECK(8 - compare_spans(curls, curls).rank_a == 4);
  std::vector<FormField> divs;
  for (const auto& f : basis(2, 2).functions) divs.push_back(exterior_derivative(f.field));
  CHECK(compare_spans(divs, divs).rank_a == 8);
}

TEST_CASE("Helmholtz-type decompositions") {
  for (int k = 1; k <= 3; ++k) CHECK(all_pass(verify_helmholtz(k, 7)));
}

TEST_CASE("polynomial reproduction") {
  for (int k = 1; k <= 2; ++k) {
    auto r = verify_polynomial_reproduction(k);
    CHECK(all_pass(r));
  }
  // P^2 has ten monomials, and all of them are reproduced by Pi^(0) at k = 2
  int n = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b)
      for (int c = 0; a + b + c <= 2; ++c) {
        auto p = finite_from_cartesian(0, {Poly3::monomial(a, b, c)});
        CHECK(membership_in_space(p, 0, 2));
        CHECK(interpolate(0, 2, p).field() == p);
        ++n;
      }
  CHECK(n == 10);
  // twelve monomial 1-forms of degree <= 1 at k = 2
  n = 0;
  for (int comp = 0; comp < 3; ++comp)
    for (int v = -1; v < 3; ++v) {
      std::vector<Poly3> u(3);
      u[comp] = v < 0 ? Poly3(1) : Poly3::var(v);
      auto f = finite_from_cartesian(1, u);
      CHECK(interpolate(1, 2, f).field() == f);
      ++n;
    }
  CHECK(n == 12);
}

TEST_CASE("lowest order lists") {
  CHECK(all_pass(verify_lowest_order()));
  CHECK(lowest_order_pi().size() == 5);
  CHECK(lowest_order_gamma().size() == 8);
  CHECK(lowest_order_zeta().size() == 5);
  for (const auto& f : lowest_order_gamma()) CHECK(membership_in_space(f, 1, 1));
}

TEST_CASE("trace spans") {
  for (int k = 1; k <= 2; ++k) CHECK(all_pass(verify_traces(k)));
}

TEST_CASE("non-polynomial H1 function") {
  auto r = counterexample_demo(6);
  CHECK(all_pass(r));
  auto* g = find(r, "counterexample gradient norm");
  REQUIRE(g);
  CHECK(g->witness.at("grad_norm_sq") == "53/18900");
  // numeric oracle with the analytic Cartesian gradient
  auto grad2 = [](double x, double y, double z) {
    double A = x + z - 1, B = y + z - 1, D = 1 - z, N = x * z * A * B;
    double ux = z * B * (2 * x + z - 1) / D;
    double uy = x * z * A / D;
    double uz = x * (A * B + z * B + z * A) / D + N / (D * D);
    return ux * ux + uy * uy + uz * uz;
  };
  CHECK(std::abs(oracle::pyramid_numeric(grad2, 12) - 53.0 / 18900) <= 1e-13);
}

TEST_CASE("the non-polynomial function is interpolated with a gap below order three") {
  auto u = counterexample_function();
  CHECK_FALSE(membership_in_space(u, 0, 1));
  CHECK_FALSE(membership_in_space(u, 0, 2));
  // the rational space of order three already contains it
  CHECK(membership_in_space(u, 0, 3));
  for (int k = 1; k <= 3; ++k) {
    auto p = interpolate(0, k, u);
    double gap = 0;
    for (double c : {0.2, 0.4, 0.6})
      for (double a : {0.3, 0.7})
        for (double b : {0.25, 0.5}) {
          double xi = (1 - c) * a, eta = (1 - c) * b;
          double exact = u.collapsed(0).eval(std::array<double, 3>{a, b, c});
          gap = std::max(gap, std::abs(p.value(xi, eta, c)[0] - exact));
        }
    MESSAGE("k=" << k << " max gap at interior samples " << gap);
    if (k < 3) CHECK(gap > 1e-6);
    else CHECK(gap <= 1e-12);
  }
}

TEST_CASE("quadrature fidelity on random members") {
  auto r = verify_quadrature_fidelity(2, 5, 10);
  CHECK(all_pass(r));
  for (const auto& c : r) CHECK(c.measured <= 1e-12);
}

TEST_CASE("verify_all lists every acceptance criterion") {
  VerifyOptions o;
  o.max_k = 1;
  o.counterexample_degree = 4;
  o.random_fields = 5;
  auto rep = verify_all(o);
  std::set<int> crit;
  for (const auto& c : rep.checks) crit.insert(c.criterion);
  for (int i = 1; i <= 9; ++i) CHECK(crit.count(i) == 1);
  bool skipped = false;
  for (const auto& c : rep.checks) skipped = skipped || c.status == CheckStatus::Skipped;
  CHECK(skipped);
}

TEST_CASE("corrupting the basis breaks unisolvency") {
  auto r = verify_unisolvency(1, true);
  int failed = 0;
  for (const auto& c : r) failed += c.status == CheckStatus::Fail;
  CHECK(failed == 3); // s = 3 has a single column, nothing to duplicate
  CHECK(all_pass(verify_unisolvency(1, false)));
}

}
