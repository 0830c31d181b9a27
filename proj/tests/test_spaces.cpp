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

#include "pyramid/spaces.hpp"

#include <set>

using namespace pyr;
using oracle::q;

namespace {

// Faces whose closure contains each entity, from the vertex lists
// v1=(0,0,0) v2=(1,0,0) v3=(1,1,0) v4=(0,1,0) v5 apex.
const std::map<std::string, std::set<std::string>>& incidence() {
  static const std::map<std::string, std::set<std::string>> m = {
      {"v1", {"S1", "S4", "B"}}, {"v2", {"S1", "S2", "B"}}, {"v3", {"S2", "S3", "B"}}, {"v4", {"S3", "S4", "B"}},
      {"v5", {"S1", "S2", "S3", "S4"}},
      {"e1", {"S1", "S4"}}, {"e2", {"S1", "S2"}}, {"e3", {"S2", "S3"}}, {"e4", {"S3", "S4"}},
      {"b1", {"S1", "B"}}, {"b2", {"S2", "B"}}, {"b3", {"S3", "B"}}, {"b4", {"S4", "B"}},
      {"S1", {"S1"}}, {"S2", {"S2"}}, {"S3", {"S3"}}, {"S4", {"S4"}}, {"B", {"B"}}, {"volume", {}}};
  return m;
}

bool trace_zero(int s, const std::string& face, const FormField& finite) {
  auto t = finite_trace(s, face, finite);
  REQUIRE(t.has_value());
  for (const auto& c : t->comp)
    if (!c.is_zero()) return false;
  return true;
}

// Full rank of sampled values at generic interior points (independent of the
// library's coefficient-matrix elimination).
int sampled_rank(const std::vector<FormField>& f) {
  std::mt19937_64 rng(99);
  std::vector<Point3> pts;
  for (int i = 0; i < 90; ++i) pts.push_back(oracle::random_infinite_point(rng));
  return oracle::rank(oracle::sample_rows(f, pts));
}

std::vector<FormField> derivatives(const std::vector<FormField>& f) {
  std::vector<FormField> d;
  for (const auto& x : f) d.push_back(exterior_derivative(x));
  return d;
}

std::vector<FormField> concat(std::vector<FormField> a, const std::vector<FormField>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace

TEST_SUITE("spaces") {

TEST_CASE("dimensions") {
  CHECK(dimension(0, 1) == 5);
  CHECK(dimension(3, 2) == 8);
  CHECK(dimension(1, 1) == 8);
  for (int k = 1; k <= 4; ++k) {
    CHECK(dimension(0, k) == k * k * k + 3 * k + 1);
    CHECK(dimension(3, k) == k * k * k);
    for (int s = 0; s <= 3; ++s) CHECK(int(basis(s, k).size()) == dimension(s, k));
  }
  CHECK(basis(0, 2).size() == 15);
  CHECK_THROWS(basis(0, 0));
  CHECK_THROWS(basis(4, 1));
}

TEST_CASE("bubble families") {
  CHECK(bubble_basis(1).empty());
  auto b2 = bubble_basis(2);
  REQUIRE(b2.size() == 1);
  // x(1-x)y(1-y)z/(1+z)^2, compared up to a scalar
  Poly3 x = Poly3::var(0), y = Poly3::var(1), z = Poly3::var(2), one(1);
  auto want = FormField::infinite(0, {WeightedPolynomial(x * (one - x) * y * (one - y) * z, 2)});
  CHECK(sampled_rank({b2.functions[0].field, want}) == 1);
  CHECK(bubble_basis(4).size() == 27);
  CHECK(curl_bubble_basis(1).empty());
  CHECK(curl_bubble_basis(2).size() == 5);
  CHECK(curl_bubble_basis(3).size() == 28);
  CHECK(div_bubble_basis(1).empty());
  CHECK(div_bubble_basis(2).size() == 7);
  CHECK(zero_trace_basis(1, 2).size() == 6);
  CHECK(zero_trace_basis(2, 1).size() == 0);
  CHECK(zero_trace_basis(2, 2).size() == 12);
}

TEST_CASE("membership") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(membership_in_space(FormField::infinite(0, {wmono(0, 0, k, k)}), 0, k));
    CHECK_FALSE(membership_in_space(FormField::infinite(0, {wmono(1, k, k, k)}), 0, k));
  }
  Poly3 x = Poly3::var(0), y = Poly3::var(1), z = Poly3::var(2), one(1), zero;
  std::vector<std::array<Poly3, 3>> zeta = {{zero, (y - one) * Rational(2), z}, {(x - one) * Rational(2), zero, z},
                                            {x * Rational(2), zero, z}, {zero, y * Rational(2), z}, {zero, zero, -one}};
  for (const auto& r : zeta)
    CHECK(membership_in_space(FormField::infinite(2, {WeightedPolynomial(r[0], 3), WeightedPolynomial(r[1], 3), WeightedPolynomial(r[2], 3)}), 2, 1));
  // a 2-form with a flux through S1 that is not an admissible trace
  CHECK_FALSE(membership_in_space(FormField::infinite(2, {WeightedPolynomial(), WeightedPolynomial(x * x * x, 3), WeightedPolynomial()}), 2, 1));
}

TEST_CASE("lowest order H1 functions") {
  Poly3 x = Poly3::var(0), y = Poly3::var(1), one(1);
  auto pi1 = FormField::infinite(0, {WeightedPolynomial((x - one) * (y - one), 1)});
  const auto& b = basis(0, 1);
  bool found = false;
  for (const auto& f : b.functions) found = found || f.field == pi1 || f.field == Rational(-1) * pi1;
  CHECK(found);
}

TEST_CASE("bases are linearly independent and members of their spaces") {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 3; ++s) {
      CAPTURE(s);
      CAPTURE(k);
      const auto& b = basis(s, k);
      CHECK(sampled_rank(b.fields()) == int(b.size()));
      for (const auto& f : b.functions) CHECK(membership_in_space(f.field, s, k));
      for (const auto& f : b.functions) CHECK(pullback(f.finite) == f.field);
    }
}

TEST_CASE("shape functions vanish on faces away from their entity") {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 2; ++s) {
      CAPTURE(s);
      CAPTURE(k);
      for (const auto& f : basis(s, k).functions) {
        const auto& near = incidence().at(f.entity);
        for (const auto& face : topology().faces)
          if (!near.count(face.label)) CHECK(trace_zero(s, face.label, f.finite));
      }
    }
}

TEST_CASE("basis spans are invariant under the quarter turn") {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 3; ++s) {
      auto f = basis(s, k).fields();
      std::vector<FormField> r;
      for (const auto& x : f) r.push_back(rotate_pullback(x, 1));
      CHECK(compare_spans(f, r).equal());
    }
}

TEST_CASE("bubbles sit inside the zero-trace spaces and the full spaces") {
  for (int k = 2; k <= 3; ++k) {
    CHECK(compare_spans(bubble_basis(k).fields(), basis(0, k).fields()).a_in_b());
    CHECK(compare_spans(curl_bubble_basis(k).fields(), zero_trace_basis(1, k).fields()).a_in_b());
    CHECK(compare_spans(zero_trace_basis(1, k).fields(), basis(1, k).fields()).a_in_b());
    CHECK(compare_spans(div_bubble_basis(k).fields(), zero_trace_basis(2, k).fields()).a_in_b());
    CHECK(compare_spans(zero_trace_basis(2, k).fields(), basis(2, k).fields()).a_in_b());
    for (const auto& f : zero_trace_basis(1, k).functions)
      for (const auto& face : topology().faces) CHECK(trace_zero(1, face.label, f.finite));
    for (const auto& f : div_bubble_basis(k).functions)
      for (const auto& face : topology().faces) CHECK(trace_zero(2, face.label, f.finite));
  }
}

TEST_CASE("decomposition dimensions") {
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    auto gb = derivatives(bubble_basis(k).fields());
    auto cb = curl_bubble_basis(k).fields();
    int rg = sampled_rank(gb), rc = sampled_rank(cb);
    // trivial intersection and the dimension count of the zero-trace space
    CHECK(sampled_rank(concat(gb, cb)) == rg + rc);
    CHECK(rg + rc == 3 * k * (k - 1) * (k - 1));
    auto cc = derivatives(cb);
    auto db = div_bubble_basis(k).fields();
    CHECK(sampled_rank(concat(cc, db)) == sampled_rank(cc) + sampled_rank(db));
    CHECK(sampled_rank(cc) + sampled_rank(db) == 3 * k * k * k - 3 * k * k);
    CHECK(sampled_rank(derivatives(db)) + 1 == k * k * k);
  }
}

TEST_CASE("characterisation by derivative and trace conditions reproduces the tables") {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 3; ++s) {
      CAPTURE(s);
      CAPTURE(k);
      CHECK(compare_spans(space_by_characterization(s, k), basis(s, k).fields()).equal());
    }
}

TEST_CASE("trace spaces have the expected dimensions") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(finite_trace_space(0, k, true).size() == std::size_t((k + 1) * (k + 2) / 2));
    CHECK(finite_trace_space(1, k, true).size() == std::size_t(k * (k + 2)));
    CHECK(finite_trace_space(2, k, true).size() == std::size_t(k * (k + 1) / 2));
    CHECK(finite_trace_space(0, k, false).size() == std::size_t((k + 1) * (k + 1)));
    CHECK(finite_trace_space(1, k, false).size() == std::size_t(2 * k * (k + 1)));
    CHECK(finite_trace_space(2, k, false).size() == std::size_t(k * k));
  }
}

}
