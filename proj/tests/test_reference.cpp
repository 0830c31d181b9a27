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

#include "pyramid/reference.hpp"

using namespace pyr;
using oracle::q;

namespace {

Point3 P(const Rational& a, const Rational& b, const Rational& c) { return {a, b, c}; }

// Plane equations of the faces, written independently of topology().
bool on_face(const std::string& f, const Point3& p) {
  const auto &x = p[0], &y = p[1], &z = p[2];
  if (f == "S1") return y == 0;
  if (f == "S2") return x == 1 - z;
  if (f == "S3") return y == 1 - z;
  if (f == "S4") return x == 0;
  return z == 0;
}

} // namespace

TEST_SUITE("reference") {

TEST_CASE("phi maps sample points") {
  CHECK(phi(P(0, 0, 0)) == P(0, 0, 0));
  CHECK(phi(P(1, 1, 1)) == P(q(1, 2), q(1, 2), q(1, 2)));
  CHECK(phi(P(1, 0, 0)) == P(1, 0, 0));
  CHECK_THROWS_AS(phi(P(2, 0, 0)), DomainError);
  CHECK_THROWS_AS(phi(P(0, 0, -1)), DomainError);
}

TEST_CASE("phi_inverse maps sample points and rejects the apex") {
  CHECK(phi_inverse(P(0, 0, 0)) == P(0, 0, 0));
  CHECK(phi_inverse(P(q(1, 2), q(1, 2), q(1, 2))) == P(1, 1, 1));
  CHECK(phi_inverse(P(q(1, 4), 0, q(1, 2))) == P(q(1, 2), 0, 1));
  CHECK_THROWS_AS(phi_inverse(P(0, 0, 1)), SingularPointError);
  CHECK_THROWS_AS(phi_inverse(P(0, 0, 2)), DomainError);
  CHECK_THROWS_AS(phi_inverse(P(q(3, 4), 0, q(1, 2))), DomainError);
}

TEST_CASE("phi and its inverse compose to the identity") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto p = oracle::random_infinite_point(rng);
    CHECK(phi_inverse(phi(p)) == p);
    auto r = oracle::random_finite_point(rng);
    CHECK(phi(phi_inverse(r)) == r);
  }
}

TEST_CASE("rotations") {
  CHECK(rotate_infinite(P(0, 0, 0)) == P(1, 0, 0));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    auto p = oracle::random_infinite_point(rng);
    CHECK(rotate_infinite(rotate_infinite(rotate_infinite(rotate_infinite(p)))) == p);
    auto r = oracle::random_finite_point(rng);
    CHECK(rotate_finite(rotate_finite(rotate_finite(rotate_finite(r)))) == r);
    // conjugacy R = phi o R_inf o phi^-1
    CHECK(rotate_finite(r) == phi(rotate_infinite(phi_inverse(r))));
    Point3 base = P(r[0], r[1], 0);
    CHECK(rotate_finite(base) == P(1 - base[1], base[0], 0));
  }
}

TEST_CASE("jacobian of phi") {
  Matrix3 id = jacobian_phi(P(0, 0, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
  CHECK(det(jacobian_phi(P(q(1, 3), q(2, 3), 1))) == q(1, 16));
  Matrix3 m = jacobian_phi(P(1, 1, 1));
  Matrix3 want = {{{q(1, 2), 0, q(-1, 4)}, {0, q(1, 2), q(-1, 4)}, {0, 0, q(1, 4)}}};
  CHECK(m == want);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto p = oracle::random_infinite_point(rng);
    Rational w = 1 + p[2];
    CHECK(det(jacobian_phi(p)) == 1 / (w * w * w * w));
  }
}

TEST_CASE("topology: vertices, faces and normals") {
  const auto& t = topology();
  REQUIRE(t.vertices.size() == 5);
  CHECK(t.vertices[0] == P(0, 0, 0));
  CHECK(t.vertices[1] == P(1, 0, 0));
  CHECK(t.vertices[2] == P(1, 1, 0));
  CHECK(t.vertices[3] == P(0, 1, 0));
  CHECK(t.vertices[4] == P(0, 0, 1));
  REQUIRE(t.faces.size() == 5);
  REQUIRE(t.edges.size() == 8);
  Point3 centroid = {q(3, 8), q(3, 8), q(1, 4)};
  for (const auto& f : t.faces) {
    CAPTURE(f.label);
    for (int v : f.vertices) CHECK(on_face(f.label, t.vertices[v]));
    Point3 mid = face_point(f, q(1, 4), q(1, 4));
    CHECK(on_face(f.label, mid));
    CHECK(in_finite_pyramid(mid));
    Point3 c = cross(f.ds, f.dt);
    CHECK((f.normal == c || f.normal == Point3{-c[0], -c[1], -c[2]}));
    Point3 out = {mid[0] - centroid[0], mid[1] - centroid[1], mid[2] - centroid[2]};
    CHECK(dot(f.normal, out) > 0);
  }
  for (const auto& e : t.edges) CHECK(e.from < e.to);
}

TEST_CASE("the quarter turn cycles the triangular faces and fixes the base") {
  const auto& t = topology();
  for (int i = 0; i < 4; ++i) {
    const auto& f = t.faces[i];
    Point3 p = face_point(f, q(1, 3), q(1, 5));
    CHECK(on_face(t.faces[(i + 1) % 4].label, rotate_finite(p)));
  }
  Point3 b = face_point(t.faces[4], q(1, 3), q(2, 7));
  CHECK(on_face("B", rotate_finite(b)));
  CHECK(rotate_finite(t.vertices[4]) == t.vertices[4]);
}

TEST_CASE("entity label lookup") {
  CHECK(face_index("S1") == 0);
  CHECK(face_index("S3") == 2);
  CHECK(face_index("B") == 4);
  CHECK(edge_index("e1") == 0);
  CHECK(edge_index("b1") == 4);
}

}
