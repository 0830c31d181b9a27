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

#include "pyramid/calculus.hpp"

namespace pyr {

namespace {

using WP = WeightedPolynomial;

WP times(const WP& f, const Poly3& p) { return WP(f.numerator() * p, f.weight()); }
WP over(const WP& f, int m) { return WP(f.numerator(), f.weight() + m); }

const Poly3 X = Poly3::var(0), Y = Poly3::var(1), Z = Poly3::var(2);

FormField d_infinite(const FormField& f) {
  const auto& c = f.comp;
  switch (f.degree) {
    case 0:
      return FormField::infinite(1, {c[0].derivative(0), c[0].derivative(1), c[0].derivative(2)});
    case 1:
      return FormField::infinite(2, {c[2].derivative(1) - c[1].derivative(2),
                                     c[0].derivative(2) - c[2].derivative(0),
                                     c[1].derivative(0) - c[0].derivative(1)});
    case 2:
      return FormField::infinite(3, {c[0].derivative(0) + c[1].derivative(1) + c[2].derivative(2)});
    default:
      throw std::invalid_argument("the exterior derivative of a 3-form is not part of the complex");
  }
}

} // namespace

FormField exterior_derivative(const FormField& f) {
  if (f.frame == Frame::InfinitePyramid) return d_infinite(f);
  return inverse_pullback(d_infinite(pullback(f)));
}

FormField pullback(const FormField& finite) {
  if (finite.frame != Frame::FinitePyramid) throw FrameMismatch("pullback expects a finite-frame field");
  std::vector<WP> e;
  for (const auto& c : finite.comp) e.push_back(from_collapsed(c.numerator()));
  switch (finite.degree) {
    case 0:
      return FormField::infinite(0, {e[0]});
    case 1:
      // D phi^T (E o phi)
      return FormField::infinite(1, {over(e[0], 1), over(e[1], 1),
                                     over(e[2] - times(e[0], X) - times(e[1], Y), 2)});
    case 2:
      // |D phi| D phi^{-1} (v o phi)
      return FormField::infinite(2, {over(e[0] + times(e[2], X), 3), over(e[1] + times(e[2], Y), 3),
                                     over(e[2], 2)});
    default:
      return FormField::infinite(3, {over(e[0], 4)});
  }
}

std::vector<WeightedPolynomial> finite_proxy(const FormField& inf) {
  if (inf.frame != Frame::InfinitePyramid) throw FrameMismatch("finite_proxy expects an infinite-frame field");
  const auto& u = inf.comp;
  switch (inf.degree) {
    case 0:
      return {u[0]};
    case 1:
      return {u[0].times_one_plus_z(1), u[1].times_one_plus_z(1),
              (times(u[0], X) + times(u[1], Y) + u[2].times_one_plus_z(1)).times_one_plus_z(1)};
    case 2:
      return {(u[0].times_one_plus_z(1) - times(u[2], X)).times_one_plus_z(2),
              (u[1].times_one_plus_z(1) - times(u[2], Y)).times_one_plus_z(2), u[2].times_one_plus_z(2)};
    default:
      return {u[0].times_one_plus_z(4)};
  }
}

FormField inverse_pullback(const FormField& inf) {
  std::vector<Poly3> c;
  for (const auto& p : finite_proxy(inf)) c.push_back(to_collapsed(p));
  return FormField::finite(inf.degree, c);
}

FormField finite_from_cartesian(int s, const std::vector<Poly3>& comps) {
  std::vector<Poly3> c;
  for (const auto& p : comps) c.push_back(cartesian_to_collapsed(p));
  return FormField::finite(s, c);
}

FormField rotate_pullback(const FormField& inf, int times_) {
  if (inf.frame != Frame::InfinitePyramid) throw FrameMismatch("rotation is applied on the infinite frame");
  FormField f = inf;
  const Poly3 xs = Poly3(1) - Y, ys = X;
  for (int r = 0; r < ((times_ % 4) + 4) % 4; ++r) {
    std::vector<WP> g;
    for (const auto& c : f.comp) g.push_back(c.compose_xy(xs, ys));
    if (f.degree == 1 || f.degree == 2) g = {g[1], -g[0], g[2]};
    f = FormField::infinite(f.degree, g);
  }
  return f;
}

//---------------------------------------------------------------------------

namespace {

int rotations_for(const std::string& face) {
  if (face == "S1") return 0;
  if (face == "S2") return 1;
  if (face == "S3") return 2;
  if (face == "S4") return 3;
  throw std::invalid_argument("unknown triangular face " + face);
}

SurfaceField trace_s1_or_base(int s, bool base, const std::vector<WP>& u) {
  // On S1 (y = 0, outward normal -e_y) and B (z = 0, outward normal -e_z).
  SurfaceField t;
  int fixed = base ? 2 : 1;
  auto r = [&](const WP& w) {
    if (!base) return WP(w.numerator().restrict(1, 0), w.weight());
    return WP(w.numerator().restrict(2, 0), 0);
  };
  if (s == 0) t.comp = {r(u[0])};
  else if (s == 1) t.comp = base ? std::vector<WP>{r(u[0]), r(u[1])} : std::vector<WP>{r(u[0]), r(u[2])};
  else if (s == 2) t.comp = {-r(u[fixed])};
  else throw std::invalid_argument("traces of 3-forms are not defined");
  t.degree = s;
  return t;
}

} // namespace

SurfaceField trace(int s, const std::string& face, const FormField& f) {
  if (s != f.degree) throw std::invalid_argument("trace degree does not match the field");
  if (f.frame == Frame::FinitePyramid) {
    auto t = finite_trace(s, face, f);
    if (!t) throw RepresentationError("finite trace is not polynomial on " + face);
    return *t;
  }
  SurfaceField t;
  if (face == "B") t = trace_s1_or_base(s, true, f.comp);
  else t = trace_s1_or_base(s, false, rotate_pullback(f, rotations_for(face)).comp);
  t.face = face;
  t.frame = Frame::InfinitePyramid;
  return t;
}

std::optional<SurfaceField> finite_trace(int s, const std::string& face, const FormField& f) {
  if (s != f.degree) throw std::invalid_argument("trace degree does not match the field");
  if (s == 3) throw std::invalid_argument("traces of 3-forms are not defined");
  FormField inf = f.frame == Frame::FinitePyramid ? pullback(f) : f;
  bool base = face == "B";
  if (!base) inf = rotate_pullback(inf, rotations_for(face));
  SurfaceField t = trace_s1_or_base(s, base, finite_proxy(inf));
  t.face = face;
  t.frame = Frame::FinitePyramid;
  for (auto& c : t.comp) {
    if (base) continue;  // phi is the identity on the base
    auto p = to_cartesian(c);
    if (!p) return std::nullopt;
    // (xi, 0, zeta) -> face parameters (s,t) = (xi, zeta)
    c = WP(p->compose({X, Poly3(), Y}), 0);
  }
  return t;
}

Poly3 edge_trace(int s, const std::string& edge, const FormField& f) {
  if (s != 0 && s != 1) throw std::invalid_argument("edge traces are defined for 0- and 1-forms");
  FormField fin = f.frame == Frame::FinitePyramid ? f : inverse_pullback(f);
  const auto& topo = topology();
  const Edge& e = topo.edges[edge_index(edge)];
  const Point3& p0 = topo.vertices[e.from];
  const Point3& p1 = topo.vertices[e.to];
  std::array<Poly3, 3> sub;
  for (int i = 0; i < 3; ++i) sub[i] = Poly3::affine(0, p0[i], p1[i] - p0[i]);
  if (e.to == 4) sub = {Poly3(p0[0]), Poly3(p0[1]), X};  // collapsed (a,b) stay at the base vertex
  if (s == 0) return fin.collapsed(0).compose(sub);
  Poly3 r;
  for (int i = 0; i < 3; ++i) r += fin.collapsed(i).compose(sub) * (p1[i] - p0[i]);
  return r;
}

//---------------------------------------------------------------------------

WMatrix weight_A() {
  // |D phi| D phi^{-1} D phi^{-T} = N N^T / (1+z)^2, N = [[1,0,x],[0,1,y],[0,0,1+z]]
  Poly3 opz = Poly3::affine(2, 1, 1);
  WMatrix a;
  a[0] = {WP(Poly3(1) + X * X, 2), WP(X * Y, 2), WP(X * opz, 2)};
  a[1] = {WP(X * Y, 2), WP(Poly3(1) + Y * Y, 2), WP(Y * opz, 2)};
  a[2] = {WP(X * opz, 2), WP(Y * opz, 2), WP(opz * opz, 2)};
  return a;
}

WMatrix weight_B() {
  // |D phi^{-1}| D phi^T D phi = M^T M, M = [[1+z,0,-x],[0,1+z,-y],[0,0,1]]
  Poly3 opz = Poly3::affine(2, 1, 1);
  WMatrix b;
  b[0] = {WP(opz * opz, 0), WP(), WP(-(X * opz), 0)};
  b[1] = {WP(), WP(opz * opz, 0), WP(-(Y * opz), 0)};
  b[2] = {WP(-(X * opz), 0), WP(-(Y * opz), 0), WP(Poly3(1) + X * X + Y * Y, 0)};
  return b;
}

WeightedPolynomial quad_form(const WMatrix& m, const FormField& f, const FormField& g) {
  WP s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m[i][j].is_zero()) s += f.comp[i] * m[i][j] * g.comp[j];
  return s;
}

Rational weighted_inner(int s, const FormField& f, const FormField& g) {
  if (f.frame != Frame::InfinitePyramid || g.frame != Frame::InfinitePyramid)
    throw FrameMismatch("weighted inner products live on the infinite frame");
  const WP w4(Poly3(1), 4);
  const WP p4(Poly3::affine(2, 1, 1).pow(4), 0);
  switch (s) {
    case 0:
      return integrate_infinite(f.comp[0] * g.comp[0] * w4) +
             integrate_infinite(quad_form(weight_A(), exterior_derivative(f), exterior_derivative(g)));
    case 1:
      return integrate_infinite(quad_form(weight_A(), f, g)) +
             integrate_infinite(quad_form(weight_B(), exterior_derivative(f), exterior_derivative(g)));
    case 2:
      return integrate_infinite(quad_form(weight_B(), f, g)) +
             integrate_infinite(exterior_derivative(f).comp[0] * exterior_derivative(g).comp[0] * p4);
    case 3:
      return integrate_infinite(f.comp[0] * g.comp[0] * p4);
    default:
      throw std::invalid_argument("form degree must be 0..3");
  }
}

Rational weighted_norm_sq(int s, const FormField& f) { return weighted_inner(s, f, f); }

Rational sobolev_inner_finite(const FormField& f, const FormField& g) {
  if (f.frame != Frame::FinitePyramid || g.frame != Frame::FinitePyramid)
    throw FrameMismatch("finite Sobolev inner product expects finite-frame fields");
  auto l2 = [](const FormField& a, const FormField& b) {
    Poly3 s;
    for (std::size_t i = 0; i < a.comp.size(); ++i) s += a.collapsed(i) * b.collapsed(i);
    return integrate_collapsed(s);
  };
  Rational r = l2(f, g);
  if (f.degree < 3) r += l2(exterior_derivative(f), exterior_derivative(g));
  return r;
}

} // namespace pyr
