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

#include "pyramid/spaces.hpp"

#include <map>
#include <mutex>

namespace pyr {

namespace {

using WP = WeightedPolynomial;
using Comps = std::vector<WP>;

const Poly3 ONE(1), X = Poly3::var(0), Y = Poly3::var(1), Z = Poly3::var(2);
const Poly3 OMX = ONE - X, OMY = ONE - Y, OPZ = ONE + Z;

Poly3 mono(int a, int b, int c) { return Poly3::monomial(a, b, c); }

FormField inf(int s, Comps c) { return FormField::infinite(s, std::move(c)); }
FormField scalar(int s, const Poly3& num, int w) { return inf(s, {WP(num, w)}); }
FormField vec(int s, const Poly3& a, const Poly3& b, const Poly3& c, int w) {
  return inf(s, {WP(a, w), WP(b, w), WP(c, w)});
}

void add(BasisSet& bs, const FormField& f, std::string entity, std::vector<int> idx, std::string family) {
  ShapeFunction sf;
  sf.finite = inverse_pullback(f);
  sf.field = f;
  sf.entity = std::move(entity);
  sf.multi_index = std::move(idx);
  sf.family = std::move(family);
  bs.functions.push_back(std::move(sf));
}

// Representative function on entity prefix+"1" and its images on prefix+"2..4"
// (pushed forward by the quarter turn).
struct Rep {
  FormField f;
  std::vector<int> idx;
  std::string family;
};

void add_orbit(BasisSet& bs, const std::string& prefix, const std::vector<Rep>& reps) {
  for (int i = 0; i < 4; ++i)
    for (const auto& r : reps)
      add(bs, rotate_pullback(r.f, 3 * i), prefix + std::to_string(i + 1), r.idx, r.family);
}

void add_all(BasisSet& bs, const std::string& entity, const std::vector<Rep>& reps) {
  for (const auto& r : reps) add(bs, r.f, entity, r.idx, r.family);
}

//---------------------------------------------------------------------------
// Interior families shared by the full bases and the bubble bases.

std::vector<Rep> h1_bubbles(int k) {
  std::vector<Rep> v;
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; b <= k - 2; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({scalar(0, X * OMX * Y * OMY * mono(a, b, c + 1), k), {a, b, c}, "volume"});
  return v;
}

// z^{k-1}/(1+z)^{k+1} (r_x z, r_y z, -r)
FormField r_field(const Poly3& r, int k) {
  Poly3 zk = mono(0, 0, k - 1);
  return vec(1, r.derivative(0) * zk.shift(2, 1), r.derivative(1) * zk.shift(2, 1), -(r * zk), k + 1);
}

std::vector<Rep> curl_interior(int k, bool with_r_family, bool rho_without_z) {
  std::vector<Rep> v;
  const int w = k + 1;
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 2; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({vec(1, Y * OMY * mono(a, b, c + 1), Poly3(), Poly3(), w), {a, b, c}, "volume-x"});
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; b <= k - 1; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({vec(1, Poly3(), X * OMX * mono(a, b, c + 1), Poly3(), w), {a, b, c}, "volume-y"});
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; b <= k - 2; ++b)
      for (int c = 0; c <= (rho_without_z ? 0 : k - 2); ++c)
        v.push_back({vec(1, Poly3(), Poly3(), X * OMX * Y * OMY * mono(a, b, c), w), {a, b, c}, "volume-z"});
  if (with_r_family)
    for (int a = 0; a <= k - 2; ++a)
      for (int b = 0; b <= k - 2; ++b)
        v.push_back({r_field(X * OMX * Y * OMY * mono(a, b, 0), k), {a, b}, "volume-r"});
  return v;
}

// z^{k-1}/(1+z)^{k+2} (2t, 0, (1+z) t_x) and (0, 2s, (1+z) s_y)
FormField t_field(const Poly3& t, int k) {
  Poly3 zk = mono(0, 0, k - 1);
  return vec(2, 2 * t * zk, Poly3(), t.derivative(0) * OPZ * zk, k + 2);
}
FormField s_field(const Poly3& s, int k) {
  Poly3 zk = mono(0, 0, k - 1);
  return vec(2, Poly3(), 2 * s * zk, s.derivative(1) * OPZ * zk, k + 2);
}

std::vector<Rep> div_zero_interior(int k) {
  std::vector<Rep> v;
  const int w = k + 2;
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; b <= k - 1; ++b) v.push_back({t_field(X * OMX * mono(a, b, 0), k), {a, b}, "volume-t"});
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 2; ++b) v.push_back({s_field(Y * OMY * mono(a, b, 0), k), {a, b}, "volume-s"});
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; b <= k - 1; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({vec(2, X * OMX * mono(a, b, c), Poly3(), Poly3(), w), {a, b, c}, "volume-x"});
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 2; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({vec(2, Poly3(), Y * OMY * mono(a, b, c), Poly3(), w), {a, b, c}, "volume-y"});
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 1; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({vec(2, Poly3(), Poly3(), mono(a, b, c + 1), w), {a, b, c}, "volume-z"});
  return v;
}

std::vector<Rep> div_bubbles(int k) {
  std::vector<Rep> v;
  const int w = k + 2;
  Poly3 zk = mono(0, 0, k - 1);
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; b <= k - 2; ++b) {
      Poly3 r = X * OMX * Y * OMY * mono(a, b, 0);
      v.push_back({vec(2, r.derivative(1) * zk, r.derivative(0) * zk, r.derivative(0).derivative(1) * OPZ * zk, w),
                   {a, b}, "volume-r"});
    }
  for (int a = 0; a <= k - 2; ++a) v.push_back({t_field(X * OMX * mono(a, 0, 0), k), {a}, "volume-t"});
  for (int b = 0; b <= k - 2; ++b) v.push_back({s_field(Y * OMY * mono(0, b, 0), k), {b}, "volume-s"});
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 1; ++b)
      for (int c = 0; c <= k - 2; ++c)
        v.push_back({vec(2, Poly3(), Poly3(), mono(a, b, c + 1), w), {a, b, c}, "volume-z"});
  return v;
}

//---------------------------------------------------------------------------

BasisSet build_h1(int k) {
  BasisSet bs{0, k, {}};
  add_orbit(bs, "v", {{scalar(0, OMX * OMY, k), {}, "vertex"}});
  add(bs, scalar(0, mono(0, 0, k), k), "v5", {}, "apex");
  std::vector<Rep> e, b, f, base;
  for (int a = 1; a <= k - 1; ++a) e.push_back({scalar(0, OMX * OMY * mono(0, 0, a), k), {a}, "edge-vertical"});
  for (int a = 1; a <= k - 1; ++a) b.push_back({scalar(0, OMX * OMY * mono(a, 0, 0), k), {a}, "edge-base"});
  for (int a = 1; a <= k - 1; ++a)
    for (int c = 1; a + c <= k - 1; ++c) f.push_back({scalar(0, OMX * OMY * mono(a, 0, c), k), {a, c}, "face-tri"});
  for (int a = 1; a <= k - 1; ++a)
    for (int c = 1; c <= k - 1; ++c) base.push_back({scalar(0, OMX * OMY * mono(a, c, 0), k), {a, c}, "face-base"});
  add_orbit(bs, "e", e);
  add_orbit(bs, "b", b);
  add_orbit(bs, "S", f);
  add_all(bs, "B", base);
  add_all(bs, "volume", h1_bubbles(k));
  return bs;
}

BasisSet build_hcurl(int k) {
  BasisSet bs{1, k, {}};
  const int w = k + 1;
  std::vector<Rep> e, b, f, base;
  for (int c = 0; c <= k - 2; ++c)
    e.push_back({vec(1, Poly3(), Poly3(), OMX * OMY * OPZ.pow(c), w), {c}, "edge-vertical"});
  // Top member: minus the r-family generator with r = (1-x)(1-y).
  e.push_back({r_field(OMX * OMY, k) * Rational(-1), {k - 1}, "edge-vertical"});
  for (int c = 0; c <= k - 1; ++c) b.push_back({vec(1, mono(c, 0, 0) * OMY, Poly3(), Poly3(), w), {c}, "edge-base"});
  for (int a = 0; a <= k - 2; ++a)
    for (int c = 0; a + c <= k - 2; ++c)
      f.push_back({vec(1, Z * OMY * mono(a, 0, 0) * OPZ.pow(c), Poly3(), Poly3(), w), {a, c}, "face-tri-a"});
  for (int a = 0; a <= k - 3; ++a)
    for (int c = 0; a + c <= k - 3; ++c)
      f.push_back({vec(1, Poly3(), Poly3(), X * OMX * OMY * mono(a, 0, c), w), {a, c}, "face-tri-b"});
  for (int a = 0; a <= k - 2; ++a) {
    Poly3 g = OMX * OMY * mono(a, 0, 0) * OPZ.pow(k - a - 2);
    f.push_back({vec(1, g * Z, Poly3(), -(g * X), w), {a}, "face-tri-c"});
  }
  for (int a = 0; a <= k - 1; ++a)
    for (int c = 0; c <= k - 2; ++c)
      base.push_back({vec(1, Y * OMY * mono(a, c, 0), Poly3(), Poly3(), w), {a, c}, "face-base-x"});
  for (int a = 0; a <= k - 2; ++a)
    for (int c = 0; c <= k - 1; ++c)
      base.push_back({vec(1, Poly3(), X * OMX * mono(a, c, 0), Poly3(), w), {a, c}, "face-base-y"});
  add_orbit(bs, "e", e);
  add_orbit(bs, "b", b);
  add_orbit(bs, "S", f);
  add_all(bs, "B", base);
  add_all(bs, "volume", curl_interior(k, true, false));
  return bs;
}

BasisSet build_hdiv(int k) {
  BasisSet bs{2, k, {}};
  const int w = k + 2;
  std::vector<Rep> f, base;
  for (int a = 0; a <= k - 1; ++a)
    for (int c = 0; a + c <= k - 1; ++c)
      f.push_back({vec(2, Poly3(), 2 * OMY * mono(a, 0, c), -mono(a, 0, c + 1), w), {a, c}, "face-tri"});
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 1; ++b)
      base.push_back({vec(2, Poly3(), Poly3(), mono(a, b, 0), w), {a, b}, "face-base"});
  add_orbit(bs, "S", f);
  add_all(bs, "B", base);
  add_all(bs, "volume", div_zero_interior(k));
  return bs;
}

BasisSet build_l2(int k) {
  BasisSet bs{3, k, {}};
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= k - 1; ++b)
      for (int c = 0; c <= k - 1; ++c) add(bs, scalar(3, mono(a, b, c), k + 3), "volume", {a, b, c}, "volume");
  return bs;
}

void check_args(int s, int k) {
  if (k < 1) throw std::invalid_argument("order k must be at least 1");
  if (s < 0 || s > 3) throw std::invalid_argument("form degree must be 0..3");
}

//---------------------------------------------------------------------------

// Rows of `rows` reduced modulo the row space of `sub` (both share columns).
QMatrix reduce_modulo(QMatrix sub, const QMatrix& rows) {
  auto piv = rref(sub);
  QMatrix r = rows;
  for (int i = 0; i < r.rows(); ++i)
    for (std::size_t p = 0; p < piv.size(); ++p) {
      Rational f = r(i, piv[p]);
      if (f == 0) continue;
      for (int j = 0; j < r.cols(); ++j)
        if (sub(int(p), j) != 0) r(i, j) -= f * sub(int(p), j);
    }
  return r;
}

const char* const TRI_FACES[] = {"S1", "S2", "S3", "S4"};

// Box constraints: component i must lie in Q_{w}^{l,m,n}.
struct Box {
  int w;
  Exp deg;
};

std::vector<Box> value_boxes(int s, int k) {
  switch (s) {
    case 0: return {{k, {k, k, k}}};
    case 1: return {{k + 1, {k - 1, k, k}}, {k + 1, {k, k - 1, k}}, {k + 1, {k, k, k - 1}}};
    case 2: return {{k + 2, {k, k - 1, k - 1}}, {k + 2, {k - 1, k, k - 1}}, {k + 2, {k - 1, k - 1, k}}};
    default: return {{k + 3, {k - 1, k - 1, k - 1}}};
  }
}

std::vector<Box> derivative_boxes(int s, int k) {
  switch (s) {
    case 0: return {{k, {k - 1, k, k - 1}}, {k, {k, k - 1, k - 1}}, {k + 1, {k, k, k - 1}}};
    case 1: return {{k + 2, {k, k - 1, k - 1}}, {k + 2, {k - 1, k, k - 1}}, {k + 2, {k - 1, k - 1, k}}};
    case 2: return {{k + 3, {k - 1, k - 1, k - 1}}};
    default: return {};
  }
}

bool in_boxes(const FormField& f, const std::vector<Box>& boxes) {
  for (std::size_t i = 0; i < boxes.size(); ++i)
    if (!f.comp[i].in_Q(boxes[i].w, boxes[i].deg[0], boxes[i].deg[1], boxes[i].deg[2])) return false;
  return true;
}

std::vector<FormField> combine(const std::vector<FormField>& gens, const QMatrix& coeffs) {
  std::vector<FormField> out;
  for (int r = 0; r < coeffs.rows(); ++r) {
    FormField f = FormField::zero(gens[0].degree, gens[0].frame);
    for (int j = 0; j < coeffs.cols(); ++j)
      if (coeffs(r, j) != 0) f += gens[j] * coeffs(r, j);
    out.push_back(f);
  }
  return out;
}

std::vector<WP> surface_comps(const SurfaceField& t) { return t.comp; }

} // namespace

//---------------------------------------------------------------------------

std::vector<FormField> BasisSet::fields() const {
  std::vector<FormField> v;
  for (const auto& f : functions) v.push_back(f.field);
  return v;
}

std::vector<FormField> BasisSet::finite_fields() const {
  std::vector<FormField> v;
  for (const auto& f : functions) v.push_back(f.finite);
  return v;
}

std::vector<std::pair<std::string, int>> BasisSet::dims() const {
  std::vector<std::pair<std::string, int>> d;
  for (const auto& f : functions) {
    if (d.empty() || d.back().first != f.entity) d.emplace_back(f.entity, 0);
    ++d.back().second;
  }
  return d;
}

const BasisSet& basis(int s, int k) {
  check_args(s, k);
  static std::mutex mu;
  static std::map<std::pair<int, int>, BasisSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({s, k});
  if (it != cache.end()) return it->second;
  BasisSet bs = s == 0 ? build_h1(k) : s == 1 ? build_hcurl(k) : s == 2 ? build_hdiv(k) : build_l2(k);
  return cache.emplace(std::make_pair(s, k), std::move(bs)).first->second;
}

BasisSet bubble_basis(int k) {
  check_args(0, k);
  BasisSet bs{0, k, {}};
  add_all(bs, "volume", h1_bubbles(k));
  return bs;
}

BasisSet curl_bubble_basis(int k) {
  check_args(1, k);
  BasisSet bs{1, k, {}};
  add_all(bs, "volume", curl_interior(k, false, true));
  return bs;
}

BasisSet div_bubble_basis(int k) {
  check_args(2, k);
  BasisSet bs{2, k, {}};
  add_all(bs, "volume", div_bubbles(k));
  return bs;
}

BasisSet zero_trace_basis(int s, int k) {
  check_args(s, k);
  if (s != 1 && s != 2) throw std::invalid_argument("zero_trace_basis is defined for s = 1, 2");
  BasisSet bs{s, k, {}};
  add_all(bs, "volume", s == 1 ? curl_interior(k, true, false) : div_zero_interior(k));
  return bs;
}

int dimension(int s, int k) {
  check_args(s, k);
  if (s == 0) return k * k * k + 3 * k + 1;
  if (s == 3) return k * k * k;
  return static_cast<int>(basis(s, k).size());
}

//---------------------------------------------------------------------------

std::vector<std::vector<WP>> infinite_trace_space(int s, int k) {
  check_args(s, k);
  std::vector<std::vector<WP>> t;
  if (s == 0) {
    for (int a = 0; a <= k; ++a)
      for (int c = 0; a + c <= k; ++c) t.push_back({wmono(a, 0, c, k)});
  } else if (s == 1) {
    for (int a = 0; a <= k - 1; ++a)
      for (int c = 0; a + c <= k - 1; ++c) {
        t.push_back({wmono(a, 0, c, k + 1), WP()});
        t.push_back({WP(), wmono(a, 0, c, k + 1)});
      }
    for (int a = 0; a <= k - 1; ++a) {
      Poly3 g = mono(a, 0, 0) * OPZ.pow(k - 1 - a);
      t.push_back({WP(g * OPZ, k + 1), WP(-(g * X), k + 1)});
    }
  } else if (s == 2) {
    for (int a = 0; a <= k - 1; ++a)
      for (int c = 0; a + c <= k - 1; ++c) t.push_back({wmono(a, 0, c, k + 2)});
  } else {
    throw std::invalid_argument("3-forms have no traces");
  }
  return t;
}

std::vector<std::vector<WP>> finite_trace_space(int s, int k, bool triangular) {
  check_args(s, k);
  std::vector<std::vector<WP>> t;
  auto m = [](int a, int b) { return WP(Poly3::monomial(a, b, 0), 0); };
  if (triangular) {
    if (s == 0) {
      for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) t.push_back({m(a, b)});
    } else if (s == 1) {
      for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; a + b <= k - 1; ++b) {
          t.push_back({m(a, b), WP()});
          t.push_back({WP(), m(a, b)});
        }
      // (t, -s) h with h homogeneous of degree k-1
      for (int a = 0; a <= k - 1; ++a) t.push_back({m(a, k - 1 - a + 1), -m(a + 1, k - 1 - a)});
    } else if (s == 2) {
      for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; a + b <= k - 1; ++b) t.push_back({m(a, b)});
    } else {
      throw std::invalid_argument("3-forms have no traces");
    }
  } else {
    if (s == 0) {
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) t.push_back({m(a, b)});
    } else if (s == 1) {
      for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; b <= k; ++b) t.push_back({m(a, b), WP()});
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k - 1; ++b) t.push_back({WP(), m(a, b)});
    } else if (s == 2) {
      for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; b <= k - 1; ++b) t.push_back({m(a, b)});
    } else {
      throw std::invalid_argument("3-forms have no traces");
    }
  }
  return t;
}

//---------------------------------------------------------------------------

bool in_underlying_space(const FormField& f, int s, int k) {
  check_args(s, k);
  if (f.frame != Frame::InfinitePyramid) throw FrameMismatch("in_underlying_space expects the infinite frame");
  if (f.degree != s) return false;
  if (!in_boxes(f, value_boxes(s, k))) return false;
  return s == 3 || in_boxes(exterior_derivative(f), derivative_boxes(s, k));
}

bool satisfies_trace_constraints(const FormField& f, int s, int k) {
  check_args(s, k);
  if (s == 3) return true;
  auto space = infinite_trace_space(s, k);
  const int n = static_cast<int>(space.size());
  for (const char* face : TRI_FACES) {
    auto rows = space;
    rows.push_back(surface_comps(trace(s, face, f)));
    if (rank(coefficient_rows(rows)) != n) return false;
  }
  return true;
}

bool membership_in_space(const FormField& f, int s, int k) {
  check_args(s, k);
  if (f.degree != s) return false;
  FormField u = f.frame == Frame::FinitePyramid ? pullback(f) : f;
  return in_underlying_space(u, s, k) && satisfies_trace_constraints(u, s, k);
}

std::vector<FormField> underlying_generators(int s, int k) {
  check_args(s, k);
  std::vector<FormField> g;
  auto box = [&](int comp, int w, int l, int m, int n) {
    for (int a = 0; a <= l; ++a)
      for (int b = 0; b <= m; ++b)
        for (int c = 0; c <= n; ++c) {
          Comps cs(components_for_degree(s));
          cs[comp] = wmono(a, b, c, w);
          g.push_back(inf(s, cs));
        }
  };
  switch (s) {
    case 0:
      box(0, k, k, k, k - 1);
      g.push_back(scalar(0, mono(0, 0, k), k));
      break;
    case 1:
      box(0, k + 1, k - 1, k, k - 1);
      box(1, k + 1, k, k - 1, k - 1);
      box(2, k + 1, k, k, k - 2);
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) g.push_back(r_field(mono(a, b, 0), k));
      break;
    case 2:
      box(0, k + 2, k, k - 1, k - 2);
      box(1, k + 2, k - 1, k, k - 2);
      box(2, k + 2, k - 1, k - 1, k - 1);
      for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; b <= k; ++b) g.push_back(s_field(mono(a, b, 0), k));
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k - 1; ++b) g.push_back(t_field(mono(a, b, 0), k));
      break;
    default:
      box(0, k + 3, k - 1, k - 1, k - 1);
  }
  return g;
}

std::vector<FormField> underlying_by_characterization(int s, int k) {
  check_args(s, k);
  auto vb = value_boxes(s, k);
  std::vector<FormField> gens;
  for (std::size_t i = 0; i < vb.size(); ++i)
    for (int a = 0; a <= vb[i].deg[0]; ++a)
      for (int b = 0; b <= vb[i].deg[1]; ++b)
        for (int c = 0; c <= vb[i].deg[2]; ++c) {
          Comps cs(vb.size());
          cs[i] = wmono(a, b, c, vb[i].w);
          gens.push_back(inf(s, cs));
        }
  if (s == 3) return gens;
  auto db = derivative_boxes(s, k);
  // Columns: monomials of d(gen) outside the derivative box.
  std::map<std::pair<std::size_t, Poly3::Key>, int> col;
  std::vector<std::vector<std::pair<int, Rational>>> entries(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    FormField d = exterior_derivative(gens[j]);
    for (std::size_t i = 0; i < db.size(); ++i) {
      if (d.comp[i].is_zero()) continue;
      if (d.comp[i].weight() > db[i].w) throw InternalError("derivative weight exceeds its target box");
      for (const auto& [key, c] : d.comp[i].raised_to(db[i].w).numerator().terms()) {
        Exp e = Poly3::unpack(key);
        if (e[0] <= db[i].deg[0] && e[1] <= db[i].deg[1] && e[2] <= db[i].deg[2]) continue;
        auto it = col.emplace(std::make_pair(i, key), int(col.size())).first;
        entries[j].emplace_back(it->second, c);
      }
    }
  }
  QMatrix a(static_cast<int>(col.size()), static_cast<int>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& [r, c] : entries[j]) a(r, int(j)) += c;
  if (a.rows() == 0) return gens;
  return combine(gens, nullspace(a));
}

std::vector<FormField> space_by_characterization(int s, int k) {
  check_args(s, k);
  auto gens = independent_subset(underlying_generators(s, k));
  if (s == 3) return gens;
  auto space = infinite_trace_space(s, k);
  const int n = static_cast<int>(space.size());
  QMatrix constraints;
  for (const char* face : TRI_FACES) {
    auto rows = space;
    for (const auto& g : gens) rows.push_back(surface_comps(trace(s, face, g)));
    QMatrix m = coefficient_rows(rows);
    QMatrix r = reduce_modulo(m.row_block(0, n), m.row_block(n, int(gens.size())));
    constraints = QMatrix::vstack(constraints, r.transpose());
  }
  return combine(gens, nullspace(constraints));
}

std::vector<FormField> independent_subset(const std::vector<FormField>& f) {
  if (f.empty()) return {};
  QMatrix m = coefficient_matrix(f).transpose();
  auto piv = rref(m);
  std::vector<FormField> out;
  for (int p : piv) out.push_back(f[p]);
  return out;
}

} // namespace pyr
