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

#include "pyramid/dofs.hpp"

#include "pyramid/calculus.hpp"
#include "pyramid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace pyr {

namespace {

// Poly3 with double coefficients for repeated point evaluation.
struct CompiledPoly {
  std::vector<std::pair<Exp, double>> terms;
  int top = 0;

  CompiledPoly() = default;
  explicit CompiledPoly(const Poly3& p) {
    for (const auto& [key, c] : p.terms()) {
      Exp e = Poly3::unpack(key);
      terms.emplace_back(e, c.get_d());
      top = std::max({top, e[0], e[1], e[2]});
    }
  }
  bool empty() const { return terms.empty(); }
  double eval(const std::array<double, 3>& p) const {
    if (terms.empty()) return 0;
    double pw[3][32];
    const int n = std::min(top, 31);
    for (int v = 0; v < 3; ++v) {
      pw[v][0] = 1;
      for (int i = 1; i <= n; ++i) pw[v][i] = pw[v][i - 1] * p[v];
    }
    double s = 0;
    for (const auto& [e, c] : terms) {
      if (e[0] > 31 || e[1] > 31 || e[2] > 31) {
        s += c * std::pow(p[0], e[0]) * std::pow(p[1], e[1]) * std::pow(p[2], e[2]);
        continue;
      }
      s += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    }
    return s;
  }
};

} // namespace

struct DofFunctional::Cache {
  std::mutex mu;
  std::map<std::pair<int, Poly3::Key>, Rational> values;
  std::array<std::vector<Poly3>, 3> powers;
  std::once_flag compiled_once;
  std::array<CompiledPoly, 3> embed;
  std::vector<CompiledPoly> weight;
};

const char* dof_kind_name(DofKind k) {
  switch (k) {
    case DofKind::VertexEval: return "VertexEval";
    case DofKind::EdgeMoment: return "EdgeMoment";
    case DofKind::TriFaceMoment: return "TriFaceMoment";
    case DofKind::BaseFaceMoment: return "BaseFaceMoment";
    case DofKind::VolumeGradProj: return "VolumeGradProj";
    case DofKind::VolumeCurlProj: return "VolumeCurlProj";
    case DofKind::VolumeDivProj: return "VolumeDivProj";
    case DofKind::VolumeL2Proj: return "VolumeL2Proj";
    case DofKind::MeanValue: return "MeanValue";
  }
  return "?";
}

namespace {

const Poly3 ONE(1), P0 = Poly3::var(0), P1 = Poly3::var(1), P2 = Poly3::var(2);

DofFunctional make(int s, int k, DofKind kind, std::string entity, std::vector<int> idx) {
  DofFunctional m;
  m.s = s;
  m.k = k;
  m.kind = kind;
  m.entity = std::move(entity);
  m.test_index = std::move(idx);
  m.cache = std::make_shared<DofFunctional::Cache>();
  return m;
}

std::vector<Poly3> scaled(const Point3& v, const Poly3& q) {
  return {q * v[0], q * v[1], q * v[2]};
}

void vertex_dofs(std::vector<DofFunctional>& out, int s, int k) {
  const auto& topo = topology();
  for (int i = 0; i < 5; ++i) {
    auto m = make(s, k, DofKind::VertexEval, topo.vertex_labels[i], {});
    const Point3& v = topo.vertices[i];
    // Collapsed coordinates; the apex is c = 1 with (a,b) = (0,0).
    m.embed = {Poly3(i == 4 ? Rational(0) : v[0]), Poly3(i == 4 ? Rational(0) : v[1]), Poly3(v[2])};
    m.weight = {ONE};
    out.push_back(std::move(m));
  }
}

void edge_dofs(std::vector<DofFunctional>& out, int s, int k) {
  const auto& topo = topology();
  const int top = s == 0 ? k - 2 : k - 1;
  for (const auto& e : topo.edges) {
    const Point3 &p0 = topo.vertices[e.from], &p1 = topo.vertices[e.to];
    std::array<Poly3, 3> embed;
    if (e.to == 4) embed = {Poly3(p0[0]), Poly3(p0[1]), P0};
    else
      for (int i = 0; i < 3; ++i) embed[i] = Poly3::affine(0, p0[i], p1[i] - p0[i]);
    Point3 tangent{p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]};
    for (int j = 0; j <= top; ++j) {
      auto m = make(s, k, DofKind::EdgeMoment, e.label, {j});
      m.dim = 1;
      m.embed = embed;
      Poly3 q = Poly3::monomial(j, 0, 0);
      m.weight = s == 0 ? std::vector<Poly3>{q} : scaled(tangent, q);
      out.push_back(std::move(m));
    }
  }
}

void face_dofs(std::vector<DofFunctional>& out, int s, int k) {
  const auto& topo = topology();
  for (const auto& f : topo.faces) {
    if (f.triangular) {
      // params (u, c): face point origin + (1-c) u ds + c dt
      std::array<Poly3, 3> embed = {Poly3::affine(0, f.origin[0], f.ds[0]), Poly3::affine(0, f.origin[1], f.ds[1]), P1};
      auto q = [](int a, int b) { return (P0 * (ONE - P1)).pow(a) * P1.pow(b); };
      auto push = [&](std::vector<int> idx, std::vector<Poly3> w) {
        auto m = make(s, k, DofKind::TriFaceMoment, f.label, std::move(idx));
        m.dim = 2;
        m.embed = embed;
        m.collapse_param = 1;
        m.jacobi = 1;
        m.weight = std::move(w);
        out.push_back(std::move(m));
      };
      if (s == 0) {
        for (int a = 0; a <= k - 3; ++a)
          for (int b = 0; a + b <= k - 3; ++b) push({a, b}, {q(a, b)});
      } else if (s == 1) {
        for (int a = 0; a <= k - 2; ++a)
          for (int b = 0; a + b <= k - 2; ++b) {
            push({0, a, b}, scaled(f.ds, q(a, b)));
            push({1, a, b}, scaled(f.dt, q(a, b)));
          }
      } else {
        for (int a = 0; a <= k - 1; ++a)
          for (int b = 0; a + b <= k - 1; ++b) push({a, b}, scaled(f.normal, q(a, b)));
      }
    } else {
      std::array<Poly3, 3> embed = {P0, P1, Poly3()};
      auto push = [&](std::vector<int> idx, std::vector<Poly3> w) {
        auto m = make(s, k, DofKind::BaseFaceMoment, f.label, std::move(idx));
        m.dim = 2;
        m.embed = embed;
        m.weight = std::move(w);
        out.push_back(std::move(m));
      };
      auto q = [](int a, int b) { return Poly3::monomial(a, b, 0); };
      if (s == 0) {
        for (int a = 0; a <= k - 2; ++a)
          for (int b = 0; b <= k - 2; ++b) push({a, b}, {q(a, b)});
      } else if (s == 1) {
        // u . (nu x q) with nu = (0,0,-1): nu x (q1,q2,0) = (q2, -q1, 0)
        for (int a = 0; a <= k - 2; ++a)
          for (int b = 0; b <= k - 1; ++b) push({0, a, b}, {Poly3(), -q(a, b), Poly3()});
        for (int a = 0; a <= k - 1; ++a)
          for (int b = 0; b <= k - 2; ++b) push({1, a, b}, {q(a, b), Poly3(), Poly3()});
      } else {
        for (int a = 0; a <= k - 1; ++a)
          for (int b = 0; b <= k - 1; ++b) push({a, b}, scaled(f.normal, q(a, b)));
      }
    }
  }
}

void volume_dofs(std::vector<DofFunctional>& out, int s, int k) {
  auto push = [&](DofKind kind, int idx, bool on_d, const FormField& test) {
    auto m = make(s, k, kind, "volume", {idx});
    m.dim = 3;
    m.embed = {P0, P1, P2};
    m.collapse_param = 2;
    m.jacobi = 2;
    m.on_derivative = on_d;
    for (std::size_t i = 0; i < test.ncomp(); ++i) m.weight.push_back(test.collapsed(int(i)));
    out.push_back(std::move(m));
  };
  auto d_of = [](const ShapeFunction& f) { return exterior_derivative(f.finite); };
  if (s == 0) {
    auto bb = bubble_basis(k);
    for (std::size_t i = 0; i < bb.size(); ++i) push(DofKind::VolumeGradProj, int(i), true, d_of(bb.functions[i]));
  } else if (s == 1) {
    auto bb = bubble_basis(k);
    for (std::size_t i = 0; i < bb.size(); ++i) push(DofKind::VolumeGradProj, int(i), false, d_of(bb.functions[i]));
    auto cb = curl_bubble_basis(k);
    for (std::size_t i = 0; i < cb.size(); ++i) push(DofKind::VolumeCurlProj, int(i), true, d_of(cb.functions[i]));
  } else if (s == 2) {
    auto cb = curl_bubble_basis(k);
    for (std::size_t i = 0; i < cb.size(); ++i) push(DofKind::VolumeCurlProj, int(i), false, d_of(cb.functions[i]));
    auto db = div_bubble_basis(k);
    for (std::size_t i = 0; i < db.size(); ++i) push(DofKind::VolumeDivProj, int(i), true, d_of(db.functions[i]));
  } else {
    auto db = div_bubble_basis(k);
    for (std::size_t i = 0; i < db.size(); ++i) push(DofKind::VolumeL2Proj, int(i), false, d_of(db.functions[i]));
    push(DofKind::MeanValue, 0, false, FormField::finite(3, {ONE}));
  }
}

std::vector<DofFunctional> build_dofs(int s, int k) {
  std::vector<DofFunctional> out;
  if (s == 0) vertex_dofs(out, s, k);
  if (s <= 1) edge_dofs(out, s, k);
  if (s <= 2) face_dofs(out, s, k);
  volume_dofs(out, s, k);
  return out;
}

Rational beta_moment(int p, int j) {
  // int_0^1 t^p (1-t)^j dt
  return factorial(p) * factorial(j) / factorial(p + j + 1);
}

Rational integrate_params(const DofFunctional& m, const Poly3& p) {
  if (m.dim == 0) return p.eval(Point3{0, 0, 0});
  Rational sum = 0;
  for (const auto& [key, c] : p.terms()) {
    Exp e = Poly3::unpack(key);
    Rational v = c;
    for (int i = 0; i < m.dim; ++i) v *= (i == m.collapse_param) ? beta_moment(e[i], m.jacobi) : Rational(1, e[i] + 1);
    sum += v;
  }
  return sum;
}

const Poly3& embed_power(const DofFunctional& m, int var, int n) {
  auto& pw = m.cache->powers[var];
  if (pw.empty()) pw.push_back(ONE);
  while (static_cast<int>(pw.size()) <= n) pw.push_back(pw.back() * m.embed[var]);
  return pw[n];
}

Rational monomial_value(const DofFunctional& m, int comp, Poly3::Key key) {
  std::lock_guard<std::mutex> lock(m.cache->mu);
  auto it = m.cache->values.find({comp, key});
  if (it != m.cache->values.end()) return it->second;
  Exp e = Poly3::unpack(key);
  Poly3 p = embed_power(m, 0, e[0]) * embed_power(m, 1, e[1]) * embed_power(m, 2, e[2]);
  Rational v = integrate_params(m, p * m.weight[comp]);
  m.cache->values.emplace(std::make_pair(comp, key), v);
  return v;
}

} // namespace

const std::vector<DofFunctional>& dof_set(int s, int k) {
  if (k < 1) throw std::invalid_argument("order k must be at least 1");
  if (s < 0 || s > 3) throw std::invalid_argument("form degree must be 0..3");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<DofFunctional>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({s, k});
  if (it != cache.end()) return it->second;
  return cache.emplace(std::make_pair(s, k), build_dofs(s, k)).first->second;
}

Rational apply_dof(const DofFunctional& m, const FormField& u, const FormField* du) {
  if (u.degree != m.s) throw KindMismatch(std::string(dof_kind_name(m.kind)) + " expects a " + std::to_string(m.s) + "-form");
  FormField fin = u.frame == Frame::FinitePyramid ? u : inverse_pullback(u);
  FormField d;
  const FormField* g = &fin;
  if (m.on_derivative) {
    if (du) {
      d = du->frame == Frame::FinitePyramid ? *du : inverse_pullback(*du);
    } else {
      d = exterior_derivative(fin);
    }
    g = &d;
  }
  if (g->ncomp() != m.weight.size()) throw InternalError("DOF weight does not match the field");
  Rational sum = 0;
  for (std::size_t i = 0; i < g->ncomp(); ++i) {
    if (m.weight[i].is_zero()) continue;
    for (const auto& [key, c] : g->collapsed(int(i)).terms()) sum += c * monomial_value(m, int(i), key);
  }
  return sum;
}

Rational apply_dof(const DofFunctional& m, const FormField& u) { return apply_dof(m, u, nullptr); }

double apply_dof(const DofFunctional& m, const SmoothField& u, int n) {
  if (u.degree != m.s) throw KindMismatch(std::string(dof_kind_name(m.kind)) + " expects a " + std::to_string(m.s) + "-form");
  const auto& fn = m.on_derivative ? u.derivative : u.value;
  if (!fn) throw std::invalid_argument("smooth field lacks the derivative this DOF needs");
  std::call_once(m.cache->compiled_once, [&m] {
    for (int i = 0; i < 3; ++i) m.cache->embed[i] = CompiledPoly(m.embed[i]);
    for (const auto& w : m.weight) m.cache->weight.emplace_back(w);
  });
  const auto& cw = m.cache->weight;
  const auto& ce = m.cache->embed;
  std::vector<Rule1D> rules;
  for (int i = 0; i < m.dim; ++i) rules.push_back(gauss_jacobi01(n, i == m.collapse_param ? m.jacobi : 0));
  std::array<int, 3> cnt{1, 1, 1};
  for (int i = 0; i < m.dim; ++i) cnt[i] = n;
  double sum = 0;
  for (int i = 0; i < cnt[0]; ++i)
    for (int j = 0; j < cnt[1]; ++j)
      for (int l = 0; l < cnt[2]; ++l) {
        std::array<double, 3> p{0, 0, 0};
        double w = 1;
        std::array<int, 3> id{i, j, l};
        for (int d = 0; d < m.dim; ++d) {
          p[d] = rules[d].x[id[d]];
          w *= rules[d].w[id[d]];
        }
        double a = ce[0].eval(p), b = ce[1].eval(p), c = ce[2].eval(p);
        auto g = fn((1 - c) * a, (1 - c) * b, c);
        if (g.size() != m.weight.size()) throw std::invalid_argument("smooth field returned the wrong component count");
        double v = 0;
        for (std::size_t q = 0; q < g.size(); ++q)
          if (!cw[q].empty()) v += g[q] * cw[q].eval(p);
        sum += w * v;
      }
  return sum;
}

SmoothField smooth_from_exact(const FormField& f) {
  FormField fin = f.frame == Frame::FinitePyramid ? f : inverse_pullback(f);
  auto eval = [](const FormField& g) {
    std::vector<CompiledPoly> comps;
    for (std::size_t i = 0; i < g.ncomp(); ++i) comps.emplace_back(g.collapsed(int(i)));
    return [comps](double x, double y, double z) {
      std::array<double, 3> abc{0, 0, z};
      if (z < 1) abc = {x / (1 - z), y / (1 - z), z};
      std::vector<double> v;
      for (const auto& c : comps) v.push_back(c.eval(abc));
      return v;
    };
  };
  SmoothField s;
  s.degree = fin.degree;
  s.value = eval(fin);
  if (fin.degree < 3) s.derivative = eval(exterior_derivative(fin));
  return s;
}

QMatrix vandermonde(int s, int k) {
  const auto& dofs = dof_set(s, k);
  const auto& bs = basis(s, k);
  if (dofs.size() != bs.size())
    throw InternalError("DOF count " + std::to_string(dofs.size()) + " differs from basis size " + std::to_string(bs.size()));
  const int n = static_cast<int>(bs.size());
  std::vector<FormField> d(n);
  if (s < 3)
    for (int j = 0; j < n; ++j) d[j] = exterior_derivative(bs.functions[j].finite);
  QMatrix v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i, j) = apply_dof(dofs[i], bs.functions[j].finite, s < 3 ? &d[j] : nullptr);
  return v;
}

const QMatrix& vandermonde_cached(int s, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, QMatrix> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({s, k});
    if (it != cache.end()) return it->second;
  }
  QMatrix v = vandermonde(s, k);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(s, k), std::move(v)).first->second;
}

int max_integrand_degree(int s, int k) {
  const auto& dofs = dof_set(s, k);
  const auto& bs = basis(s, k);
  int worst = 0;
  for (const auto& f : bs.functions) {
    FormField d = s < 3 ? exterior_derivative(f.finite) : FormField();
    for (const auto& m : dofs) {
      const FormField& g = m.on_derivative ? d : f.finite;
      for (std::size_t i = 0; i < g.ncomp(); ++i) {
        if (m.weight[i].is_zero() || g.collapsed(int(i)).is_zero()) continue;
        Poly3 p = g.collapsed(int(i)).compose(m.embed) * m.weight[i];
        Exp e = p.max_degrees();
        for (int q = 0; q < m.dim; ++q) worst = std::max(worst, e[q]);
      }
    }
  }
  return worst;
}

} // namespace pyr
