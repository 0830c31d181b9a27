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

#include "pyramid/interp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace pyr {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(long long v) { return std::to_string(v); }
std::string str(double v) {
  std::ostringstream o;
  o.precision(3);
  o << std::scientific << v;
  return o.str();
}

struct Timed {
  CheckResult r;
  Clock::time_point t0 = Clock::now();
  Timed(std::string name, int criterion, int s, int k) {
    r.name = std::move(name);
    r.criterion = criterion;
    r.s = s;
    r.k = k;
  }
  CheckResult done(bool ok, std::string msg = {}) {
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!msg.empty()) r.message = std::move(msg);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
  CheckResult skipped(std::string msg) {
    r.status = CheckStatus::Skipped;
    r.message = std::move(msg);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
};

template <class T>
const T& cached(std::mutex& mu, std::map<std::pair<int, int>, T>& cache, int s, int k, const std::function<T()>& make) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({s, k});
    if (it != cache.end()) return it->second;
  }
  T v = make();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(s, k), std::move(v)).first->second;
}

std::vector<Rational> mat_vec(const QMatrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(x[j]) != 0 && sgn(a(i, j)) != 0) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> r;
  for (const auto& q : v) r.push_back(q.get_d());
  return r;
}

struct DMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;
  double operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

DMatrix to_double(const QMatrix& m) {
  DMatrix d{m.rows(), m.cols(), {}};
  d.a.reserve(std::size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d.a.push_back(m(i, j).get_d());
  return d;
}

std::vector<double> mat_vec(const DMatrix& a, const std::vector<double>& x) {
  std::vector<double> y(a.rows, 0.0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
  return y;
}

const DMatrix& vandermonde_double(int s, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, DMatrix> cache;
  return cached<DMatrix>(mu, cache, s, k, [&] { return to_double(vandermonde_cached(s, k)); });
}

const DMatrix& inverse_double(int s, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, DMatrix> cache;
  return cached<DMatrix>(mu, cache, s, k, [&] { return to_double(inverse_vandermonde(s, k)); });
}

FormField finite_of(const FormField& u) { return u.frame == Frame::FinitePyramid ? u : inverse_pullback(u); }

// Monomial s-forms in Cartesian (xi,eta,zeta) of total degree <= n.
std::vector<FormField> monomial_forms(int s, int n) {
  std::vector<Poly3> monos;
  for (int d = 0; d <= n; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) monos.push_back(Poly3::monomial(a, b, d - a - b));
  std::vector<FormField> out;
  const int nc = components_for_degree(s);
  for (int c = 0; c < nc; ++c)
    for (const auto& m : monos) {
      std::vector<Poly3> comps(nc);
      comps[c] = m;
      out.push_back(finite_from_cartesian(s, comps));
    }
  return out;
}

std::vector<FormField> derivatives(const std::vector<FormField>& f) {
  std::vector<FormField> d;
  for (const auto& x : f) d.push_back(exterior_derivative(x));
  return d;
}

int rank_of(const std::vector<FormField>& f) {
  if (f.empty()) return 0;
  std::vector<FormField> nz;
  for (const auto& x : f)
    if (!x.is_zero()) nz.push_back(x);
  if (nz.empty()) return 0;
  return rank(coefficient_matrix(nz));
}

bool all_zero(const std::vector<FormField>& f) {
  return std::all_of(f.begin(), f.end(), [](const FormField& x) { return x.is_zero(); });
}

// span(a) contained in span(b); zero fields are ignored.
bool contained(const std::vector<FormField>& a, const std::vector<FormField>& b) {
  std::vector<FormField> an;
  for (const auto& x : a)
    if (!x.is_zero()) an.push_back(x);
  if (an.empty()) return true;
  if (b.empty()) return false;
  return compare_spans(an, b).a_in_b();
}

// A small forward-mode value with its gradient, for the transcendental
// sample fields of the numeric commuting check.
struct Dual {
  double v = 0;
  std::array<double, 3> g{0, 0, 0};
  Dual() = default;
  Dual(double c) : v(c) {}
  Dual(double c, int var) : v(c) { g[var] = 1; }
};
Dual operator+(const Dual& a, const Dual& b) {
  Dual r(a.v + b.v);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] + b.g[i];
  return r;
}
Dual operator-(const Dual& a, const Dual& b) {
  Dual r(a.v - b.v);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] - b.g[i];
  return r;
}
Dual operator*(const Dual& a, const Dual& b) {
  Dual r(a.v * b.v);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  return r;
}
Dual chain(const Dual& a, double f, double df) {
  Dual r(f);
  for (int i = 0; i < 3; ++i) r.g[i] = df * a.g[i];
  return r;
}
Dual sin(const Dual& a) { return chain(a, std::sin(a.v), std::cos(a.v)); }
Dual cos(const Dual& a) { return chain(a, std::cos(a.v), -std::sin(a.v)); }
Dual exp(const Dual& a) { return chain(a, std::exp(a.v), std::exp(a.v)); }

template <class T>
T sample_scalar(int i, const T& x, const T& y, const T& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  switch (i % 5) {
    case 0: return sin(x + T(2.0) * y) * exp(z);
    case 1: return cos(x * y + z);
    case 2: return exp(x - y) * sin(z + T(1.0));
    case 3: return exp(T(0.0) - x) * cos(y - z);
    default: return sin(x) * sin(y) * sin(z) + x * z;
  }
}

// Transcendental s-form number i with its exterior derivative.
SmoothField sample_field(int s, int i) {
  SmoothField f;
  f.degree = s;
  const int nc = components_for_degree(s);
  auto comps = [s, i, nc](double x, double y, double z) {
    std::vector<double> v;
    for (int c = 0; c < nc; ++c) v.push_back(sample_scalar<double>(i + c + s, x, y, z));
    return v;
  };
  auto duals = [s, i, nc](double x, double y, double z) {
    std::vector<Dual> v;
    for (int c = 0; c < nc; ++c) v.push_back(sample_scalar<Dual>(i + c + s, Dual(x, 0), Dual(y, 1), Dual(z, 2)));
    return v;
  };
  f.value = comps;
  if (s == 3) return f;
  f.derivative = [s, duals](double x, double y, double z) {
    auto d = duals(x, y, z);
    if (s == 0) return std::vector<double>{d[0].g[0], d[0].g[1], d[0].g[2]};
    if (s == 1)
      return std::vector<double>{d[2].g[1] - d[1].g[2], d[0].g[2] - d[2].g[0], d[1].g[0] - d[0].g[1]};
    return std::vector<double>{d[0].g[0] + d[1].g[1] + d[2].g[2]};
  };
  return f;
}

// The derivative of a sample field as a field in its own right; d(d u) = 0.
SmoothField derivative_field(const SmoothField& u) {
  SmoothField d;
  d.degree = u.degree + 1;
  d.value = u.derivative;
  if (d.degree < 3) {
    const int nc = components_for_degree(d.degree + 1);
    d.derivative = [nc](double, double, double) { return std::vector<double>(nc, 0.0); };
  }
  return d;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

FormField combination(const std::vector<FormField>& f, const std::vector<Rational>& c, int s, Frame frame) {
  FormField r = FormField::zero(s, frame);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (sgn(c[i]) != 0) r += f[i] * c[i];
  return r;
}

WeightedPolynomial wp(const Poly3& num, int w) { return WeightedPolynomial(num, w); }

} // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const QMatrix& inverse_vandermonde(int s, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, QMatrix> cache;
  return cached<QMatrix>(mu, cache, s, k, [&] { return inverse(vandermonde_cached(s, k)); });
}

const QMatrix& derivative_matrix(int s, int k) {
  if (s < 0 || s > 2) throw std::invalid_argument("derivative matrix needs s in 0..2");
  static std::mutex mu;
  static std::map<std::pair<int, int>, QMatrix> cache;
  return cached<QMatrix>(mu, cache, s, k, [&] {
    const auto& from = basis(s, k);
    const auto& dofs = dof_set(s + 1, k);
    QMatrix m(int(dofs.size()), int(from.size()));
    for (int j = 0; j < int(from.size()); ++j) {
      FormField d = exterior_derivative(from.functions[j].finite);
      FormField dd = s + 1 < 3 ? exterior_derivative(d) : FormField();
      for (int i = 0; i < int(dofs.size()); ++i) m(i, j) = apply_dof(dofs[i], d, s + 1 < 3 ? &dd : nullptr);
    }
    return inverse_vandermonde(s + 1, k) * m;
  });
}

FormField Interpolant::field() const {
  if (!exact) throw std::logic_error("numeric interpolants have no exact field");
  const auto& b = basis(s, k);
  FormField r = FormField::zero(s, Frame::FinitePyramid);
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    if (sgn(coefficients[j]) != 0) r += b.functions[j].finite * coefficients[j];
  return r;
}

std::vector<double> Interpolant::value(double xi, double eta, double zeta) const {
  const auto& b = basis(s, k);
  std::array<double, 3> abc{0, 0, zeta};
  if (zeta < 1) abc = {xi / (1 - zeta), eta / (1 - zeta), zeta};
  std::vector<double> v(components_for_degree(s), 0.0);
  for (std::size_t j = 0; j < numeric_coefficients.size(); ++j)
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += numeric_coefficients[j] * b.functions[j].finite.collapsed(int(c)).eval(abc);
  return v;
}

Interpolant interpolate(int s, int k, const FormField& u) {
  if (u.degree != s) throw KindMismatch("interpolation of a " + std::to_string(u.degree) + "-form into U^(" + std::to_string(s) + ")");
  const auto& dofs = dof_set(s, k);
  FormField fin = finite_of(u);
  FormField d = s < 3 ? exterior_derivative(fin) : FormField();
  std::vector<Rational> b;
  for (const auto& m : dofs) b.push_back(apply_dof(m, fin, s < 3 ? &d : nullptr));
  Interpolant r;
  r.s = s;
  r.k = k;
  r.coefficients = mat_vec(inverse_vandermonde(s, k), b);
  r.numeric_coefficients = to_double(r.coefficients);
  auto back = mat_vec(vandermonde_cached(s, k), r.coefficients);
  for (std::size_t i = 0; i < b.size(); ++i) r.residual_dofs.push_back(b[i] - back[i]);
  r.numeric_residual_dofs = to_double(r.residual_dofs);
  return r;
}

Interpolant interpolate(int s, int k, const SmoothField& u, int n) {
  if (u.degree != s) throw KindMismatch("interpolation of a " + std::to_string(u.degree) + "-form into U^(" + std::to_string(s) + ")");
  if (n <= 0) n = default_quadrature_points(k);
  const auto& dofs = dof_set(s, k);
  std::vector<double> b;
  for (const auto& m : dofs) b.push_back(apply_dof(m, u, n));
  Interpolant r;
  r.s = s;
  r.k = k;
  r.exact = false;
  r.numeric_coefficients = mat_vec(inverse_double(s, k), b);
  auto back = mat_vec(vandermonde_double(s, k), r.numeric_coefficients);
  for (std::size_t i = 0; i < b.size(); ++i) r.numeric_residual_dofs.push_back(b[i] - back[i]);
  return r;
}

//---------------------------------------------------------------------------
// checks

std::vector<CheckResult> verify_dimensions(int k) {
  struct Item {
    const char* name;
    int s;
    std::function<BasisSet()> make;
    long long expected;
  };
  const long long K = k;
  std::vector<Item> items = {
      {"dim U0", 0, [k] { return basis(0, k); }, K * K * K + 3 * K + 1},
      {"dim U3", 3, [k] { return basis(3, k); }, K * K * K},
      {"dim U0 bubbles", 0, [k] { return bubble_basis(k); }, (K - 1) * (K - 1) * (K - 1)},
      {"dim U1 zero trace", 1, [k] { return zero_trace_basis(1, k); }, 3 * K * (K - 1) * (K - 1)},
      {"dim U1 curl bubbles", 1, [k] { return curl_bubble_basis(k); }, (2 * K + 1) * (K - 1) * (K - 1)},
      {"dim U2 zero trace", 2, [k] { return zero_trace_basis(2, k); }, 3 * K * K * K - 3 * K * K},
      {"dim U2 div bubbles", 2, [k] { return div_bubble_basis(k); }, K * K * K - 1},
  };
  std::vector<CheckResult> out;
  for (const auto& it : items) {
    Timed t(it.name, 1, it.s, k);
    BasisSet b = it.make();
    int r = rank_of(b.fields());
    t.r.witness["count"] = str((long long)b.size());
    t.r.witness["rank"] = str((long long)r);
    t.r.witness["expected"] = str(it.expected);
    out.push_back(t.done((long long)b.size() == it.expected && r == int(b.size())));
  }
  for (int s : {1, 2}) {
    Timed t("dim U" + std::to_string(s), 1, s, k);
    const auto& b = basis(s, k);
    int r = rank_of(b.fields());
    t.r.witness["count"] = str((long long)b.size());
    t.r.witness["rank"] = str((long long)r);
    t.r.witness["dofs"] = str((long long)dof_set(s, k).size());
    out.push_back(t.done(r == int(b.size()) && dof_set(s, k).size() == b.size()));
  }
  return out;
}

std::vector<CheckResult> verify_unisolvency(int k, bool corrupt_basis) {
  std::vector<CheckResult> out;
  for (int s = 0; s <= 3; ++s) {
    Timed t("unisolvency", 2, s, k);
    QMatrix v = vandermonde_cached(s, k);
    if (corrupt_basis && v.cols() > 1)
      for (int i = 0; i < v.rows(); ++i) v(i, v.cols() - 1) = v(i, 0);
    Rational det = determinant(v);
    t.r.witness["size"] = str((long long)v.rows());
    t.r.witness["det_sign"] = str((long long)sgn(det));
    t.r.witness["det_num_digits"] = str((long long)det.get_num().get_str().size());
    out.push_back(t.done(sgn(det) != 0, sgn(det) == 0 ? "Vandermonde matrix is singular" : ""));
  }
  return out;
}

std::vector<CheckResult> verify_exact_sequence(int k) {
  std::vector<CheckResult> out;
  std::array<std::vector<FormField>, 4> b;
  for (int s = 0; s <= 3; ++s) b[s] = basis(s, k).fields();
  std::array<std::vector<FormField>, 3> d;
  for (int s = 0; s <= 2; ++s) d[s] = derivatives(b[s]);
  std::array<int, 3> rk;
  for (int s = 0; s <= 2; ++s) rk[s] = rank_of(d[s]);
  std::array<int, 4> n;
  for (int s = 0; s <= 3; ++s) n[s] = int(b[s].size());
  {
    Timed t("ker grad = constants", 3, 0, k);
    bool has_one = contained({FormField::infinite(0, {WeightedPolynomial(Rational(1))})}, b[0]);
    t.r.witness["dim_ker"] = str((long long)(n[0] - rk[0]));
    out.push_back(t.done(n[0] - rk[0] == 1 && has_one));
  }
  const char* names[] = {"im grad = ker curl", "im curl = ker div"};
  for (int s = 0; s <= 1; ++s) {
    Timed t(names[s], 3, s, k);
    std::vector<FormField> dd = derivatives(d[s]);
    bool d2 = all_zero(dd);
    bool inside = contained(d[s], b[s + 1]);
    int ker = n[s + 1] - rk[s + 1];
    t.r.witness["rank_image"] = str((long long)rk[s]);
    t.r.witness["dim_kernel"] = str((long long)ker);
    t.r.witness["d_squared_zero"] = d2 ? "true" : "false";
    out.push_back(t.done(d2 && inside && rk[s] == ker));
  }
  {
    Timed t("im div = U3", 3, 2, k);
    bool inside = contained(d[2], b[3]);
    t.r.witness["rank_div"] = str((long long)rk[2]);
    t.r.witness["dim_U3"] = str((long long)n[3]);
    out.push_back(t.done(inside && rk[2] == n[3]));
  }
  return out;
}

std::vector<CheckResult> verify_commuting(int k) {
  std::vector<CheckResult> out;
  for (int s = 0; s <= 2; ++s) {
    Timed t("commuting diagram (exact)", 4, s, k);
    auto samples = monomial_forms(s, k + 1);
    const QMatrix& dm = derivative_matrix(s, k);
    int bad = 0;
    bool residual_zero = true;
    for (const auto& p : samples) {
      Interpolant ip = interpolate(s, k, p);
      Interpolant idp = interpolate(s + 1, k, exterior_derivative(p));
      for (const auto& r : ip.residual_dofs) residual_zero = residual_zero && sgn(r) == 0;
      for (const auto& r : idp.residual_dofs) residual_zero = residual_zero && sgn(r) == 0;
      auto lhs = mat_vec(dm, ip.coefficients);
      if (lhs != idp.coefficients) ++bad;
      else if (exterior_derivative(ip.field()) != idp.field()) ++bad;
    }
    t.r.witness["samples"] = str((long long)samples.size());
    t.r.witness["nonzero_defects"] = str((long long)bad);
    out.push_back(t.done(bad == 0 && residual_zero));
  }
  return out;
}

std::vector<CheckResult> verify_commuting_numeric(int k, int quad_n) {
  constexpr double tol = 1e-8;
  if (quad_n <= 0) quad_n = default_quadrature_points(k);
  std::vector<CheckResult> out;
  for (int s = 0; s <= 2; ++s) {
    Timed t("commuting diagram (numeric)", 4, s, k);
    const DMatrix dm = to_double(derivative_matrix(s, k));
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      SmoothField u = sample_field(s, i);
      Interpolant ip = interpolate(s, k, u, quad_n);
      Interpolant idp = interpolate(s + 1, k, derivative_field(u), quad_n);
      auto lhs = mat_vec(dm, ip.numeric_coefficients);
      for (std::size_t j = 0; j < lhs.size(); ++j) worst = std::max(worst, std::abs(lhs[j] - idp.numeric_coefficients[j]));
    }
    t.r.witness["samples"] = "5";
    t.r.witness["quadrature_points"] = str((long long)quad_n);
    t.r.witness["max_defect"] = str(worst);
    t.r.measured = worst;
    t.r.witness["tolerance"] = str(tol);
    out.push_back(t.done(worst <= tol));
  }
  return out;
}

std::vector<CheckResult> verify_helmholtz(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 7919 * std::uint64_t(k));
  std::vector<CheckResult> out;
  struct Case {
    int s;
    std::vector<FormField> part1, part2, whole;
    const char* name;
  };
  auto fields = [](const BasisSet& b) { return b.fields(); };
  std::vector<Case> cases;
  cases.push_back({1, derivatives(fields(bubble_basis(k))), fields(curl_bubble_basis(k)), fields(zero_trace_basis(1, k)), "helmholtz v = grad q + w"});
  cases.push_back({2, derivatives(fields(curl_bubble_basis(k))), fields(div_bubble_basis(k)), fields(zero_trace_basis(2, k)), "helmholtz v = curl w1 + w2"});
  cases.push_back({3, derivatives(fields(div_bubble_basis(k))), {pullback(FormField::finite(3, {Poly3(1)}))}, basis(3, k).fields(), "helmholtz u = div w + lambda"});
  for (auto& c : cases) {
    Timed t(c.name, 0, c.s, k);
    t.r.witness["dim_part1"] = str((long long)c.part1.size());
    t.r.witness["dim_part2"] = str((long long)c.part2.size());
    t.r.witness["dim_space"] = str((long long)c.whole.size());
    if (c.whole.empty()) {
      out.push_back(t.skipped("space is empty for k=" + std::to_string(k)));
      continue;
    }
    std::vector<FormField> gen = c.part1;
    gen.insert(gen.end(), c.part2.begin(), c.part2.end());
    int r = rank_of(gen);
    bool square = r == int(gen.size()) && r == int(c.whole.size());
    bool same = compare_spans(gen, c.whole).equal();
    bool ok = square && same;
    // random members decompose, and the parts recombine exactly
    for (int trial = 0; trial < 3 && ok; ++trial) {
      std::vector<Rational> coef;
      for (std::size_t i = 0; i < c.whole.size(); ++i) coef.push_back(random_rational(rng));
      FormField v = combination(c.whole, coef, c.s, Frame::InfinitePyramid);
      auto x = express_in(gen, v);
      if (x.empty()) {
        ok = false;
        break;
      }
      std::vector<Rational> x1(x.begin(), x.begin() + c.part1.size()), x2(x.begin() + c.part1.size(), x.end());
      FormField p1 = combination(c.part1, x1, c.s, Frame::InfinitePyramid);
      FormField p2 = combination(c.part2, x2, c.s, Frame::InfinitePyramid);
      ok = p1 + p2 == v;
    }
    // a pure first part has no second part
    if (ok && !c.part1.empty()) {
      auto x = express_in(gen, c.part1.front());
      ok = !x.empty() && std::all_of(x.begin() + c.part1.size(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
    }
    if (ok && c.s == 3) {
      auto x = express_in(gen, c.part2.front());
      ok = !x.empty() && x.back() == 1;
    }
    t.r.witness["square_system"] = square ? "true" : "false";
    out.push_back(t.done(ok));
  }
  return out;
}

std::vector<CheckResult> verify_polynomial_reproduction(int k) {
  std::vector<CheckResult> out;
  for (int s = 0; s <= 3; ++s) {
    Timed t("polynomial reproduction", 5, s, k);
    const int deg = s == 0 ? k : k - 1;
    auto monos = monomial_forms(s, deg);
    int not_member = 0, not_reproduced = 0;
    for (const auto& p : monos) {
      if (!membership_in_space(p, s, k)) ++not_member;
      if (interpolate(s, k, p).field() != p) ++not_reproduced;
    }
    t.r.witness["degree"] = str((long long)deg);
    t.r.witness["monomial_forms"] = str((long long)monos.size());
    t.r.witness["not_member"] = str((long long)not_member);
    t.r.witness["not_reproduced"] = str((long long)not_reproduced);
    out.push_back(t.done(not_member == 0 && not_reproduced == 0));
  }
  return out;
}

std::vector<FormField> lowest_order_pi() {
  Poly3 x = Poly3::var(0), y = Poly3::var(1), z = Poly3::var(2), one(1);
  std::vector<Poly3> nums = {(x - one) * (y - one), x * (y - one), (x - one) * y, x * y, z};
  std::vector<FormField> r;
  for (const auto& n : nums) r.push_back(FormField::infinite(0, {wp(n, 1)}));
  return r;
}

std::vector<FormField> lowest_order_gamma() {
  Poly3 x = Poly3::var(0), y = Poly3::var(1), z = Poly3::var(2), one(1), zero;
  std::vector<std::array<Poly3, 3>> rows = {
      {one - y, zero, zero},
      {zero, x, zero},
      {y, zero, zero},
      {zero, one - x, zero},
      {z * (one - y), z * (one - x), (one - y) * (one - x)},
      {z * (y - one), x * z, x * (one - y)},
      {y * z, z * (x - one), y * (one - x)},
      {-(y * z), -(x * z), x * y},
  };
  std::vector<FormField> r;
  for (const auto& c : rows) r.push_back(FormField::infinite(1, {wp(c[0], 2), wp(c[1], 2), wp(c[2], 2)}));
  return r;
}

std::vector<FormField> lowest_order_zeta() {
  Poly3 x = Poly3::var(0), y = Poly3::var(1), z = Poly3::var(2), one(1), zero;
  std::vector<std::array<Poly3, 3>> rows = {
      {zero, (y - one) * Rational(2), z},
      {(x - one) * Rational(2), zero, z},
      {x * Rational(2), zero, z},
      {zero, y * Rational(2), z},
      {zero, zero, -one},
  };
  std::vector<FormField> r;
  for (const auto& c : rows) r.push_back(FormField::infinite(2, {wp(c[0], 3), wp(c[1], 3), wp(c[2], 3)}));
  return r;
}

std::vector<CheckResult> verify_lowest_order() {
  std::vector<CheckResult> out;
  std::vector<std::pair<int, std::vector<FormField>>> lists = {{0, lowest_order_pi()}, {1, lowest_order_gamma()}, {2, lowest_order_zeta()}};
  const char* names[] = {"lowest order H1 span", "lowest order H(curl) span", "lowest order H(div) span"};
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const int s = lists[i].first;
    const auto& ref = lists[i].second;
    Timed t(names[i], 6, s, 1);
    auto gen = basis(s, 1).fields();
    bool ok = true;
    for (const auto& f : gen) ok = ok && !express_in(ref, f).empty();
    for (const auto& f : ref) ok = ok && !express_in(gen, f).empty();
    auto cmp = compare_spans(gen, ref);
    t.r.witness["rank_generated"] = str((long long)cmp.rank_a);
    t.r.witness["rank_reference"] = str((long long)cmp.rank_b);
    t.r.witness["rank_union"] = str((long long)cmp.rank_union);
    out.push_back(t.done(ok && cmp.equal() && cmp.rank_a == int(gen.size()) && cmp.rank_b == int(ref.size())));
  }
  {
    // The corrected finite-pyramid gamma6, gamma7 pull back to the listed ones.
    Timed t("lowest order corrected gamma6 gamma7", 6, 1, 1);
    Poly3 a = Poly3::var(0), b = Poly3::var(1), c = Poly3::var(2), one(1);
    FormField g6 = FormField::finite(1, {c * b - c, a * c, (one - c) * a - (one - c) * a * b + a * b * c});
    FormField g7 = FormField::finite(1, {b * c, a * c - c, (one - c) * b - (one - c) * a * b + a * b * c});
    auto ref = lowest_order_gamma();
    bool ok = pullback(g6) == ref[5] && pullback(g7) == ref[6];
    out.push_back(t.done(ok));
  }
  {
    Timed t("lowest order U3 constants", 6, 3, 1);
    const auto& b3 = basis(3, 1);
    bool ok = b3.size() == 1 && contained({pullback(FormField::finite(3, {Poly3(1)}))}, b3.fields());
    out.push_back(t.done(ok));
  }
  return out;
}

std::vector<CheckResult> verify_traces(int k) {
  std::vector<CheckResult> out;
  const long long K = k;
  for (int s = 0; s <= 2; ++s) {
    const long long tri_dim = s == 0 ? (K + 1) * (K + 2) / 2 : s == 1 ? K * (K + 2) : K * (K + 1) / 2;
    const long long base_dim = s == 0 ? (K + 1) * (K + 1) : s == 1 ? 2 * K * (K + 1) : K * K;
    const auto& b = basis(s, k);
    for (const auto& face : topology().faces) {
      Timed t("trace span " + face.label, 7, s, k);
      std::vector<std::vector<WeightedPolynomial>> rows;
      bool polynomial = true;
      for (const auto& f : b.functions) {
        auto tr = finite_trace(s, face.label, f.finite);
        if (!tr) {
          polynomial = false;
          continue;
        }
        bool zero = std::all_of(tr->comp.begin(), tr->comp.end(), [](const WeightedPolynomial& w) { return w.is_zero(); });
        if (!zero) rows.push_back(tr->comp);
      }
      auto target = finite_trace_space(s, k, face.triangular);
      int rt = rows.empty() ? 0 : rank(coefficient_rows(rows));
      int rs = rank(coefficient_rows(target));
      auto all = rows;
      all.insert(all.end(), target.begin(), target.end());
      int ru = rank(coefficient_rows(all));
      const long long expected = face.triangular ? tri_dim : base_dim;
      t.r.witness["rank_traces"] = str((long long)rt);
      t.r.witness["rank_target"] = str((long long)rs);
      t.r.witness["rank_union"] = str((long long)ru);
      t.r.witness["expected_dim"] = str(expected);
      out.push_back(t.done(polynomial && rt == rs && rs == ru && rs == expected));
    }
  }
  return out;
}

FormField counterexample_function() {
  // collapsed: (1-c)^2 c a (a-1) (b-1)
  Poly3 a = Poly3::var(0), b = Poly3::var(1), c = Poly3::var(2), one(1);
  return FormField::finite(0, {(one - c).pow(2) * c * a * (a - one) * (b - one)});
}

std::vector<CheckResult> counterexample_demo(int max_degree) {
  std::vector<CheckResult> out;
  FormField u = counterexample_function();
  const auto& topo = topology();
  Poly3 s = Poly3::var(0), t = Poly3::var(1), one(1);
  {
    Timed tc("counterexample traces", 8, 0, 0);
    bool ok = true;
    for (const auto& f : topo.faces) {
      auto tr = finite_trace(0, f.label, u);
      Poly3 expected = f.label == "S1" ? -(s * t * (s + t - one)) : Poly3();
      bool match = tr && tr->comp[0] == WeightedPolynomial(expected, 0);
      tc.r.witness["trace_" + f.label] = match ? "as stated" : "mismatch";
      ok = ok && match;
    }
    out.push_back(tc.done(ok));
  }
  {
    Timed tc("counterexample gradient norm", 8, 0, 0);
    FormField g = exterior_derivative(u);
    Poly3 sq;
    for (int i = 0; i < 3; ++i) sq += g.collapsed(i) * g.collapsed(i);
    Rational v = integrate_collapsed(sq);
    tc.r.witness["grad_norm_sq"] = to_string(v);
    out.push_back(tc.done(sgn(v) > 0));
  }
  {
    Timed tc("counterexample no polynomial match", 8, 0, 0);
    // Unknowns: coefficients of P(xi,eta,zeta), total degree <= D. Equations:
    // P restricted to each face equals the trace of u there.
    std::vector<Exp> monos;
    for (int d = 0; d <= max_degree; ++d)
      for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) monos.push_back({a, b, d - a - b});
    std::vector<std::map<Poly3::Key, Rational>> cols(monos.size() + 1);
    std::map<std::pair<int, Poly3::Key>, int> row_of;
    auto row = [&](int face, Poly3::Key key) {
      auto it = row_of.find({face, key});
      if (it != row_of.end()) return it->second;
      int r = int(row_of.size());
      row_of.emplace(std::make_pair(face, key), r);
      return r;
    };
    std::vector<std::vector<std::pair<int, Rational>>> entries(monos.size() + 1);
    for (int fi = 0; fi < int(topo.faces.size()); ++fi) {
      const auto& f = topo.faces[fi];
      std::array<Poly3, 3> sub;
      for (int i = 0; i < 3; ++i) sub[i] = Poly3(f.origin[i]) + s * f.ds[i] + t * f.dt[i];
      for (std::size_t j = 0; j < monos.size(); ++j) {
        Poly3 r = Poly3::monomial(monos[j][0], monos[j][1], monos[j][2]).compose(sub);
        for (const auto& [key, c] : r.terms()) entries[j].emplace_back(row(fi, key), c);
      }
      Poly3 rhs = f.label == "S1" ? -(s * t * (s + t - one)) : Poly3();
      for (const auto& [key, c] : rhs.terms()) entries[monos.size()].emplace_back(row(fi, key), c);
    }
    QMatrix a(int(row_of.size()), int(monos.size())), ab(int(row_of.size()), int(monos.size()) + 1);
    for (std::size_t j = 0; j < entries.size(); ++j)
      for (const auto& [r, c] : entries[j]) {
        if (j < monos.size()) a(r, int(j)) += c;
        ab(r, int(j)) += c;
      }
    int ra = rank(a), rab = rank(ab);
    tc.r.witness["degree"] = str((long long)max_degree);
    tc.r.witness["unknowns"] = str((long long)monos.size());
    tc.r.witness["equations"] = str((long long)row_of.size());
    tc.r.witness["rank_A"] = str((long long)ra);
    tc.r.witness["rank_Ab"] = str((long long)rab);
    out.push_back(tc.done(rab > ra));
  }
  {
    // Observed interpolation gap at interior points; reported, not judged.
    Timed tc("counterexample interpolation gap", 0, 0, 0);
    for (int k = 1; k <= 3; ++k) {
      Interpolant p = interpolate(0, k, u);
      double gap = 0;
      for (double c : {0.2, 0.4, 0.6})
        for (double a : {0.3, 0.7})
          for (double b : {0.25, 0.5}) {
            double exact = u.collapsed(0).eval(std::array<double, 3>{a, b, c});
            gap = std::max(gap, std::abs(p.value((1 - c) * a, (1 - c) * b, c)[0] - exact));
          }
      tc.r.witness["gap_k" + std::to_string(k)] = str(gap);
      tc.r.witness["member_k" + std::to_string(k)] = membership_in_space(u, 0, k) ? "yes" : "no";
    }
    out.push_back(tc.done(true));
  }
  return out;
}

std::vector<CheckResult> verify_quadrature_fidelity(int k, std::uint64_t seed, int fields, int quad_n) {
  constexpr double tol = 1e-12;
  if (quad_n <= 0) quad_n = default_quadrature_points(k);
  std::mt19937_64 rng(seed + 104729 * std::uint64_t(k));
  std::vector<CheckResult> out;
  for (int s = 0; s <= 3; ++s) {
    Timed t("quadrature fidelity", 9, s, k);
    const auto& b = basis(s, k);
    const auto& dofs = dof_set(s, k);
    auto fin = b.finite_fields();
    int deg = max_integrand_degree(s, k);
    double worst = 0;
    for (int f = 0; f < fields; ++f) {
      std::vector<Rational> coef;
      for (std::size_t i = 0; i < fin.size(); ++i) coef.push_back(random_rational(rng));
      FormField u = combination(fin, coef, s, Frame::FinitePyramid);
      FormField du = s < 3 ? exterior_derivative(u) : FormField();
      SmoothField su = smooth_from_exact(u);
      std::vector<double> ex, nu;
      for (const auto& m : dofs) {
        ex.push_back(apply_dof(m, u, s < 3 ? &du : nullptr).get_d());
        nu.push_back(apply_dof(m, su, quad_n));
      }
      double scale = 0, err = 0;
      for (std::size_t i = 0; i < ex.size(); ++i) {
        scale = std::max(scale, std::abs(ex[i]));
        err = std::max(err, std::abs(ex[i] - nu[i]));
      }
      worst = std::max(worst, scale > 0 ? err / scale : err);
    }
    t.r.witness["fields"] = str((long long)fields);
    t.r.witness["quadrature_points"] = str((long long)quad_n);
    t.r.witness["max_integrand_degree"] = str((long long)deg);
    t.r.witness["exact_degree"] = str((long long)(2 * quad_n - 1));
    t.r.witness["max_relative_defect"] = str(worst);
    t.r.measured = worst;
    t.r.witness["tolerance"] = str(tol);
    out.push_back(t.done(worst <= tol && deg <= 2 * quad_n - 1));
  }
  return out;
}

VerificationReport verify_all(const VerifyOptions& opt) {
  if (opt.max_k < 1) throw std::invalid_argument("max order must be at least 1");
  VerificationReport rep;
  rep.max_k = opt.max_k;
  rep.seed = opt.seed;
  auto add = [&rep](std::vector<CheckResult> v) { rep.checks.insert(rep.checks.end(), v.begin(), v.end()); };
  for (int k = 1; k <= opt.max_k; ++k) {
    add(verify_dimensions(k));
    add(verify_unisolvency(k, opt.corrupt_basis));
    add(verify_exact_sequence(k));
    if (k <= opt.commuting_max_k) {
      add(verify_commuting(k));
      add(verify_commuting_numeric(k, opt.quad_n));
    }
    add(verify_polynomial_reproduction(k));
    add(verify_traces(k));
    add(verify_helmholtz(k, opt.seed));
    if (k <= opt.quadrature_max_k) add(verify_quadrature_fidelity(k, opt.seed, opt.random_fields, opt.quad_n));
  }
  add(verify_lowest_order());
  add(counterexample_demo(opt.counterexample_degree));
  return rep;
}

} // namespace pyr
