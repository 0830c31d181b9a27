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

#include "pyramid/weighted.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace pyr {

namespace {

const Poly3& one_plus(int var, int n) {
  thread_local std::vector<Poly3> cache[3];
  auto& c = cache[var];
  while (static_cast<int>(c.size()) <= n)
    c.push_back(c.empty() ? Poly3(1) : c.back() * Poly3::affine(var, 1, 1));
  return c[n];
}

const Poly3& one_minus(int var, int n) {
  thread_local std::vector<Poly3> cache[3];
  auto& c = cache[var];
  while (static_cast<int>(c.size()) <= n)
    c.push_back(c.empty() ? Poly3(1) : c.back() * Poly3::affine(var, 1, -1));
  return c[n];
}

} // namespace

WeightedPolynomial::WeightedPolynomial(Poly3 num, int weight) : num_(std::move(num)), w_(weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
}

WeightedPolynomial wmono(int a, int b, int c, int w, const Rational& coef) {
  return WeightedPolynomial(Poly3::monomial(a, b, c, coef), w);
}

WeightedPolynomial WeightedPolynomial::raised_to(int w) const {
  if (w < w_) throw std::invalid_argument("raised_to: target weight below current weight");
  if (w == w_) return *this;
  return WeightedPolynomial(num_ * one_plus(2, w - w_), w);
}

std::optional<WeightedPolynomial> WeightedPolynomial::at_weight(int w) const {
  if (w < 0) return std::nullopt;
  if (w >= w_) return raised_to(w);
  Poly3 q;
  if (!divide_by_one_plus(num_, 2, w_ - w, q)) return std::nullopt;
  return WeightedPolynomial(std::move(q), w);
}

WeightedPolynomial WeightedPolynomial::reduced() const {
  if (num_.is_zero()) return WeightedPolynomial();
  WeightedPolynomial cur = *this;
  while (cur.w_ > 0) {
    Poly3 q;
    if (!divide_by_one_plus(cur.num_, 2, 1, q)) break;
    cur = WeightedPolynomial(std::move(q), cur.w_ - 1);
  }
  return cur;
}

WeightedPolynomial WeightedPolynomial::times_one_plus_z(int m) const {
  if (m <= w_) return WeightedPolynomial(num_, w_ - m);
  return WeightedPolynomial(num_ * one_plus(2, m - w_), 0);
}

WeightedPolynomial& WeightedPolynomial::operator+=(const WeightedPolynomial& o) {
  int w = std::max(w_, o.w_);
  num_ = raised_to(w).num_ + o.raised_to(w).num_;
  w_ = w;
  return *this;
}

WeightedPolynomial& WeightedPolynomial::operator-=(const WeightedPolynomial& o) {
  int w = std::max(w_, o.w_);
  num_ = raised_to(w).num_ - o.raised_to(w).num_;
  w_ = w;
  return *this;
}

WeightedPolynomial& WeightedPolynomial::operator*=(const Rational& s) {
  num_ *= s;
  return *this;
}

WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b) {
  return WeightedPolynomial(a.num_ * b.num_, a.w_ + b.w_);
}

bool WeightedPolynomial::operator==(const WeightedPolynomial& o) const {
  int w = std::max(w_, o.w_);
  return raised_to(w).num_ == o.raised_to(w).num_;
}

WeightedPolynomial WeightedPolynomial::derivative(int var) const {
  if (var != 2) return WeightedPolynomial(num_.derivative(var), w_);
  // (N' (1+z) - w N) / (1+z)^{w+1}
  Poly3 n = num_.derivative(2) * one_plus(2, 1) - num_ * Rational(w_);
  return WeightedPolynomial(std::move(n), w_ + 1);
}

WeightedPolynomial WeightedPolynomial::compose_xy(const Poly3& xsub, const Poly3& ysub) const {
  return WeightedPolynomial(num_.compose({xsub, ysub, Poly3::var(2)}), w_);
}

Rational WeightedPolynomial::eval(const Point3& p) const {
  Rational d = 1, opz = 1 + p[2];
  for (int i = 0; i < w_; ++i) d *= opz;
  return num_.eval(p) / d;
}

bool WeightedPolynomial::in_Q(int w, int l, int m, int n) const {
  if (num_.is_zero()) return true;
  auto f = at_weight(w);
  if (!f) return false;
  Exp d = f->num_.max_degrees();
  return d[0] <= l && d[1] <= m && d[2] <= n;
}

bool WeightedPolynomial::in_P(int w, int n) const {
  if (num_.is_zero()) return true;
  auto f = at_weight(w);
  return f && f->num_.total_degree() <= n;
}

std::string WeightedPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  os << "(";
  for (const auto& [k, c] : num_.terms()) {
    Exp e = Poly3::unpack(k);
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    const char* v[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i)
      if (e[i] == 1) os << "*" << v[i];
      else if (e[i] > 1) os << "*" << v[i] << "^" << e[i];
  }
  if (first) os << "0";
  os << ")/(1+z)^" << w_;
  return os.str();
}

//---------------------------------------------------------------------------

Rational integrate_infinite(const WeightedPolynomial& f) {
  Rational s = 0;
  const int w = f.weight();
  for (const auto& [k, c] : f.numerator().terms()) {
    Exp e = Poly3::unpack(k);
    if (w - e[2] < 2) {
      std::ostringstream os;
      os << "integrand term x^" << e[0] << " y^" << e[1] << " z^" << e[2] << " / (1+z)^" << w
         << " is not integrable on the infinite pyramid";
      throw DivergenceError(os.str());
    }
    s += c * factorial(e[2]) * factorial(w - e[2] - 2) / factorial(w - 1) / ((e[0] + 1) * (e[1] + 1));
  }
  return s;
}

Poly3 to_collapsed(const WeightedPolynomial& f) {
  Poly3 r;
  const int w = f.weight();
  for (const auto& [k, c] : f.numerator().terms()) {
    Exp e = Poly3::unpack(k);
    if (e[2] > w)
      throw RepresentationError("function is unbounded towards the apex; no collapsed polynomial form: " + f.str());
    r += one_minus(2, w - e[2]).shift(0, e[0]).shift(1, e[1]).shift(2, e[2]) * c;
  }
  return r;
}

WeightedPolynomial from_collapsed(const Poly3& p) {
  int W = std::max(0, p.degree(2));
  Poly3 n;
  for (const auto& [k, c] : p.terms()) {
    Exp e = Poly3::unpack(k);
    n += one_plus(2, W - e[2]).shift(0, e[0]).shift(1, e[1]).shift(2, e[2]) * c;
  }
  return WeightedPolynomial(std::move(n), W);
}

std::optional<Poly3> to_cartesian(const WeightedPolynomial& f) {
  Poly3 r;
  const int w = f.weight();
  for (const auto& [k, c] : f.numerator().terms()) {
    Exp e = Poly3::unpack(k);
    int d = e[0] + e[1] + e[2];
    if (d > w) return std::nullopt;
    r += one_minus(2, w - d).shift(0, e[0]).shift(1, e[1]).shift(2, e[2]) * c;
  }
  return r;
}

WeightedPolynomial from_cartesian(const Poly3& p) {
  int W = std::max(0, p.total_degree());
  Poly3 n;
  for (const auto& [k, c] : p.terms()) {
    Exp e = Poly3::unpack(k);
    n += one_plus(2, W - (e[0] + e[1] + e[2])).shift(0, e[0]).shift(1, e[1]).shift(2, e[2]) * c;
  }
  return WeightedPolynomial(std::move(n), W);
}

Poly3 cartesian_to_collapsed(const Poly3& p) {
  Poly3 omc = Poly3::affine(2, 1, -1);
  return p.compose({omc * Poly3::var(0), omc * Poly3::var(1), Poly3::var(2)});
}

Rational integrate_collapsed(const Poly3& p, int m) {
  int M = m + 2;
  Poly3 q = p;
  if (M < 0) {
    if (!divide_by_one_minus(p, 2, -M, q))
      throw SingularIntegrand("integrand has a non-integrable (1-c) pole at the apex");
    M = 0;
  }
  Rational s = 0;
  for (const auto& [k, c] : q.terms()) {
    Exp e = Poly3::unpack(k);
    s += c * factorial(e[2]) * factorial(M) / factorial(e[2] + M + 1) / ((e[0] + 1) * (e[1] + 1));
  }
  return s;
}

} // namespace pyr
