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

#include "pyramid/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace pyr {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

//---------------------------------------------------------------------------

Poly3::Poly3(const Rational& c) {
  if (c != 0) terms_[pack({0, 0, 0})] = c;
}

Poly3 Poly3::monomial(int a, int b, int c, const Rational& coef) {
  Poly3 p;
  p.add_term({a, b, c}, coef);
  return p;
}

Poly3 Poly3::var(int i) {
  Exp e{0, 0, 0};
  e[i] = 1;
  Poly3 p;
  p.add_term(e, 1);
  return p;
}

Poly3 Poly3::affine(int i, const Rational& alpha, const Rational& beta) {
  return Poly3(alpha) + var(i) * beta;
}

Rational Poly3::coeff(const Exp& e) const {
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly3::add_term(const Exp& e, const Rational& c) {
  if (c == 0) return;
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] > 1023 || e[1] > 1023 || e[2] > 1023)
    throw std::out_of_range("monomial exponent out of range");
  auto [it, inserted] = terms_.try_emplace(pack(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [k, c] : o.terms_) add_term(unpack(k), c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [k, c] : o.terms_) add_term(unpack(k), -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Poly3 Poly3::operator-() const {
  Poly3 r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r;
  Rational t;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // Packed keys add componentwise as long as no field overflows.
      t = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(ka + kb, t);
      if (!inserted) it->second += t;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second == 0) it = r.terms_.erase(it);
    else ++it;
  }
  return r;
}

Poly3 Poly3::pow(int n) const {
  Poly3 r(1), base(*this);
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Poly3 Poly3::derivative(int var) const {
  Poly3 r;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    if (e[var] == 0) continue;
    Rational nc = c * e[var];
    --e[var];
    r.add_term(e, nc);
  }
  return r;
}

Poly3 Poly3::restrict(int var, const Rational& value) const {
  Poly3 r;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    Rational f = 1;
    for (int i = 0; i < e[var]; ++i) f *= value;
    e[var] = 0;
    r.add_term(e, c * f);
  }
  return r;
}

Poly3 Poly3::compose(const std::array<Poly3, 3>& subs) const {
  Exp md = max_degrees();
  std::array<std::vector<Poly3>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(Poly3(1));
    for (int i = 1; i <= md[v]; ++i) powers[v].push_back(powers[v].back() * subs[v]);
  }
  Poly3 r;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    r += (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]) * c;
  }
  return r;
}

Poly3 Poly3::shift(int var, int n) const {
  Poly3 r;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    e[var] += n;
    r.add_term(e, c);
  }
  return r;
}

Rational Poly3::eval(const Point3& p) const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    Rational t = c;
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[v]; ++i) t *= p[v];
    s += t;
  }
  return s;
}

double Poly3::eval(const std::array<double, 3>& p) const {
  double s = 0;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    double t = c.get_d();
    for (int v = 0; v < 3; ++v)
      if (e[v]) t *= std::pow(p[v], e[v]);
    s += t;
  }
  return s;
}

int Poly3::degree(int var) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, unpack(k)[var]);
  return d;
}

int Poly3::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    d = std::max(d, e[0] + e[1] + e[2]);
  }
  return d;
}

Exp Poly3::max_degrees() const {
  Exp d{-1, -1, -1};
  for (const auto& [k, c] : terms_) {
    Exp e = unpack(k);
    for (int v = 0; v < 3; ++v) d[v] = std::max(d[v], e[v]);
  }
  return d;
}

//---------------------------------------------------------------------------

namespace {

// Divides by (var - root) once. Groups terms by the exponents of the other
// two variables and runs synthetic division on each group.
bool divide_linear(const Poly3& p, int var, const Rational& root, Poly3& q) {
  std::map<Exp, std::map<int, Rational>> groups;
  for (const auto& [k, c] : p.terms()) {
    Exp e = Poly3::unpack(k);
    int d = e[var];
    e[var] = 0;
    groups[e][d] = c;
  }
  Poly3 out;
  for (const auto& [rest, coeffs] : groups) {
    int deg = coeffs.rbegin()->first;
    std::vector<Rational> c(deg + 1);
    for (const auto& [d, v] : coeffs) c[d] = v;
    std::vector<Rational> b(deg + 1);
    Rational carry = 0;
    for (int i = deg; i >= 1; --i) {
      carry = c[i] + root * carry;
      b[i - 1] = carry;
    }
    if (c[0] + root * carry != 0) return false;
    for (int i = 0; i < deg; ++i) {
      Exp e = rest;
      e[var] = i;
      out.add_term(e, b[i]);
    }
  }
  q = std::move(out);
  return true;
}

} // namespace

bool divide_by_one_plus(const Poly3& p, int var, int n, Poly3& quotient) {
  Poly3 cur = p;
  for (int i = 0; i < n; ++i)
    if (!divide_linear(cur, var, -1, cur)) return false;
  quotient = std::move(cur);
  return true;
}

bool divide_by_one_minus(const Poly3& p, int var, int n, Poly3& quotient) {
  Poly3 cur = p;
  for (int i = 0; i < n; ++i) {
    if (!divide_linear(cur, var, 1, cur)) return false;
    cur = -cur;
  }
  quotient = std::move(cur);
  return true;
}

} // namespace pyr
