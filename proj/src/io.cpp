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

#include "pyramid/io.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace pyr {

using nlohmann::json;

namespace {

json terms_json(const Poly3& p) {
  json t = json::array();
  for (const auto& [key, c] : p.terms()) {
    Exp e = Poly3::unpack(key);
    t.push_back({{"a", e[0]}, {"b", e[1]}, {"c", e[2]}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return t;
}

Poly3 terms_from(const json& t) {
  Poly3 p;
  for (const auto& x : t) {
    Rational q(mpz_class(x.at("num").get<std::string>(), 10), mpz_class(x.at("den").get<std::string>(), 10));
    q.canonicalize();
    p.add_term({x.at("a").get<int>(), x.at("b").get<int>(), x.at("c").get<int>()}, q);
  }
  return p;
}

json field_json(const FormField& f) {
  json comps = json::array();
  for (const auto& c : f.comp) comps.push_back({{"weight", c.weight()}, {"terms", terms_json(c.numerator())}});
  return {{"frame", frame_name(f.frame)}, {"degree", f.degree}, {"components", comps}};
}

FormField field_from(const json& j, Frame frame) {
  std::vector<WeightedPolynomial> comps;
  for (const auto& c : j.at("components")) comps.emplace_back(terms_from(c.at("terms")), c.at("weight").get<int>());
  return FormField(j.at("degree").get<int>(), frame, comps);
}

std::string frac(const Rational& q) { return to_string(q); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

std::string basis_to_json(const BasisSet& b) {
  json fns = json::array();
  for (const auto& f : b.functions)
    fns.push_back({{"entity", f.entity},
                   {"family", f.family},
                   {"multi_index", f.multi_index},
                   {"infinite", field_json(f.field)},
                   {"finite", field_json(f.finite)}});
  json dims = json::array();
  for (const auto& [e, n] : b.dims()) dims.push_back({{"entity", e}, {"count", n}});
  json j = {{"s", b.s},
            {"k", b.k},
            {"dimension", b.size()},
            {"dims", dims},
            {"variables", {{"infinite", "x,y,z over (1+z)^weight"}, {"finite", "collapsed a,b,c"}}},
            {"functions", fns}};
  return j.dump(1) + "\n";
}

BasisSet basis_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    BasisSet b;
    b.s = j.at("s").get<int>();
    b.k = j.at("k").get<int>();
    for (const auto& f : j.at("functions")) {
      ShapeFunction sf;
      sf.entity = f.at("entity").get<std::string>();
      sf.family = f.at("family").get<std::string>();
      sf.multi_index = f.at("multi_index").get<std::vector<int>>();
      sf.field = field_from(f.at("infinite"), Frame::InfinitePyramid);
      sf.finite = field_from(f.at("finite"), Frame::FinitePyramid);
      b.functions.push_back(std::move(sf));
    }
    if (j.at("dimension").get<std::size_t>() != b.size()) throw std::invalid_argument("dimension does not match the function list");
    return b;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed basis JSON: ") + e.what());
  }
}

bool same_basis(const BasisSet& a, const BasisSet& b) {
  if (a.s != b.s || a.k != b.k || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a.functions[i], &y = b.functions[i];
    if (x.entity != y.entity || x.family != y.family || x.multi_index != y.multi_index) return false;
    if (x.field != y.field || x.finite != y.finite) return false;
  }
  return true;
}

std::string dof_label(const DofFunctional& m) {
  std::string s = m.entity + ":" + dof_kind_name(m.kind) + "[";
  for (std::size_t i = 0; i < m.test_index.size(); ++i) s += (i ? "," : "") + std::to_string(m.test_index[i]);
  return s + "]";
}

std::string shape_label(const ShapeFunction& f) {
  std::string s = f.entity + ":" + f.family + "[";
  for (std::size_t i = 0; i < f.multi_index.size(); ++i) s += (i ? "," : "") + std::to_string(f.multi_index[i]);
  return s + "]";
}

std::string vandermonde_to_json(int s, int k, const QMatrix& v) {
  const auto& dofs = dof_set(s, k);
  const auto& b = basis(s, k);
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& m : dofs) rows.push_back(dof_label(m));
  for (const auto& f : b.functions) cols.push_back(shape_label(f));
  for (int i = 0; i < v.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < v.cols(); ++j) r.push_back(frac(v(i, j)));
    entries.push_back(r);
  }
  Rational det = determinant(v);
  json j = {{"s", s}, {"k", k}, {"size", v.rows()}, {"rows", rows}, {"columns", cols}, {"entries", entries},
            {"determinant", frac(det)}, {"determinant_sign", sgn(det)}};
  return j.dump(1) + "\n";
}

std::string vandermonde_to_csv(int s, int k, const QMatrix& v) {
  const auto& dofs = dof_set(s, k);
  const auto& b = basis(s, k);
  std::ostringstream o;
  o << "dof";
  for (const auto& f : b.functions) o << "," << csv_escape(shape_label(f));
  o << "\n";
  for (int i = 0; i < v.rows(); ++i) {
    o << csv_escape(dof_label(dofs[i]));
    for (int j = 0; j < v.cols(); ++j) o << "," << frac(v(i, j));
    o << "\n";
  }
  return o.str();
}

std::string vandermonde_to_text(int s, int k, const QMatrix& v) {
  std::ostringstream o;
  Rational det = determinant(v);
  o << "Vandermonde s=" << s << " k=" << k << " size " << v.rows() << "x" << v.cols() << "\n";
  o << "determinant sign " << sgn(det) << " (" << det.get_num().get_str().size() << " digit numerator)\n";
  if (v.rows() <= 16) {
    const auto& dofs = dof_set(s, k);
    for (int i = 0; i < v.rows(); ++i) {
      o << std::left << std::setw(28) << dof_label(dofs[i]);
      for (int j = 0; j < v.cols(); ++j) o << " " << std::setw(8) << frac(v(i, j));
      o << "\n";
    }
  }
  return o.str();
}

Rational parse_number(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.find_first_of(".eE") == std::string::npos) return parse_rational(s);
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long exp10 = 0;
  bool any = false, dot = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (dot) throw std::invalid_argument("bad number '" + raw + "'");
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      any = true;
      if (dot) --exp10;
    } else {
      throw std::invalid_argument("bad number '" + raw + "'");
    }
  }
  if (!any) throw std::invalid_argument("bad number '" + raw + "'");
  if (i < s.size()) {
    std::string e = s.substr(i + 1);
    if (e.empty()) throw std::invalid_argument("bad number '" + raw + "'");
    std::size_t used = 0;
    long ev = std::stol(e, &used);
    if (used != e.size()) throw std::invalid_argument("bad number '" + raw + "'");
    exp10 += ev;
  }
  mpz_class m(digits, 10), p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational q = exp10 < 0 ? Rational(m, p) : Rational(m * p);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::vector<std::array<std::string, 3>> read_points(const std::string& text) {
  std::vector<std::array<std::string, 3>> pts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::array<std::string, 3> p;
    std::istringstream ls(line);
    std::string cell;
    int n = 0;
    while (std::getline(ls, cell, ',')) {
      if (n < 3) p[n] = trim(cell);
      ++n;
    }
    if (n != 3) p = {line, "", ""};  // kept so the caller can report the row
    pts.push_back(p);
  }
  return pts;
}

PointValues tabulate_values(const BasisSet& b, const std::vector<std::array<std::string, 3>>& points) {
  PointValues out;
  std::ostringstream o;
  o << "point,xi,eta,zeta,function,entity,component,value,status\n";
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& raw = points[p];
    auto error_row = [&](const std::string& why) {
      o << p << "," << csv_escape(raw[0]) << "," << csv_escape(raw[1]) << "," << csv_escape(raw[2]) << ",,,,," << csv_escape("error: " + why) << "\n";
      ++out.row_errors;
    };
    Point3 x;
    try {
      for (int i = 0; i < 3; ++i) x[i] = parse_number(raw[i]);
    } catch (const std::exception& e) {
      error_row(std::string("unreadable point: ") + e.what());
      continue;
    }
    if (!in_finite_pyramid(x)) {
      error_row("outside the pyramid");
      continue;
    }
    const bool apex = x[2] == 1;
    Point3 abc = {0, 0, 1};
    if (!apex) abc = {x[0] / (1 - x[2]), x[1] / (1 - x[2]), x[2]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto& f = b.functions[j].finite;
      for (std::size_t c = 0; c < f.ncomp(); ++c) {
        std::string value, status = "ok";
        const Poly3& q = f.collapsed(int(c));
        if (apex) {
          Poly3 r = q.restrict(2, 1);
          if (r.degree(0) > 0 || r.degree(1) > 0) status = "trace-only";
          else value = frac(r.eval(Point3{0, 0, 0}));
        } else {
          value = frac(q.eval(abc));
        }
        o << p << "," << frac(x[0]) << "," << frac(x[1]) << "," << frac(x[2]) << "," << j << "," << b.functions[j].entity << ","
          << c << "," << value << "," << status << "\n";
      }
    }
  }
  out.csv = o.str();
  return out;
}

std::string report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json w = json::object();
    for (const auto& [key, v] : c.witness) w[key] = v;
    json e = {{"name", c.name}, {"criterion", c.criterion}, {"status", check_status_name(c.status)}, {"witness", w}};
    if (c.s >= 0) e["s"] = c.s;
    if (c.k > 0) e["k"] = c.k;
    if (!c.message.empty()) e["message"] = c.message;
    checks.push_back(e);
  }
  json crit = json::object();
  for (int n = 1; n <= 9; ++n) {
    std::string st = "not run";
    for (const auto& c : r.checks) {
      if (c.criterion != n) continue;
      if (c.status == CheckStatus::Fail) st = "fail";
      else if (st == "not run") st = "pass";
    }
    crit[std::to_string(n)] = st;
  }
  json j = {{"max_order", r.max_k}, {"seed", r.seed}, {"passed", r.passed()}, {"criteria", crit}, {"checks", checks}};
  return j.dump(1) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream o;
  int fails = 0;
  for (const auto& c : r.checks) {
    o << "[" << check_status_name(c.status) << "] ";
    if (c.criterion) o << "#" << c.criterion << " ";
    o << c.name;
    if (c.s >= 0) o << " s=" << c.s;
    if (c.k > 0) o << " k=" << c.k;
    for (const auto& [key, v] : c.witness) o << " " << key << "=" << v;
    if (!c.message.empty()) o << " (" << c.message << ")";
    o << std::fixed << std::setprecision(3) << " " << c.seconds << "s\n";
    o.unsetf(std::ios::fixed);
    if (c.status == CheckStatus::Fail) ++fails;
  }
  o << (fails ? "FAILED: " + std::to_string(fails) + " of " + std::to_string(r.checks.size()) + " checks\n"
              : "all " + std::to_string(r.checks.size()) + " checks passed or skipped\n");
  return o.str();
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream o;
  o << "criterion,name,s,k,status,witness,message\n";
  for (const auto& c : r.checks) {
    std::string w;
    for (const auto& [key, v] : c.witness) w += (w.empty() ? "" : ";") + key + "=" + v;
    o << c.criterion << "," << csv_escape(c.name) << "," << (c.s >= 0 ? std::to_string(c.s) : "") << "," << (c.k > 0 ? std::to_string(c.k) : "") << ","
      << check_status_name(c.status) << "," << csv_escape(w) << "," << csv_escape(c.message) << "\n";
  }
  return o.str();
}

} // namespace pyr
