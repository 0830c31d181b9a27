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

// pyramid: tabulate bases, assemble Vandermonde matrices and run the
// verification suite through the C interface.

#include "pyramid/pyramid.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

enum Exit { OK = 0, CHECK_FAILED = 1, USAGE = 2 };

struct Config {
  int form = -1;
  int order = -1;
  int max_order = 4;
  std::string out;
  std::string format = "json";
  std::string points;
  int quad_n = 0;
  int counterexample_degree = 10;
  std::uint64_t seed = 0;
  bool corrupt_basis = false;
};

struct CString {
  char* p = nullptr;
  ~CString() { pyr_string_free(p); }
};

pyr_format format_of(const std::string& f) {
  if (f == "csv") return PYR_FORMAT_CSV;
  if (f == "text") return PYR_FORMAT_TEXT;
  return PYR_FORMAT_JSON;
}

// Usage-type errors map to exit code 2, everything else to 1.
int report_error(pyr_status st, const std::string& what) {
  std::cerr << "pyramid: " << what << ": " << pyr_status_name(st) << ": " << pyr_last_error() << "\n";
  return st == PYR_ERR_INVALID_ARGUMENT ? USAGE : CHECK_FAILED;
}

bool emit(const Config& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return bool(std::cout);
  }
  std::ofstream f(c.out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "pyramid: cannot write " << c.out << "\n";
    return false;
  }
  return true;
}

int cmd_tabulate(const Config& c) {
  pyr_basis* raw = nullptr;
  if (auto st = pyr_basis_create(c.form, c.order, &raw); st != PYR_OK) return report_error(st, "tabulate");
  std::unique_ptr<pyr_basis, decltype(&pyr_basis_destroy)> b(raw, pyr_basis_destroy);
  CString text;
  int row_errors = 0;
  if (!c.points.empty()) {
    std::ifstream in(c.points);
    if (!in) {
      std::cerr << "pyramid: cannot read points file " << c.points << "\n";
      return USAGE;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    if (auto st = pyr_basis_tabulate(b.get(), ss.str().c_str(), &text.p, &row_errors); st != PYR_OK)
      return report_error(st, "tabulate");
  } else {
    if (c.format == "csv") {
      std::cerr << "pyramid: csv output of a basis needs --points\n";
      return USAGE;
    }
    if (auto st = pyr_basis_to_json(b.get(), &text.p); st != PYR_OK) return report_error(st, "tabulate");
  }
  if (!emit(c, text.p)) return CHECK_FAILED;
  if (row_errors) {
    std::cerr << "pyramid: " << row_errors << " point(s) rejected\n";
    return CHECK_FAILED;
  }
  return OK;
}

int cmd_vandermonde(const Config& c) {
  CString text;
  int sign = 0;
  if (auto st = pyr_vandermonde(c.form, c.order, format_of(c.format), &text.p, &sign); st != PYR_OK)
    return report_error(st, "vandermonde");
  if (!emit(c, text.p)) return CHECK_FAILED;
  if (sign == 0) {
    std::cerr << "pyramid: Vandermonde matrix is singular\n";
    return CHECK_FAILED;
  }
  return OK;
}

int finish_report(const Config& c, pyr_report* raw, const char* what) {
  std::unique_ptr<pyr_report, decltype(&pyr_report_destroy)> r(raw, pyr_report_destroy);
  CString text, failures;
  if (auto st = pyr_report_render(r.get(), format_of(c.format), &text.p); st != PYR_OK) return report_error(st, what);
  if (!emit(c, text.p)) return CHECK_FAILED;
  int passed = 0;
  pyr_report_passed(r.get(), &passed);
  if (!passed) {
    pyr_report_failures(r.get(), &failures.p);
    std::cerr << "pyramid: failed checks:\n" << failures.p;
    return CHECK_FAILED;
  }
  return OK;
}

int cmd_verify(const Config& c) {
  pyr_verify_options opt;
  pyr_verify_options_default(&opt);
  opt.max_order = c.max_order;
  opt.quad_points = c.quad_n;
  opt.counterexample_degree = c.counterexample_degree;
  opt.seed = c.seed;
  opt.corrupt_basis = c.corrupt_basis;
  pyr_report* raw = nullptr;
  if (auto st = pyr_verify(&opt, &raw); st != PYR_OK) return report_error(st, "verify");
  return finish_report(c, raw, "verify");
}

int cmd_counterexample(const Config& c) {
  pyr_report* raw = nullptr;
  if (auto st = pyr_counterexample(c.counterexample_degree, &raw); st != PYR_OK) return report_error(st, "counterexample");
  return finish_report(c, raw, "counterexample");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pyramid finite elements: bases, degrees of freedom and exact verification"};
  app.require_subcommand(1);
  Config c;
  {
    pyr_verify_options d;
    pyr_verify_options_default(&d);
    c.seed = d.seed;
  }
  auto formats = CLI::IsMember({"json", "csv", "text"});

  auto* tab = app.add_subcommand("tabulate", "Write the basis of U^(s),k (JSON), or its values at points (CSV)");
  tab->add_option("--form,-s", c.form, "Form degree s (0..3)")->required()->check(CLI::Range(0, 3));
  tab->add_option("--order,-k", c.order, "Polynomial order k >= 1")->required()->check(CLI::PositiveNumber);
  tab->add_option("--points", c.points, "CSV file of xi,eta,zeta rows")->check(CLI::ExistingFile);

  auto* van = app.add_subcommand("vandermonde", "Write the exact DOF-by-basis matrix");
  van->add_option("--form,-s", c.form, "Form degree s (0..3)")->required()->check(CLI::Range(0, 3));
  van->add_option("--order,-k", c.order, "Polynomial order k >= 1")->required()->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks for k = 1..max-order");
  ver->add_option("--max-order,-K", c.max_order, "Largest order checked")->capture_default_str()->check(CLI::PositiveNumber);
  ver->add_option("--quad-n", c.quad_n, "Gauss points per direction for numeric checks (0: k+3)")->capture_default_str()->check(CLI::NonNegativeNumber);
  ver->add_option("--counterexample-degree", c.counterexample_degree, "Largest polynomial degree in the counterexample")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", c.seed, "Seed for randomized checks")->capture_default_str();
  ver->add_flag("--corrupt-basis", c.corrupt_basis, "Negative control: duplicate a Vandermonde column")->group("");

  auto* ce = app.add_subcommand("counterexample", "Check the non-polynomial H1 function");
  ce->add_option("--counterexample-degree", c.counterexample_degree, "Largest polynomial degree tried")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  for (auto* sub : {tab, van, ver, ce}) {
    sub->add_option("--out,-o", c.out, "Output file (default: stdout)");
    sub->add_option("--format", c.format, "json, csv or text")->capture_default_str()->check(formats);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? OK : USAGE;
  }

  if (tab->parsed()) return cmd_tabulate(c);
  if (van->parsed()) return cmd_vandermonde(c);
  if (ver->parsed()) return cmd_verify(c);
  return cmd_counterexample(c);
}
