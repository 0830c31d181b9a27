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

#include "pyramid/pyramid.h"

#include "pyramid/io.hpp"

#include <cstdlib>
#include <cstring>

struct pyr_basis {
  pyr::BasisSet set;
};

struct pyr_report {
  pyr::VerificationReport report;
};

namespace {

thread_local std::string last_error;

pyr_status fail(pyr_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
pyr_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const pyr::DomainError& e) {
    return fail(PYR_ERR_DOMAIN, e.what());
  } catch (const pyr::SingularPointError& e) {
    return fail(PYR_ERR_SINGULAR_POINT, e.what());
  } catch (const pyr::RepresentationError& e) {
    return fail(PYR_ERR_REPRESENTATION, e.what());
  } catch (const pyr::KindMismatch& e) {
    return fail(PYR_ERR_KIND_MISMATCH, e.what());
  } catch (const pyr::DivergenceError& e) {
    return fail(PYR_ERR_DIVERGENCE, e.what());
  } catch (const pyr::SingularIntegrand& e) {
    return fail(PYR_ERR_DIVERGENCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PYR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PYR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PYR_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pyr_status null_arg(const char* what) { return fail(PYR_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null"); }

void check_sk(int s, int k) {
  if (s < 0 || s > 3) throw std::invalid_argument("form degree must be 0..3, got " + std::to_string(s));
  if (k < 1) throw std::invalid_argument("order must be at least 1, got " + std::to_string(k));
}

} // namespace

extern "C" {

const char* pyr_version(void) { return PYR_VERSION; }
const char* pyr_last_error(void) { return last_error.c_str(); }

const char* pyr_status_name(pyr_status s) {
  switch (s) {
    case PYR_OK: return "ok";
    case PYR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PYR_ERR_DOMAIN: return "domain error";
    case PYR_ERR_SINGULAR_POINT: return "singular point";
    case PYR_ERR_REPRESENTATION: return "representation error";
    case PYR_ERR_KIND_MISMATCH: return "kind mismatch";
    case PYR_ERR_DIVERGENCE: return "divergent integral";
    case PYR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pyr_string_free(char* s) { std::free(s); }

pyr_status pyr_dimension(int s, int k, int* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    check_sk(s, k);
    *out = pyr::dimension(s, k);
    return PYR_OK;
  });
}

pyr_status pyr_basis_create(int s, int k, pyr_basis** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_sk(s, k);
    *out = new pyr_basis{pyr::basis(s, k)};
    return PYR_OK;
  });
}

pyr_status pyr_basis_from_json(const char* json, pyr_basis** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new pyr_basis{pyr::basis_from_json(json)};
    return PYR_OK;
  });
}

void pyr_basis_destroy(pyr_basis* b) { delete b; }

pyr_status pyr_basis_size(const pyr_basis* b, int* out) {
  if (!b) return null_arg("basis");
  if (!out) return null_arg("out");
  *out = static_cast<int>(b->set.size());
  return PYR_OK;
}

pyr_status pyr_basis_form_degree(const pyr_basis* b, int* s, int* k) {
  if (!b) return null_arg("basis");
  if (s) *s = b->set.s;
  if (k) *k = b->set.k;
  return PYR_OK;
}

pyr_status pyr_basis_to_json(const pyr_basis* b, char** out) {
  if (!b) return null_arg("basis");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup(pyr::basis_to_json(b->set));
    return PYR_OK;
  });
}

pyr_status pyr_basis_equal(const pyr_basis* a, const pyr_basis* b, int* equal) {
  if (!a || !b) return null_arg("basis");
  if (!equal) return null_arg("equal");
  return guarded([&] {
    *equal = pyr::same_basis(a->set, b->set) ? 1 : 0;
    return PYR_OK;
  });
}

pyr_status pyr_basis_tabulate(const pyr_basis* b, const char* points, char** csv, int* row_errors) {
  if (!b) return null_arg("basis");
  if (!points) return null_arg("points");
  if (!csv) return null_arg("csv");
  return guarded([&] {
    auto v = pyr::tabulate_values(b->set, pyr::read_points(points));
    *csv = dup(v.csv);
    if (row_errors) *row_errors = v.row_errors;
    return PYR_OK;
  });
}

pyr_status pyr_vandermonde(int s, int k, pyr_format format, char** out, int* det_sign) {
  if (!out) return null_arg("out");
  return guarded([&] {
    check_sk(s, k);
    const auto& v = pyr::vandermonde_cached(s, k);
    std::string text;
    switch (format) {
      case PYR_FORMAT_JSON: text = pyr::vandermonde_to_json(s, k, v); break;
      case PYR_FORMAT_CSV: text = pyr::vandermonde_to_csv(s, k, v); break;
      case PYR_FORMAT_TEXT: text = pyr::vandermonde_to_text(s, k, v); break;
      default: throw std::invalid_argument("unknown output format");
    }
    if (det_sign) *det_sign = sgn(pyr::determinant(v));
    *out = dup(text);
    return PYR_OK;
  });
}

void pyr_verify_options_default(pyr_verify_options* opt) {
  if (!opt) return;
  pyr::VerifyOptions d;
  opt->max_order = d.max_k;
  opt->quad_points = d.quad_n;
  opt->counterexample_degree = d.counterexample_degree;
  opt->seed = d.seed;
  opt->corrupt_basis = 0;
}

pyr_status pyr_verify(const pyr_verify_options* opt, pyr_report** out) {
  if (!opt) return null_arg("options");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    if (opt->max_order < 1) throw std::invalid_argument("max order must be at least 1");
    if (opt->quad_points < 0) throw std::invalid_argument("quadrature points must be nonnegative");
    if (opt->counterexample_degree < 0) throw std::invalid_argument("counterexample degree must be nonnegative");
    pyr::VerifyOptions o;
    o.max_k = opt->max_order;
    o.quad_n = opt->quad_points;
    o.counterexample_degree = opt->counterexample_degree;
    o.seed = opt->seed;
    o.corrupt_basis = opt->corrupt_basis != 0;
    *out = new pyr_report{pyr::verify_all(o)};
    return PYR_OK;
  });
}

pyr_status pyr_counterexample(int degree, pyr_report** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    if (degree < 0) throw std::invalid_argument("counterexample degree must be nonnegative");
    pyr::VerificationReport r;
    r.checks = pyr::counterexample_demo(degree);
    *out = new pyr_report{std::move(r)};
    return PYR_OK;
  });
}

void pyr_report_destroy(pyr_report* r) { delete r; }

pyr_status pyr_report_passed(const pyr_report* r, int* passed) {
  if (!r) return null_arg("report");
  if (!passed) return null_arg("passed");
  *passed = r->report.passed() ? 1 : 0;
  return PYR_OK;
}

pyr_status pyr_report_render(const pyr_report* r, pyr_format format, char** out) {
  if (!r) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] {
    switch (format) {
      case PYR_FORMAT_JSON: *out = dup(pyr::report_to_json(r->report)); break;
      case PYR_FORMAT_CSV: *out = dup(pyr::report_to_csv(r->report)); break;
      case PYR_FORMAT_TEXT: *out = dup(pyr::report_to_text(r->report)); break;
      default: throw std::invalid_argument("unknown output format");
    }
    return PYR_OK;
  });
}

pyr_status pyr_report_failures(const pyr_report* r, char** out) {
  if (!r) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::string s;
    for (const auto& c : r->report.checks)
      if (c.status == pyr::CheckStatus::Fail) {
        s += c.name;
        if (c.s >= 0) s += " s=" + std::to_string(c.s);
        if (c.k > 0) s += " k=" + std::to_string(c.k);
        s += "\n";
      }
    *out = dup(s);
    return PYR_OK;
  });
}

} // extern "C"
