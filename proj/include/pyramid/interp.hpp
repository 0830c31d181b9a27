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

#ifndef PYRAMID_INTERP_HPP
#define PYRAMID_INTERP_HPP

#include "pyramid/dofs.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace pyr {

struct Interpolant {
  int s = 0, k = 0;
  bool exact = true;
  std::vector<Rational> coefficients;       // exact path
  std::vector<double> numeric_coefficients; // numeric path (also filled on the exact path)
  std::vector<Rational> residual_dofs;      // m(u) - m(Pi u), exact path
  std::vector<double> numeric_residual_dofs;

  // Sum of coefficients times the finite basis fields (exact path only).
  FormField field() const;
  // Point value of Pi u on the finite pyramid (either path).
  std::vector<double> value(double xi, double eta, double zeta) const;
};

// Inverse of vandermonde(s,k), cached per process.
const QMatrix& inverse_vandermonde(int s, int k);

Interpolant interpolate(int s, int k, const FormField& u);
// n <= 0 selects default_quadrature_points(k).
Interpolant interpolate(int s, int k, const SmoothField& u, int n = 0);

// Coefficients of d(phi_j), phi_j in basis(s,k), in basis(s+1,k).
const QMatrix& derivative_matrix(int s, int k);

enum class CheckStatus { Pass, Fail, Skipped };
const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  int criterion = 0; // acceptance criterion number, 0 for auxiliary checks
  int s = -1, k = 0; // k = 0: not tied to an order
  CheckStatus status = CheckStatus::Pass;
  std::map<std::string, std::string> witness;
  double measured = 0; // largest defect for tolerance-based checks
  std::string message;
  double seconds = 0;
};

struct VerifyOptions {
  int max_k = 4;
  int commuting_max_k = 3;
  int quadrature_max_k = 3;
  int quad_n = 0;              // 0: default_quadrature_points(k)
  int counterexample_degree = 10;
  std::uint64_t seed = 20240601;
  int random_fields = 50;
  bool corrupt_basis = false;  // negative control for the unisolvency check
};

struct VerificationReport {
  int max_k = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

std::vector<CheckResult> verify_dimensions(int k);
std::vector<CheckResult> verify_unisolvency(int k, bool corrupt_basis = false);
std::vector<CheckResult> verify_exact_sequence(int k);
std::vector<CheckResult> verify_commuting(int k);
std::vector<CheckResult> verify_commuting_numeric(int k, int quad_n = 0);
std::vector<CheckResult> verify_helmholtz(int k, std::uint64_t seed);
std::vector<CheckResult> verify_polynomial_reproduction(int k);
std::vector<CheckResult> verify_lowest_order();
std::vector<CheckResult> verify_traces(int k);
std::vector<CheckResult> counterexample_demo(int max_degree = 10);
std::vector<CheckResult> verify_quadrature_fidelity(int k, std::uint64_t seed, int fields = 50, int quad_n = 0);

VerificationReport verify_all(const VerifyOptions& opt);

// The function xi zeta (xi+zeta-1)(eta+zeta-1)/(1-zeta) on the finite pyramid.
FormField counterexample_function();

// Lowest-order reference lists on the infinite pyramid.
std::vector<FormField> lowest_order_pi();
std::vector<FormField> lowest_order_gamma();
std::vector<FormField> lowest_order_zeta();

} // namespace pyr

#endif
