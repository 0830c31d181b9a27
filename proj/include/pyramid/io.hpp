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

#ifndef PYRAMID_IO_HPP
#define PYRAMID_IO_HPP

#include "pyramid/interp.hpp"

#include <string>
#include <vector>

namespace pyr {

// JSON strings use sorted keys and "num/den" rationals, so equal inputs give
// byte-identical output.
std::string basis_to_json(const BasisSet& b);
// Throws std::invalid_argument on malformed input.
BasisSet basis_from_json(const std::string& json);
bool same_basis(const BasisSet& a, const BasisSet& b);

// Labels used for Vandermonde rows and columns.
std::string dof_label(const DofFunctional& m);
std::string shape_label(const ShapeFunction& f);

std::string vandermonde_to_json(int s, int k, const QMatrix& v);
std::string vandermonde_to_csv(int s, int k, const QMatrix& v);
std::string vandermonde_to_text(int s, int k, const QMatrix& v);

// Reads "xi,eta,zeta" rows; entries are integers, fractions or decimals.
// Blank lines and lines starting with '#' are skipped.
std::vector<std::array<std::string, 3>> read_points(const std::string& text);
// Accepts "n", "n/d" and decimal notation (converted exactly).
Rational parse_number(const std::string& s);

struct PointValues {
  std::string csv;   // point,xi,eta,zeta,function,entity,component,value,status
  int row_errors = 0;
};
// Values of every basis function at each point of the finite pyramid. At the
// apex, components whose limit depends on the direction are reported as
// "trace-only"; points outside the pyramid yield one error row each.
PointValues tabulate_values(const BasisSet& b, const std::vector<std::array<std::string, 3>>& points);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);

} // namespace pyr

#endif
