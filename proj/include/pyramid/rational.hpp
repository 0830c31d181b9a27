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

#ifndef PYRAMID_RATIONAL_HPP
#define PYRAMID_RATIONAL_HPP

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace pyr {

using Rational = mpq_class;
using Point3 = std::array<Rational, 3>;

// Errors raised by the core. Kept distinct so callers can map them to
// exit/error codes without string matching.
struct DomainError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SingularPointError : std::runtime_error { using std::runtime_error::runtime_error; };
struct FrameMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct DivergenceError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SingularIntegrand : std::runtime_error { using std::runtime_error::runtime_error; };
struct RepresentationError : std::runtime_error { using std::runtime_error::runtime_error; };
struct KindMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct InternalError : std::logic_error { using std::logic_error::logic_error; };

// "num/den" with den > 0; integers keep the "/1".
std::string to_string(const Rational& q);
// Accepts "n", "n/d" and "-n/d".
Rational parse_rational(const std::string& s);

Rational factorial(int n);

} // namespace pyr

#endif
