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

#include "pyramid/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pyr {

namespace {

Rule1D golub_welsch(int n, int alpha) {
  // Jacobi weight (1-x)^alpha (1+x)^0 on [-1,1].
  const double a = alpha, b = 0;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double s = 2.0 * i + a + b;
    j(i, i) = (i == 0) ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
    if (i + 1 < n) {
      double m = i + 1, t = 2.0 * m + a + b;
      double off = std::sqrt(4 * m * (m + a) * (m + b) * (m + a + b) / (t * t * (t + 1) * (t - 1)));
      j(i, i + 1) = j(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  // mu0 = int_{-1}^{1} (1-x)^alpha dx
  const double mu0 = std::pow(2.0, a + 1) / (a + 1);
  Rule1D r;
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    r.x.push_back((1 + x) / 2);
    r.w.push_back(mu0 * v * v / std::pow(2.0, a + 1));
  }
  return r;
}

} // namespace

Rule1D gauss_jacobi01(int n, int alpha) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least one point");
  if (alpha < 0) throw std::invalid_argument("Jacobi exponent must be nonnegative");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Rule1D> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, alpha});
  if (it != cache.end()) return it->second;
  return cache.emplace(std::make_pair(n, alpha), golub_welsch(n, alpha)).first->second;
}

NumericQuadrature build_quadrature(int n) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least one point per direction");
  NumericQuadrature q;
  q.n = n;
  q.exact_degree = 2 * n - 1;
  Rule1D g = gauss_jacobi01(n, 0), jc = gauss_jacobi01(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double a = g.x[i], b = g.x[j], c = jc.x[l];
        q.collapsed.push_back({a, b, c});
        q.physical.push_back({(1 - c) * a, (1 - c) * b, c});
        q.weights.push_back(g.w[i] * g.w[j] * jc.w[l]);
      }
  return q;
}

} // namespace pyr
