// Copyright 2026 The eulbsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eulb/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace eulb {

namespace {

double entropy_of_spectrum(const std::vector<double>& lam) {
  double s = 0.0;
  for (double l : lam) {
    if (l < -1e-9) {
      throw std::invalid_argument(
          "entropy: state has eigenvalue below -1e-9: " + std::to_string(l));
    }
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace

double von_neumann(const DensityMatrix& rho) {
  return entropy_of_spectrum(hermitian_eig(rho.mat).eigenvalues);
}

double conditional_entropy(const DensityMatrix& rhoAB) {
  const DensityMatrix rhoB{partial_trace(rhoAB.mat, Subsystem::B)};
  return von_neumann(rhoAB) - von_neumann(rhoB);
}

double complementarity(const ObservablePair& obs) {
  if (!obs.q_basis.is_orthonormal() || !obs.r_basis.is_orthonormal()) {
    throw std::invalid_argument("complementarity: bases must be orthonormal");
  }
  double c = 0.0;
  for (const QubitVector& q : {obs.q_basis.v0, obs.q_basis.v1}) {
    for (const QubitVector& r : {obs.r_basis.v0, obs.r_basis.v1}) {
      const Complex ov = std::conj(q[0]) * r[0] + std::conj(q[1]) * r[1];
      c = std::max(c, std::norm(ov));
    }
  }
  return c;
}

double eulb(const DensityMatrix& rhoAB, const ObservablePair& obs) {
  return std::log2(1.0 / complementarity(obs)) + conditional_entropy(rhoAB);
}

double uncertainty_lhs(const DensityMatrix& rhoAB, const ObservablePair& obs) {
  const double sq = conditional_entropy(project_measure(rhoAB, obs.q_basis));
  const double sr = conditional_entropy(project_measure(rhoAB, obs.r_basis));
  return sq + sr;
}

double shannon(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < -1e-12) {
      throw std::invalid_argument("shannon: negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("shannon: probabilities must sum to 1");
  }
  double s = 0.0;
  for (double p : probs) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace eulb
