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

#include "eulb/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace eulb {

namespace {
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdFloor = -1e-9;
}  // namespace

ValidationReport validate_density(const ComplexMatrix& rho) {
  ValidationReport rep;
  const ComplexMatrix defect = sub(rho, dagger(rho));
  rep.hermiticity_defect = defect.max_abs();
  rep.trace_defect = std::abs(trace(rho) - Complex(1.0));

  if (rep.hermiticity_defect <= kHermTol) {
    const auto spec = hermitian_eig(rho);
    rep.min_eigenvalue = spec.eigenvalues.back();
  } else {
    rep.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }

  rep.pass = rep.hermiticity_defect <= kHermTol &&
             rep.trace_defect <= kTraceTol &&
             rep.min_eigenvalue >= kPsdFloor;
  return rep;
}

DensityMatrix make_density(const ComplexMatrix& rho) {
  const ValidationReport rep = validate_density(rho);
  if (!rep.pass) {
    throw not_a_state_error(
        "not a density matrix (hermiticity defect " +
            std::to_string(rep.hermiticity_defect) + ", trace defect " +
            std::to_string(rep.trace_defect) + ", min eigenvalue " +
            std::to_string(rep.min_eigenvalue) + ")",
        rep.min_eigenvalue);
  }
  return DensityMatrix{rho};
}

DensityMatrix bell_diagonal(const BellDiagonalParams& c) {
  // Bell-basis eigenvalues; all four must be nonnegative (tetrahedron).
  const double lam[4] = {(1.0 - c.c1 - c.c2 - c.c3) / 4.0,
                         (1.0 - c.c1 + c.c2 + c.c3) / 4.0,
                         (1.0 + c.c1 - c.c2 + c.c3) / 4.0,
                         (1.0 + c.c1 + c.c2 - c.c3) / 4.0};
  const double lmin = *std::min_element(lam, lam + 4);
  if (lmin < -1e-12) {
    throw not_a_state_error(
        "Bell-diagonal parameters outside the tetrahedron (eigenvalue " +
            std::to_string(lmin) + ")",
        lmin);
  }
  ComplexMatrix m = scale(id4(), 0.25);
  m = add(m, scale(kron(pauli_x(), pauli_x()), 0.25 * c.c1));
  m = add(m, scale(kron(pauli_y(), pauli_y()), 0.25 * c.c2));
  m = add(m, scale(kron(pauli_z(), pauli_z()), 0.25 * c.c3));
  return DensityMatrix{m};
}

DensityMatrix bell_diagonal_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bell_diagonal_p: p must lie in [0,1]");
  }
  return bell_diagonal({1.0 - 2.0 * p, -p, -p});
}

DensityMatrix x_state(const XStateParams& params) {
  const double p = params.p;
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("x_state: p must lie in [0,1]");
  }
  ComplexMatrix m(4);
  m(1, 1) = p / 2.0;
  m(2, 2) = p / 2.0;
  m(1, 2) = p / 2.0;
  m(2, 1) = p / 2.0;
  m(3, 3) = 1.0 - p;
  return DensityMatrix{m};
}

DensityMatrix singlet() {
  ComplexMatrix m(4);
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = -0.5;
  m(2, 1) = -0.5;
  return DensityMatrix{m};
}

}  // namespace eulb
