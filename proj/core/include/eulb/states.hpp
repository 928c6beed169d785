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

#ifndef EULB_STATES_HPP
#define EULB_STATES_HPP

#include <stdexcept>

#include "eulb/matrix.hpp"

namespace eulb {

/// Thrown when a constructed matrix fails the density-matrix invariants.
class not_a_state_error : public std::runtime_error {
 public:
  not_a_state_error(const std::string& what, double offending_eigenvalue)
      : std::runtime_error(what), offending_eigenvalue_(offending_eigenvalue) {}
  double offending_eigenvalue() const { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_;
};

/// A 2x2 or 4x4 density matrix. Hermitian within 1e-10, unit trace within
/// 1e-10, smallest eigenvalue >= -1e-9.
struct DensityMatrix {
  ComplexMatrix mat;
};

struct ValidationReport {
  double hermiticity_defect = 0.0;  // max-abs of rho - rho^dag
  double trace_defect = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;
  bool pass = false;
};

ValidationReport validate_density(const ComplexMatrix& rho);

/// Validates and wraps; throws not_a_state_error on failure.
DensityMatrix make_density(const ComplexMatrix& rho);

/// Correlation coefficients of a Bell-diagonal state. Valid iff the four
/// Bell-basis eigenvalues (1 +- c1 -+ c2 +- c3)/4 are all nonnegative.
struct BellDiagonalParams {
  double c1, c2, c3;
};

struct XStateParams {
  double p;
};

/// (1/4)(I (x) I + sum_i c_i sigma_i (x) sigma_i). Both marginals are I/2.
DensityMatrix bell_diagonal(const BellDiagonalParams& c);

/// One-parameter Bell-diagonal family c = (1-2p, -p, -p), p in [0,1].
/// Spectrum {p, (1-p)/2, (1-p)/2, 0}; p = 1 is the singlet.
DensityMatrix bell_diagonal_p(double p);

/// p |psi+><psi+| + (1-p) |11><11| with |psi+> = (|01>+|10>)/sqrt(2).
DensityMatrix x_state(const XStateParams& params);

/// The singlet |Psi-><Psi-|, |Psi-> = (|01>-|10>)/sqrt(2).
DensityMatrix singlet();

}  // namespace eulb

#endif  // EULB_STATES_HPP
