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

#ifndef EULB_PROTOCOL_HPP
#define EULB_PROTOCOL_HPP

#include <array>
#include <stdexcept>

#include "eulb/channels.hpp"
#include "eulb/matrix.hpp"
#include "eulb/states.hpp"

namespace eulb {

/// Thrown when a filter maps the entire support of a state to zero
/// (normalization trace below 1e-12).
class filter_annihilation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using QubitVector = std::array<Complex, 2>;

/// An orthonormal single-qubit basis {|o_0>, |o_1>}.
struct QubitBasis {
  QubitVector v0, v1;

  bool is_orthonormal(double tol = 1e-12) const;
};

QubitBasis sigma_x_basis();
QubitBasis sigma_y_basis();
QubitBasis sigma_z_basis();

/// Eigenbases of the two observables Alice measures.
struct ObservablePair {
  QubitBasis q_basis;
  QubitBasis r_basis;
};

/// Weak-measurement strengths (m1, m2) and reversal strengths (n1, n2),
/// qubit A first. All finite and >= 0; values > 1 are admitted.
struct FilterParams {
  double m1 = 1.0, m2 = 1.0;
  double n1 = 1.0, n2 = 1.0;
};

struct PipelineReport {
  DensityMatrix state_after_weak;
  DensityMatrix state_after_noise;
  DensityMatrix state_after_reversal;
  double weak_success_prob = 1.0;
  double reversal_success_prob = 1.0;
};

/// diag(1, m1) (x) diag(1, m2) = diag(1, m2, m1, m1*m2).
ComplexMatrix weak_filter(double m1, double m2);

/// diag(n1, 1) (x) diag(n2, 1) = diag(n1*n2, n1, n2, 1).
ComplexMatrix reversal_filter(double n1, double n2);

/// F rho F^dag / tr(F rho F^dag) plus the normalization trace. The filter
/// is rescaled by its max entry first so huge reversal strengths stay in
/// range; the rescale cancels between numerator and denominator except in
/// the reported success probability, which is computed from the unscaled F.
std::pair<DensityMatrix, double> apply_filter(const DensityMatrix& rho,
                                              const ComplexMatrix& f);

/// Weak measurement, local decoherence, measurement reversal, in that order.
PipelineReport run_pipeline(const DensityMatrix& rho0, const FilterParams& f,
                            const KrausChannel& chA, const KrausChannel& chB);

/// Alice's projective measurement on qubit A:
/// sum_i (|o_i><o_i| (x) I) rho (|o_i><o_i| (x) I).
DensityMatrix project_measure(const DensityMatrix& rho,
                              const QubitBasis& basis);

}  // namespace eulb

#endif  // EULB_PROTOCOL_HPP
