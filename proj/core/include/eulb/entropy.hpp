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

#ifndef EULB_ENTROPY_HPP
#define EULB_ENTROPY_HPP

#include <vector>

#include "eulb/protocol.hpp"
#include "eulb/states.hpp"

namespace eulb {

/// Von Neumann entropy -tr(rho log2 rho) in bits. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything below -1e-9 is an error.
double von_neumann(const DensityMatrix& rho);

/// S(A|B) = S(AB) - S(B) for a two-qubit state.
double conditional_entropy(const DensityMatrix& rhoAB);

/// c = max_{i,j} |<q_i|r_j>|^2; in [1/2, 1] for qubit bases.
double complementarity(const ObservablePair& obs);

/// log2(1/c) + S(A|B). Not clamped; can be negative in principle.
double eulb(const DensityMatrix& rhoAB, const ObservablePair& obs);

/// S(Q|B) + S(R|B), each term from Alice's projective measurement
/// followed by the conditional entropy.
double uncertainty_lhs(const DensityMatrix& rhoAB, const ObservablePair& obs);

/// Shannon entropy in bits of a probability vector.
double shannon(const std::vector<double>& probs);

}  // namespace eulb

#endif  // EULB_ENTROPY_HPP
