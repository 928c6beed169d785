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

#ifndef EULB_CHANNELS_HPP
#define EULB_CHANNELS_HPP

#include <vector>

#include "eulb/matrix.hpp"
#include "eulb/states.hpp"

namespace eulb {

enum class ChannelKind { Identity, AD, GAD, Depolarizing };

/// A CPTP map as an explicit Kraus list: sum_i K_i^dag K_i = I within 1e-12.
struct KrausChannel {
  ChannelKind kind = ChannelKind::Identity;
  double p = 0.0;  // transition probability (unused for Depolarizing)
  double r = 0.0;  // excitation-loss / mixing probability
  std::vector<ComplexMatrix> ops;
};

KrausChannel identity_channel();

/// Zero-temperature decay with transition probability p.
KrausChannel amplitude_damping(double p);

/// Finite-temperature damping: excitation lost with probability r,
/// gained with probability 1-r. r = 1 reduces to amplitude_damping(p).
KrausChannel generalized_amplitude_damping(double p, double r);

/// White noise with probability r: sqrt(1-r) I plus sqrt(r/3) Pauli terms.
KrausChannel depolarizing(double r);

/// Apply a single-qubit channel to a 2x2 state.
ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausChannel& ch);

/// Independent local noise on a two-qubit state:
/// sum_{i,j} (K_i (x) K_j) rho (K_i (x) K_j)^dag over all Kraus pairs.
DensityMatrix apply_local(const DensityMatrix& rho, const KrausChannel& chA,
                          const KrausChannel& chB);

}  // namespace eulb

#endif  // EULB_CHANNELS_HPP
