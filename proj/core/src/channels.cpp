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

#include "eulb/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace eulb {

namespace {

void check_prob(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) +
                                " must lie in [0,1], got " + std::to_string(v));
  }
}

}  // namespace

KrausChannel identity_channel() {
  return {ChannelKind::Identity, 0.0, 0.0, {id2()}};
}

KrausChannel amplitude_damping(double p) {
  check_prob(p, "p");
  const double sq = std::sqrt(1.0 - p);
  const double sp = std::sqrt(p);
  return {ChannelKind::AD,
          p,
          0.0,
          {ComplexMatrix(2, {1, 0, 0, sq}), ComplexMatrix(2, {0, sp, 0, 0})}};
}

KrausChannel generalized_amplitude_damping(double p, double r) {
  check_prob(p, "p");
  check_prob(r, "r");
  const double sr = std::sqrt(r);
  const double sbar = std::sqrt(1.0 - r);
  const double sq = std::sqrt(1.0 - p);
  const double sp = std::sqrt(p);
  return {ChannelKind::GAD,
          p,
          r,
          {ComplexMatrix(2, {sr, 0, 0, sr * sq}),
           ComplexMatrix(2, {0, sr * sp, 0, 0}),
           ComplexMatrix(2, {sbar * sq, 0, 0, sbar}),
           ComplexMatrix(2, {0, 0, sbar * sp, 0})}};
}

KrausChannel depolarizing(double r) {
  check_prob(r, "r");
  const double s0 = std::sqrt(1.0 - r);
  const double s = std::sqrt(r / 3.0);
  return {ChannelKind::Depolarizing,
          0.0,
          r,
          {scale(id2(), s0), scale(pauli_x(), s), scale(pauli_y(), s),
           scale(pauli_z(), s)}};
}

ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausChannel& ch) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("apply_channel requires a 2x2 state");
  }
  ComplexMatrix out(2);
  for (const auto& k : ch.ops) {
    out = add(out, mul(mul(k, rho), dagger(k)));
  }
  return out;
}

DensityMatrix apply_local(const DensityMatrix& rho, const KrausChannel& chA,
                          const KrausChannel& chB) {
  ComplexMatrix out(4);
  for (const auto& ka : chA.ops) {
    for (const auto& kb : chB.ops) {
      const ComplexMatrix k = kron(ka, kb);
      out = add(out, mul(mul(k, rho.mat), dagger(k)));
    }
  }
  return make_density(out);
}

}  // namespace eulb
