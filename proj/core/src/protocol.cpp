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

#include "eulb/protocol.hpp"

#include <cmath>

namespace eulb {

namespace {

Complex dot(const QubitVector& a, const QubitVector& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

void check_filter_param(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) +
                                " must be finite and >= 0");
  }
}

}  // namespace

bool QubitBasis::is_orthonormal(double tol) const {
  return std::abs(dot(v0, v0) - Complex(1.0)) <= tol &&
         std::abs(dot(v1, v1) - Complex(1.0)) <= tol &&
         std::abs(dot(v0, v1)) <= tol;
}

QubitBasis sigma_x_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}

QubitBasis sigma_y_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, Complex(0, s)}, {s, Complex(0, -s)}};
}

QubitBasis sigma_z_basis() { return {{1, 0}, {0, 1}}; }

ComplexMatrix weak_filter(double m1, double m2) {
  check_filter_param(m1, "m1");
  check_filter_param(m2, "m2");
  return ComplexMatrix::diagonal({1.0, m2, m1, m1 * m2});
}

ComplexMatrix reversal_filter(double n1, double n2) {
  check_filter_param(n1, "n1");
  check_filter_param(n2, "n2");
  return ComplexMatrix::diagonal({n1 * n2, n1, n2, 1.0});
}

std::pair<DensityMatrix, double> apply_filter(const DensityMatrix& rho,
                                              const ComplexMatrix& f) {
  // Work with F scaled to unit max entry; the scale cancels in the
  // normalized state, and the success probability recovers it.
  const double fmax = f.max_abs();
  if (fmax <= 0.0) {
    throw filter_annihilation_error("filter is identically zero");
  }
  const ComplexMatrix fs = scale(f, 1.0 / fmax);
  const ComplexMatrix num = mul(mul(fs, rho.mat), dagger(fs));
  const double tr_scaled = trace(num).real();
  const double success = tr_scaled * fmax * fmax;
  if (success < 1e-12) {
    throw filter_annihilation_error(
        "filter annihilates the state (tr(F rho F^dag) = " +
        std::to_string(success) + ")");
  }
  return {make_density(scale(num, 1.0 / tr_scaled)), success};
}

PipelineReport run_pipeline(const DensityMatrix& rho0, const FilterParams& f,
                            const KrausChannel& chA, const KrausChannel& chB) {
  auto [rho1, p_weak] = apply_filter(rho0, weak_filter(f.m1, f.m2));
  DensityMatrix rho2 = apply_local(rho1, chA, chB);
  auto [rho3, p_rev] = apply_filter(rho2, reversal_filter(f.n1, f.n2));
  return {std::move(rho1), std::move(rho2), std::move(rho3), p_weak, p_rev};
}

DensityMatrix project_measure(const DensityMatrix& rho,
                              const QubitBasis& basis) {
  if (!basis.is_orthonormal()) {
    throw std::invalid_argument("project_measure: basis is not orthonormal");
  }
  ComplexMatrix out(4);
  for (const QubitVector& v : {basis.v0, basis.v1}) {
    ComplexMatrix proj(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) proj(i, j) = v[i] * std::conj(v[j]);
    const ComplexMatrix p = kron(proj, id2());
    out = add(out, mul(mul(p, rho.mat), p));
  }
  return make_density(out);
}

}  // namespace eulb
