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

#include <random>

#include "doctest.h"
#include "eulb/protocol.hpp"
#include "test_util.hpp"

using namespace eulb;
using testutil::max_abs_diff;

TEST_CASE("weak filter") {
  CHECK(max_abs_diff(weak_filter(1, 1), id4()) == 0.0);
  CHECK(max_abs_diff(weak_filter(0, 1),
                     ComplexMatrix::diagonal({1, 1, 0, 0})) == 0.0);
  CHECK(max_abs_diff(weak_filter(0.5, 2),
                     ComplexMatrix::diagonal({1, 2, 0.5, 1})) == 0.0);
  CHECK_THROWS_AS(weak_filter(-0.5, 1), std::invalid_argument);
}

TEST_CASE("reversal filter") {
  CHECK(max_abs_diff(reversal_filter(1, 1), id4()) == 0.0);
  CHECK(max_abs_diff(reversal_filter(2, 3),
                     ComplexMatrix::diagonal({6, 2, 3, 1})) == 0.0);
  CHECK_THROWS_AS(reversal_filter(1, -1), std::invalid_argument);

  // Reversal undoes the weak measurement exactly when n = m.
  const double m = 0.4, n = 0.4;
  const auto comp = mul(reversal_filter(n, 1), weak_filter(m, 1));
  CHECK(max_abs_diff(comp, ComplexMatrix::diagonal({n, n, m, m})) < 1e-15);
}

TEST_CASE("apply_filter") {
  std::mt19937_64 rng(3);
  const auto rho = testutil::random_density(4, rng);
  const auto [same, p] = apply_filter(rho, id4());
  CHECK(max_abs_diff(same.mat, rho.mat) < 1e-14);
  CHECK(p == doctest::Approx(1.0).epsilon(1e-12));

  // Projecting qubit A of |psi+> onto |0> leaves |01> with probability 1/2.
  const auto psi_plus = x_state({1.0});
  const auto [proj, half] = apply_filter(psi_plus, weak_filter(0, 1));
  ComplexMatrix expect(4);
  expect(1, 1) = 1.0;
  CHECK(max_abs_diff(proj.mat, expect) < 1e-14);
  CHECK(half == doctest::Approx(0.5).epsilon(1e-12));

  // The same filter annihilates |11><11| entirely.
  CHECK_THROWS_AS(apply_filter(x_state({0.0}), weak_filter(0, 1)),
                  filter_annihilation_error);
}

TEST_CASE("apply_filter success probability range") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int it = 0; it < 200; ++it) {
    const auto rho = testutil::random_density(4, rng);
    const auto [out, p] = apply_filter(rho, weak_filter(u(rng), u(rng)));
    CHECK(p > 0.0);
    CHECK(p <= 1.0 + 1e-12);
    CHECK(std::abs(trace(out.mat).real() - 1.0) < 1e-12);
  }
  // Strengths above one can amplify; only finiteness holds there.
  const auto rho = testutil::random_density(4, rng);
  const auto [out, p] = apply_filter(rho, reversal_filter(15365.6, 9619.9));
  CHECK(std::isfinite(p));
  CHECK(std::abs(trace(out.mat).real() - 1.0) < 1e-12);
}

TEST_CASE("run_pipeline no-op and composition") {
  std::mt19937_64 rng(7);
  const auto rho = testutil::random_density(4, rng);
  const auto id = identity_channel();
  const auto rep = run_pipeline(rho, {1, 1, 1, 1}, id, id);
  CHECK(max_abs_diff(rep.state_after_reversal.mat, rho.mat) < 1e-13);
  CHECK(rep.weak_success_prob == doctest::Approx(1.0));
  CHECK(rep.reversal_success_prob == doctest::Approx(1.0));

  // Identity filters reduce the pipeline to the channel alone.
  const auto chA = generalized_amplitude_damping(0.9, 0.1);
  const auto chB = generalized_amplitude_damping(0.9, 0.4);
  const auto rep2 = run_pipeline(rho, {1, 1, 1, 1}, chA, chB);
  CHECK(max_abs_diff(rep2.state_after_reversal.mat,
                     apply_local(rho, chA, chB).mat) < 1e-12);
}

TEST_CASE("noiseless reversal restores the singlet") {
  const auto id = identity_channel();
  for (int i = 1; i <= 9; ++i) {
    const double m = i / 10.0;
    const auto rep = run_pipeline(singlet(), {m, 1, m, 1}, id, id);
    CHECK(max_abs_diff(rep.state_after_reversal.mat, singlet().mat) < 1e-12);
  }
}

TEST_CASE("pipeline intermediate states validate") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int it = 0; it < 100; ++it) {
    const auto rho = testutil::random_density(4, rng);
    const auto chA = generalized_amplitude_damping(u(rng), u(rng));
    const auto chB = depolarizing(u(rng));
    const auto rep = run_pipeline(
        rho, {0.1 + u(rng), 1.0, 0.1 + 3 * u(rng), 0.1 + 3 * u(rng)}, chA,
        chB);
    CHECK(validate_density(rep.state_after_weak.mat).pass);
    CHECK(validate_density(rep.state_after_noise.mat).pass);
    CHECK(validate_density(rep.state_after_reversal.mat).pass);
  }
}

TEST_CASE("project_measure") {
  // sigma_z on the singlet gives perfect anticorrelation.
  ComplexMatrix anti(4);
  anti(1, 1) = 0.5;
  anti(2, 2) = 0.5;
  CHECK(max_abs_diff(project_measure(singlet(), sigma_z_basis()).mat, anti) <
        1e-14);

  // The maximally mixed state is a fixed point in any basis.
  const auto mixed = make_density(scale(id4(), 0.25));
  for (const auto& basis :
       {sigma_x_basis(), sigma_y_basis(), sigma_z_basis()}) {
    CHECK(max_abs_diff(project_measure(mixed, basis).mat, mixed.mat) < 1e-13);
  }

  // sigma_x on (I + sx (x) sx)/4: direct projector-sum evaluation gives an
  // equal mixture of |++> and |-->.
  const auto rho = bell_diagonal_p(0.0);
  const auto out = project_measure(rho, sigma_x_basis());
  const auto plus = sigma_x_basis().v0;
  const auto minus = sigma_x_basis().v1;
  ComplexMatrix expect(4);
  for (const auto& v : {plus, minus}) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        expect(i, j) += 0.5 * v[i / 2] * v[i % 2] * std::conj(v[j / 2]) *
                        std::conj(v[j % 2]);
  }
  CHECK(max_abs_diff(out.mat, expect) < 1e-13);

  CHECK_THROWS_AS(
      project_measure(mixed, QubitBasis{{1.0, 0.0}, {0.5, 0.5}}),
      std::invalid_argument);
}

TEST_CASE("project_measure is idempotent") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    const auto rho = testutil::random_density(4, rng);
    for (const auto& basis : {sigma_x_basis(), sigma_z_basis()}) {
      const auto once = project_measure(rho, basis);
      const auto twice = project_measure(once, basis);
      CHECK(max_abs_diff(once.mat, twice.mat) < 1e-12);
    }
  }
}
