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

#include <cmath>
#include <random>

#include "doctest.h"
#include "eulb/entropy.hpp"
#include "test_util.hpp"

using namespace eulb;

namespace {

const ObservablePair kXZ{sigma_x_basis(), sigma_z_basis()};

// Basis rotated from sigma_z by angle theta on the Bloch sphere equator.
QubitBasis rotated_basis(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{c, s}, {-s, c}};
}

}  // namespace

TEST_CASE("von Neumann entropy fixed values") {
  CHECK(von_neumann(make_density(scale(id2(), 0.5))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann(singlet()) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(von_neumann(x_state({1.0})) == doctest::Approx(0.0).epsilon(1e-9));
  // Spectrum {0.5, 0.25, 0.25, 0} gives 1.5 bits.
  CHECK(von_neumann(bell_diagonal_p(0.5)) ==
        doctest::Approx(1.5).epsilon(1e-10));

  CHECK_THROWS_AS(
      von_neumann(DensityMatrix{ComplexMatrix::diagonal({1.1, -0.1})}),
      std::invalid_argument);
}

TEST_CASE("entropy range over random states") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const double s2 = von_neumann(testutil::random_density(2, rng));
    CHECK(s2 >= -1e-9);
    CHECK(s2 <= 1.0 + 1e-9);
    const double s4 = von_neumann(testutil::random_density(4, rng));
    CHECK(s4 >= -1e-9);
    CHECK(s4 <= 2.0 + 1e-9);
  }
}

TEST_CASE("entropy concavity") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const auto r1 = testutil::random_density(4, rng);
    const auto r2 = testutil::random_density(4, rng);
    const auto mix = make_density(add(scale(r1.mat, 0.5), scale(r2.mat, 0.5)));
    CHECK(von_neumann(mix) >=
          0.5 * von_neumann(r1) + 0.5 * von_neumann(r2) - 1e-9);
  }
}

TEST_CASE("conditional entropy") {
  CHECK(conditional_entropy(singlet()) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(conditional_entropy(make_density(scale(id4(), 0.25))) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(conditional_entropy(bell_diagonal_p(0.5)) ==
        doctest::Approx(0.5).epsilon(1e-10));

  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const double s = conditional_entropy(testutil::random_density(4, rng));
    CHECK(s >= -1.0 - 1e-9);
    CHECK(s <= 1.0 + 1e-9);
  }
}

TEST_CASE("complementarity") {
  CHECK(complementarity(kXZ) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(complementarity({sigma_z_basis(), sigma_z_basis()}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Rotation by pi/3: max(cos^2(pi/6), sin^2(pi/6)) = 3/4.
  CHECK(complementarity({sigma_z_basis(), rotated_basis(M_PI / 3)}) ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("uncertainty bound fixed points") {
  CHECK(eulb::eulb(singlet(), kXZ) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(eulb::eulb(make_density(scale(id4(), 0.25)), kXZ) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(uncertainty_lhs(singlet(), kXZ) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(uncertainty_lhs(make_density(scale(id4(), 0.25)), kXZ) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("measured uncertainty dominates the bound") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int it = 0; it < 300; ++it) {
    const auto rho0 = testutil::random_density(4, rng);
    const auto chA = generalized_amplitude_damping(u(rng), u(rng));
    const auto chB = depolarizing(u(rng));
    const auto rep = run_pipeline(
        rho0, {0.2 + u(rng), 1.0, 0.2 + 2 * u(rng), 0.2 + 2 * u(rng)}, chA,
        chB);
    const auto& rho = rep.state_after_reversal;
    CHECK(uncertainty_lhs(rho, kXZ) >= eulb::eulb(rho, kXZ) - 1e-9);
  }
}

TEST_CASE("measurement cannot lower conditional entropy") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    const auto rho = testutil::random_density(4, rng);
    const double s = conditional_entropy(rho);
    CHECK(conditional_entropy(project_measure(rho, sigma_x_basis())) >=
          s - 1e-9);
    CHECK(conditional_entropy(project_measure(rho, sigma_z_basis())) >=
          s - 1e-9);
  }
}

TEST_CASE("shannon entropy") {
  CHECK(shannon({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(shannon({1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  // Direct evaluation of -sum p log2 p.
  const double expect = -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75));
  CHECK(shannon({0.25, 0.75}) == doctest::Approx(expect).epsilon(1e-12));

  CHECK_THROWS_AS(shannon({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(shannon({1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("Maassen-Uffink bound for mutually unbiased qubit bases") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 1000; ++it) {
    const auto rho = testutil::random_density(2, rng);
    // Measurement statistics in the two default bases.
    auto probs = [&](const QubitBasis& basis) {
      std::vector<double> p;
      for (const auto& v : {basis.v0, basis.v1}) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            s += std::conj(v[i]) * rho.mat(i, j) * v[j];
        p.push_back(s.real());
      }
      return p;
    };
    CHECK(shannon(probs(sigma_x_basis())) + shannon(probs(sigma_z_basis())) >=
          1.0 - 1e-9);
  }
}
