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

#ifndef EULB_MATRIX_HPP
#define EULB_MATRIX_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace eulb {

using Complex = std::complex<double>;

/// Which subsystem of a two-qubit state to keep when tracing out the other.
/// Basis convention throughout: {|00>, |01>, |10>, |11>}, qubit A is the
/// left tensor factor.
enum class Subsystem { A, B };

/// Dense complex matrix fixed to dimension 2 or 4, row-major storage.
/// Construction rejects non-finite entries and any other dimension.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);  // zero-initialized
  ComplexMatrix(std::size_t dim, const std::vector<Complex>& entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return e_[i * dim_ + j];
  }

  bool is_hermitian(double tol = 1e-10) const;
  double max_abs() const;

 private:
  std::size_t dim_;
  std::array<Complex, 16> e_{};  // first dim_^2 entries used
};

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex s);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Kronecker product of two 2x2 matrices; the first argument is the
/// qubit-A (left) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one qubit of a 4x4 matrix, keeping the named subsystem.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// Full spectrum of a Hermitian matrix. Eigenvalues sorted descending;
/// eigenvectors(k) is the orthonormal column for eigenvalues[k].
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;  // columns are eigenvectors

  std::vector<Complex> eigenvector(std::size_t k) const;
};

/// Cyclic complex Jacobi diagonalization. Off-diagonal Frobenius norm is
/// driven below 1e-12 (hard cap 100 sweeps, throws on non-convergence).
/// Throws if the input deviates from Hermitian by more than 1e-10.
HermitianSpectrum hermitian_eig(const ComplexMatrix& h);

// Pauli matrices and 2x2/4x4 identities.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& id2();
const ComplexMatrix& id4();

}  // namespace eulb

#endif  // EULB_MATRIX_HPP
