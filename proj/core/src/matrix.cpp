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

#include "eulb/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eulb {

namespace {

void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("matrix dimension must be 2 or 4, got " +
                                std::to_string(dim));
  }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim,
                             const std::vector<Complex>& entries)
    : dim_(dim) {
  check_dim(dim);
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("entry count does not match dimension");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag())) {
      throw std::invalid_argument("non-finite matrix entry at index " +
                                  std::to_string(i));
    }
    e_[i] = entries[i];
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i].real()) || !std::isfinite(d[i].imag())) {
      throw std::invalid_argument("non-finite diagonal entry");
    }
    m(i, i) = d[i];
  }
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
        return false;
      }
    }
  }
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(e_[i]));
  return m;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b);
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex s) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

Complex trace(const ComplexMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("kron requires 2x2 factors");
  }
  ComplexMatrix c(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          c(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("partial_trace requires a 4x4 matrix");
  }
  ComplexMatrix r(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 2; ++k) {
        s += (keep == Subsystem::A) ? rho(2 * i + k, 2 * j + k)
                                    : rho(2 * k + i, 2 * k + j);
      }
      r(i, j) = s;
    }
  }
  return r;
}

std::vector<Complex> HermitianSpectrum::eigenvector(std::size_t k) const {
  std::vector<Complex> v(vectors.dim());
  for (std::size_t i = 0; i < vectors.dim(); ++i) v[i] = vectors(i, k);
  return v;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// Annihilate h(p,q) with a unitary Givens-type rotation; the same rotation
// accumulates into v. The rotation is the phase similarity that makes the
// off-diagonal real followed by a real Jacobi angle.
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p,
                   std::size_t q) {
  const Complex hpq = h(p, q);
  const double mag = std::abs(hpq);
  if (mag == 0.0) return;
  const Complex phase = hpq / mag;  // e^{i beta}

  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  // Column rotation G: identity except
  //   G(p,p)=c, G(p,q)=-s*phase, G(q,p)=s*conj(phase), G(q,q)=c
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex hip = h(i, p);
    const Complex hiq = h(i, q);
    h(i, p) = c * hip + s * std::conj(phase) * hiq;
    h(i, q) = -s * phase * hip + c * hiq;
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip + s * std::conj(phase) * viq;
    v(i, q) = -s * phase * vip + c * viq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex hpj = h(p, j);
    const Complex hqj = h(q, j);
    h(p, j) = c * hpj + s * phase * hqj;
    h(q, j) = -s * std::conj(phase) * hpj + c * hqj;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
}

}  // namespace

HermitianSpectrum hermitian_eig(const ComplexMatrix& h_in) {
  if (!h_in.is_hermitian(1e-10)) {
    throw std::invalid_argument("hermitian_eig: input is not Hermitian");
  }
  const std::size_t n = h_in.dim();
  ComplexMatrix h = h_in;
  // Symmetrize away the sub-tolerance asymmetry so diagonals are real.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
    h(i, i) = h(i, i).real();
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr double kConvergence = 1e-12;
  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(h) < kConvergence) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
  }
  if (!converged && offdiag_frobenius(h) >= kConvergence) {
    throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h(a, a).real() > h(b, b).real();
  });

  HermitianSpectrum spec{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    spec.eigenvalues[k] = h(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) spec.vectors(i, k) = v(i, order[k]);
  }
  return spec;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m(2, {0, 1, 1, 0});
  return m;
}
const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m(2, {0, Complex(0, -1), Complex(0, 1), 0});
  return m;
}
const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m(2, {1, 0, 0, -1});
  return m;
}
const ComplexMatrix& id2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}
const ComplexMatrix& id4() {
  static const ComplexMatrix m = ComplexMatrix::identity(4);
  return m;
}

}  // namespace eulb
