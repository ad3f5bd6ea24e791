// Copyright 2026 The qprob Authors
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

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qprob {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Structural tolerance used when a caller does not supply one.
inline constexpr double kDefaultTol = 1e-9;

/// Throws NotSquare / NonFinite unless `a` is a square matrix of finite entries.
void require_valid(const Operator &a);

Operator identity(std::size_t dim);
Operator adjoint(const Operator &a);
Complex trace(const Operator &a);

/// |u><v|
Operator outer_product(const Vector &u, const Vector &v);

/// <u, v>, antilinear in the first argument.
Complex inner(const Vector &u, const Vector &v);

// Entrywise max |A - A^dagger|.
double hermitian_gap(const Operator &a);

bool is_hermitian(const Operator &a, double tol = kDefaultTol);
bool is_psd(const Operator &a, double tol = kDefaultTol);
bool is_projection(const Operator &a, double tol = kDefaultTol);
bool is_unit(const Vector &v, double tol = kDefaultTol);

/// Largest entrywise |a - b|. Dimensions must agree.
double max_abs_diff(const Operator &a, const Operator &b);

struct HermitianEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // orthonormal columns, vectors.col(k) pairs with values(k)
};

/// Spectral decomposition of a Hermitian matrix. Throws NotHermitian when
/// the input is not Hermitian within `tol`.
HermitianEigen hermitian_eigen(const Operator &a, double tol = kDefaultTol);

/// Smallest eigenvalue of a Hermitian matrix (NotHermitian otherwise).
double min_eigenvalue(const Operator &a, double tol = kDefaultTol);

/// Positive square root of a PSD matrix. Eigenvalues in [-tol, 0) are
/// clamped to zero; anything below -tol raises NotPsd.
Operator psd_sqrt(const Operator &a, double tol = kDefaultTol);

}  // namespace qprob
