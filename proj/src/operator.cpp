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

#include "qprob/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "qprob/error.hpp"

namespace qprob {

void require_valid(const Operator &a) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
        throw Error(Errc::NotSquare, "operator must be square and nonempty, got " + std::to_string(a.rows()) + "x" +
                                         std::to_string(a.cols()));
    }
    if (!a.allFinite()) {
        throw Error(Errc::NonFinite, "operator has non-finite entries");
    }
}

Operator identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return Operator::Identity(n, n);
}

Operator adjoint(const Operator &a) { return a.adjoint(); }

Complex trace(const Operator &a) { return a.trace(); }

Operator outer_product(const Vector &u, const Vector &v) { return u * v.adjoint(); }

Complex inner(const Vector &u, const Vector &v) { return u.dot(v); }

double hermitian_gap(const Operator &a) {
    if (a.rows() != a.cols()) {
        throw Error(Errc::NotSquare, "hermitian_gap: operator is not square");
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator &a, double tol) {
    return a.rows() == a.cols() && a.rows() > 0 && a.allFinite() && hermitian_gap(a) <= tol;
}

bool is_psd(const Operator &a, double tol) {
    if (!is_hermitian(a, tol)) {
        return false;
    }
    return min_eigenvalue(a, tol) >= -tol;
}

bool is_projection(const Operator &a, double tol) {
    if (!is_hermitian(a, tol)) {
        return false;
    }
    return max_abs_diff(a * a, a) <= tol;
}

bool is_unit(const Vector &v, double tol) { return v.size() > 0 && v.allFinite() && std::abs(v.norm() - 1.0) <= tol; }

double max_abs_diff(const Operator &a, const Operator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(Errc::DimMismatch, "max_abs_diff: shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const Operator &a, double tol) {
    require_valid(a);
    double gap = hermitian_gap(a);
    if (gap > tol) {
        throw Error(Errc::NotHermitian, "hermitian_eigen: |A - A^dagger| = " + detail::num(gap));
    }
    // Symmetrize so that the solver's lower-triangle read sees the averaged matrix.
    Operator h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(Errc::NotHermitian, "hermitian_eigen: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Operator &a, double tol) { return hermitian_eigen(a, tol).values.minCoeff(); }

Operator psd_sqrt(const Operator &a, double tol) {
    auto eig = hermitian_eigen(a, tol);
    double lowest = eig.values.minCoeff();
    if (lowest < -tol) {
        throw Error(Errc::NotPsd, "psd_sqrt: min eigenvalue " + detail::num(lowest) + " below -tol");
    }
    Eigen::VectorXd roots = eig.values.unaryExpr([](double x) { return std::sqrt(std::max(x, 0.0)); });
    return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace qprob
