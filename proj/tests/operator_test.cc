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

#include <cmath>

#include "gtest/gtest.h"

#include "qprob/error.hpp"
#include "qprob/random.hpp"
#include "test_util.hpp"

using namespace qprob;

TEST(Operator, adjoint_examples) {
    EXPECT_EQ(adjoint(identity(2)), identity(2));

    Operator a(2, 2);
    a << 0, 1, 0, 0;
    Operator expected(2, 2);
    expected << 0, 0, 1, 0;
    EXPECT_EQ(adjoint(a), expected);

    Rng rng(7);
    Operator h = random_hermitian(3, rng);
    EXPECT_EQ(max_abs_diff(adjoint(h), h), 0.0);
}

TEST(Operator, adjoint_is_involution) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Operator a = random_ginibre(4, 4, rng);
        EXPECT_EQ(adjoint(adjoint(a)), a);
    }
}

TEST(Operator, trace_examples) {
    for (std::size_t d = 1; d <= 5; ++d) {
        EXPECT_EQ(trace(identity(d)), Complex(static_cast<double>(d)));
    }
    Rng rng(3);
    Vector v = random_pure_state(4, rng).vec();
    EXPECT_NEAR(trace(outer_product(v, v)).real(), 1.0, 1e-15);

    Operator h = random_hermitian(4, rng);
    auto eig = hermitian_eigen(h);
    EXPECT_NEAR(trace(h).real(), eig.values.sum(), 1e-12);
    EXPECT_NEAR(trace(h).imag(), 0.0, 1e-15);
}

TEST(Operator, trace_is_cyclic) {
    Rng rng(5);
    for (std::size_t d = 2; d <= 6; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            Operator a = random_ginibre(d, d, rng);
            Operator b = random_ginibre(d, d, rng);
            EXPECT_LT(std::abs(trace(a * b) - trace(b * a)), 1e-12);
        }
    }
}

TEST(Operator, hermitian_eigen_examples) {
    Operator d = Operator::Zero(3, 3);
    d.diagonal() << 3, 1, 2;
    auto eig = hermitian_eigen(d);
    EXPECT_NEAR(eig.values(0), 1.0, 1e-15);
    EXPECT_NEAR(eig.values(1), 2.0, 1e-15);
    EXPECT_NEAR(eig.values(2), 3.0, 1e-15);

    Operator x(2, 2);
    x << 0, 1, 1, 0;
    auto ex = hermitian_eigen(x);
    EXPECT_NEAR(ex.values(0), -1.0, 1e-15);
    EXPECT_NEAR(ex.values(1), 1.0, 1e-15);
}

TEST(Operator, hermitian_eigen_reconstructs_and_is_orthonormal) {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Operator h = random_hermitian(5, rng);
        auto eig = hermitian_eigen(h);
        for (Eigen::Index k = 1; k < eig.values.size(); ++k) {
            EXPECT_LE(eig.values(k - 1), eig.values(k));
        }
        // Reassemble sum_k lambda_k |v_k><v_k| with explicit loops.
        Operator rebuilt = Operator::Zero(5, 5);
        for (Eigen::Index k = 0; k < 5; ++k) {
            Vector v = eig.vectors.col(k);
            rebuilt += eig.values(k) * outer_product(v, v);
        }
        EXPECT_LE(max_abs_diff(rebuilt, h), 1e-10);
        Operator gram = eig.vectors.adjoint() * eig.vectors;
        EXPECT_LE(max_abs_diff(gram, identity(5)), 1e-10);
    }
}

TEST(Operator, hermitian_eigen_rejects_non_hermitian) {
    Operator a(2, 2);
    a << 0, 1, 0, 0;
    try {
        hermitian_eigen(a);
        FAIL() << "expected NotHermitian";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NotHermitian);
    }
}

TEST(Operator, structural_predicates) {
    Operator p = Operator::Zero(2, 2);
    p(0, 0) = 1;
    EXPECT_TRUE(is_projection(p));
    EXPECT_TRUE(is_psd(p));
    Operator neg = -p;
    EXPECT_TRUE(is_hermitian(neg));
    EXPECT_FALSE(is_psd(neg));
    EXPECT_FALSE(is_projection(2.0 * p));
    Operator rect(2, 3);
    EXPECT_THROW(require_valid(rect), Error);
    Operator bad = identity(2);
    bad(0, 1) = std::nan("");
    EXPECT_THROW(require_valid(bad), Error);
}

TEST(Operator, psd_sqrt_examples) {
    EXPECT_LE(max_abs_diff(psd_sqrt(identity(3)), identity(3)), 1e-15);
    Operator d = Operator::Zero(2, 2);
    d.diagonal() << 4, 9;
    Operator expected = Operator::Zero(2, 2);
    expected.diagonal() << 2, 3;
    EXPECT_LE(max_abs_diff(psd_sqrt(d), expected), 1e-14);
}

TEST(Operator, psd_sqrt_squares_back_and_commutes) {
    Rng rng(23);
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        Operator b = random_ginibre(dim, dim, rng);
        Operator a = b.adjoint() * b;
        Operator root = psd_sqrt(a);
        EXPECT_TRUE(is_psd(root));
        EXPECT_LE(max_abs_diff(root * root, a), 1e-10);
        EXPECT_LE(max_abs_diff(root * a, a * root), 1e-10);
    }
}

TEST(Operator, psd_sqrt_clamps_rank_deficient_input) {
    Rng rng(29);
    Vector v = random_pure_state(3, rng).vec();
    Operator rank_one = outer_product(v, v);
    // Perturb one eigenvalue slightly negative, inside the clamp window.
    Operator perturbed = rank_one - 1e-12 * identity(3);
    Operator root = psd_sqrt(perturbed);
    EXPECT_TRUE(root.allFinite());
    EXPECT_LE(max_abs_diff(root * root, rank_one), 1e-10);
}

TEST(Operator, psd_sqrt_rejects_negative_spectrum) {
    Operator d = Operator::Zero(2, 2);
    d.diagonal() << 1, -0.5;
    try {
        psd_sqrt(d);
        FAIL() << "expected NotPsd";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NotPsd);
    }
}

TEST(Operator, products_agree_with_loop_oracle) {
    Rng rng(31);
    Operator a = random_ginibre(4, 4, rng);
    Operator b = random_ginibre(4, 4, rng);
    auto oracle = oracle::mul(oracle::to_dense(a), oracle::to_dense(b));
    Operator ab = a * b;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_LT(std::abs(ab(i, j) - oracle[i][j]), 1e-12);
        }
    }
}
