// Copyright 2026 The dqimc Authors
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

#ifndef DQIMC_TRIDIAGONAL_H
#define DQIMC_TRIDIAGONAL_H

#include <span>
#include <vector>

namespace dqimc {

/// The (l+1)x(l+1) symmetric tridiagonal matrix with zero diagonal and
/// off-diagonal a_k = sqrt(k (m - k + 1)), k = 1..l. Its top eigenvalue is
/// the DQI gain over m/2 for degree-l polynomials on m constraints.
struct TridiagonalSpec {
    long long m = 0;
    int l = 0;
    std::vector<double> offdiag;  // a_1..a_l

    /// Requires 0 <= l <= m.
    static TridiagonalSpec dqi(long long m, int l);
};

/// Zero-diagonal tridiagonal with off-diagonal sqrt(1)..sqrt(l). Scaled by
/// 1/sqrt(2) it is the Jacobi matrix of the Hermite polynomials.
struct HermiteComparator {
    int l = 0;
    std::vector<double> offdiag;

    static HermiteComparator make(int l);
};

struct EigenPair {
    double lambda = 0;
    /// Unit 2-norm, entrywise nonnegative (positive up to underflow).
    std::vector<double> vector;
};

/// Top eigenpair of a zero-diagonal symmetric tridiagonal matrix with
/// nonnegative off-diagonal. Sturm-sequence bisection brackets the eigenvalue
/// to machine precision; one shifted inverse iteration from just above the
/// bracket yields the Perron vector. An empty off-diagonal is the 1x1 zero
/// matrix: lambda = 0, vector = (1).
EigenPair lambda_max_tridiag(std::span<const double> offdiag);
EigenPair lambda_max_tridiag(const TridiagonalSpec& spec);
EigenPair lambda_max_tridiag(const HermiteComparator& spec);

/// Number of eigenvalues strictly below x.
int sturm_count(std::span<const double> offdiag, double x);

/// ||A u - lambda u||_2 for the zero-diagonal tridiagonal A.
double eigen_residual(std::span<const double> offdiag, const EigenPair& pair);

/// |h_{l+1}(x*)| / ||(h_0..h_{l+1})(x*)|| for the orthonormal Hermite family
/// h_k = H_k / sqrt(2^k k!) at x* = lambda_max(B^(l)) / sqrt(2). Zero iff x*
/// is exactly a root of H_{l+1}. Requires l >= 1.
double hermite_residual(int l);

}  // namespace dqimc

#endif
