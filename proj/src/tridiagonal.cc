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

#include "dqimc/tridiagonal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dqimc {

TridiagonalSpec TridiagonalSpec::dqi(long long m, int l) {
    if (l < 0 || l > m) {
        throw std::invalid_argument("TridiagonalSpec needs 0 <= l <= m");
    }
    TridiagonalSpec spec{m, l, {}};
    spec.offdiag.reserve(static_cast<std::size_t>(l));
    for (long long k = 1; k <= l; ++k) {
        spec.offdiag.push_back(std::sqrt(static_cast<double>(k) * static_cast<double>(m - k + 1)));
    }
    return spec;
}

HermiteComparator HermiteComparator::make(int l) {
    if (l < 0) {
        throw std::invalid_argument("HermiteComparator needs l >= 0");
    }
    HermiteComparator h{l, {}};
    for (int k = 1; k <= l; ++k) {
        h.offdiag.push_back(std::sqrt(static_cast<double>(k)));
    }
    return h;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Smallest pivot magnitude allowed in the Sturm recurrence.
double pivot_floor(std::span<const double> b) {
    double bmax = 0;
    for (double x : b) {
        bmax = std::max(bmax, x * x);
    }
    return std::max(bmax, 1.0) * std::numeric_limits<double>::min() / kEps;
}

}  // namespace

int sturm_count(std::span<const double> offdiag, double x) {
    const double floor = pivot_floor(offdiag);
    int count = 0;
    double d = -x;
    if (std::abs(d) < floor) {
        d = -floor;
    }
    count += d < 0;
    for (double b : offdiag) {
        d = -x - b * b / d;
        if (std::abs(d) < floor) {
            d = -floor;
        }
        count += d < 0;
    }
    return count;
}

EigenPair lambda_max_tridiag(std::span<const double> offdiag) {
    const std::size_t size = offdiag.size() + 1;
    if (offdiag.empty()) {
        return {0.0, {1.0}};
    }
    for (double b : offdiag) {
        if (!(b > 0) || !std::isfinite(b)) {
            throw std::invalid_argument("off-diagonal entries must be positive and finite");
        }
    }
    const int n = static_cast<int>(size);

    // Gershgorin bound; the matrix is traceless so lambda_max >= 0.
    double hi = 0;
    for (std::size_t k = 0; k < size; ++k) {
        double row = (k > 0 ? offdiag[k - 1] : 0.0) + (k < offdiag.size() ? offdiag[k] : 0.0);
        hi = std::max(hi, row);
    }
    hi *= 1 + 4 * kEps;
    double lo = 0;
    while (true) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= 2 * kEps * hi) {
            break;
        }
        if (sturm_count(offdiag, mid) == n) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    // sigma I - A is an irreducible M-matrix for sigma > lambda_max, so its
    // inverse is entrywise positive and elimination without pivoting keeps
    // every intermediate positive.
    const double sigma = hi * (1 + 4 * kEps);
    std::vector<double> pivot(size), x(size, 1.0), y(size);
    pivot[0] = sigma;
    for (std::size_t k = 1; k < size; ++k) {
        double b = offdiag[k - 1];
        pivot[k] = sigma - b * b / pivot[k - 1];
        if (!(pivot[k] > 0)) {
            throw std::runtime_error("inverse iteration lost positivity");
        }
    }
    for (int iter = 0; iter < 3; ++iter) {
        y[0] = x[0];
        for (std::size_t k = 1; k < size; ++k) {
            y[k] = x[k] + offdiag[k - 1] / pivot[k - 1] * y[k - 1];
        }
        x[size - 1] = y[size - 1] / pivot[size - 1];
        for (std::size_t k = size - 1; k-- > 0;) {
            x[k] = (y[k] + offdiag[k] * x[k + 1]) / pivot[k];
        }
        double scale = *std::max_element(x.begin(), x.end());
        double norm2 = 0;
        for (double& v : x) {
            v /= scale;
            norm2 += v * v;
        }
        double inv = 1 / std::sqrt(norm2);
        for (double& v : x) {
            v *= inv;
        }
    }
    return {0.5 * (lo + hi), std::move(x)};
}

EigenPair lambda_max_tridiag(const TridiagonalSpec& spec) {
    return lambda_max_tridiag(std::span<const double>(spec.offdiag));
}

EigenPair lambda_max_tridiag(const HermiteComparator& spec) {
    return lambda_max_tridiag(std::span<const double>(spec.offdiag));
}

double eigen_residual(std::span<const double> offdiag, const EigenPair& pair) {
    const std::size_t size = offdiag.size() + 1;
    if (pair.vector.size() != size) {
        throw std::invalid_argument("eigenvector length does not match the matrix");
    }
    const auto& u = pair.vector;
    double sum = 0;
    for (std::size_t k = 0; k < size; ++k) {
        double au = 0;
        if (k > 0) {
            au += offdiag[k - 1] * u[k - 1];
        }
        if (k + 1 < size) {
            au += offdiag[k] * u[k + 1];
        }
        double r = au - pair.lambda * u[k];
        sum += r * r;
    }
    return std::sqrt(sum);
}

double hermite_residual(int l) {
    if (l < 1) {
        throw std::invalid_argument("hermite_residual needs l >= 1");
    }
    const double x = lambda_max_tridiag(HermiteComparator::make(l)).lambda / std::sqrt(2.0);
    // sqrt((k+1)/2) h_{k+1} = x h_k - sqrt(k/2) h_{k-1}
    double prev = 0, cur = 1, norm2 = 1;
    for (int k = 0; k <= l; ++k) {
        double next = (x * cur - std::sqrt(k / 2.0) * prev) / std::sqrt((k + 1) / 2.0);
        prev = cur;
        cur = next;
        norm2 += cur * cur;
    }
    return std::abs(cur) / std::sqrt(norm2);
}

}  // namespace dqimc
