/**
 * Copyright 2026 The fock-cocycle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fock/pfaffian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "fock/errors.hpp"

namespace fock {

namespace {

// Cofactor expansion along the first row, removing index 0 and index j.
cplx pfaffian_small(CMat a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return cplx(1.0, 0.0);
    if (n % 2 != 0) return cplx(0.0, 0.0);
    if (n == 2) return a(0, 1);
    cplx sum(0.0, 0.0);
    double sign = 1.0;
    for (int j = 1; j < n; ++j) {
        CMat minor(n - 2, n - 2);
        int r = 0;
        for (int i = 1; i < n; ++i) {
            if (i == j) continue;
            int c = 0;
            for (int k = 1; k < n; ++k) {
                if (k == j) continue;
                minor(r, c) = a(i, k);
                ++c;
            }
            ++r;
        }
        sum += sign * a(0, j) * pfaffian_small(minor);
        sign = -sign;
    }
    return sum;
}

// Skew-symmetric tridiagonalization by congruence with partial pivoting.
// Each congruence A -> M A M^T with a Gauss transform leaves Pf unchanged;
// a row/column swap flips its sign. The Pfaffian of the resulting
// tridiagonal skew matrix is the product of the (2k, 2k+1) entries.
cplx pfaffian_ltl(CMat a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return cplx(1.0, 0.0);
    if (n % 2 != 0) return cplx(0.0, 0.0);
    double sign = 1.0;
    cplx value(1.0, 0.0);
    for (int k = 0; k < n - 1; k += 2) {
        int pivot = k + 1;
        double best = std::abs(a(k, k + 1));
        for (int i = k + 2; i < n; ++i) {
            const double mag = std::abs(a(k, i));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (best == 0.0) return cplx(0.0, 0.0);
        if (pivot != k + 1) {
            a.row(k + 1).swap(a.row(pivot));
            a.col(k + 1).swap(a.col(pivot));
            sign = -sign;
        }
        const cplx akk1 = a(k, k + 1);
        value *= akk1;
        if (k + 2 < n) {
            for (int i = k + 2; i < n; ++i) {
                const cplx mu = a(k, i) / akk1;
                if (mu != cplx(0.0, 0.0)) {
                    a.row(i) -= mu * a.row(k + 1);
                    a.col(i) -= mu * a.col(k + 1);
                }
                const cplx nu = a(k + 1, i) / akk1;
                if (nu != cplx(0.0, 0.0)) {
                    a.row(i) += nu * a.row(k);
                    a.col(i) += nu * a.col(k);
                }
            }
        }
    }
    return sign * value;
}

}  // namespace

cplx pfaffian(const CMat& a) {
    if (a.rows() != a.cols()) {
        throw DomainViolation("pfaffian requires a square matrix");
    }
    const int n = static_cast<int>(a.rows());
    if (n % 2 != 0) return cplx(0.0, 0.0);
    if (n <= 8) return pfaffian_small(a);
    return pfaffian_ltl(a);
}

cplx sub_pfaffian(const CMat& a, std::uint64_t mask) {
    const int count = std::popcount(mask);
    if (count == 0) return cplx(1.0, 0.0);
    if (count % 2 != 0) return cplx(0.0, 0.0);
    std::vector<int> idx;
    idx.reserve(count);
    for (int i = 0; i < static_cast<int>(a.rows()); ++i) {
        if (mask & (std::uint64_t(1) << i)) idx.push_back(i);
    }
    CMat sub(count, count);
    for (int r = 0; r < count; ++r) {
        for (int c = 0; c < count; ++c) {
            sub(r, c) = a(idx[r], idx[c]);
        }
    }
    return pfaffian(sub);
}

cplx pfaffian_pairing_sum(const CMat& a, const CMat& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DomainViolation("pfaffian_pairing_sum requires matching square matrices");
    }
    const int m = static_cast<int>(a.rows());
    if (m > 24) {
        throw DomainViolation("pfaffian_pairing_sum supports at most 24 modes");
    }
    cplx sum(0.0, 0.0);
    const std::uint64_t top = std::uint64_t(1) << m;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        sum += std::conj(sub_pfaffian(a, mask)) * sub_pfaffian(b, mask);
    }
    return sum;
}

}  // namespace fock
