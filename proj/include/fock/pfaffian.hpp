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

#ifndef FOCK_PFAFFIAN_HPP
#define FOCK_PFAFFIAN_HPP

#include <cstdint>
#include <vector>

#include "fock/complex_structure.hpp"

namespace fock {

// Pfaffian of a complex skew-symmetric matrix. Requires even dimension
// (odd dimension returns 0). Uses cofactor recursion for n <= 8 and
// skew-symmetric tridiagonalization with pivoting above that.
cplx pfaffian(const CMat& a);

// Pfaffian of the principal submatrix of `a` indexed by the set bits of
// `mask` (bit i selects row/column i), in increasing index order.
// Empty mask yields 1, odd popcount yields 0.
cplx sub_pfaffian(const CMat& a, std::uint64_t mask);

// Sum over all even-cardinality subsets K of {0,...,m-1} of
// conj(Pf a_K) * Pf b_K. Both matrices must be m x m skew-symmetric
// with m <= 24 (the sum has 2^(m-1) terms).
cplx pfaffian_pairing_sum(const CMat& a, const CMat& b);

}  // namespace fock

#endif  // FOCK_PFAFFIAN_HPP
