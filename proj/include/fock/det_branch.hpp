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

#pragma once

#include "fock/complex_structure.hpp"

namespace fock {

// Unit-modulus 2-cocycle value with its argument. For the bosonic cocycle
// the argument is the branch-tracked (unwrapped) one and may leave
// (-pi, pi]; the fermionic and pin cocycles carry the principal argument.
struct CocycleValue {
    cplx value;
    double arg;
};

// Branch-tracked det^{-1/2}: the product of the principal inverse square
// roots of the eigenvalues. `arg` is the accumulated (unwrapped) argument,
// the sum of the per-eigenvalue arguments; it may leave (-pi, pi].
struct BranchedDetSqrt {
    cplx value;
    double arg;

    cplx phase() const { return std::polar(1.0, arg); }
};

// Requires every eigenvalue of B to satisfy Re(beta) > re_floor; throws
// DomainViolation otherwise. branch_det_inv_sqrt(I) = 1, and the value is
// real positive for Hermitian positive-definite B.
BranchedDetSqrt branch_det_inv_sqrt(const CMat& B, double re_floor = 1e-12);

}  // namespace fock
