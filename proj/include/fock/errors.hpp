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

#include <stdexcept>
#include <string>

namespace fock {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Group element whose linear part is singular where an inverse is required.
struct SingularLinearPart : Error {
    int defect;
    explicit SingularLinearPart(int k, const std::string& msg)
        : Error(msg), defect(k) {}
};

// Input left the domain of a branch-tracked determinant root or a label class.
struct DomainViolation : Error {
    using Error::Error;
};

// Moebius action g.S hit a singular resolvent.
struct ActionUndefined : Error {
    using Error::Error;
};

// Operation requires stratum k = 0 (or another specific stratum) and the
// element is elsewhere.
struct StratumViolation : Error {
    using Error::Error;
};

// An operator product that should be a scalar multiple of a reference
// operator is not, beyond tolerance.
struct NonScalarResidual : Error {
    double residual;
    explicit NonScalarResidual(double r, const std::string& msg)
        : Error(msg), residual(r) {}
};

// Element fails its group membership residual.
struct NotUnitary : Error {
    using Error::Error;
};

struct SerializationError : Error {
    using Error::Error;
};

struct InvalidConfig : Error {
    using Error::Error;
};

}  // namespace fock
