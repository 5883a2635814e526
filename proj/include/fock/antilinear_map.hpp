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

enum class SymmetryTag { Symmetric, Skew };

// Antilinear map on the one-particle space, stored as its complex m x m
// coefficient matrix acting by z -> t * conj(z). Symmetric maps (t = t^T)
// label bosonic Gaussians, skew maps (t = -t^T, zero diagonal) label
// fermionic ones. Construction projects to the exact symmetry class after a
// tolerance check.
class AntilinearMap {
  public:
    AntilinearMap(CMat t, SymmetryTag tag, double tol = 1e-9);

    static AntilinearMap zero(int m, SymmetryTag tag) {
        return AntilinearMap(CMat::Zero(m, m), tag);
    }

    int m() const { return static_cast<int>(t_.rows()); }
    SymmetryTag tag() const { return tag_; }
    const CMat& matrix() const { return t_; }

    // Largest singular value; membership in the open-unit-ball label class
    // for the symmetric case requires < 1.
    double spectral_norm() const;
    bool is_strict_contraction(double margin = 0.0) const {
        return spectral_norm() < 1.0 - margin;
    }

    // Complex matrix of the squared map T^2 = T o T (C-linear, Hermitian for
    // either symmetry class).
    CMat squared() const { return t_ * t_.conjugate(); }

    Vec apply(const OneParticleSpace& V, const Vec& u) const {
        return V.from_complex(t_ * V.to_complex(u).conjugate());
    }
    Mat real_matrix(const OneParticleSpace& V) const {
        return V.real_of_antilinear(t_);
    }

  private:
    CMat t_;
    SymmetryTag tag_;
};

}  // namespace fock
