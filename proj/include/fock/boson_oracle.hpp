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

#include <memory>
#include <vector>

#include "fock/boson_space.hpp"
#include "fock/complex_structure.hpp"

namespace fock {

// Multi-indices alpha in N^m with |alpha| <= D, graded lexicographic order.
class MultiIndexTable {
  public:
    MultiIndexTable(int m, int D);

    int m() const { return m_; }
    int degree_cap() const { return D_; }
    int size() const { return static_cast<int>(list_.size()); }
    const std::vector<int>& alpha(int rank) const { return list_[rank]; }
    int total_degree(int rank) const { return degree_[rank]; }
    // -1 when alpha falls outside the table.
    int rank_of(const std::vector<int>& alpha) const;
    int rank_shift(int rank, int mode, int delta) const;  // alpha +- e_mode

    static std::shared_ptr<const MultiIndexTable> get(int m, int D);

  private:
    int m_, D_;
    std::vector<std::vector<int>> list_;
    std::vector<int> degree_;
    std::vector<int> lookup_;  // dense packed-key -> rank
    int pack(const std::vector<int>& alpha) const;
};

// Coefficients over the orthonormal monomial basis
// eps_alpha(u) = ubar^alpha / sqrt(2^{|alpha|} alpha!), degree <= D.
struct TruncatedFockVector {
    std::shared_ptr<const MultiIndexTable> table;
    CVec coeff;

    int m() const { return table->m(); }
    int degree_cap() const { return table->degree_cap(); }

    static TruncatedFockVector zero(int m, int D);
};

// Degree-D truncation of an ExpVector, coefficients in the eps basis.
TruncatedFockVector truncate(const ExpVector& F, int D);

// Ladder operators in the eps basis; creation drops overflow past degree D.
TruncatedFockVector oracle_create(const CVec& z_v, const TruncatedFockVector& x);
TruncatedFockVector oracle_annihilate(const CVec& z_v, const TruncatedFockVector& x);

// Field operator phi(v) = a^+(v) + a(v) on the truncated space.
TruncatedFockVector field_on_oracle(const OneParticleSpace& V, const Vec& v,
                                    const TruncatedFockVector& x);

cplx oracle_inner(const TruncatedFockVector& x, const TruncatedFockVector& y);
cplx oracle_evaluate(const TruncatedFockVector& x, const CVec& z_u);

// Norm of the part of x of total degree <= dmax (exact-degree comparisons
// after operators that pollute the top degrees).
double oracle_norm_up_to(const TruncatedFockVector& x, int dmax);
double oracle_norm_odd(const TruncatedFockVector& x);

TruncatedFockVector oracle_sub(const TruncatedFockVector& x,
                               const TruncatedFockVector& y);

}  // namespace fock
