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

#include <vector>

#include "fock/antilinear_map.hpp"
#include "fock/complex_structure.hpp"
#include "fock/det_branch.hpp"
#include "fock/group_element.hpp"

namespace fock {

// Element of the 2^m-dimensional fermionic Fock space. Coefficients are
// indexed by subsets K of {0,...,m-1} as bitmasks; basis vector eps_K is
// the wedge of the standard complex basis vectors in increasing index
// order. The vacuum is eps_{} at index 0.
struct FermionFockVector {
    int modes;
    CVec coeff;  // length 2^m

    int dim() const { return static_cast<int>(coeff.size()); }
    double norm() const { return coeff.norm(); }

    static FermionFockVector zero(int m);
    static FermionFockVector vacuum(int m);
};

FermionFockVector operator+(const FermionFockVector& x, const FermionFockVector& y);
FermionFockVector operator*(const cplx& c, const FermionFockVector& x);

// <x|y>, antilinear in x.
cplx fermion_inner(const FermionFockVector& x, const FermionFockVector& y);

// Creation a^+(v) (wedge by v, C-linear in v) and annihilation a(v)
// (antilinear in v); v is given by its complex coordinates. The sign for
// a^+(e_j) on eps_K is (-1)^{#{i in K : i < j}}.
FermionFockVector fermion_create(const CVec& z_v, const FermionFockVector& x);
FermionFockVector fermion_annihilate(const CVec& z_v, const FermionFockVector& x);

// Field operator psi(v) = a^+(v) + a(v) for a real vector v; it satisfies
// [psi(u), psi(v)]_+ = 2 d(u,v) and psi(v)^2 = d(v,v).
FermionFockVector fermion_field(const OneParticleSpace& V, const Vec& v,
                                const FermionFockVector& x);

// Dense 2^m x 2^m matrix of psi(v).
CMat psi_matrix(const OneParticleSpace& V, const Vec& v);

// Fermionic Gaussian f_T: coefficient at even K is the sub-Pfaffian of the
// skew label at K, zero at odd K, 1 at the vacuum.
FermionFockVector gaussian_f(const AntilinearMap& T);

// <f_S|f_T> = sum over even K of conj(Pf S_K) Pf T_K, the canonical
// det^{+1/2}(1 - TS) (holomorphic in T, antiholomorphic in S).
cplx pairing_via_pfaffians(const AntilinearMap& S, const AntilinearMap& T);

// det^{+1/2}(1 - S T^_g) by the same Pfaffian sum; the scalar in
// mu(g) f_S = c_g * spin_gaussian_factor(g, S) * f_{g.S}.
cplx spin_gaussian_factor(const GroupElement& g, const AntilinearMap& S);

// Second-quantized unitary o: eps_K -> o e_{k_1} ^ ... ^ o e_{k_r}.
// Throws NotUnitary when the antilinear part of o exceeds the tolerance.
CMat gamma_u(const GroupElement& o, double tol = 1e-10);

// Spin-representation vacuum image
//   mu(g) Omega = c_g * v_1 ^ ... ^ v_k ^ f_{T_h}
// from the defect factorization g = r_{v_1} ... r_{v_k} h, with
// c_g = det^{+1/4} of p_g^T p_g restricted to the complement of ker p_g
// (the product of the square roots of the nonzero singular values of P_g).
// Unit norm for orthogonal g.
FermionFockVector mu_vacuum(const GroupElement& g);

// Element of the pin double cover, presented either canonically (empty
// reflection prefix, mu built from the defect factorization of the body) or
// as an explicit word r_{v_1} ... r_{v_j} * body with unit vectors v_i.
// The total group element always equals the product of the word.
class PinElement {
  public:
    static PinElement from_group(const GroupElement& g);
    static PinElement reflection(const OneParticleSpace& V, const Vec& v);
    static PinElement word(const OneParticleSpace& V, std::vector<Vec> prefix,
                           GroupElement body);

    const GroupElement& total() const { return total_; }
    const GroupElement& body() const { return body_; }
    const std::vector<Vec>& reflection_prefix() const { return prefix_; }
    const StratumFactorization& factorization() const { return fact_; }
    int m() const { return body_.m(); }

    // Product with the right factor's reflections moved left through this
    // element's body and reflection pairs absorbed into the group part, so
    // the result carries at most one explicit reflection. A product of two
    // reflections therefore becomes a canonical (prefix-free) element,
    // while g * r_v stays the word r_{gv} * g.
    PinElement times(const PinElement& other) const;

  private:
    PinElement(GroupElement total, GroupElement body, std::vector<Vec> prefix,
               StratumFactorization fact);

    GroupElement total_;
    GroupElement body_;
    std::vector<Vec> prefix_;
    StratumFactorization fact_;
};

// Dense spin/pin operator. For a canonical element the column at eps_K is
// the product over i in K (increasing i outermost) of
// a^+(p_g e_i) + a(q_g e_i) applied to mu_vacuum(g); for a word it is
// psi(v_1) ... psi(v_j) times the canonical operator of the body.
CMat mu_full(const PinElement& x);
CMat mu_full(const GroupElement& g);

// Fermionic 2-cocycle c(g,h) = exp(i Arg det^{+1/2}(1 - T_h T^_g)), the
// Pfaffian-sum branch. Requires g, h, gh all on the top stratum.
CocycleValue cocycle_f(const GroupElement& g, const GroupElement& h);

// Pin cocycle, defined operationally as the scalar of
// mu_full(x) mu_full(y) mu_full(x*y)^{-1}. Throws NonScalarResidual when
// the product is not a scalar multiple of the reference beyond tolerance.
CocycleValue cocycle_pin(const PinElement& x, const PinElement& y,
                         double scalar_tol = 1e-10);

}  // namespace fock
