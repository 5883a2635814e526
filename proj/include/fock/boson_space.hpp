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

#include "fock/antilinear_map.hpp"
#include "fock/complex_structure.hpp"
#include "fock/det_branch.hpp"
#include "fock/group_element.hpp"

namespace fock {

// Bosonic Fock vectors of Gaussian-times-exponential shape, as functions of
// the antiholomorphic coordinate ubar = conj(z_u):
//
//   F(u) = coeff * exp( 1/4 ubar^T t ubar + 1/2 ubar^T shift )
//
// with t symmetric, ||t|| < 1. Covers the vacuum (t = 0, shift = 0),
// coherent vectors E_v (shift = z_v), Gaussians f_T, and every Weyl or
// metaplectic image of these.
struct ExpVector {
    cplx coeff;
    CMat t;
    CVec shift;

    int m() const { return static_cast<int>(shift.size()); }

    static ExpVector vacuum(int m) {
        return {cplx(1.0, 0.0), CMat::Zero(m, m), CVec::Zero(m)};
    }
    static ExpVector coherent(const CVec& z) {
        const int m = static_cast<int>(z.size());
        return {cplx(1.0, 0.0), CMat::Zero(m, m), z};
    }
    static ExpVector gaussian(const AntilinearMap& T) {
        return {cplx(1.0, 0.0), T.matrix(), CVec::Zero(T.m())};
    }
};

// Pointwise value F(u) at the complex coordinate z_u.
cplx evaluate(const ExpVector& F, const CVec& z_u);

// <f_S | f_T> = det^{-1/2}(1 - T S) with the eigenvalue branch rule.
// Both labels must be symmetric strict contractions.
cplx gaussian_pairing(const AntilinearMap& S, const AntilinearMap& T);

// The closed Gaussian moment
//   I(S,T;v,w) = int exp 1/4 { <u|Tu> + <Su|u> + 2<u|v> + 2<w|u> } dmu(u)
// against the normalized Gaussian measure; v, w in complex coordinates.
cplx gaussian_integral(const AntilinearMap& S, const AntilinearMap& T,
                       const CVec& v, const CVec& w);

// Inner product and norm of ExpVectors through gaussian_integral.
cplx exp_pairing(const ExpVector& F, const ExpVector& G);
double exp_norm(const ExpVector& F);

// Geometric bound on the Fock-space norm of the part of F of degree > D.
// +inf when no bound is available (||t|| >= 1).
double tail_bound(const ExpVector& F, int D);

// Weyl operator: (beta(v) F)(u) = exp(1/4 <2u - v|v>) F(u - v).
ExpVector weyl_apply(const OneParticleSpace& V, const Vec& v, const ExpVector& F);

// <E_z | phi(v) E_w> for the field phi(v) = a^+(v) + a(v).
cplx field_matrix_element(const OneParticleSpace& V, const Vec& v,
                          const CVec& z, const CVec& w);

// Vacuum normalization det^{+1/4}(1 - T_g^2) of the metaplectic operator.
double metaplectic_vacuum_coeff(const GroupElement& g);

// Kernel K_{nu(g)}(u, v) of the metaplectic operator, u and v in complex
// coordinates.
cplx metaplectic_kernel(const GroupElement& g, const CVec& u, const CVec& v);

// nu(g) applied to an ExpVector, in closed form. For a pure Gaussian f_S
// this is c_g det^{-1/2}(1 - S T^_g) f_{g.S}.
ExpVector metaplectic_apply_gaussian(const GroupElement& g, const ExpVector& F);

// Metaplectic 2-cocycle c(g,h) = exp(i Arg det^{-1/2}(1 - T_h T^_g)).
CocycleValue cocycle_b(const GroupElement& g, const GroupElement& h);

}  // namespace fock
