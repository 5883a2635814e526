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

#include <utility>
#include <vector>

#include "fock/antilinear_map.hpp"
#include "fock/complex_structure.hpp"
#include "fock/rng.hpp"

namespace fock {

enum class GroupKind { Symplectic, Orthogonal };

// Element of Sp(2m, R) or O(2m, R) together with its split into the part
// commuting with J (p, C-linear) and the part anticommuting with J
// (q, antilinear). p and q are computed eagerly; the complex coefficient
// matrices P, Q are cached alongside. Immutable after construction.
class GroupElement {
  public:
    GroupElement(GroupKind kind, Mat g, double membership_tol = 1e-10);

    GroupKind kind() const { return kind_; }
    int m() const { return m_; }
    const Mat& matrix() const { return mat_; }
    const Mat& p() const { return p_; }
    const Mat& q() const { return q_; }
    const CMat& P() const { return P_; }  // complex m x m of p
    const CMat& Q() const { return Q_; }  // complex m x m of q

    // ||g^T J g - J||_F for symplectic, ||g^T g - 1||_F for orthogonal.
    double membership_residual() const;
    double det() const { return mat_.determinant(); }

    OneParticleSpace space() const { return OneParticleSpace(m_); }

  private:
    GroupKind kind_;
    int m_;
    Mat mat_, p_, q_;
    CMat P_, Q_;
};

// p_g = (g - JgJ)/2, q_g = (g + JgJ)/2.
std::pair<Mat, Mat> split(const OneParticleSpace& V, const Mat& g);

// Exact group inverse: -J g^T J for symplectic, g^T for orthogonal.
GroupElement invert(const GroupElement& g);
GroupElement multiply(const GroupElement& g, const GroupElement& h);

// Number of complex dimensions of ker p_g. Zero for every symplectic
// element; for orthogonal elements k is even exactly when det g = +1.
// Singular values below rel_tol * sigma_max count as zero.
int stratum_k(const GroupElement& g, double rel_tol = 1e-8);

// T_g = q_g p_g^{-1}; symmetric for symplectic g, skew for orthogonal g,
// and a strict contraction exactly in the symplectic case. Throws
// SingularLinearPart for orthogonal g off the top stratum.
AntilinearMap t_of(const GroupElement& g);

// T_{g^{-1}} = -p_g^{-1} T_g p_g.
AntilinearMap t_hat(const GroupElement& g);

// Parts of a product from parts of the factors:
// p_{gh} = p_g (1 - T^_g T_h) p_h and the matching label
// T_{gh} = T_g + p_g^{-t} T_h (1 - T^_g T_h)^{-1} p_g^{-1}.
// Returns the complex linear part and the label of gh.
struct ComposedParts {
    CMat P;             // complex m x m linear part of gh
    AntilinearMap t;    // label of gh
};
ComposedParts compose_pt(const GroupElement& g, const GroupElement& h);

// Moebius action on labels: g.S = (q_g + p_g S)(p_g + q_g S)^{-1}.
// Satisfies g.T_h = T_{gh}. Throws ActionUndefined when the resolvent is
// singular (possible only in the orthogonal case).
AntilinearMap group_action_on_t(const GroupElement& g, const AntilinearMap& S);

// Cayley correspondence between labels and complex structures:
// J_W = J (1 - T)(1 + T)^{-1} and back, T_W = (J + J_W)^{-1} (J - J_W).
Mat cayley_from_t(const OneParticleSpace& V, const AntilinearMap& T);
AntilinearMap cayley_to_t(const OneParticleSpace& V, const Mat& J_W);

// Defect factorization g = r_{e_1} ... r_{e_k} h of an orthogonal element:
// {e_i} is an orthonormal (complex) basis of ker p_g^T, each r_{e_i} swaps
// e_i <-> J e_i and is -1 on the orthogonal complement, and h = r g has
// invertible linear part.
struct StratumFactorization {
    int k = 0;
    std::vector<Vec> kernel_basis;  // real unit vectors e_1, ..., e_k
    Mat r;                          // product r_{e_1} ... r_{e_k}
    Mat h;                          // r * g, top stratum
};
StratumFactorization defect_factorize(const GroupElement& g,
                                      double rel_tol = 1e-8);

// Reflection in the real hyperplane through v: r_v(w) = 2 d(v,w) v - w.
Mat reflection_matrix(const OneParticleSpace& V, const Vec& v);

enum class RandomKind { Sp, SO, U_J, Reflection };

// Random element via the exponential of a Lie-algebra sample (entries
// i.i.d. normal, sigma = 0.5), or a random unit-vector reflection.
GroupElement random_element(RandomKind kind, int m, Rng& rng);

// Random Gaussian labels with spectral norm scaled to `norm`.
AntilinearMap random_label(SymmetryTag tag, int m, double norm, Rng& rng);

// Random real vector with i.i.d. standard normal entries.
Vec random_vector(int dim, Rng& rng);
Vec random_unit_vector(int dim, Rng& rng);

// Projects an approximate element back onto the group: polar decomposition
// for orthogonal elements, Cayley re-projection for symplectic ones
// (requires that g has no eigenvalue -1).
GroupElement renormalize(const GroupElement& g);

}  // namespace fock
