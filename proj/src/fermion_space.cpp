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

#include "fock/fermion_space.hpp"

#include <bit>
#include <cmath>
#include <utility>

#include "fock/errors.hpp"
#include "fock/pfaffian.hpp"

namespace fock {

namespace {

// Parity of #{i in K : i < j}; the CAR sign of a ladder operator at mode j.
inline double ladder_sign(unsigned mask, int j) {
    const unsigned below = mask & ((1u << j) - 1u);
    return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

Mat identity_body(int dim) { return Mat::Identity(dim, dim); }

}  // namespace

FermionFockVector FermionFockVector::zero(int m) {
    return {m, CVec::Zero(std::int64_t(1) << m)};
}

FermionFockVector FermionFockVector::vacuum(int m) {
    FermionFockVector out = zero(m);
    out.coeff(0) = cplx(1.0, 0.0);
    return out;
}

FermionFockVector operator+(const FermionFockVector& x, const FermionFockVector& y) {
    if (x.modes != y.modes) throw DomainViolation("fermion sum: mode mismatch");
    return {x.modes, x.coeff + y.coeff};
}

FermionFockVector operator*(const cplx& c, const FermionFockVector& x) {
    return {x.modes, c * x.coeff};
}

cplx fermion_inner(const FermionFockVector& x, const FermionFockVector& y) {
    if (x.modes != y.modes) throw DomainViolation("fermion inner: mode mismatch");
    return x.coeff.dot(y.coeff);
}

FermionFockVector fermion_create(const CVec& z_v, const FermionFockVector& x) {
    const int m = x.modes;
    if (z_v.size() != m) throw DomainViolation("fermion_create: dimension mismatch");
    FermionFockVector out = FermionFockVector::zero(m);
    const unsigned dim = 1u << m;
    for (unsigned K = 0; K < dim; ++K) {
        const cplx c = x.coeff(K);
        if (c == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < m; ++j) {
            const unsigned bit = 1u << j;
            if (K & bit) continue;
            out.coeff(K | bit) += ladder_sign(K, j) * z_v(j) * c;
        }
    }
    return out;
}

FermionFockVector fermion_annihilate(const CVec& z_v, const FermionFockVector& x) {
    const int m = x.modes;
    if (z_v.size() != m) throw DomainViolation("fermion_annihilate: dimension mismatch");
    FermionFockVector out = FermionFockVector::zero(m);
    const unsigned dim = 1u << m;
    for (unsigned K = 0; K < dim; ++K) {
        const cplx c = x.coeff(K);
        if (c == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < m; ++j) {
            const unsigned bit = 1u << j;
            if (!(K & bit)) continue;
            out.coeff(K & ~bit) += ladder_sign(K, j) * std::conj(z_v(j)) * c;
        }
    }
    return out;
}

FermionFockVector fermion_field(const OneParticleSpace& V, const Vec& v,
                                const FermionFockVector& x) {
    const CVec z = V.to_complex(v);
    return fermion_create(z, x) + fermion_annihilate(z, x);
}

CMat psi_matrix(const OneParticleSpace& V, const Vec& v) {
    const int m = V.m();
    const unsigned dim = 1u << m;
    const CVec z = V.to_complex(v);
    CMat M = CMat::Zero(dim, dim);
    for (unsigned K = 0; K < dim; ++K) {
        for (int j = 0; j < m; ++j) {
            const unsigned bit = 1u << j;
            const double sign = ladder_sign(K, j);
            if (K & bit) {
                M(K & ~bit, K) += sign * std::conj(z(j));
            } else {
                M(K | bit, K) += sign * z(j);
            }
        }
    }
    return M;
}

FermionFockVector gaussian_f(const AntilinearMap& T) {
    if (T.tag() != SymmetryTag::Skew) {
        throw DomainViolation("gaussian_f requires a skew label");
    }
    const int m = T.m();
    FermionFockVector out = FermionFockVector::zero(m);
    const std::uint64_t dim = std::uint64_t(1) << m;
    for (std::uint64_t K = 0; K < dim; ++K) {
        if (std::popcount(K) % 2 != 0) continue;
        out.coeff(K) = sub_pfaffian(T.matrix(), K);
    }
    return out;
}

cplx pairing_via_pfaffians(const AntilinearMap& S, const AntilinearMap& T) {
    if (S.tag() != SymmetryTag::Skew || T.tag() != SymmetryTag::Skew) {
        throw DomainViolation("pairing_via_pfaffians requires skew labels");
    }
    return pfaffian_pairing_sum(S.matrix(), T.matrix());
}

cplx spin_gaussian_factor(const GroupElement& g, const AntilinearMap& S) {
    if (g.kind() != GroupKind::Orthogonal) {
        throw DomainViolation("spin_gaussian_factor requires an orthogonal element");
    }
    if (S.tag() != SymmetryTag::Skew) {
        throw DomainViolation("spin_gaussian_factor requires a skew label");
    }
    return pfaffian_pairing_sum(t_hat(g).matrix(), S.matrix());
}

CMat gamma_u(const GroupElement& o, double tol) {
    const double scale = std::max(1.0, o.matrix().norm());
    if (o.q().norm() > tol * scale) {
        throw NotUnitary("gamma_u: element has a nonvanishing antilinear part");
    }
    const int m = o.m();
    const unsigned dim = 1u << m;
    const CMat& P = o.P();
    CMat M(dim, dim);
    for (unsigned K = 0; K < dim; ++K) {
        FermionFockVector col = FermionFockVector::vacuum(m);
        for (int j = m - 1; j >= 0; --j) {
            if (K & (1u << j)) col = fermion_create(P.col(j), col);
        }
        M.col(K) = col.coeff;
    }
    return M;
}

FermionFockVector mu_vacuum(const GroupElement& g) {
    if (g.kind() != GroupKind::Orthogonal) {
        throw DomainViolation("mu_vacuum requires an orthogonal element");
    }
    const StratumFactorization fact = defect_factorize(g);
    const GroupElement h(GroupKind::Orthogonal, fact.h, 1e-8);
    FermionFockVector out = gaussian_f(t_of(h));
    const OneParticleSpace V = g.space();
    for (int i = fact.k - 1; i >= 0; --i) {
        out = fermion_create(V.to_complex(fact.kernel_basis[i]), out);
    }
    Eigen::JacobiSVD<CMat> svd(g.P());
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    double c_g = 1.0;
    if (smax >= 1e-14) {
        const double cutoff = 1e-8 * smax;
        for (int i = 0; i < sv.size(); ++i) {
            if (!(sv(i) < cutoff)) c_g *= std::sqrt(sv(i));
        }
    }
    out.coeff *= c_g;
    return out;
}

PinElement::PinElement(GroupElement total, GroupElement body,
                       std::vector<Vec> prefix, StratumFactorization fact)
    : total_(std::move(total)),
      body_(std::move(body)),
      prefix_(std::move(prefix)),
      fact_(std::move(fact)) {}

PinElement PinElement::from_group(const GroupElement& g) {
    if (g.kind() != GroupKind::Orthogonal) {
        throw DomainViolation("PinElement requires an orthogonal element");
    }
    return PinElement(g, g, {}, defect_factorize(g));
}

PinElement PinElement::reflection(const OneParticleSpace& V, const Vec& v) {
    return word(V, {v}, GroupElement(GroupKind::Orthogonal, identity_body(V.dim())));
}

PinElement PinElement::word(const OneParticleSpace& V, std::vector<Vec> prefix,
                            GroupElement body) {
    if (body.kind() != GroupKind::Orthogonal) {
        throw DomainViolation("PinElement requires an orthogonal body");
    }
    if (body.m() != V.m()) throw DomainViolation("PinElement: dimension mismatch");
    for (Vec& v : prefix) {
        const double n = v.norm();
        if (n < 1e-14) throw DomainViolation("PinElement: zero reflection vector");
        if (v.size() != V.dim()) throw DomainViolation("PinElement: vector dimension mismatch");
        v /= n;
    }
    Mat total = body.matrix();
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        total = reflection_matrix(V, *it) * total;
    }
    StratumFactorization fact = defect_factorize(body);
    return PinElement(GroupElement(GroupKind::Orthogonal, total), std::move(body),
                      std::move(prefix), std::move(fact));
}

PinElement PinElement::times(const PinElement& other) const {
    if (m() != other.m()) throw DomainViolation("PinElement product: dimension mismatch");
    const OneParticleSpace V = body_.space();
    std::vector<Vec> pref = prefix_;
    for (const Vec& w : other.prefix_) pref.push_back(body_.matrix() * w);
    Mat body = body_.matrix() * other.body_.matrix();
    while (pref.size() >= 2) {
        const Vec v2 = pref.back();
        pref.pop_back();
        const Vec v1 = pref.back();
        pref.pop_back();
        body = reflection_matrix(V, v1) * (reflection_matrix(V, v2) * body);
    }
    GroupElement b(GroupKind::Orthogonal, body);
    if (pref.empty()) return from_group(b);
    return word(V, std::move(pref), std::move(b));
}

CMat mu_full(const PinElement& x) {
    const GroupElement& b = x.body();
    const int m = b.m();
    const unsigned dim = 1u << m;
    const OneParticleSpace V = b.space();
    const FermionFockVector vac = mu_vacuum(b);
    const CMat& P = b.P();
    const CMat& Q = b.Q();
    CMat M(dim, dim);
    for (unsigned K = 0; K < dim; ++K) {
        FermionFockVector col = vac;
        for (int j = m - 1; j >= 0; --j) {
            if (K & (1u << j)) {
                col = fermion_create(P.col(j), col) +
                      fermion_annihilate(Q.col(j), col);
            }
        }
        M.col(K) = col.coeff;
    }
    const auto& pref = x.reflection_prefix();
    for (auto it = pref.rbegin(); it != pref.rend(); ++it) {
        M = psi_matrix(V, *it) * M;
    }
    return M;
}

CMat mu_full(const GroupElement& g) { return mu_full(PinElement::from_group(g)); }

CocycleValue cocycle_f(const GroupElement& g, const GroupElement& h) {
    if (g.kind() != GroupKind::Orthogonal || h.kind() != GroupKind::Orthogonal) {
        throw DomainViolation("cocycle_f requires orthogonal elements");
    }
    if (stratum_k(g) != 0) throw StratumViolation("cocycle_f: left factor off the top stratum");
    if (stratum_k(h) != 0) throw StratumViolation("cocycle_f: right factor off the top stratum");
    if (stratum_k(multiply(g, h)) != 0) {
        throw StratumViolation("cocycle_f: product off the top stratum");
    }
    const cplx w = pfaffian_pairing_sum(t_hat(g).matrix(), t_of(h).matrix());
    const double mag = std::abs(w);
    if (mag < 1e-300) throw StratumViolation("cocycle_f: vanishing half determinant");
    return {w / mag, std::arg(w)};
}

CocycleValue cocycle_pin(const PinElement& x, const PinElement& y,
                         double scalar_tol) {
    const CMat A = mu_full(x);
    const CMat B = mu_full(y);
    const CMat C = mu_full(x.times(y));
    const CMat prod = A * B;
    const double dim = static_cast<double>(C.rows());
    const cplx lambda = (C.adjoint() * prod).trace() / dim;
    const double residual = (prod - lambda * C).norm() / std::sqrt(dim);
    if (!(residual <= scalar_tol)) {
        throw NonScalarResidual(residual, "cocycle_pin: product is not a scalar multiple");
    }
    const double mag = std::abs(lambda);
    if (mag < 1e-300) {
        throw NonScalarResidual(1.0, "cocycle_pin: scalar part vanished");
    }
    return {lambda / mag, std::arg(lambda)};
}

}  // namespace fock
