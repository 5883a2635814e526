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

#include "fock/boson_space.hpp"

#include <Eigen/LU>
#include <cmath>

#include "fock/errors.hpp"

namespace fock {

namespace {

void require_symmetric_contraction(const AntilinearMap& T, const char* who) {
    if (T.tag() != SymmetryTag::Symmetric) {
        throw DomainViolation(std::string(who) + ": label must be symmetric");
    }
    if (!T.is_strict_contraction()) {
        throw DomainViolation(std::string(who) + ": label must satisfy ||T|| < 1");
    }
}

CMat resolvent(const CMat& t, const CMat& s_conj, const char* who) {
    const CMat M = CMat::Identity(t.rows(), t.cols()) - t * s_conj;
    Eigen::FullPivLU<CMat> lu(M);
    if (!lu.isInvertible()) {
        throw DomainViolation(std::string(who) + ": singular 1 - TS");
    }
    return M;
}

}  // namespace

cplx evaluate(const ExpVector& F, const CVec& z_u) {
    const CVec ub = z_u.conjugate();
    const cplx quad = (ub.transpose() * F.t * ub).value();
    const cplx lin = (ub.transpose() * F.shift).value();
    return F.coeff * std::exp(0.25 * quad + 0.5 * lin);
}

cplx gaussian_pairing(const AntilinearMap& S, const AntilinearMap& T) {
    require_symmetric_contraction(S, "gaussian_pairing");
    require_symmetric_contraction(T, "gaussian_pairing");
    const CMat M = CMat::Identity(T.m(), T.m()) - T.matrix() * S.matrix().conjugate();
    return branch_det_inv_sqrt(M).value;
}

cplx gaussian_integral(const AntilinearMap& S, const AntilinearMap& T,
                       const CVec& v, const CVec& w) {
    const CMat& s = S.matrix();
    const CMat& t = T.matrix();
    const CMat M = resolvent(t, s.conjugate(), "gaussian_integral");
    const CMat Minv = M.inverse();
    const cplx det_factor = branch_det_inv_sqrt(M).value;
    const cplx term1 = (v.transpose() * Minv.transpose() * s.conjugate() * v).value();
    const cplx term2 = (w.conjugate().transpose() * Minv * v).value();
    const cplx term3 =
        (w.conjugate().transpose() * Minv * t * w.conjugate()).value();
    return det_factor * std::exp(0.25 * (term1 + 2.0 * term2 + term3));
}

cplx exp_pairing(const ExpVector& F, const ExpVector& G) {
    const AntilinearMap S(F.t, SymmetryTag::Symmetric, 1e-7);
    const AntilinearMap T(G.t, SymmetryTag::Symmetric, 1e-7);
    return std::conj(F.coeff) * G.coeff * gaussian_integral(S, T, G.shift, F.shift);
}

double exp_norm(const ExpVector& F) {
    const cplx n2 = exp_pairing(F, F);
    return std::sqrt(std::max(0.0, n2.real()));
}

double tail_bound(const ExpVector& F, int D) {
    Eigen::JacobiSVD<CMat> svd(F.t);
    const double tn = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    if (tn >= 1.0) return std::numeric_limits<double>::infinity();
    // tail^2 <= y^-(D+1) ||F_y||^2 with F_y(ubar) = F(sqrt(y) ubar), valid
    // for 1 < y < 1/||t||; minimize over a grid.
    const double y_max = tn > 1e-12 ? 0.999 / tn : 64.0;
    if (y_max <= 1.0) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    constexpr int grid = 48;
    for (int j = 1; j <= grid; ++j) {
        const double y = 1.0 + (y_max - 1.0) * j / grid;
        ExpVector Fy{F.coeff, y * F.t, std::sqrt(y) * F.shift};
        const double bound = std::pow(y, -0.5 * (D + 1)) * exp_norm(Fy);
        best = std::min(best, bound);
    }
    return best;
}

ExpVector weyl_apply(const OneParticleSpace& V, const Vec& v, const ExpVector& F) {
    const CVec zv = V.to_complex(v);
    const CVec zvc = zv.conjugate();
    const cplx vTv = (zvc.transpose() * F.t * zvc).value();
    const cplx vv = zv.squaredNorm();
    const cplx vw = zv.dot(F.shift);  // <v|shift>, conjugates zv
    ExpVector out;
    out.t = F.t;
    out.shift = F.shift + zv - F.t * zvc;
    out.coeff = F.coeff * std::exp(0.25 * (vTv - vv) - 0.5 * vw);
    return out;
}

cplx field_matrix_element(const OneParticleSpace& V, const Vec& v,
                          const CVec& z, const CVec& w) {
    const CVec zv = V.to_complex(v);
    const cplx vw = zv.dot(w);
    const cplx zv_ip = z.dot(zv);
    const cplx zw = z.dot(w);
    const cplx i_over_sqrt2(0.0, 1.0 / std::sqrt(2.0));
    return i_over_sqrt2 * (vw - zv_ip) * std::exp(0.5 * zw);
}

double metaplectic_vacuum_coeff(const GroupElement& g) {
    const CMat t = t_of(g).matrix();
    const CMat one_minus_t2 = CMat::Identity(g.m(), g.m()) - t * t.conjugate();
    const double det = one_minus_t2.determinant().real();
    if (det <= 0.0) {
        throw DomainViolation("metaplectic_vacuum_coeff: 1 - T^2 not positive");
    }
    return std::pow(det, 0.25);
}

cplx metaplectic_kernel(const GroupElement& g, const CVec& u, const CVec& v) {
    const CVec ub = u.conjugate();
    const CMat tg = t_of(g).matrix();
    const CMat th = t_hat(g).matrix();
    const CMat PinvH = g.P().adjoint().inverse();
    const cplx quad_u = (ub.transpose() * tg * ub).value();
    const cplx cross = (ub.transpose() * PinvH * v).value();
    const cplx quad_v = (v.transpose() * th.conjugate() * v).value();
    return metaplectic_vacuum_coeff(g) *
           std::exp(0.25 * (quad_u + 2.0 * cross + quad_v));
}

ExpVector metaplectic_apply_gaussian(const GroupElement& g, const ExpVector& F) {
    if (g.kind() != GroupKind::Symplectic) {
        throw Error("metaplectic_apply_gaussian: element must be symplectic");
    }
    const CMat tg = t_of(g).matrix();
    const CMat th = t_hat(g).matrix();
    const CMat& s = F.t;
    const CMat M = resolvent(s, th.conjugate(), "metaplectic_apply_gaussian");
    const CMat Minv = M.inverse();
    const CMat PinvH = g.P().adjoint().inverse();
    const cplx det_factor = branch_det_inv_sqrt(M).value;
    const cplx gauss =
        (F.shift.transpose() * Minv.transpose() * th.conjugate() * F.shift).value();
    ExpVector out;
    out.t = tg + PinvH * Minv * s * g.P().inverse().conjugate();
    out.shift = PinvH * Minv * F.shift;
    out.coeff = F.coeff * metaplectic_vacuum_coeff(g) * det_factor *
                std::exp(0.25 * gauss);
    return out;
}

CocycleValue cocycle_b(const GroupElement& g, const GroupElement& h) {
    if (g.kind() != GroupKind::Symplectic || h.kind() != GroupKind::Symplectic) {
        throw Error("cocycle_b: elements must be symplectic");
    }
    const CMat th = t_of(h).matrix();
    const CMat tgh = t_hat(g).matrix();
    const CMat M = CMat::Identity(g.m(), g.m()) - th * tgh.conjugate();
    const BranchedDetSqrt b = branch_det_inv_sqrt(M);
    return CocycleValue{std::polar(1.0, b.arg), b.arg};
}

}  // namespace fock
