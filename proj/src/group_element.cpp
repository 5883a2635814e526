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

#include "fock/group_element.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "fock/errors.hpp"

namespace fock {

GroupElement::GroupElement(GroupKind kind, Mat g, double membership_tol)
    : kind_(kind), mat_(std::move(g)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() % 2 != 0 || mat_.rows() == 0) {
        throw NotUnitary("GroupElement: matrix must be 2m x 2m");
    }
    m_ = static_cast<int>(mat_.rows()) / 2;
    OneParticleSpace V(m_);
    auto [p, q] = split(V, mat_);
    p_ = std::move(p);
    q_ = std::move(q);
    P_ = V.complex_of_linear(p_);
    Q_ = V.complex_of_antilinear(q_);
    const double scale = std::max(1.0, mat_.squaredNorm());
    if (membership_residual() > membership_tol * scale) {
        throw NotUnitary(kind_ == GroupKind::Symplectic
                             ? "GroupElement: not symplectic within tolerance"
                             : "GroupElement: not orthogonal within tolerance");
    }
}

double GroupElement::membership_residual() const {
    OneParticleSpace V(m_);
    if (kind_ == GroupKind::Symplectic) {
        return (mat_.transpose() * V.J() * mat_ - V.J()).norm();
    }
    return (mat_.transpose() * mat_ - Mat::Identity(2 * m_, 2 * m_)).norm();
}

std::pair<Mat, Mat> split(const OneParticleSpace& V, const Mat& g) {
    const Mat JgJ = V.J() * g * V.J();
    return {0.5 * (g - JgJ), 0.5 * (g + JgJ)};
}

GroupElement invert(const GroupElement& g) {
    OneParticleSpace V(g.m());
    if (g.kind() == GroupKind::Symplectic) {
        return GroupElement(g.kind(), -V.J() * g.matrix().transpose() * V.J());
    }
    return GroupElement(g.kind(), g.matrix().transpose());
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    if (g.kind() != h.kind() || g.m() != h.m()) {
        throw Error("multiply: mismatched group elements");
    }
    return GroupElement(g.kind(), g.matrix() * h.matrix());
}

int stratum_k(const GroupElement& g, double rel_tol) {
    if (g.kind() == GroupKind::Symplectic) return 0;
    Eigen::JacobiSVD<CMat> svd(g.P());
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    if (smax < 1e-14) return g.m();
    int k = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) < rel_tol * smax) ++k;
    }
    return k;
}

AntilinearMap t_of(const GroupElement& g) {
    if (g.kind() == GroupKind::Orthogonal) {
        const int k = stratum_k(g);
        if (k > 0) {
            throw SingularLinearPart(
                k, "t_of: linear part singular, stratum k = " + std::to_string(k));
        }
    }
    const CMat t = g.Q() * g.P().conjugate().inverse();
    const SymmetryTag tag = g.kind() == GroupKind::Symplectic
                                ? SymmetryTag::Symmetric
                                : SymmetryTag::Skew;
    return AntilinearMap(t, tag, 1e-8);
}

AntilinearMap t_hat(const GroupElement& g) {
    const AntilinearMap t = t_of(g);
    const CMat th = -g.P().inverse() * t.matrix() * g.P().conjugate();
    return AntilinearMap(th, t.tag(), 1e-8);
}

ComposedParts compose_pt(const GroupElement& g, const GroupElement& h) {
    const CMat tg = t_of(g).matrix();
    const CMat th = t_of(h).matrix();
    const CMat tgh_hat = t_hat(g).matrix();
    const CMat M = CMat::Identity(g.m(), g.m()) - tgh_hat * th.conjugate();
    Eigen::JacobiSVD<CMat> svd(M);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * std::max(1.0, sv(0))) {
        throw SingularLinearPart(1, "compose_pt: product leaves the top stratum");
    }
    const CMat Pg_invH = g.P().adjoint().inverse();
    const CMat t = tg + Pg_invH * th * (M.inverse() * g.P().inverse()).conjugate();
    const SymmetryTag tag = g.kind() == GroupKind::Symplectic
                                ? SymmetryTag::Symmetric
                                : SymmetryTag::Skew;
    return ComposedParts{g.P() * M * h.P(), AntilinearMap(t, tag, 1e-7)};
}

AntilinearMap group_action_on_t(const GroupElement& g, const AntilinearMap& S) {
    if (g.m() != S.m()) throw Error("group_action_on_t: dimension mismatch");
    const CMat s = S.matrix();
    const CMat den = g.P().conjugate() + g.Q().conjugate() * s;
    Eigen::JacobiSVD<CMat> svd(den);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * std::max(1.0, sv(0))) {
        throw ActionUndefined("group_action_on_t: singular resolvent");
    }
    const CMat t = (g.Q() + g.P() * s) * den.inverse();
    return AntilinearMap(t, S.tag(), 1e-7);
}

Mat cayley_from_t(const OneParticleSpace& V, const AntilinearMap& T) {
    const Mat Tr = T.real_matrix(V);
    const Mat den = Mat::Identity(V.dim(), V.dim()) + Tr;
    Eigen::FullPivLU<Mat> lu(den);
    if (!lu.isInvertible()) {
        throw DomainViolation("cayley_from_t: 1 + T singular");
    }
    return V.J() * (Mat::Identity(V.dim(), V.dim()) - Tr) * lu.inverse();
}

AntilinearMap cayley_to_t(const OneParticleSpace& V, const Mat& J_W) {
    const int n = V.dim();
    if ((J_W * J_W + Mat::Identity(n, n)).norm() > 1e-8 * std::max(1.0, J_W.squaredNorm())) {
        throw DomainViolation("cayley_to_t: input is not a complex structure");
    }
    const Mat den = V.J() + J_W;
    Eigen::FullPivLU<Mat> lu(den);
    if (!lu.isInvertible()) {
        throw DomainViolation("cayley_to_t: J + J_W singular");
    }
    const Mat Tr = lu.inverse() * (V.J() - J_W);
    if (V.antilinear_residual(Tr) > 1e-8 * std::max(1.0, Tr.norm())) {
        throw DomainViolation("cayley_to_t: result does not anticommute with J");
    }
    const CMat t = V.complex_of_antilinear(Tr);
    const double sym = (t - t.transpose()).norm();
    const double skw = (t + t.transpose()).norm();
    return AntilinearMap(
        t, sym <= skw ? SymmetryTag::Symmetric : SymmetryTag::Skew, 1e-7);
}

Mat reflection_matrix(const OneParticleSpace& V, const Vec& v) {
    const Vec u = v / v.norm();
    return 2.0 * u * u.transpose() - Mat::Identity(V.dim(), V.dim());
}

namespace {

// r_e: e <-> Je, -1 on the orthogonal complement of span{e, Je}.
Mat defect_reflection(const OneParticleSpace& V, const Vec& e) {
    const Vec Je = V.J() * e;
    Mat r = -Mat::Identity(V.dim(), V.dim());
    r += e * e.transpose() + Je * Je.transpose();
    r += Je * e.transpose() + e * Je.transpose();
    return r;
}

}  // namespace

StratumFactorization defect_factorize(const GroupElement& g, double rel_tol) {
    if (g.kind() != GroupKind::Orthogonal) {
        throw Error("defect_factorize: element must be orthogonal");
    }
    OneParticleSpace V(g.m());
    StratumFactorization out;
    out.k = stratum_k(g, rel_tol);
    out.r = Mat::Identity(V.dim(), V.dim());
    if (out.k == 0) {
        out.h = g.matrix();
        return out;
    }
    Eigen::JacobiSVD<CMat> svd(g.P(), Eigen::ComputeFullU);
    // Left singular vectors for the vanishing singular values span ker p_g^T.
    for (int i = 0; i < out.k; ++i) {
        const CVec col = svd.matrixU().col(g.m() - out.k + i);
        out.kernel_basis.push_back(V.from_complex(col));
    }
    for (const Vec& e : out.kernel_basis) {
        out.r = out.r * defect_reflection(V, e);
    }
    out.h = out.r * g.matrix();
    GroupElement h(GroupKind::Orthogonal, out.h, 1e-8);
    if (stratum_k(h, rel_tol) != 0) {
        throw StratumViolation("defect_factorize: residual defect after factorization");
    }
    return out;
}

Vec random_vector(int dim, Rng& rng) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.normal();
    return v;
}

Vec random_unit_vector(int dim, Rng& rng) {
    Vec v = random_vector(dim, rng);
    while (v.norm() < 1e-6) v = random_vector(dim, rng);
    return v / v.norm();
}

GroupElement random_element(RandomKind kind, int m, Rng& rng) {
    constexpr double sigma = 0.5;
    OneParticleSpace V(m);
    const int n = 2 * m;
    switch (kind) {
        case RandomKind::Sp: {
            Mat A(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    A(i, j) = sigma * rng.normal();
                    A(j, i) = A(i, j);
                }
            }
            const Mat X = -V.J() * A;  // JX = A symmetric
            return GroupElement(GroupKind::Symplectic, X.exp());
        }
        case RandomKind::SO: {
            Mat A = Mat::Zero(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    A(i, j) = sigma * rng.normal();
                    A(j, i) = -A(i, j);
                }
            }
            return GroupElement(GroupKind::Orthogonal, A.exp());
        }
        case RandomKind::U_J: {
            CMat B(m, m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    B(i, j) = sigma * rng.normal_complex();
                }
            }
            const CMat X = 0.5 * (B - B.adjoint().eval());
            const CMat U = X.exp();
            return GroupElement(GroupKind::Orthogonal, V.real_of_linear(U));
        }
        case RandomKind::Reflection: {
            const Vec v = random_unit_vector(n, rng);
            return GroupElement(GroupKind::Orthogonal, reflection_matrix(V, v));
        }
    }
    throw Error("random_element: unknown kind");
}

AntilinearMap random_label(SymmetryTag tag, int m, double norm, Rng& rng) {
    CMat G(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) G(i, j) = 0.5 * rng.normal_complex();
    }
    CMat t = tag == SymmetryTag::Symmetric
                 ? CMat(0.5 * (G + G.transpose().eval()))
                 : CMat(0.5 * (G - G.transpose().eval()));
    if (tag == SymmetryTag::Skew) t.diagonal().setZero();
    Eigen::JacobiSVD<CMat> svd(t);
    const double sn = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    if (sn > 1e-14) t *= norm / sn;
    return AntilinearMap(t, tag);
}

GroupElement renormalize(const GroupElement& g) {
    const int n = 2 * g.m();
    if (g.kind() == GroupKind::Orthogonal) {
        Eigen::JacobiSVD<Mat> svd(g.matrix(),
                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
        return GroupElement(GroupKind::Orthogonal,
                            svd.matrixU() * svd.matrixV().transpose());
    }
    OneParticleSpace V(g.m());
    const Mat I = Mat::Identity(n, n);
    Eigen::FullPivLU<Mat> lu(g.matrix() + I);
    if (!lu.isInvertible()) {
        throw DomainViolation("renormalize: symplectic Cayley undefined at eigenvalue -1");
    }
    const Mat X = (g.matrix() - I) * lu.inverse();
    Mat A = V.J() * X;
    A = 0.5 * (A + A.transpose().eval());
    const Mat Xp = -V.J() * A;
    Eigen::FullPivLU<Mat> lu2(I - Xp);
    if (!lu2.isInvertible()) {
        throw DomainViolation("renormalize: re-projected Cayley singular");
    }
    return GroupElement(GroupKind::Symplectic, (I + Xp) * lu2.inverse());
}

}  // namespace fock
