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

#include <cmath>
#include <complex>
#include <limits>

#include "doctest.h"

#include "fock/antilinear_map.hpp"
#include "fock/boson_oracle.hpp"
#include "fock/boson_space.hpp"
#include "fock/errors.hpp"
#include "fock/group_element.hpp"
#include "fock/quadrature.hpp"
#include "fock/rng.hpp"

using namespace fock;

namespace {

Mat squeeze_blocks(int m, double r0) {
    Mat g = Mat::Zero(2 * m, 2 * m);
    for (int k = 0; k < m; ++k) {
        g(2 * k, 2 * k) = std::exp(r0 + 0.1 * k);
        g(2 * k + 1, 2 * k + 1) = std::exp(-(r0 + 0.1 * k));
    }
    return g;
}

double exp_dist(const ExpVector& F, const ExpVector& G) {
    return std::abs(F.coeff - G.coeff) + (F.t - G.t).norm() +
           (F.shift - G.shift).norm();
}

// Truncation of F and of its closed-form norm agree up to the geometric
// tail bound (plus floating-point slack).
void check_truncation_tail(const ExpVector& F, int D) {
    const TruncatedFockVector x = truncate(F, D);
    const double head2 = oracle_inner(x, x).real();
    const double full2 = exp_norm(F) * exp_norm(F);
    const double tail = tail_bound(F, D);
    CHECK(head2 <= full2 + 1e-10);
    CHECK(full2 - head2 <= tail * tail + 1e-10);
}

}  // namespace

TEST_CASE("coherent vectors reproduce point evaluation") {
    OneParticleSpace V(2);
    Rng rng(401);
    const Vec v = random_vector(4, rng) * 0.4;
    const CVec z_v = V.to_complex(v);

    // ||E_z||^2 = exp(|z|^2 / 2).
    const ExpVector E = ExpVector::coherent(z_v);
    const double n = exp_norm(E);
    CHECK(n * n == doctest::Approx(std::exp(0.5 * z_v.squaredNorm())));

    // <E_z|E_w> = exp(<z|w>/2) and <E_z|F> = F(z) for Gaussian F.
    const CVec z_w = V.to_complex(random_vector(4, rng) * 0.5);
    const ExpVector Ew = ExpVector::coherent(z_w);
    const cplx overlap = exp_pairing(E, Ew);
    CHECK(std::abs(overlap - std::exp(0.5 * z_v.dot(z_w))) < 1e-12);

    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.4, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.coeff = cplx(0.7, -0.3);
    F.shift = V.to_complex(random_vector(4, rng) * 0.3);
    CHECK(std::abs(exp_pairing(E, F) - evaluate(F, z_v)) < 1e-12);
}

TEST_CASE("gaussian pairing closed form matches the truncated oracle") {
    const AntilinearMap zero1 = AntilinearMap::zero(1, SymmetryTag::Symmetric);
    CHECK(std::abs(gaussian_pairing(zero1, zero1) - cplx(1.0, 0.0)) < 1e-15);

    // One mode: <f_s|f_t> = (1 - conj(s) t)^{-1/2}.
    CMat s1(1, 1), t1(1, 1);
    s1 << cplx(0.3, 0.2);
    t1 << cplx(-0.1, 0.4);
    const AntilinearMap S1(s1, SymmetryTag::Symmetric);
    const AntilinearMap T1(t1, SymmetryTag::Symmetric);
    const cplx expected =
        std::pow(cplx(1.0, 0.0) - std::conj(s1(0, 0)) * t1(0, 0), -0.5);
    CHECK(std::abs(gaussian_pairing(S1, T1) - expected) < 1e-14);

    Rng rng(402);
    for (int m : {1, 2}) {
        const AntilinearMap S = random_label(SymmetryTag::Symmetric, m, 0.3, rng);
        const AntilinearMap T = random_label(SymmetryTag::Symmetric, m, 0.25, rng);
        const int D = 30;
        const cplx closed = gaussian_pairing(S, T);
        const cplx oracle = oracle_inner(truncate(ExpVector::gaussian(S), D),
                                         truncate(ExpVector::gaussian(T), D));
        const double slack = tail_bound(ExpVector::gaussian(S), D) *
                             tail_bound(ExpVector::gaussian(T), D);
        CHECK(std::abs(closed - oracle) <= 1e-10 + slack);
    }
}

TEST_CASE("gaussian moment reduces correctly and is hermitian") {
    OneParticleSpace V(2);
    Rng rng(403);
    const AntilinearMap zero = AntilinearMap::zero(2, SymmetryTag::Symmetric);
    const CVec zv = V.to_complex(random_vector(4, rng) * 0.5);
    const CVec zw = V.to_complex(random_vector(4, rng) * 0.5);

    // S = T = 0: the moment is exp(<w|v>/2).
    const cplx plain = gaussian_integral(zero, zero, zv, zw);
    CHECK(std::abs(plain - std::exp(0.5 * zw.dot(zv))) < 1e-12);

    // conj I(S,T;v,w) = I(T,S;w,v).
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.4, rng);
    const AntilinearMap T = random_label(SymmetryTag::Symmetric, 2, 0.35, rng);
    const cplx a = gaussian_integral(S, T, zv, zw);
    const cplx b = gaussian_integral(T, S, zw, zv);
    CHECK(std::abs(std::conj(a) - b) < 1e-12);

    // Zero sources: I(S,T;0,0) = <f_S|f_T>.
    const CVec z0 = CVec::Zero(2);
    CHECK(std::abs(gaussian_integral(S, T, z0, z0) - gaussian_pairing(S, T)) <
          1e-12);
}

TEST_CASE("one-mode moment agrees with disk quadrature") {
    OneParticleSpace V(1);
    Rng rng(404);
    for (int trial = 0; trial < 3; ++trial) {
        const AntilinearMap S = random_label(SymmetryTag::Symmetric, 1, 0.45, rng);
        const AntilinearMap T = random_label(SymmetryTag::Symmetric, 1, 0.45, rng);
        const CVec zv = V.to_complex(random_vector(2, rng) * 0.4);
        const CVec zw = V.to_complex(random_vector(2, rng) * 0.4);
        const cplx s = S.matrix()(0, 0);
        const cplx t = T.matrix()(0, 0);
        const cplx closed = gaussian_integral(S, T, zv, zw);
        const cplx quad = integrate_disk(
            [&](double x, double y) {
                const cplx z(x, y);
                const cplx zb = std::conj(z);
                const cplx expo = 0.25 * (t * zb * zb + std::conj(s) * z * z +
                                          2.0 * zb * zv(0) +
                                          2.0 * std::conj(zw(0)) * z);
                return std::exp(expo - 0.5 * std::norm(z)) /
                       (2.0 * 3.14159265358979323846);
            },
            12.0, 1e-8);
        CHECK(std::abs(closed - quad) < 1e-6);
    }
}

TEST_CASE("weyl operators translate and compose with the symplectic phase") {
    OneParticleSpace V(2);
    Rng rng(405);
    const Vec v = random_vector(4, rng);
    const Vec w = random_vector(4, rng);

    // beta(v) Omega = exp(-<v|v>/4) E_{z_v}.
    const ExpVector moved = weyl_apply(V, v, ExpVector::vacuum(2));
    ExpVector expected = ExpVector::coherent(V.to_complex(v));
    expected.coeff = std::exp(-0.25 * v.squaredNorm());
    CHECK(exp_dist(moved, expected) < 1e-12);
    CHECK(exp_norm(moved) == doctest::Approx(1.0));

    // Isometry on a generic vector.
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.5, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.shift = V.to_complex(random_vector(4, rng) * 0.4);
    F.coeff = cplx(0.2, 1.1);
    CHECK(exp_norm(weyl_apply(V, v, F)) == doctest::Approx(exp_norm(F)));

    // beta(v) beta(w) = exp(-i s(v,w)/2) beta(v+w).
    const ExpVector lhs = weyl_apply(V, v, weyl_apply(V, w, F));
    ExpVector rhs = weyl_apply(V, (v + w).eval(), F);
    rhs.coeff *= std::exp(cplx(0.0, -0.5 * V.s(v, w)));
    CHECK(exp_dist(lhs, rhs) < 1e-12);
}

TEST_CASE("field matrix elements match the ladder oracle") {
    OneParticleSpace V(2);
    Rng rng(406);
    const int D = 30;
    for (int trial = 0; trial < 3; ++trial) {
        const Vec v = random_vector(4, rng) * 0.8;
        const CVec z = V.to_complex(random_vector(4, rng) * 0.6);
        const CVec w = V.to_complex(random_vector(4, rng) * 0.6);
        const cplx closed = field_matrix_element(V, v, z, w);

        const TruncatedFockVector Ez = truncate(ExpVector::coherent(z), D);
        const TruncatedFockVector Ew = truncate(ExpVector::coherent(w), D);
        const cplx oracle = oracle_inner(Ez, field_on_oracle(V, v, Ew));
        CHECK(std::abs(closed - oracle) < 1e-8);

        // phi(v) is symmetric: conj <E_z|phi E_w> = <E_w|phi E_z>.
        CHECK(std::abs(std::conj(closed) - field_matrix_element(V, v, w, z)) <
              1e-12);
    }
}

TEST_CASE("canonical commutation relations hold on the truncated space") {
    OneParticleSpace V(2);
    Rng rng(407);
    const int D = 14;
    const Vec v = random_vector(4, rng);
    const Vec w = random_vector(4, rng);
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.4, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.shift = V.to_complex(random_vector(4, rng) * 0.3);
    const TruncatedFockVector x = truncate(F, D);

    TruncatedFockVector comm = field_on_oracle(V, v, field_on_oracle(V, w, x));
    comm = oracle_sub(comm, field_on_oracle(V, w, field_on_oracle(V, v, x)));
    TruncatedFockVector scaled = x;
    scaled.coeff *= cplx(0.0, 2.0 * V.s(v, w));
    comm = oracle_sub(comm, scaled);
    // Degrees above D - 2 are polluted by the truncated creations.
    CHECK(oracle_norm_up_to(comm, D - 2) < 1e-10);
}

TEST_CASE("metaplectic operators act correctly on the vacuum") {
    OneParticleSpace V(2);
    const GroupElement g(GroupKind::Symplectic, squeeze_blocks(2, 0.4));
    const AntilinearMap Tg = t_of(g);

    const ExpVector image = metaplectic_apply_gaussian(g, ExpVector::vacuum(2));
    CHECK((image.t - Tg.matrix()).norm() < 1e-12);
    CHECK(image.shift.norm() < 1e-14);

    // Vacuum coefficient det^{1/4}(1 - T_g^2), real positive, unit norm.
    const double c = metaplectic_vacuum_coeff(g);
    const CMat one_minus =
        CMat::Identity(2, 2) - Tg.squared();
    CHECK(c == doctest::Approx(std::pow(one_minus.determinant().real(), 0.25)));
    CHECK(std::abs(image.coeff - cplx(c, 0.0)) < 1e-12);
    CHECK(exp_norm(image) == doctest::Approx(1.0));

    // nu(1) is the identity.
    Rng rng(408);
    const GroupElement id(GroupKind::Symplectic, Mat::Identity(4, 4));
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.5, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.shift = V.to_complex(random_vector(4, rng) * 0.4);
    F.coeff = cplx(-0.4, 0.9);
    CHECK(exp_dist(metaplectic_apply_gaussian(id, F), F) < 1e-13);
}

TEST_CASE("metaplectic kernel matches coherent matrix elements") {
    OneParticleSpace V(2);
    Rng rng(409);
    const GroupElement g = random_element(RandomKind::Sp, 2, rng);
    for (int trial = 0; trial < 3; ++trial) {
        const CVec zu = V.to_complex(random_vector(4, rng) * 0.6);
        const CVec zv = V.to_complex(random_vector(4, rng) * 0.6);
        const ExpVector gEv = metaplectic_apply_gaussian(
            g, ExpVector::coherent(zv));
        // <E_u|nu(g) E_v> = (nu(g) E_v)(u).
        CHECK(std::abs(metaplectic_kernel(g, zu, zv) - evaluate(gEv, zu)) <
              1e-11);
    }
}

TEST_CASE("metaplectic operators are isometries and compose projectively") {
    OneParticleSpace V(2);
    Rng rng(410);
    const GroupElement g = random_element(RandomKind::Sp, 2, rng);
    const GroupElement h = random_element(RandomKind::Sp, 2, rng);

    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.35, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.shift = V.to_complex(random_vector(4, rng) * 0.4);
    F.coeff = cplx(0.8, 0.1);
    CHECK(exp_norm(metaplectic_apply_gaussian(g, F)) ==
          doctest::Approx(exp_norm(F)));

    // nu(g) nu(h) = c(g,h) nu(gh) on Gaussians with shift.
    const ExpVector lhs =
        metaplectic_apply_gaussian(g, metaplectic_apply_gaussian(h, F));
    ExpVector rhs = metaplectic_apply_gaussian(multiply(g, h), F);
    rhs.coeff *= cocycle_b(g, h).value;
    CHECK(exp_dist(lhs, rhs) < 1e-11);
}

TEST_CASE("bosonic cocycle has unit modulus and normalized units") {
    Rng rng(411);
    const GroupElement g = random_element(RandomKind::Sp, 3, rng);
    const GroupElement id(GroupKind::Symplectic, Mat::Identity(6, 6));

    CHECK(std::abs(cocycle_b(id, g).value - cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(cocycle_b(g, id).value - cplx(1.0, 0.0)) < 1e-12);

    const CocycleValue c = cocycle_b(g, invert(g));
    CHECK(std::abs(std::abs(c.value) - 1.0) < 1e-12);
    CHECK(std::abs(c.value - std::polar(1.0, c.arg)) < 1e-12);

    // Same-axis squeezes compose inside the metaplectic branch cut: c = 1.
    const GroupElement s1(GroupKind::Symplectic, squeeze_blocks(3, 0.3));
    const GroupElement s2(GroupKind::Symplectic, squeeze_blocks(3, 0.7));
    CHECK(std::abs(cocycle_b(s1, s2).value - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("cocycle identity holds on random symplectic triples") {
    Rng rng(412);
    for (int trial = 0; trial < 5; ++trial) {
        const GroupElement g = random_element(RandomKind::Sp, 2, rng);
        const GroupElement h = random_element(RandomKind::Sp, 2, rng);
        const GroupElement k = random_element(RandomKind::Sp, 2, rng);
        const cplx lhs = cocycle_b(g, h).value * cocycle_b(multiply(g, h), k).value;
        const cplx rhs = cocycle_b(h, k).value * cocycle_b(g, multiply(h, k)).value;
        CHECK(std::abs(lhs - rhs) < 1e-11);
    }
}

TEST_CASE("truncation tails obey the geometric bound") {
    OneParticleSpace V(2);
    Rng rng(413);
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.3, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.shift = V.to_complex(random_vector(4, rng) * 0.4);
    F.coeff = cplx(1.2, -0.3);

    double prev = std::numeric_limits<double>::infinity();
    for (int D : {8, 14, 20, 26}) {
        const double tb = tail_bound(F, D);
        CHECK(tb < prev);
        prev = tb;
        check_truncation_tail(F, D);
    }
    CHECK(tail_bound(F, 26) < 1e-6);

    // No bound for labels at or past the unit sphere.
    ExpVector wide = F;
    wide.t = CMat::Identity(2, 2);
    CHECK(std::isinf(tail_bound(wide, 10)));
}

TEST_CASE("pointwise evaluation respects the growth bound") {
    OneParticleSpace V(2);
    Rng rng(414);
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.5, rng);
    ExpVector F = ExpVector::gaussian(S);
    F.shift = V.to_complex(random_vector(4, rng) * 0.5);
    F.coeff = cplx(0.4, 0.8);
    const double n = exp_norm(F);
    for (int trial = 0; trial < 5; ++trial) {
        const CVec z = V.to_complex(random_vector(4, rng));
        // |F(z)| <= ||F|| exp(|z|^2/4).
        CHECK(std::abs(evaluate(F, z)) <=
              n * std::exp(0.25 * z.squaredNorm()) + 1e-12);
        // Truncation evaluates to the same number inside the bulk.
        const CVec zs = 0.4 * z;
        CHECK(std::abs(oracle_evaluate(truncate(F, 30), zs) - evaluate(F, zs)) <
              1e-8);
    }
}

TEST_CASE("pure gaussians have even degree support") {
    Rng rng(415);
    const AntilinearMap S = random_label(SymmetryTag::Symmetric, 2, 0.5, rng);
    const TruncatedFockVector x = truncate(ExpVector::gaussian(S), 16);
    CHECK(oracle_norm_odd(x) == doctest::Approx(0.0));
    CHECK(std::abs(x.coeff(0) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("out-vacuum relation annihilates the metaplectic vacuum image") {
    OneParticleSpace V(2);
    Rng rng(416);
    const GroupElement g = random_element(RandomKind::Sp, 2, rng);
    const AntilinearMap Tg = t_of(g);
    const int D = 24;
    const TruncatedFockVector image =
        truncate(metaplectic_apply_gaussian(g, ExpVector::vacuum(2)), D);
    for (int trial = 0; trial < 4; ++trial) {
        const Vec v = random_vector(4, rng);
        // (a(v) + a^+(T_g v)) nu(g) Omega = 0.
        const CVec create_arg =
            Tg.matrix() * V.to_complex(v).conjugate();
        TruncatedFockVector res = oracle_annihilate(V.to_complex(v), image);
        TruncatedFockVector created = oracle_create(create_arg, image);
        res.coeff += created.coeff;
        CHECK(oracle_norm_up_to(res, D - 1) < 1e-10);
    }
}
