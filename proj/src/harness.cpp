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

#include "fock/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <nlohmann/json.hpp>

#include "fock/boson_oracle.hpp"
#include "fock/boson_space.hpp"
#include "fock/errors.hpp"
#include "fock/fermion_space.hpp"
#include "fock/json_io.hpp"
#include "fock/pfaffian.hpp"
#include "fock/quadrature.hpp"
#include "fock/rng.hpp"

namespace fock {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

CheckResult mk(const std::string& name, double residual, double tol) {
    const bool pass = std::isfinite(residual) && residual <= tol;
    return {name, residual, tol, pass};
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

// Relative distance between ExpVectors, coefficient included.
double exp_diff(const ExpVector& a, const ExpVector& b) {
    const double err = std::abs(a.coeff - b.coeff) + (a.t - b.t).norm() +
                       (a.shift - b.shift).norm();
    return rel(err, std::abs(b.coeff) + b.t.norm() + b.shift.norm());
}

std::uint64_t suite_salt(Suite s) {
    switch (s) {
        case Suite::Core:    return 0xC0;
        case Suite::Boson:   return 0xB0;
        case Suite::Fermion: return 0xF0;
        case Suite::Pin:     return 0x91;
        case Suite::All:     break;
    }
    throw InvalidConfig("no per-trial seed for the aggregate suite");
}

Vec scaled_vector(int dim, double lo, double hi, Rng& rng) {
    Vec v = random_vector(dim, rng);
    double n = v.norm();
    if (n < 1e-12) {
        v = Vec::Unit(dim, 0);
        n = 1.0;
    }
    return v * ((lo + (hi - lo) * rng.uniform()) / n);
}

// Product of the square roots of the nonzero singular values of the complex
// linear part; the vacuum normalization used by mu_vacuum.
double spin_vacuum_coeff(const GroupElement& g) {
    Eigen::JacobiSVD<CMat> svd(g.P());
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 1.0;
    const double smax = sv(0);
    if (smax < 1e-14) return 1.0;
    double c = 1.0;
    for (int i = 0; i < sv.size(); ++i)
        if (!(sv(i) < 1e-8 * smax)) c *= std::sqrt(sv(i));
    return c;
}

CMat dense_of(int m,
              const std::function<FermionFockVector(const FermionFockVector&)>& op) {
    const int dim = 1 << m;
    CMat out(dim, dim);
    for (int k = 0; k < dim; ++k) {
        FermionFockVector basis = FermionFockVector::zero(m);
        basis.coeff(k) = cplx(1.0, 0.0);
        out.col(k) = op(basis).coeff;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Input draws. Layouts per suite (replay relies on these positions):
//   core:    elements [g_sp, h_sp, g_so, h_so, u, r]
//            labels   [symmetric, skew]          vectors [v, w]
//   boson:   elements [g, h, k] (all Sp)
//            labels   [symmetric generic, symmetric small, symmetric small]
//            vectors  [u, v, w] (norms <= 0.75)
//   fermion: elements [g, h, k (SO, top stratum incl. products), u, r]
//            labels   [skew, skew]               vectors [u, v, w]
//   pin:     elements [g (SO, top stratum)]      vectors [u, v, w] (unit)
// ---------------------------------------------------------------------------

TrialInputs draw_core(int m, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        TrialInputs in;
        in.m = m;
        in.elements.push_back(random_element(RandomKind::Sp, m, rng));
        in.elements.push_back(random_element(RandomKind::Sp, m, rng));
        in.elements.push_back(random_element(RandomKind::SO, m, rng));
        in.elements.push_back(random_element(RandomKind::SO, m, rng));
        in.elements.push_back(random_element(RandomKind::U_J, m, rng));
        in.elements.push_back(random_element(RandomKind::Reflection, m, rng));
        in.labels.push_back(
            random_label(SymmetryTag::Symmetric, m, 0.1 + 0.4 * rng.uniform(), rng)
                .matrix());
        in.labels.push_back(
            random_label(SymmetryTag::Skew, m, 0.1 + 0.4 * rng.uniform(), rng)
                .matrix());
        in.vectors.push_back(scaled_vector(2 * m, 0.2, 1.0, rng));
        in.vectors.push_back(scaled_vector(2 * m, 0.2, 1.0, rng));

        const GroupElement& gso = in.elements[2];
        const GroupElement& hso = in.elements[3];
        try {
            if (stratum_k(gso, 1e-6) != 0 || stratum_k(hso, 1e-6) != 0) continue;
            if (stratum_k(multiply(gso, hso), 1e-6) != 0) continue;
            AntilinearMap skew(in.labels[1], SymmetryTag::Skew);
            (void)group_action_on_t(gso, t_of(hso));
            (void)group_action_on_t(gso, group_action_on_t(hso, skew));
            (void)group_action_on_t(multiply(gso, hso), skew);
        } catch (const Error&) {
            continue;
        }
        return in;
    }
    throw Error("core input draw failed to satisfy stratum preconditions");
}

TrialInputs draw_boson(int m, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0));
    TrialInputs in;
    in.m = m;
    in.elements.push_back(random_element(RandomKind::Sp, m, rng));
    in.elements.push_back(random_element(RandomKind::Sp, m, rng));
    in.elements.push_back(random_element(RandomKind::Sp, m, rng));
    in.labels.push_back(
        random_label(SymmetryTag::Symmetric, m, 0.2 + 0.3 * rng.uniform(), rng)
            .matrix());
    in.labels.push_back(
        random_label(SymmetryTag::Symmetric, m, 0.05 + 0.25 * rng.uniform(), rng)
            .matrix());
    in.labels.push_back(
        random_label(SymmetryTag::Symmetric, m, 0.05 + 0.25 * rng.uniform(), rng)
            .matrix());
    in.vectors.push_back(scaled_vector(2 * m, 0.15, 0.75, rng));
    in.vectors.push_back(scaled_vector(2 * m, 0.15, 0.75, rng));
    in.vectors.push_back(scaled_vector(2 * m, 0.15, 0.75, rng));
    return in;
}

TrialInputs draw_fermion(int m, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        TrialInputs in;
        in.m = m;
        in.elements.push_back(random_element(RandomKind::SO, m, rng));
        in.elements.push_back(random_element(RandomKind::SO, m, rng));
        in.elements.push_back(random_element(RandomKind::SO, m, rng));
        in.elements.push_back(random_element(RandomKind::U_J, m, rng));
        in.elements.push_back(random_element(RandomKind::Reflection, m, rng));
        in.labels.push_back(
            random_label(SymmetryTag::Skew, m, 0.05 + 0.25 * rng.uniform(), rng)
                .matrix());
        in.labels.push_back(
            random_label(SymmetryTag::Skew, m, 0.05 + 0.25 * rng.uniform(), rng)
                .matrix());
        in.vectors.push_back(scaled_vector(2 * m, 0.2, 1.0, rng));
        in.vectors.push_back(scaled_vector(2 * m, 0.2, 1.0, rng));
        in.vectors.push_back(scaled_vector(2 * m, 0.2, 1.0, rng));

        const GroupElement& g = in.elements[0];
        const GroupElement& h = in.elements[1];
        const GroupElement& k = in.elements[2];
        try {
            bool top = stratum_k(g, 1e-6) == 0 && stratum_k(h, 1e-6) == 0 &&
                       stratum_k(k, 1e-6) == 0;
            top = top && stratum_k(multiply(g, h), 1e-6) == 0;
            top = top && stratum_k(multiply(h, k), 1e-6) == 0;
            top = top && stratum_k(multiply(multiply(g, h), k), 1e-6) == 0;
            if (!top) continue;
            (void)group_action_on_t(g, AntilinearMap(in.labels[0], SymmetryTag::Skew));
        } catch (const Error&) {
            continue;
        }
        return in;
    }
    throw Error("fermion input draw failed to satisfy stratum preconditions");
}

TrialInputs draw_pin(int m, std::uint64_t seed) {
    OneParticleSpace V(m);
    for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        TrialInputs in;
        in.m = m;
        in.elements.push_back(random_element(RandomKind::SO, m, rng));
        in.vectors.push_back(random_unit_vector(2 * m, rng));
        in.vectors.push_back(random_unit_vector(2 * m, rng));
        in.vectors.push_back(random_unit_vector(2 * m, rng));

        const GroupElement& g = in.elements[0];
        const Vec& u = in.vectors[0];
        const Vec& v = in.vectors[1];
        const cplx alpha = V.herm(v, u);
        if (std::abs(alpha) < 0.05) continue;
        if (m >= 2) {
            const Vec perp = u - V.from_complex(alpha * V.to_complex(v));
            if (perp.norm() < 0.05) continue;
        }
        try {
            if (stratum_k(g, 1e-4) != 0) continue;
            const GroupElement s(
                GroupKind::Orthogonal,
                reflection_matrix(V, u) * reflection_matrix(V, v));
            if (stratum_k(s, 1e-4) != 0) continue;
            if (stratum_k(multiply(g, s), 1e-4) != 0) continue;
        } catch (const Error&) {
            continue;
        }
        return in;
    }
    throw Error("pin input draw failed to satisfy stratum preconditions");
}

// ---------------------------------------------------------------------------
// Batteries.
// ---------------------------------------------------------------------------

std::vector<CheckResult> battery_core(const TrialInputs& in, const TrialConfig& cfg) {
    std::vector<CheckResult> out;
    const auto& tol = cfg.tol;
    const int m = in.m;
    OneParticleSpace V(m);
    const GroupElement& gsp = in.elements[0];
    const GroupElement& hsp = in.elements[1];
    const GroupElement& gso = in.elements[2];
    const GroupElement& hso = in.elements[3];
    const GroupElement& uj = in.elements[4];
    const GroupElement& rf = in.elements[5];
    const AntilinearMap Ssym(in.labels[0], SymmetryTag::Symmetric);
    const AntilinearMap Sskew(in.labels[1], SymmetryTag::Skew);

    {
        double r = 0;
        for (const auto& e : in.elements)
            r = std::max(r, rel(e.membership_residual(), e.matrix().squaredNorm()));
        out.push_back(mk("membership", r, tol.membership));
    }
    {
        double r = 0;
        for (const GroupElement* e : {&gsp, &gso, &uj, &rf}) {
            const double scale = std::max(1.0, e->matrix().norm());
            r = std::max(r, V.linear_residual(e->p()) / scale);
            r = std::max(r, V.antilinear_residual(e->q()) / scale);
        }
        out.push_back(mk("split-commutant", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const GroupElement* e : {&gsp, &gso}) {
            r = std::max(r, rel((e->p() + e->q() - e->matrix()).norm(),
                                e->matrix().norm()));
            r = std::max(r, rel((V.real_of_linear(e->P()) - e->p()).norm(),
                                e->p().norm()));
            r = std::max(r, rel((V.real_of_antilinear(e->Q()) - e->q()).norm(),
                                e->q().norm()));
        }
        out.push_back(mk("split-reassembly", r, tol.identity_residual));
    }
    {
        const CMat traw_sp = gsp.Q() * gsp.P().conjugate().inverse();
        const CMat traw_so = gso.Q() * gso.P().conjugate().inverse();
        const double r =
            std::max(rel((traw_sp - traw_sp.transpose()).norm(), traw_sp.norm()),
                     rel((traw_so + traw_so.transpose()).norm(), traw_so.norm()));
        out.push_back(mk("label-symmetry", r, tol.identity_residual));
    }
    {
        const CMat id = CMat::Identity(m, m);
        Eigen::SelfAdjointEigenSolver<CMat> sp(id - t_of(gsp).squared());
        Eigen::SelfAdjointEigenSolver<CMat> so(id - t_of(gso).squared());
        double r = std::max(0.0, sp.eigenvalues().maxCoeff() - 1.0);
        r = std::max(r, -sp.eigenvalues().minCoeff());
        r = std::max(r, std::max(0.0, t_of(gsp).spectral_norm() - 1.0));
        r = std::max(r, std::max(0.0, 1.0 - so.eigenvalues().minCoeff()));
        out.push_back(mk("contraction-dichotomy", r, tol.identity_residual));
    }
    {
        double r = 0;
        const Mat id2 = Mat::Identity(2 * m, 2 * m);
        for (const GroupElement* e : {&gsp, &gso}) {
            const Mat tr = t_of(*e).real_matrix(V);
            const Mat lhs = e->p().transpose() * (id2 - tr * tr) * e->p();
            r = std::max(r, rel((lhs - id2).norm(), e->p().squaredNorm()));
        }
        out.push_back(mk("linear-part-reconstruction", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const auto& pr : {std::make_pair(&gsp, &hsp), std::make_pair(&gso, &hso)}) {
            const GroupElement gh = multiply(*pr.first, *pr.second);
            const ComposedParts cp = compose_pt(*pr.first, *pr.second);
            r = std::max(r, rel((cp.P - gh.P()).norm(), gh.P().norm()));
            r = std::max(r, rel((cp.t.matrix() - t_of(gh).matrix()).norm(),
                                t_of(gh).matrix().norm()));
        }
        out.push_back(mk("compose-parts", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const auto& pr : {std::make_pair(&gsp, &hsp), std::make_pair(&gso, &hso)}) {
            const AntilinearMap lhs = group_action_on_t(*pr.first, t_of(*pr.second));
            const AntilinearMap rhs = t_of(multiply(*pr.first, *pr.second));
            r = std::max(r, rel((lhs.matrix() - rhs.matrix()).norm(),
                                rhs.matrix().norm()));
        }
        out.push_back(mk("action-composition", r, tol.identity_residual));
    }
    {
        double r = 0;
        {
            const AntilinearMap lhs =
                group_action_on_t(gsp, group_action_on_t(hsp, Ssym));
            const AntilinearMap rhs = group_action_on_t(multiply(gsp, hsp), Ssym);
            r = std::max(r, rel((lhs.matrix() - rhs.matrix()).norm(),
                                rhs.matrix().norm()));
        }
        {
            const AntilinearMap lhs =
                group_action_on_t(gso, group_action_on_t(hso, Sskew));
            const AntilinearMap rhs = group_action_on_t(multiply(gso, hso), Sskew);
            r = std::max(r, rel((lhs.matrix() - rhs.matrix()).norm(),
                                rhs.matrix().norm()));
        }
        out.push_back(mk("action-associativity", r, tol.identity_residual));
    }
    {
        double r = 0;
        const Mat id2 = Mat::Identity(2 * m, 2 * m);
        for (const AntilinearMap* L : {&Ssym, &Sskew}) {
            const Mat jw = cayley_from_t(V, *L);
            r = std::max(r, rel((jw * jw + id2).norm(), jw.squaredNorm()));
            r = std::max(r, rel((cayley_to_t(V, jw).matrix() - L->matrix()).norm(),
                                L->matrix().norm()));
        }
        out.push_back(mk("cayley-roundtrip", r, tol.identity_residual));
    }
    {
        const AntilinearMap moved = group_action_on_t(gsp, Ssym);
        const Mat lhs = cayley_from_t(V, moved);
        const Mat rhs =
            gsp.matrix() * cayley_from_t(V, Ssym) * invert(gsp).matrix();
        const double r = rel((lhs - rhs).norm(), rhs.norm());
        out.push_back(mk("cayley-equivariance", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const GroupElement* e : {&gso, &rf}) {
            const bool even = stratum_k(*e) % 2 == 0;
            const bool proper = e->det() > 0;
            r = std::max(r, even == proper ? 0.0 : 1.0);
        }
        const GroupElement mixed = multiply(gso, rf);
        const bool even = stratum_k(mixed) % 2 == 0;
        r = std::max(r, even == (mixed.det() > 0) ? 0.0 : 1.0);
        out.push_back(mk("stratum-parity", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const GroupElement* e : {&gsp, &gso}) {
            const GroupElement back = deserialize(serialize(*e));
            r = std::max(r, (back.matrix() - e->matrix()).norm());
        }
        out.push_back(mk("serialize-roundtrip", r, tol.identity_residual));
    }
    {
        double r = 0;
        const Mat id2 = Mat::Identity(2 * m, 2 * m);
        for (const GroupElement* e : {&gsp, &gso, &uj, &rf}) {
            r = std::max(r, rel((multiply(*e, invert(*e)).matrix() - id2).norm(),
                                e->matrix().squaredNorm()));
        }
        for (const GroupElement* e : {&gsp, &gso}) {
            r = std::max(r, rel((t_hat(*e).matrix() - t_of(invert(*e)).matrix()).norm(),
                                t_hat(*e).matrix().norm()));
        }
        out.push_back(mk("inverse-consistency", r, tol.identity_residual));
    }
    return out;
}

std::vector<CheckResult> battery_boson(const TrialInputs& in, const TrialConfig& cfg) {
    std::vector<CheckResult> out;
    const auto& tol = cfg.tol;
    const int m = in.m;
    const int D = cfg.trunc_degree;
    OneParticleSpace V(m);
    const GroupElement& g = in.elements[0];
    const GroupElement& h = in.elements[1];
    const GroupElement& k = in.elements[2];
    const AntilinearMap Sgen(in.labels[0], SymmetryTag::Symmetric);
    const AntilinearMap Sor(in.labels[1], SymmetryTag::Symmetric);
    const AntilinearMap Tor(in.labels[2], SymmetryTag::Symmetric);
    const Vec& u = in.vectors[0];
    const Vec& v = in.vectors[1];
    const Vec& w = in.vectors[2];
    const CVec zu = V.to_complex(u);
    const CVec zv = V.to_complex(v);
    const CVec zw = V.to_complex(w);

    {
        const ExpVector f = ExpVector::gaussian(Sgen);
        const ExpVector lhs = weyl_apply(V, v, weyl_apply(V, w, f));
        ExpVector rhs = weyl_apply(V, v + w, f);
        rhs.coeff *= std::exp(cplx(0.0, -0.5 * V.s(v, w)));
        out.push_back(mk("weyl-composition", exp_diff(lhs, rhs),
                         tol.identity_residual));
    }
    {
        const ExpVector seed{cplx(1.0, 0.0), Sor.matrix(), zw};
        const TruncatedFockVector x = truncate(seed, D);
        const TruncatedFockVector a = field_on_oracle(V, u, field_on_oracle(V, v, x));
        const TruncatedFockVector b = field_on_oracle(V, v, field_on_oracle(V, u, x));
        TruncatedFockVector c = x;
        c.coeff = cplx(0.0, 2.0 * V.s(u, v)) * x.coeff;
        const TruncatedFockVector d = oracle_sub(oracle_sub(a, b), c);
        const double r = rel(oracle_norm_up_to(d, D - 2),
                             oracle_norm_up_to(x, D - 2));
        out.push_back(mk("ccr-oracle", r, tol.oracle_comparison));
    }
    {
        const ExpVector fs = ExpVector::gaussian(Sor);
        const ExpVector ft = ExpVector::gaussian(Tor);
        const cplx closed = gaussian_pairing(Sor, Tor);
        const cplx orac = oracle_inner(truncate(fs, D), truncate(ft, D));
        const double allowance = tail_bound(fs, D) * tail_bound(ft, D);
        const double r = std::max(0.0, std::abs(closed - orac) - allowance);
        out.push_back(mk("pairing-oracle", r, tol.oracle_comparison));
    }
    {
        const ExpVector f = weyl_apply(V, v, ExpVector::gaussian(Sgen));
        const cplx lhs = exp_pairing(ExpVector::coherent(zw), f);
        const cplx rhs = evaluate(f, zw);
        out.push_back(mk("reproducing-point", rel(std::abs(lhs - rhs), std::abs(rhs)),
                         tol.identity_residual));
    }
    {
        const cplx lhs = std::conj(gaussian_integral(Sor, Tor, zv, zw));
        const cplx rhs = gaussian_integral(Tor, Sor, zw, zv);
        out.push_back(mk("integral-hermiticity",
                         rel(std::abs(lhs - rhs), std::abs(rhs)),
                         tol.identity_residual));
    }
    if (m == 1) {
        const cplx s = Sor.matrix()(0, 0);
        const cplx t = Tor.matrix()(0, 0);
        const cplx zv0 = zv(0);
        const cplx zw0 = zw(0);
        const auto integrand = [&](double x, double y) -> cplx {
            const cplx z(x, y);
            const cplx zb = std::conj(z);
            const cplx expo = 0.25 * (t * zb * zb + std::conj(s) * z * z +
                                      2.0 * zb * zv0 + 2.0 * std::conj(zw0) * z);
            return std::exp(expo) * std::exp(-0.5 * (x * x + y * y)) /
                   (2.0 * kPi);
        };
        const cplx closed = gaussian_integral(Sor, Tor, zv, zw);
        const cplx quad = integrate_disk(integrand, 12.0, 1e-8);
        out.push_back(mk("integral-quadrature", std::abs(closed - quad),
                         100.0 * tol.oracle_comparison));
    }
    {
        const ExpVector f = weyl_apply(V, v, ExpVector::gaussian(Sor));
        const double before = exp_norm(f);
        const double after = exp_norm(metaplectic_apply_gaussian(g, f));
        out.push_back(mk("metaplectic-isometry",
                         rel(std::abs(after - before), before),
                         tol.identity_residual));
    }
    {
        const TruncatedFockVector x = truncate(ExpVector::gaussian(t_of(g)), D);
        TruncatedFockVector r = oracle_annihilate(zv, x);
        const TruncatedFockVector cr =
            oracle_create(t_of(g).matrix() * zv.conjugate(), x);
        r.coeff += cr.coeff;
        out.push_back(mk("out-vacuum-oracle", oracle_norm_up_to(r, D - 1),
                         tol.oracle_comparison));
    }
    {
        const ExpVector f = ExpVector::gaussian(Sor);
        const ExpVector lhs = metaplectic_apply_gaussian(g, metaplectic_apply_gaussian(h, f));
        ExpVector rhs = metaplectic_apply_gaussian(multiply(g, h), f);
        rhs.coeff *= cocycle_b(g, h).value;
        out.push_back(mk("metaplectic-projective", exp_diff(lhs, rhs),
                         tol.identity_residual));
    }
    {
        const cplx c1 = cocycle_b(g, h).value * cocycle_b(multiply(g, h), k).value;
        const cplx c2 = cocycle_b(g, multiply(h, k)).value * cocycle_b(h, k).value;
        out.push_back(mk("cocycle-relation", std::abs(c1 - c2),
                         tol.identity_residual));
    }
    {
        const cplx lhs = metaplectic_kernel(g, zu, zv);
        const cplx rhs =
            evaluate(metaplectic_apply_gaussian(g, ExpVector::coherent(zv)), zu);
        out.push_back(mk("kernel-point", rel(std::abs(lhs - rhs), std::abs(rhs)),
                         tol.identity_residual));
    }
    {
        const ExpVector f = ExpVector::gaussian(Sor);
        const ExpVector lhs = metaplectic_apply_gaussian(g, weyl_apply(V, v, f));
        const ExpVector rhs =
            weyl_apply(V, g.matrix() * v, metaplectic_apply_gaussian(g, f));
        out.push_back(mk("weyl-intertwining", exp_diff(lhs, rhs),
                         tol.identity_residual));
    }
    {
        const ExpVector f = weyl_apply(V, v, ExpVector::gaussian(Sgen));
        const CVec z = 1.3 * zw;
        const double val =
            std::abs(evaluate(f, z)) * std::exp(-0.25 * z.squaredNorm());
        const double r = std::max(0.0, val / exp_norm(f) - 1.0);
        out.push_back(mk("evaluation-bound", r, tol.identity_residual));
    }
    {
        const cplx closed = field_matrix_element(V, v, zu, zw);
        const TruncatedFockVector y =
            field_on_oracle(V, v, truncate(ExpVector::coherent(zw), D));
        const cplx orac = oracle_inner(truncate(ExpVector::coherent(zu), D), y);
        out.push_back(mk("field-element-oracle", std::abs(closed - orac),
                         tol.oracle_comparison));
    }
    return out;
}

std::vector<CheckResult> battery_fermion(const TrialInputs& in, const TrialConfig& cfg) {
    std::vector<CheckResult> out;
    const auto& tol = cfg.tol;
    const int m = in.m;
    const int dim = 1 << m;
    const double dimscale = std::sqrt(static_cast<double>(dim));
    OneParticleSpace V(m);
    const GroupElement& g = in.elements[0];
    const GroupElement& h = in.elements[1];
    const GroupElement& k = in.elements[2];
    const GroupElement& uj = in.elements[3];
    const GroupElement& rf = in.elements[4];
    const AntilinearMap Sk(in.labels[0], SymmetryTag::Skew);
    const AntilinearMap Tk(in.labels[1], SymmetryTag::Skew);
    const Vec& u = in.vectors[0];
    const Vec& v = in.vectors[1];
    const CVec zu = V.to_complex(u);
    const CVec zv = V.to_complex(v);

    {
        const double r = rel(std::abs(pfaffian(Sk.matrix()) * pfaffian(Sk.matrix()) -
                                      Sk.matrix().determinant()),
                             std::abs(Sk.matrix().determinant()));
        out.push_back(mk("pfaffian-square", r, tol.identity_residual));
    }
    {
        const cplx half = pairing_via_pfaffians(Sk, Tk);
        const cplx full = (CMat::Identity(m, m) -
                           Tk.matrix() * Sk.matrix().conjugate())
                              .determinant();
        out.push_back(mk("pairing-square", rel(std::abs(half * half - full),
                                               std::abs(full)),
                         tol.identity_residual));
    }
    {
        const cplx lhs = pairing_via_pfaffians(Sk, Tk);
        const cplx rhs = fermion_inner(gaussian_f(Sk), gaussian_f(Tk));
        out.push_back(mk("pairing-dense", rel(std::abs(lhs - rhs), std::abs(rhs)),
                         tol.identity_residual));
    }
    {
        const double lhs = gaussian_f(Tk).coeff.squaredNorm();
        const Mat tr = Tk.real_matrix(V);
        const double rhs = std::pow(
            (Mat::Identity(2 * m, 2 * m) - tr * tr).determinant(), 0.25);
        out.push_back(mk("gaussian-norm", rel(std::abs(lhs - rhs), rhs),
                         tol.identity_residual));
    }
    {
        const CMat cu = dense_of(m, [&](const FermionFockVector& x) {
            return fermion_create(zu, x);
        });
        const CMat cv = dense_of(m, [&](const FermionFockVector& x) {
            return fermion_create(zv, x);
        });
        const CMat au = dense_of(m, [&](const FermionFockVector& x) {
            return fermion_annihilate(zu, x);
        });
        const CMat av = dense_of(m, [&](const FermionFockVector& x) {
            return fermion_annihilate(zv, x);
        });
        const CMat id = CMat::Identity(dim, dim);
        double r = (au * cv + cv * au - V.herm(u, v) * id).norm();
        r = std::max(r, (au * av + av * au).norm());
        r = std::max(r, (cu * cv + cv * cu).norm());
        const CMat pu = psi_matrix(V, u);
        const CMat pv = psi_matrix(V, v);
        r = std::max(r, (pu - cu - au).norm());
        r = std::max(r, (pu * pv + pv * pu - 2.0 * V.d(u, v) * id).norm());
        r = std::max(r, (pv * pv - V.d(v, v) * id).norm());
        out.push_back(mk("car", r / dimscale, tol.identity_residual));
    }
    {
        const CMat G = gamma_u(uj);
        double r = (G.adjoint() * G - CMat::Identity(dim, dim)).norm() / dimscale;
        r = std::max(r, (G * psi_matrix(V, v) -
                         psi_matrix(V, uj.matrix() * v) * G)
                            .norm() /
                         dimscale);
        r = std::max(r, std::abs(G(0, 0) - 1.0));
        out.push_back(mk("gamma-unitary", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const GroupElement* e : {&g, &rf, &uj}) {
            const FermionFockVector mu = mu_vacuum(*e);
            FermionFockVector res =
                fermion_create(e->Q() * zv.conjugate(), mu);
            res.coeff += fermion_annihilate(e->P() * zv, mu).coeff;
            r = std::max(r, res.norm());
            r = std::max(r, std::abs(mu.norm() - 1.0));
        }
        r = std::max(r, (mu_vacuum(uj).coeff -
                         FermionFockVector::vacuum(m).coeff)
                            .norm());
        out.push_back(mk("vacuum-pushforward", r, tol.identity_residual));
    }
    {
        const CMat M = mu_full(g);
        const CMat N = mu_full(h);
        double r = (M.adjoint() * M - CMat::Identity(dim, dim)).norm() / dimscale;
        const cplx c = cocycle_f(g, h).value;
        r = std::max(r, (M * N - c * mu_full(multiply(g, h))).norm() / dimscale);
        out.push_back(mk("spin-projective", r, tol.identity_residual));
    }
    {
        double r = 0;
        for (const GroupElement* e : {&g, &rf}) {
            const CMat M = mu_full(*e);
            r = std::max(r, (M * psi_matrix(V, v) -
                             psi_matrix(V, e->matrix() * v) * M)
                                .norm() /
                             dimscale);
        }
        out.push_back(mk("spin-intertwining", r, tol.identity_residual));
    }
    {
        const cplx c1 = cocycle_f(g, h).value * cocycle_f(multiply(g, h), k).value;
        const cplx c2 = cocycle_f(g, multiply(h, k)).value * cocycle_f(h, k).value;
        out.push_back(mk("cocycle-relation", std::abs(c1 - c2),
                         tol.identity_residual));
    }
    {
        const double r = (mu_full(uj) - gamma_u(uj)).norm() / dimscale;
        out.push_back(mk("gamma-consistency", r, tol.identity_residual));
    }
    {
        const FermionFockVector fs = gaussian_f(Sk);
        const CVec lhs = mu_full(g) * fs.coeff;
        const AntilinearMap gs = group_action_on_t(g, Sk);
        const cplx factor = spin_vacuum_coeff(g) * spin_gaussian_factor(g, Sk);
        const CVec rhs = factor * gaussian_f(gs).coeff;
        out.push_back(mk("gaussian-pushforward",
                         rel((lhs - rhs).norm(), rhs.norm()),
                         tol.identity_residual));
    }
    {
        const CMat M = mu_full(g);
        const CMat cv = dense_of(m, [&](const FermionFockVector& x) {
            return fermion_create(zv, x);
        });
        const CMat target =
            dense_of(m, [&](const FermionFockVector& x) {
                FermionFockVector y = fermion_create(g.Q() * zv.conjugate(), x);
                y.coeff += fermion_annihilate(g.P() * zv, x).coeff;
                return y;
            });
        const double r = (M * cv * M.adjoint() - target.adjoint()).norm() / dimscale;
        out.push_back(mk("bogoliubov", r, tol.identity_residual));
    }
    {
        double improper_block = 0, proper_block = 0;
        const CMat Mg = mu_full(g);
        const CMat Mr = mu_full(rf);
        for (int row = 0; row < dim; ++row) {
            for (int col = 0; col < dim; ++col) {
                const bool same =
                    (std::popcount(static_cast<unsigned>(row)) & 1) ==
                    (std::popcount(static_cast<unsigned>(col)) & 1);
                if (!same) proper_block += std::norm(Mg(row, col));
                if (same) improper_block += std::norm(Mr(row, col));
            }
        }
        const double r = std::sqrt(proper_block) / dimscale +
                         std::sqrt(improper_block) / dimscale;
        out.push_back(mk("parity-structure", r, tol.identity_residual));
    }
    return out;
}

std::vector<CheckResult> battery_pin(const TrialInputs& in, const TrialConfig& cfg) {
    std::vector<CheckResult> out;
    const auto& tol = cfg.tol;
    const int m = in.m;
    const int dim = 1 << m;
    const double dimscale = std::sqrt(static_cast<double>(dim));
    OneParticleSpace V(m);
    const GroupElement& g = in.elements[0];
    const Vec& u = in.vectors[0];
    const Vec& v = in.vectors[1];
    const Vec& w = in.vectors[2];
    const PinElement ru = PinElement::reflection(V, u);
    const PinElement rv = PinElement::reflection(V, v);
    const GroupElement s(GroupKind::Orthogonal,
                         reflection_matrix(V, u) * reflection_matrix(V, v));

    {
        const double r =
            (mu_full(ru) - psi_matrix(V, u)).norm() / dimscale;
        out.push_back(mk("reflection-as-field", r, tol.identity_residual));
    }
    if (m >= 2) {
        const cplx alpha = V.herm(v, u);
        const Vec perp = u - V.from_complex(alpha * V.to_complex(v));
        const double beta = perp.norm();
        const Vec vp = perp / beta;
        const AntilinearMap Ts = t_of(s);
        const cplx ratio = beta / std::conj(alpha);
        double r = (Ts.apply(V, v) -
                    V.from_complex(ratio * V.to_complex(vp)))
                       .norm();
        r = std::max(r, (Ts.apply(V, vp) +
                         V.from_complex(ratio * V.to_complex(v)))
                            .norm());
        out.push_back(mk("two-plane-label", r, tol.identity_residual));
    }
    if (m >= 2) {
        const cplx uv = V.herm(u, v);
        FermionFockVector rhs = fermion_create(
            V.to_complex(u),
            fermion_create(V.to_complex(v), FermionFockVector::vacuum(m)));
        rhs.coeff(0) += uv;
        const CVec expect = std::polar(1.0, -std::arg(uv)) * rhs.coeff;
        const double r = (mu_vacuum(s).coeff - expect).norm();
        out.push_back(mk("two-plane-vacuum", r, tol.identity_residual));
    }
    {
        const cplx expect = std::polar(1.0, std::arg(V.herm(u, v)));
        const cplx got = cocycle_pin(ru, rv, tol.scalarness).value;
        out.push_back(mk("reflection-cocycle", std::abs(got - expect),
                         tol.identity_residual));
    }
    {
        const PinElement pg = PinElement::from_group(g);
        double r = std::abs(cocycle_pin(pg, rv, tol.scalarness).value - 1.0);
        r = std::max(r, std::abs(cocycle_pin(rv, pg, tol.scalarness).value - 1.0));
        out.push_back(mk("mixed-cocycle", r, tol.identity_residual));
    }
    {
        const PinElement pg = PinElement::from_group(g);
        const PinElement spin = ru.times(rv);
        const Vec gu = g.matrix() * u;
        const Vec gv = g.matrix() * v;
        const PinElement rgu = PinElement::reflection(V, gu);
        const PinElement rgv = PinElement::reflection(V, gv);
        const PinElement spin2 = rgu.times(rgv);
        const cplx lhs = cocycle_pin(ru, rv, tol.scalarness).value *
                         cocycle_pin(pg, spin, tol.scalarness).value;
        const cplx rhs = cocycle_pin(rgu, rgv, tol.scalarness).value *
                         cocycle_pin(spin2, pg, tol.scalarness).value;
        out.push_back(mk("conjugation-compatibility", std::abs(lhs - rhs),
                         tol.identity_residual));
    }
    {
        const PinElement word = PinElement::word(V, {w}, g);
        const CMat M = mu_full(word);
        const Vec tv = word.total().matrix() * v;
        const double r =
            (M * psi_matrix(V, v) - psi_matrix(V, tv) * M).norm() / dimscale;
        out.push_back(mk("word-intertwining", r, tol.identity_residual));
    }
    {
        const GroupElement refl_el(GroupKind::Orthogonal, reflection_matrix(V, u));
        const CMat M = mu_full(refl_el);
        const CMat psi = psi_matrix(V, u);
        const cplx lam = (psi.adjoint() * M).trace() / static_cast<double>(dim);
        const double r = (M - lam * psi).norm() / dimscale +
                         std::abs(std::abs(lam) - 1.0);
        out.push_back(mk("canonical-phase", r, tol.identity_residual));
    }
    return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string check_json(const CheckResult& c) {
    std::string s = "{\"name\":\"" + c.name + "\",\"residual\":" +
                    format_double(c.residual) + ",\"tol\":" + format_double(c.tol) +
                    ",\"pass\":" + bool_text(c.pass) + "}";
    return s;
}

std::string trial_json(const TrialResult& r) {
    std::string s = "{\"suite\":\"" + r.suite + "\",\"trial\":" +
                    std::to_string(r.trial) + ",\"m\":" + std::to_string(r.m) +
                    ",\"seed\":" + std::to_string(r.trial_seed) + ",\"checks\":[";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        if (i) s += ",";
        s += check_json(r.checks[i]);
    }
    s += "],\"pass\":" + bool_text(r.pass) + "}";
    return s;
}

std::string tolerances_json(const ToleranceSet& t) {
    std::string s = "{";
    const auto& names = ToleranceSet::names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ",";
        s += "\"" + names[i] + "\":" + format_double(t.get(names[i]));
    }
    s += "}";
    return s;
}

}  // namespace

void ToleranceSet::set(const std::string& name, double value) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw InvalidConfig("tolerance '" + name + "' must be finite and >= 0");
    if (name == "membership")
        membership = value;
    else if (name == "identity-residual")
        identity_residual = value;
    else if (name == "oracle-comparison")
        oracle_comparison = value;
    else if (name == "scalarness")
        scalarness = value;
    else
        throw InvalidConfig("unknown tolerance '" + name + "'");
}

double ToleranceSet::get(const std::string& name) const {
    if (name == "membership") return membership;
    if (name == "identity-residual") return identity_residual;
    if (name == "oracle-comparison") return oracle_comparison;
    if (name == "scalarness") return scalarness;
    throw InvalidConfig("unknown tolerance '" + name + "'");
}

const std::vector<std::string>& ToleranceSet::names() {
    static const std::vector<std::string> list = {
        "membership", "identity-residual", "oracle-comparison", "scalarness"};
    return list;
}

Suite suite_from_name(const std::string& name) {
    if (name == "core") return Suite::Core;
    if (name == "boson") return Suite::Boson;
    if (name == "fermion") return Suite::Fermion;
    if (name == "pin") return Suite::Pin;
    if (name == "all") return Suite::All;
    throw InvalidConfig("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Core:    return "core";
        case Suite::Boson:   return "boson";
        case Suite::Fermion: return "fermion";
        case Suite::Pin:     return "pin";
        case Suite::All:     return "all";
    }
    throw InvalidConfig("unknown suite value");
}

void TrialConfig::validate() const {
    if (m < 1) throw InvalidConfig("m must be >= 1");
    if (trials < 1) throw InvalidConfig("trials must be >= 1");
    if (trunc_degree < 2 || trunc_degree > 60)
        throw InvalidConfig("trunc-degree must lie in [2, 60]");
    const bool boson = suite == Suite::Boson || suite == Suite::All;
    const bool dense = suite == Suite::Fermion || suite == Suite::Pin ||
                       suite == Suite::All;
    if (boson && m > 6)
        throw InvalidConfig("bosonic oracle checks are capped at m <= 6");
    if (dense && m > 10)
        throw InvalidConfig("dense fermionic checks are capped at m <= 10");
    if (m > 32) throw InvalidConfig("m is capped at 32");
    for (const auto& name : ToleranceSet::names()) (void)tol.get(name);
}

TrialInputs draw_trial_inputs(Suite suite, int m, std::uint64_t trial_seed) {
    switch (suite) {
        case Suite::Core:    return draw_core(m, trial_seed);
        case Suite::Boson:   return draw_boson(m, trial_seed);
        case Suite::Fermion: return draw_fermion(m, trial_seed);
        case Suite::Pin:     return draw_pin(m, trial_seed);
        case Suite::All:     break;
    }
    throw InvalidConfig("draw requires a concrete suite");
}

std::vector<CheckResult> run_battery(Suite suite, const TrialInputs& inputs,
                                     const TrialConfig& cfg) {
    switch (suite) {
        case Suite::Core:    return battery_core(inputs, cfg);
        case Suite::Boson:   return battery_boson(inputs, cfg);
        case Suite::Fermion: return battery_fermion(inputs, cfg);
        case Suite::Pin:     return battery_pin(inputs, cfg);
        case Suite::All:     break;
    }
    throw InvalidConfig("battery requires a concrete suite");
}

TrialResult run_trial(Suite suite, int index, const TrialConfig& cfg) {
    TrialResult r;
    r.suite = suite_name(suite);
    r.trial = index;
    r.m = cfg.m;
    r.trial_seed = derive_seed(derive_seed(cfg.seed, suite_salt(suite)),
                               static_cast<std::uint64_t>(index));
    try {
        r.inputs = draw_trial_inputs(suite, cfg.m, r.trial_seed);
        r.checks = run_battery(suite, r.inputs, cfg);
    } catch (const std::exception& e) {
        r.checks.push_back({std::string("exception: ") + e.what(), 9e307, 0.0, false});
    }
    r.pass = true;
    for (const auto& c : r.checks) r.pass = r.pass && c.pass;
    return r;
}

int thread_cap() {
    const char* env = std::getenv("FOCK_COCYCLE_THREADS");
    if (env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(std::min(hc, 64u)) : 1;
}

SuiteReport run_suite(const TrialConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<Suite> suites;
    if (cfg.suite == Suite::All)
        suites = {Suite::Core, Suite::Boson, Suite::Fermion, Suite::Pin};
    else
        suites = {cfg.suite};

    struct Job {
        Suite s;
        int index;
    };
    std::vector<Job> jobs;
    for (Suite s : suites)
        for (int i = 0; i < cfg.trials; ++i) jobs.push_back({s, i});

    SuiteReport rep;
    rep.results.resize(jobs.size());
    const int nthreads =
        std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t j = next.fetch_add(1); j < jobs.size();
             j = next.fetch_add(1))
            rep.results[j] = run_trial(jobs[j].s, jobs[j].index, cfg);
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::string text = "{\"config\":{\"suite\":\"" + suite_name(cfg.suite) +
                       "\",\"m\":" + std::to_string(cfg.m) +
                       ",\"trials\":" + std::to_string(cfg.trials) +
                       ",\"seed\":" + std::to_string(cfg.seed) +
                       ",\"trunc_degree\":" + std::to_string(cfg.trunc_degree) +
                       ",\"tolerances\":" + tolerances_json(cfg.tol) + "}}\n";
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
        const TrialResult& r = rep.results[i];
        if (!r.pass) {
            ++rep.failures;
            if (rep.first_failure < 0) rep.first_failure = static_cast<int>(i);
        }
        text += trial_json(r) + "\n";
    }
    text += "{\"summary\":{\"trials\":" + std::to_string(rep.results.size()) +
            ",\"failures\":" + std::to_string(rep.failures) +
            ",\"pass\":" + bool_text(rep.failures == 0) + "}}\n";
    rep.jsonl = std::move(text);

    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

std::string report_csv(const SuiteReport& report) {
    std::string s = "suite,trial,m,seed,check,residual,tol,pass\n";
    for (const auto& r : report.results) {
        for (const auto& c : r.checks) {
            s += r.suite + "," + std::to_string(r.trial) + "," +
                 std::to_string(r.m) + "," + std::to_string(r.trial_seed) + "," +
                 c.name + "," + format_double(c.residual) + "," +
                 format_double(c.tol) + "," + (c.pass ? "1" : "0") + "\n";
        }
    }
    return s;
}

std::string failure_record(const TrialResult& r, const TrialConfig& cfg) {
    std::string s = "{\"record\":\"fock-cocycle-trial\",\"suite\":\"" + r.suite +
                    "\",\"m\":" + std::to_string(r.m) +
                    ",\"trial\":" + std::to_string(r.trial) +
                    ",\"trial_seed\":" + std::to_string(r.trial_seed) +
                    ",\"trunc_degree\":" + std::to_string(cfg.trunc_degree) +
                    ",\"tolerances\":" + tolerances_json(cfg.tol) +
                    ",\"elements\":[";
    for (std::size_t i = 0; i < r.inputs.elements.size(); ++i) {
        if (i) s += ",";
        s += serialize(r.inputs.elements[i]);
    }
    s += "],\"labels\":[";
    for (std::size_t i = 0; i < r.inputs.labels.size(); ++i) {
        if (i) s += ",";
        s += "[";
        const CMat& a = r.inputs.labels[i];
        for (int row = 0; row < a.rows(); ++row) {
            if (row) s += ",";
            s += "[";
            for (int col = 0; col < a.cols(); ++col) {
                if (col) s += ",";
                s += format_complex(a(row, col));
            }
            s += "]";
        }
        s += "]";
    }
    s += "],\"vectors\":[";
    for (std::size_t i = 0; i < r.inputs.vectors.size(); ++i) {
        if (i) s += ",";
        s += "[";
        const Vec& x = r.inputs.vectors[i];
        for (int row = 0; row < x.size(); ++row) {
            if (row) s += ",";
            s += format_double(x(row));
        }
        s += "]";
    }
    s += "]}";
    return s;
}

TrialResult replay_record(const std::string& json_text, bool validate,
                          const std::map<std::string, double>& tol_overrides) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SerializationError(std::string("record is not valid JSON: ") +
                                 e.what());
    }
    if (!j.is_object() || j.value("record", "") != "fock-cocycle-trial")
        throw SerializationError("not a trial record");

    TrialConfig cfg;
    cfg.suite = suite_from_name(j.at("suite").get<std::string>());
    cfg.m = j.at("m").get<int>();
    cfg.trials = 1;
    cfg.trunc_degree = j.value("trunc_degree", 20);
    if (j.contains("tolerances"))
        for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it)
            cfg.tol.set(it.key(), it.value().get<double>());
    for (const auto& kv : tol_overrides) cfg.tol.set(kv.first, kv.second);
    cfg.validate();

    TrialInputs in;
    in.m = cfg.m;
    for (const auto& el : j.value("elements", nlohmann::json::array())) {
        in.elements.push_back(deserialize(el.dump(), validate));
        if (in.elements.back().m() != cfg.m)
            throw SerializationError("element mode count disagrees with record m");
    }
    for (const auto& lab : j.value("labels", nlohmann::json::array())) {
        const int rows = static_cast<int>(lab.size());
        CMat a(rows, rows);
        for (int row = 0; row < rows; ++row) {
            if (static_cast<int>(lab[row].size()) != rows)
                throw SerializationError("label matrix is not square");
            for (int col = 0; col < rows; ++col) {
                const auto& pair = lab[row][col];
                a(row, col) = cplx(pair.at(0).get<double>(),
                                   pair.at(1).get<double>());
            }
        }
        if (rows != cfg.m) throw SerializationError("label size disagrees with m");
        in.labels.push_back(a);
    }
    for (const auto& vec : j.value("vectors", nlohmann::json::array())) {
        Vec x(static_cast<int>(vec.size()));
        for (int row = 0; row < x.size(); ++row) x(row) = vec[row].get<double>();
        if (x.size() != 2 * cfg.m)
            throw SerializationError("vector size disagrees with m");
        in.vectors.push_back(x);
    }

    TrialResult r;
    r.suite = suite_name(cfg.suite);
    r.trial = j.value("trial", 0);
    r.m = cfg.m;
    r.trial_seed = j.value("trial_seed", std::uint64_t{0});
    r.inputs = in;
    try {
        r.checks = run_battery(cfg.suite, in, cfg);
    } catch (const std::exception& e) {
        r.checks.push_back({std::string("exception: ") + e.what(), 9e307, 0.0, false});
    }
    r.pass = true;
    for (const auto& c : r.checks) r.pass = r.pass && c.pass;
    return r;
}

std::vector<TableRow> cocycle_table(GroupKind kind,
                                    const std::vector<GroupElement>& elements) {
    if (elements.empty()) throw InvalidConfig("cocycle table needs elements");
    const int m = elements.front().m();
    for (const auto& e : elements) {
        if (e.kind() != kind)
            throw InvalidConfig("table elements must all match the table kind");
        if (e.m() != m) throw InvalidConfig("table elements must share one m");
    }
    std::vector<TableRow> rows;
    rows.reserve(elements.size() * elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            TableRow row;
            row.i = static_cast<int>(i);
            row.j = static_cast<int>(j);
            try {
                const CocycleValue c =
                    kind == GroupKind::Symplectic
                        ? cocycle_b(elements[i], elements[j])
                        : cocycle_f(elements[i], elements[j]);
                row.c = c.value;
                row.arg = c.arg;
                row.status = "ok";
            } catch (const Error&) {
                row.c = cplx(0.0, 0.0);
                row.arg = 0.0;
                row.status = "undefined";
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string s = "i,j,re,im,arg,status\n";
    for (const auto& r : rows) {
        s += std::to_string(r.i) + "," + std::to_string(r.j) + "," +
             format_double(r.c.real()) + "," + format_double(r.c.imag()) + "," +
             format_double(r.arg) + "," + r.status + "\n";
    }
    return s;
}

std::string table_json(const std::vector<TableRow>& rows) {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += "{\"i\":" + std::to_string(rows[i].i) +
             ",\"j\":" + std::to_string(rows[i].j) +
             ",\"re\":" + format_double(rows[i].c.real()) +
             ",\"im\":" + format_double(rows[i].c.imag()) +
             ",\"arg\":" + format_double(rows[i].arg) + ",\"status\":\"" +
             rows[i].status + "\"}";
    }
    s += "]\n";
    return s;
}

}  // namespace fock
