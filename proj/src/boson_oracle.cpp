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

#include "fock/boson_oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "fock/errors.hpp"

namespace fock {

namespace {

void enumerate(int m, int D, std::vector<int>& cur, int used,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    for (int a = 0; a <= D - used; ++a) {
        cur.push_back(a);
        enumerate(m, D, cur, used + a, out);
        cur.pop_back();
    }
}

double log_eps_normalization(const std::vector<int>& alpha) {
    // log sqrt(2^{|alpha|} alpha!)
    double s = 0.0;
    int total = 0;
    for (int a : alpha) {
        total += a;
        s += std::lgamma(a + 1.0);
    }
    return 0.5 * (total * std::log(2.0) + s);
}

}  // namespace

MultiIndexTable::MultiIndexTable(int m, int D) : m_(m), D_(D) {
    if (m < 1 || D < 0 || D > 60) {
        throw InvalidConfig("MultiIndexTable: need m >= 1 and 0 <= D <= 60");
    }
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    enumerate(m, D, cur, 0, all);
    std::stable_sort(all.begin(), all.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         int sa = 0, sb = 0;
                         for (int x : a) sa += x;
                         for (int x : b) sb += x;
                         if (sa != sb) return sa < sb;
                         return a < b;
                     });
    list_ = std::move(all);
    degree_.resize(list_.size());
    lookup_.assign(pack(std::vector<int>(m, D)) + 1, -1);
    for (int r = 0; r < static_cast<int>(list_.size()); ++r) {
        int s = 0;
        for (int x : list_[r]) s += x;
        degree_[r] = s;
        lookup_[pack(list_[r])] = r;
    }
}

int MultiIndexTable::pack(const std::vector<int>& alpha) const {
    int key = 0;
    for (int a : alpha) key = key * (D_ + 1) + a;
    return key;
}

int MultiIndexTable::rank_of(const std::vector<int>& alpha) const {
    int total = 0;
    for (int a : alpha) {
        if (a < 0 || a > D_) return -1;
        total += a;
    }
    if (total > D_) return -1;
    return lookup_[pack(alpha)];
}

int MultiIndexTable::rank_shift(int rank, int mode, int delta) const {
    std::vector<int> a = list_[rank];
    a[mode] += delta;
    return rank_of(a);
}

std::shared_ptr<const MultiIndexTable> MultiIndexTable::get(int m, int D) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MultiIndexTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{m, D}];
    if (!slot) slot = std::make_shared<MultiIndexTable>(m, D);
    return slot;
}

TruncatedFockVector TruncatedFockVector::zero(int m, int D) {
    auto table = MultiIndexTable::get(m, D);
    return {table, CVec::Zero(table->size())};
}

TruncatedFockVector truncate(const ExpVector& F, int D) {
    const int m = F.m();
    auto table = MultiIndexTable::get(m, D);
    const int n = table->size();

    // Sparse exponent Q(ubar) = 1/4 ubar^T t ubar + 1/2 ubar^T shift as
    // (rank, coefficient) pairs over monomials ubar^alpha.
    std::vector<std::pair<int, cplx>> Q;
    for (int i = 0; i < m; ++i) {
        if (std::abs(F.shift(i)) > 0.0) {
            std::vector<int> a(m, 0);
            a[i] = 1;
            Q.emplace_back(table->rank_of(a), 0.5 * F.shift(i));
        }
        for (int j = i; j < m; ++j) {
            const cplx c = i == j ? 0.25 * F.t(i, i) : cplx(0.5) * F.t(i, j);
            if (std::abs(c) > 0.0) {
                std::vector<int> a(m, 0);
                a[i] += 1;
                a[j] += 1;
                Q.emplace_back(table->rank_of(a), c);
            }
        }
    }

    CVec acc = CVec::Zero(n);
    CVec term = CVec::Zero(n);
    std::vector<int> zero_idx(m, 0);
    const int r0 = table->rank_of(zero_idx);
    acc(r0) = 1.0;
    term(r0) = 1.0;
    for (int order = 1; order <= D && !Q.empty(); ++order) {
        CVec next = CVec::Zero(n);
        for (int r = 0; r < n; ++r) {
            if (term(r) == cplx(0.0)) continue;
            for (const auto& [qr, qc] : Q) {
                std::vector<int> a = table->alpha(r);
                const auto& b = table->alpha(qr);
                int total = 0;
                for (int i = 0; i < m; ++i) {
                    a[i] += b[i];
                    total += a[i];
                }
                if (total > D) continue;
                next(table->rank_of(a)) += term(r) * qc;
            }
        }
        term = next / static_cast<double>(order);
        acc += term;
        if (term.norm() == 0.0) break;
    }

    // Monomial coefficients -> eps basis: ubar^alpha = sqrt(2^|a| a!) eps_a.
    TruncatedFockVector out{table, CVec(n)};
    for (int r = 0; r < n; ++r) {
        out.coeff(r) =
            F.coeff * acc(r) * std::exp(log_eps_normalization(table->alpha(r)));
    }
    return out;
}

TruncatedFockVector oracle_create(const CVec& z_v, const TruncatedFockVector& x) {
    const auto& T = *x.table;
    TruncatedFockVector out{x.table, CVec::Zero(T.size())};
    const cplx minus_i(0.0, -1.0);
    for (int r = 0; r < T.size(); ++r) {
        if (x.coeff(r) == cplx(0.0)) continue;
        for (int k = 0; k < T.m(); ++k) {
            if (z_v(k) == cplx(0.0)) continue;
            const int up = T.rank_shift(r, k, +1);
            if (up < 0) continue;  // overflow past the degree cap
            const double amp = std::sqrt(T.alpha(r)[k] + 1.0);
            out.coeff(up) += minus_i * z_v(k) * amp * x.coeff(r);
        }
    }
    return out;
}

TruncatedFockVector oracle_annihilate(const CVec& z_v, const TruncatedFockVector& x) {
    const auto& T = *x.table;
    TruncatedFockVector out{x.table, CVec::Zero(T.size())};
    const cplx plus_i(0.0, 1.0);
    for (int r = 0; r < T.size(); ++r) {
        if (x.coeff(r) == cplx(0.0)) continue;
        for (int k = 0; k < T.m(); ++k) {
            const int ak = T.alpha(r)[k];
            if (ak == 0 || z_v(k) == cplx(0.0)) continue;
            const int dn = T.rank_shift(r, k, -1);
            out.coeff(dn) += plus_i * std::conj(z_v(k)) * std::sqrt(double(ak)) *
                             x.coeff(r);
        }
    }
    return out;
}

TruncatedFockVector field_on_oracle(const OneParticleSpace& V, const Vec& v,
                                    const TruncatedFockVector& x) {
    const CVec zv = V.to_complex(v);
    TruncatedFockVector up = oracle_create(zv, x);
    TruncatedFockVector dn = oracle_annihilate(zv, x);
    up.coeff += dn.coeff;
    return up;
}

cplx oracle_inner(const TruncatedFockVector& x, const TruncatedFockVector& y) {
    if (x.table != y.table) throw Error("oracle_inner: mismatched tables");
    return x.coeff.dot(y.coeff);
}

cplx oracle_evaluate(const TruncatedFockVector& x, const CVec& z_u) {
    const auto& T = *x.table;
    const CVec ub = z_u.conjugate();
    cplx sum = 0.0;
    for (int r = 0; r < T.size(); ++r) {
        if (x.coeff(r) == cplx(0.0)) continue;
        cplx mono = 1.0;
        const auto& a = T.alpha(r);
        for (int k = 0; k < T.m(); ++k) {
            for (int p = 0; p < a[k]; ++p) mono *= ub(k);
        }
        sum += x.coeff(r) * mono * std::exp(-log_eps_normalization(a));
    }
    return sum;
}

double oracle_norm_up_to(const TruncatedFockVector& x, int dmax) {
    const auto& T = *x.table;
    double s = 0.0;
    for (int r = 0; r < T.size(); ++r) {
        if (T.total_degree(r) <= dmax) s += std::norm(x.coeff(r));
    }
    return std::sqrt(s);
}

double oracle_norm_odd(const TruncatedFockVector& x) {
    const auto& T = *x.table;
    double s = 0.0;
    for (int r = 0; r < T.size(); ++r) {
        if (T.total_degree(r) % 2 == 1) s += std::norm(x.coeff(r));
    }
    return std::sqrt(s);
}

TruncatedFockVector oracle_sub(const TruncatedFockVector& x,
                               const TruncatedFockVector& y) {
    if (x.table != y.table) throw Error("oracle_sub: mismatched tables");
    return {x.table, x.coeff - y.coeff};
}

}  // namespace fock
