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

#include "fock/quadrature.hpp"

#include <cmath>

namespace fock {

namespace {

using cd = std::complex<double>;
using Fn1 = std::function<cd(double)>;

cd simpson(double a, double b, cd fa, cd fm, cd fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

cd adapt(const Fn1& f, double a, double m, double b, cd fa, cd fm, cd fb,
         cd whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const cd flm = f(lm);
    const cd frm = f(rm);
    const cd left = simpson(a, m, fa, flm, fm);
    const cd right = simpson(m, b, fm, frm, fb);
    const cd delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

cd integrate_1d(const Fn1& f, double a, double b, double abs_tol) {
    const double m = 0.5 * (a + b);
    const cd fa = f(a), fm = f(m), fb = f(b);
    const cd whole = simpson(a, b, fa, fm, fb);
    return adapt(f, a, m, b, fa, fm, fb, whole, abs_tol, 28);
}

cd integrate_disk(const std::function<cd(double, double)>& f, double radius,
                  double abs_tol) {
    const Fn1 outer = [&](double x) -> cd {
        const double half = std::sqrt(std::max(0.0, radius * radius - x * x));
        if (half == 0.0) return cd(0.0);
        const Fn1 inner = [&, x](double y) { return f(x, y); };
        return integrate_1d(inner, -half, half, abs_tol / (4.0 * radius));
    };
    return integrate_1d(outer, -radius, radius, abs_tol / 4.0);
}

}  // namespace fock
