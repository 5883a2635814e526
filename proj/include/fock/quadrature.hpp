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

#include <complex>
#include <functional>

namespace fock {

// Adaptive Simpson quadrature of a complex integrand over [a, b].
std::complex<double> integrate_1d(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol);

// Integral over the closed disk of the given radius, inner integral in y.
// Independent cross-check for the closed Gaussian moment formulas (m = 1).
std::complex<double> integrate_disk(
    const std::function<std::complex<double>(double, double)>& f,
    double radius, double abs_tol);

}  // namespace fock
