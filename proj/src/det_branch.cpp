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

#include "fock/det_branch.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "fock/errors.hpp"

namespace fock {

BranchedDetSqrt branch_det_inv_sqrt(const CMat& B, double re_floor) {
    Eigen::ComplexEigenSolver<CMat> es(B, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        throw DomainViolation("branch_det_inv_sqrt: eigenvalue solver failed");
    }
    double log_abs = 0.0;
    double arg = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const cplx beta = es.eigenvalues()(i);
        if (beta.real() <= re_floor) {
            throw DomainViolation(
                "branch_det_inv_sqrt: eigenvalue outside the right half-plane");
        }
        // Principal beta^{-1/2}: modulus |beta|^{-1/2}, argument -arg(beta)/2.
        log_abs += -0.5 * std::log(std::abs(beta));
        arg += -0.5 * std::arg(beta);
    }
    return BranchedDetSqrt{std::exp(log_abs) * std::polar(1.0, arg), arg};
}

}  // namespace fock
