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

#include "fock/antilinear_map.hpp"

#include <Eigen/SVD>

#include "fock/errors.hpp"

namespace fock {

AntilinearMap::AntilinearMap(CMat t, SymmetryTag tag, double tol) : tag_(tag) {
    if (t.rows() != t.cols()) {
        throw DomainViolation("AntilinearMap: matrix must be square");
    }
    const double scale = std::max(1.0, t.norm());
    if (tag == SymmetryTag::Symmetric) {
        if ((t - t.transpose()).norm() > tol * scale) {
            throw DomainViolation("AntilinearMap: matrix is not symmetric");
        }
        t_ = 0.5 * (t + t.transpose().eval());
    } else {
        if ((t + t.transpose()).norm() > tol * scale) {
            throw DomainViolation("AntilinearMap: matrix is not skew");
        }
        t_ = 0.5 * (t - t.transpose().eval());
        t_.diagonal().setZero();
    }
}

double AntilinearMap::spectral_norm() const {
    if (t_.rows() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(t_);
    return svd.singularValues()(0);
}

}  // namespace fock
