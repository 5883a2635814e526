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

#include "fock/complex_structure.hpp"

#include <stdexcept>

namespace fock {

OneParticleSpace::OneParticleSpace(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("OneParticleSpace: m must be >= 1");
    J_ = Mat::Zero(2 * m, 2 * m);
    for (int k = 0; k < m; ++k) {
        J_(2 * k, 2 * k + 1) = -1.0;
        J_(2 * k + 1, 2 * k) = 1.0;
    }
}

CVec OneParticleSpace::to_complex(const Vec& u) const {
    CVec z(m_);
    for (int k = 0; k < m_; ++k) z(k) = cplx(u(2 * k), u(2 * k + 1));
    return z;
}

Vec OneParticleSpace::from_complex(const CVec& z) const {
    Vec u(2 * m_);
    for (int k = 0; k < m_; ++k) {
        u(2 * k) = z(k).real();
        u(2 * k + 1) = z(k).imag();
    }
    return u;
}

CMat OneParticleSpace::complex_of_linear(const Mat& R) const {
    CMat P(m_, m_);
    for (int j = 0; j < m_; ++j) P.col(j) = to_complex(R.col(2 * j));
    return P;
}

CMat OneParticleSpace::complex_of_antilinear(const Mat& R) const {
    // Basis vectors are real, so conj(z(e_j)) = z(e_j) and the columns read
    // off directly, exactly as in the linear case.
    CMat t(m_, m_);
    for (int j = 0; j < m_; ++j) t.col(j) = to_complex(R.col(2 * j));
    return t;
}

Mat OneParticleSpace::real_of_linear(const CMat& P) const {
    Mat R(2 * m_, 2 * m_);
    const cplx i(0.0, 1.0);
    for (int j = 0; j < m_; ++j) {
        R.col(2 * j) = from_complex(P.col(j));
        R.col(2 * j + 1) = from_complex(i * P.col(j));
    }
    return R;
}

Mat OneParticleSpace::real_of_antilinear(const CMat& t) const {
    Mat R(2 * m_, 2 * m_);
    const cplx i(0.0, 1.0);
    for (int j = 0; j < m_; ++j) {
        R.col(2 * j) = from_complex(t.col(j));
        R.col(2 * j + 1) = from_complex(-i * t.col(j));  // T(Je) = -J(Te)
    }
    return R;
}

}  // namespace fock
