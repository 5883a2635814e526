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

#include <Eigen/Dense>
#include <complex>

namespace fock {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// One-particle phase space R^{2m} with interleaved coordinates
// (x1, y1, ..., xm, ym), complex structure J acting per mode as
// (x, y) -> (-y, x), Euclidean form d, symplectic form s(u,v) = d(Ju, v),
// and the complex scalar product <u|v> = d(u,v) + i s(u,v), antilinear in
// the first slot. Mode k carries the complex coordinate z_k = x_k + i y_k.
class OneParticleSpace {
  public:
    explicit OneParticleSpace(int m);

    int m() const { return m_; }
    int dim() const { return 2 * m_; }
    const Mat& J() const { return J_; }

    double d(const Vec& u, const Vec& v) const { return u.dot(v); }
    double s(const Vec& u, const Vec& v) const { return (J_ * u).dot(v); }
    cplx herm(const Vec& u, const Vec& v) const {
        return to_complex(u).dot(to_complex(v));  // Eigen dot conjugates the left slot
    }

    // z_k = u[2k] + i u[2k+1]
    CVec to_complex(const Vec& u) const;
    Vec from_complex(const CVec& z) const;

    // Complex m x m coefficient matrix of a C-linear real map (RJ = JR):
    // z(Ru) = P z(u).
    CMat complex_of_linear(const Mat& R) const;
    // Complex coefficient matrix of an antilinear real map (RJ = -JR):
    // z(Ru) = t conj(z(u)).
    CMat complex_of_antilinear(const Mat& R) const;

    Mat real_of_linear(const CMat& P) const;
    Mat real_of_antilinear(const CMat& t) const;

    // Commutation defects used by membership checks.
    double linear_residual(const Mat& R) const {      // ||RJ - JR||_F
        return (R * J_ - J_ * R).norm();
    }
    double antilinear_residual(const Mat& R) const {  // ||RJ + JR||_F
        return (R * J_ + J_ * R).norm();
    }

  private:
    int m_;
    Mat J_;
};

}  // namespace fock
