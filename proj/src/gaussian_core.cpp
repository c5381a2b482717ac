// Copyright 2026 The gaussmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussmem/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gaussmem/errors.hpp"

namespace gaussmem {

namespace {

double det4(const Mat4 &m) { return m.partialPivLu().determinant(); }

}  // namespace

CovMat4::CovMat4(const Mat4 &entries) : entries_(entries) {
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (!std::isfinite(entries_(j, k))) {
                throw std::invalid_argument("covariance matrix has a non-finite entry");
            }
            if (std::abs(entries_(j, k) - entries_(k, j)) > kSymmetryTolerance) {
                std::ostringstream msg;
                msg << "covariance matrix is not symmetric at (" << j << ", " << k << ")";
                throw std::invalid_argument(msg.str());
            }
        }
        if (!(entries_(j, j) > 0.0)) {
            throw std::invalid_argument("covariance matrix has a non-positive diagonal entry");
        }
    }
}

CovMat4 CovMat4::diagonal(double q1, double p1, double q2, double p2) {
    return CovMat4(Eigen::Vector4d(q1, p1, q2, p2).asDiagonal().toDenseMatrix());
}

Mat4 BlockDecomposition::reassemble() const {
    Mat4 m;
    m << alpha, gamma, gamma.transpose(), beta;
    return m;
}

Mat4 beam_splitter(double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("beam-splitter angle must be finite");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Mat4 r = Mat4::Zero();
    r.topLeftCorner<2, 2>() = c * Mat2::Identity();
    r.topRightCorner<2, 2>() = s * Mat2::Identity();
    r.bottomLeftCorner<2, 2>() = -s * Mat2::Identity();
    r.bottomRightCorner<2, 2>() = c * Mat2::Identity();
    return r;
}

Mat4 symplectic_form() {
    Mat4 omega = Mat4::Zero();
    omega(0, 1) = 1.0;
    omega(1, 0) = -1.0;
    omega(2, 3) = 1.0;
    omega(3, 2) = -1.0;
    return omega;
}

CovMat4 apply_channel(const CovMat4 &sigma, const MemoryChannel &channel) {
    const double x[4] = {channel.xi1, channel.xi1, channel.xi2, channel.xi2};
    const double y[4] = {channel.y_q1, channel.y_p1, channel.y_q2, channel.y_p2};
    for (int j = 0; j < 4; ++j) {
        if (!std::isfinite(x[j]) || !std::isfinite(y[j])) {
            throw DomainError("channel parameters must be finite");
        }
    }
    // Elementwise so that (j, k) and (k, j) see bitwise identical products.
    Mat4 out;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            out(j, k) = (x[j] * x[k]) * sigma(j, k);
        }
        out(j, j) += y[j];
    }
    return CovMat4(out);
}

CovMat4 congruence(const Mat4 &transform, const CovMat4 &sigma) {
    const Mat4 raw = transform * sigma.matrix() * transform.transpose();
    return CovMat4(0.5 * (raw + raw.transpose()));
}

bool channel_is_physical(const MemoryChannel &channel) {
    const auto mode_ok = [](double xi, double yq, double yp) {
        if (yq < 0.0 || yp < 0.0) {
            throw DomainError("channel noise entries must be non-negative");
        }
        return xi * xi >= 1.0 - std::sqrt(yq * yp) - kSymmetryTolerance;
    };
    const bool first = mode_ok(channel.xi1, channel.y_q1, channel.y_p1);
    const bool second = mode_ok(channel.xi2, channel.y_q2, channel.y_p2);
    return first && second;
}

BlockDecomposition blocks(const CovMat4 &sigma) {
    const Mat4 &m = sigma.matrix();
    return {m.topLeftCorner<2, 2>(), m.bottomRightCorner<2, 2>(), m.topRightCorner<2, 2>()};
}

PtInvariants pt_invariants(const CovMat4 &sigma) {
    const BlockDecomposition b = blocks(sigma);
    return {det4(sigma.matrix()),
            b.alpha.determinant() + b.beta.determinant() - 2.0 * b.gamma.determinant()};
}

double nu_tilde_squared(const PtInvariants &inv) {
    double disc = inv.delta_tilde * inv.delta_tilde - 4.0 * inv.det_sigma;
    if (disc < -kDiscriminantClamp) {
        std::ostringstream msg;
        msg << "negative discriminant " << disc << " in the partially transposed spectrum";
        throw InvariantViolation(msg.str());
    }
    disc = std::max(disc, 0.0);
    const double root = std::sqrt(disc);
    const double larger = inv.delta_tilde + root;
    const double nu_sq = larger > 0.0 ? 2.0 * inv.det_sigma / larger : 0.5 * (inv.delta_tilde - root);
    if (nu_sq < 0.0) {
        throw InvariantViolation("negative squared symplectic eigenvalue");
    }
    return nu_sq;
}

double nu_tilde(const PtInvariants &inv) { return std::sqrt(nu_tilde_squared(inv)); }

double log_negativity(double nu) {
    if (!(nu > 0.0)) {
        throw DomainError("logarithmic negativity needs a positive symplectic eigenvalue");
    }
    return std::max(0.0, -std::log2(nu));
}

double teleportation_fidelity(const CovMat4 &sigma) {
    const BlockDecomposition b = blocks(sigma);
    const Mat2 sz = Eigen::Vector2d(1.0, -1.0).asDiagonal();
    // Noise added by the teleportation: the covariance of the joint variables
    // (sz x1 + x2), which reduces to alpha + beta + 2 sz gamma for diagonal blocks.
    const Mat2 added = sz * b.alpha * sz + b.beta + sz * b.gamma + b.gamma.transpose() * sz;
    const Mat2 m = 2.0 * Mat2::Identity() + added;
    const double det = m.determinant();
    if (!(det > 0.0)) {
        throw DomainError("teleportation fidelity determinant is not positive");
    }
    return 2.0 / std::sqrt(det);
}

bool is_physical(const CovMat4 &sigma, double tolerance) {
    if (sigma.matrix().llt().info() != Eigen::Success) {
        return false;
    }
    const BlockDecomposition b = blocks(sigma);
    const PtInvariants plain{det4(sigma.matrix()),
                             b.alpha.determinant() + b.beta.determinant() + 2.0 * b.gamma.determinant()};
    try {
        return nu_tilde_squared(plain) >= 1.0 - tolerance;
    } catch (const InvariantViolation &) {
        return false;
    }
}

ScenarioMetrics metrics(const CovMat4 &sigma) {
    ScenarioMetrics out;
    out.nu_tilde = nu_tilde(pt_invariants(sigma));
    out.log_neg = log_negativity(out.nu_tilde);
    out.fidelity = teleportation_fidelity(sigma);
    return out;
}

}  // namespace gaussmem
