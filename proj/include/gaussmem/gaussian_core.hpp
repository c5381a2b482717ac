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

#pragma once

#include <Eigen/Dense>

#include "gaussmem/memory_channel.hpp"

// Covariance-matrix algebra for two bosonic modes. Mode ordering is
// (q1, p1, q2, p2) and variances are in units of vacuum noise, so the vacuum
// covariance matrix is the identity.

namespace gaussmem {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kDiscriminantClamp = 1e-9;

/// Real symmetric 4x4 covariance matrix with strictly positive diagonal.
///
/// Physicality (the Robertson-Schroedinger condition) is deliberately not
/// part of the type: intermediate matrices such as X sigma0 X^T with a lossy X
/// can violate it and are still meaningful. Use `is_physical` to test it.
class CovMat4 {
   public:
    /// Throws std::invalid_argument if the matrix is not symmetric to 1e-12,
    /// has a non-finite entry or a non-positive diagonal entry.
    explicit CovMat4(const Mat4 &entries);

    static CovMat4 identity() { return CovMat4(Mat4::Identity()); }
    static CovMat4 diagonal(double q1, double p1, double q2, double p2);

    const Mat4 &matrix() const { return entries_; }
    double operator()(int row, int col) const { return entries_(row, col); }

    bool operator==(const CovMat4 &other) const { return entries_ == other.entries_; }

   private:
    Mat4 entries_;
};

/// 2x2 blocks of a covariance matrix: [[alpha, gamma], [gamma^T, beta]].
struct BlockDecomposition {
    Mat2 alpha;
    Mat2 beta;
    Mat2 gamma;

    Mat4 reassemble() const;
};

/// Partially transposed symplectic invariants.
struct PtInvariants {
    double det_sigma = 1.0;
    double delta_tilde = 2.0;
};

struct ScenarioMetrics {
    double nu_tilde = 1.0;  ///< smallest partially transposed symplectic eigenvalue
    double log_neg = 0.0;   ///< logarithmic negativity, ebits
    double fidelity = 0.5;  ///< coherent-state teleportation fidelity
};

/// Beam-splitter rotation exp(theta J) with J_jk = delta_{j+2,k} - delta_{j,k+2}:
/// [[cos I, sin I], [-sin I, cos I]]. theta = pi/4 is the 50:50 splitter.
Mat4 beam_splitter(double theta);

/// The canonical symplectic form Omega = diag(w, w), w = [[0, 1], [-1, 0]].
Mat4 symplectic_form();

/// X sigma X^T + Y for the diagonal channel. Exactly symmetric for symmetric
/// input, no physicality requirement on sigma.
CovMat4 apply_channel(const CovMat4 &sigma, const MemoryChannel &channel);

/// M sigma M^T for an arbitrary real 4x4 M, symmetrized exactly.
CovMat4 congruence(const Mat4 &transform, const CovMat4 &sigma);

/// xi_i^2 >= 1 - sqrt(y_qi y_pi) for both modes (tolerance 1e-12).
/// Throws DomainError when a noise entry is negative.
bool channel_is_physical(const MemoryChannel &channel);

BlockDecomposition blocks(const CovMat4 &sigma);

/// det(sigma) and det(alpha) + det(beta) - 2 det(gamma).
PtInvariants pt_invariants(const CovMat4 &sigma);

/// Smallest symplectic eigenvalue of the partial transpose from its invariants.
/// Discriminants in [-1e-9, 0) are clamped to zero; anything lower throws
/// InvariantViolation, as does a negative squared eigenvalue.
double nu_tilde(const PtInvariants &inv);

/// Squared counterpart of `nu_tilde`, computed as 2 det / (Delta + sqrt(disc))
/// which avoids cancellation for strongly entangled states.
double nu_tilde_squared(const PtInvariants &inv);

/// max(0, -log2 nu). Throws DomainError for nu <= 0.
double log_negativity(double nu);

/// Optimal coherent-state teleportation fidelity with sigma as the shared
/// resource, 2 / sqrt(det(2 I + alpha + beta + 2 sz gamma)), sz = diag(1, -1).
/// Off-diagonal block entries enter through the symmetric form
/// sz alpha sz + beta + sz gamma + gamma^T sz, identical for diagonal blocks.
///
/// The sign in front of sz gamma is the one matched to the correlations that
/// `beam_splitter(pi/4)` creates (q1 + q2 and p1 - p2 squeezed). Throws
/// DomainError when the determinant is not positive.
double teleportation_fidelity(const CovMat4 &sigma);

/// Robertson-Schroedinger check: sigma > 0 and its smallest symplectic
/// eigenvalue is >= 1 - tolerance.
bool is_physical(const CovMat4 &sigma, double tolerance = 1e-9);

/// nu_tilde, log_neg and fidelity of one state.
ScenarioMetrics metrics(const CovMat4 &sigma);

}  // namespace gaussmem
