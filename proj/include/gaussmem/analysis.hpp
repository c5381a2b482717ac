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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussmem/memory_channel.hpp"
#include "gaussmem/sampling.hpp"
#include "gaussmem/scenarios.hpp"

namespace gaussmem {

/// Outcome of an analytic storage criterion. `prefer_entanglement` is empty
/// when the criterion's preconditions are not met.
struct CriterionVerdict {
    bool applicable = false;
    std::optional<bool> prefer_entanglement;
    double margin = 0.0;  ///< y_q2 - y_q1; its sign decides

    bool tie() const { return applicable && margin == 0.0; }
};

/// Ideal memories (y_p1 = y_p2 = 0, xi1 = xi2) with 1/s^2 <= N2/N1 <= s^2:
/// E_N(a) >= E_N(b) iff y_q2 >= y_q1.
CriterionVerdict ideal_criterion(const InputStateParams &params, const MemoryChannel &channel);

/// Ideal memories with equal losses: F_a >= F_b iff y_q2 >= y_q1. Needs no
/// assumption on the input state.
CriterionVerdict fidelity_criterion(const InputStateParams &params, const MemoryChannel &channel);

/// Shorthand of the derivative formulas, with N_i already rescaled by xi^2:
/// a = N1 s, b = N1/s, c = N2/s, d = N2 s, and the auxiliary
/// A = (b-d)(a+y_q2)(c+y_q2), B = (a-c)(b+y_p2)(d+y_p2),
/// C = cd - ab + (c-a) y_p2 + (d-b) y_q2, D = (a-c)(b-d).
/// C and D are reported but enter no formula used here.
struct AppendixShorthand {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    double big_a = 0.0, big_b = 0.0, big_c = 0.0, big_d = 0.0;
    double delta_p = 0.0, delta_q = 0.0;
};

/// theta-derivatives of the invariants of the interpolating family.
///
/// The determinant derivative is only available by finite differences; the
/// analytic d(nu^2)/dtheta is only given for ideal memories (y_p = 0).
struct DerivativeReport {
    double theta = 0.0;
    double step = 0.0;
    AppendixShorthand abcd;

    double delta_tilde = 0.0;
    double det_sigma = 0.0;
    double nu_sq = 0.0;
    double discriminant_root = 0.0;  ///< sqrt(Delta^2 - 4 det)
    bool singular = false;           ///< discriminant_root^2 < 1e-12

    double d_delta_tilde = 0.0;     ///< analytic
    std::optional<double> d_nu_sq;  ///< analytic, ideal memories and not singular

    double fd_delta_tilde = 0.0;
    double fd_det = 0.0;
    double fd_nu_sq = 0.0;
    /// (fd_det - nu^2 fd_delta_tilde) / discriminant_root, not singular only.
    std::optional<double> chain_nu_sq;
};

inline constexpr double kDerivativeStep = 1e-5;

/// Throws UnsupportedConfiguration unless xi1 == xi2.
DerivativeReport appendix_derivatives(const InputStateParams &params, const MemoryChannel &channel,
                                      double theta, double step = kDerivativeStep);

/// Samples d(nu^2)/dtheta by central differences on 50 points of [0, pi/4]
/// and checks that it never takes the sign opposite to delta_q (zero allowed).
/// Throws std::invalid_argument outside ideal memories with equal losses or
/// when the input-state assumption fails.
bool sign_monotonicity_proof_check(const InputStateParams &params, const MemoryChannel &channel);

/// One evaluated sample of a Monte-Carlo run.
struct EvaluatedSample {
    Sample sample;
    double delta_logneg = 0.0;  ///< E_N(b) - E_N(a)
    double delta_fidelity = 0.0;  ///< F_b - F_a, unclamped
};

/// Counts for one heuristic "antecedent => consequent" over a sweep.
struct RuleTally {
    std::string name;
    std::string statement;
    bool claimed = true;  ///< false for implications reported only as diagnostics
    std::size_t applicable = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::vector<EvaluatedSample> failures;
};

struct HeuristicReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<RuleTally> rules;

    const RuleTally &rule(const std::string &name) const;
};

inline constexpr double kHeuristicTolerance = 1e-10;

/// Tallies the noise sign rules over `samples` draws from `region`:
///  - ordered-noise:      dp >= dq >= 0 or dq <= dp <= 0  =>  dE_N >= 0
///  - opposite-signs:     dq <= 0 and dp >= 0             =>  dE_N >= 0
///  - opposite-signs-rev: dE_N > 0  =>  dq <= 0 and dp >= 0   (diagnostic)
///  - phase-insensitive:  y_q1 = y_p1 and y_q2 = y_p2     =>  dE_N >= 0
///  - converse-ordered:   dq >= dp >= 0                   =>  dE_N <= 0   (diagnostic)
HeuristicReport heuristic_sweep(const SampleRegion &region, std::size_t samples, std::uint64_t seed);

inline constexpr double kCounterexampleThreshold = 1e-9;

/// Samples whose fidelity difference F_b - F_a and negativity difference
/// E_N(b) - E_N(a) have opposite signs, both larger than 1e-9 in magnitude.
std::vector<EvaluatedSample> counterexample_search(const SampleRegion &region, std::size_t samples,
                                                   std::uint64_t seed);

EvaluatedSample evaluate(const Sample &sample);

}  // namespace gaussmem
