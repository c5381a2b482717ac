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

#include "gaussmem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "gaussmem/errors.hpp"
#include "gaussmem/gaussian_core.hpp"

namespace gaussmem {

namespace {

constexpr double kExact = 1e-12;
constexpr double kSingularDiscriminant = 1e-12;

bool ideal_memories(const MemoryChannel &ch) {
    return std::abs(ch.y_p1) <= kExact && std::abs(ch.y_p2) <= kExact && std::abs(ch.xi1 - ch.xi2) <= kExact;
}

CriterionVerdict verdict(bool applicable, const MemoryChannel &ch) {
    CriterionVerdict out;
    out.applicable = applicable;
    out.margin = ch.delta_q();
    if (applicable) {
        out.prefer_entanglement = out.margin >= 0.0;
    }
    return out;
}

struct FamilyPoint {
    long double delta_tilde;
    long double det_sigma;
    long double nu_sq;
};

// Invariants of the interpolating family evaluated in extended precision.
// Finite differences with a 1e-5 step lose about five digits to cancellation,
// so the double path alone cannot resolve 1e-6 relative agreement.
FamilyPoint family_point(const InputStateParams &params, const MemoryChannel &channel, double theta) {
    using Real = long double;
    using Mat4L = Eigen::Matrix<Real, 4, 4>;
    using Mat2L = Eigen::Matrix<Real, 2, 2>;
    if (std::abs(channel.xi1 - channel.xi2) > kExact) {
        throw UnsupportedConfiguration("the interpolating family needs equal losses xi1 == xi2");
    }
    params.validate();
    const auto rotation = [](Real angle) {
        const Real c = std::cos(angle);
        const Real s = std::sin(angle);
        Mat4L r = Mat4L::Zero();
        r(0, 0) = r(1, 1) = r(2, 2) = r(3, 3) = c;
        r(0, 2) = r(1, 3) = s;
        r(2, 0) = r(3, 1) = -s;
        return r;
    };
    const Real s = params.s;
    const Real loss = static_cast<Real>(channel.xi1) * channel.xi1;
    const Real n1 = params.n1 * loss;
    const Real n2 = params.n2 * loss;
    Mat4L input = Mat4L::Zero();
    input.diagonal() << s * n1, n1 / s, n2 / s, n2 * s;
    Mat4L noise = Mat4L::Zero();
    noise.diagonal() << channel.y_q1, channel.y_p1, channel.y_q2, channel.y_p2;
    const Mat4L mix = rotation(std::numbers::pi_v<Real> / 4);
    const Mat4L turn = rotation(static_cast<Real>(theta));
    Mat4L sigma = mix * input * mix.transpose() + turn * noise * turn.transpose();
    sigma = (sigma + sigma.transpose()) / 2;

    const Mat2L alpha = sigma.topLeftCorner<2, 2>();
    const Mat2L beta = sigma.bottomRightCorner<2, 2>();
    const Mat2L gamma = sigma.topRightCorner<2, 2>();
    const Real delta = alpha.determinant() + beta.determinant() - 2 * gamma.determinant();
    const Real det = sigma.partialPivLu().determinant();
    const Real disc = delta * delta - 4 * det;
    if (disc < -kDiscriminantClamp) {
        throw InvariantViolation("negative discriminant in the interpolating family");
    }
    const Real nu_sq = 2 * det / (delta + std::sqrt(std::max(disc, Real{0})));
    return {delta, det, nu_sq};
}

AppendixShorthand shorthand(const InputStateParams &params, const MemoryChannel &channel) {
    const double loss = channel.xi1 * channel.xi1;
    const double n1 = params.n1 * loss;
    const double n2 = params.n2 * loss;
    AppendixShorthand sh;
    sh.a = n1 * params.s;
    sh.b = n1 / params.s;
    sh.c = n2 / params.s;
    sh.d = n2 * params.s;
    sh.delta_p = channel.delta_p();
    sh.delta_q = channel.delta_q();
    sh.big_a = (sh.b - sh.d) * (sh.a + channel.y_q2) * (sh.c + channel.y_q2);
    sh.big_b = (sh.a - sh.c) * (sh.b + channel.y_p2) * (sh.d + channel.y_p2);
    sh.big_c = sh.c * sh.d - sh.a * sh.b + (sh.c - sh.a) * channel.y_p2 + (sh.d - sh.b) * channel.y_q2;
    sh.big_d = (sh.a - sh.c) * (sh.b - sh.d);
    return sh;
}

RuleTally tally(std::string name, std::string statement, bool claimed) {
    RuleTally t;
    t.name = std::move(name);
    t.statement = std::move(statement);
    t.claimed = claimed;
    return t;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

CriterionVerdict ideal_criterion(const InputStateParams &params, const MemoryChannel &channel) {
    return verdict(ideal_memories(channel) && params.assumption_holds(), channel);
}

CriterionVerdict fidelity_criterion(const InputStateParams & /*params*/, const MemoryChannel &channel) {
    return verdict(ideal_memories(channel), channel);
}

DerivativeReport appendix_derivatives(const InputStateParams &params, const MemoryChannel &channel,
                                      double theta, double step) {
    if (std::abs(channel.xi1 - channel.xi2) > kExact) {
        throw UnsupportedConfiguration("derivative formulas need equal losses xi1 == xi2");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    DerivativeReport rep;
    rep.theta = theta;
    rep.step = step;
    rep.abcd = shorthand(params, channel);
    const AppendixShorthand &sh = rep.abcd;

    const FamilyPoint here = family_point(params, channel, theta);
    rep.delta_tilde = static_cast<double>(here.delta_tilde);
    rep.det_sigma = static_cast<double>(here.det_sigma);
    rep.nu_sq = static_cast<double>(here.nu_sq);
    const long double disc_l = here.delta_tilde * here.delta_tilde - 4 * here.det_sigma;
    const double disc = static_cast<double>(disc_l);
    rep.discriminant_root = static_cast<double>(std::sqrt(std::max(disc_l, 0.0L)));
    rep.singular = std::abs(disc) < kSingularDiscriminant;

    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    rep.d_delta_tilde =
        ((sh.a - sh.c) * sh.delta_p + (sh.b - sh.d) * sh.delta_q - 4.0 * sh.delta_p * sh.delta_q * s2) * c2;
    if (!rep.singular && std::abs(channel.y_p1) <= kExact && std::abs(channel.y_p2) <= kExact) {
        rep.d_nu_sq = (sh.b * sh.d * (sh.a - sh.c) * sh.delta_q - rep.nu_sq * (sh.b - sh.d) * sh.delta_q) * c2 /
                      rep.discriminant_root;
    }

    const FamilyPoint up = family_point(params, channel, theta + step);
    const FamilyPoint down = family_point(params, channel, theta - step);
    const long double width = 2.0L * step;
    const long double fd_delta = (up.delta_tilde - down.delta_tilde) / width;
    const long double fd_det = (up.det_sigma - down.det_sigma) / width;
    rep.fd_delta_tilde = static_cast<double>(fd_delta);
    rep.fd_det = static_cast<double>(fd_det);
    rep.fd_nu_sq = static_cast<double>((up.nu_sq - down.nu_sq) / width);
    if (!rep.singular) {
        rep.chain_nu_sq = static_cast<double>((fd_det - here.nu_sq * fd_delta) / std::sqrt(disc_l));
    }
    return rep;
}

bool sign_monotonicity_proof_check(const InputStateParams &params, const MemoryChannel &channel) {
    if (!ideal_memories(channel)) {
        throw std::invalid_argument("monotonicity check needs ideal memories with equal losses");
    }
    if (!params.assumption_holds()) {
        throw std::invalid_argument("monotonicity check needs 1/s^2 <= N2/N1 <= s^2");
    }
    constexpr int kPoints = 50;
    constexpr double kZero = 1e-8;
    const int expected = sign_of(channel.delta_q());
    for (int k = 0; k < kPoints; ++k) {
        const double theta = (std::numbers::pi / 4.0) * k / (kPoints - 1);
        const FamilyPoint up = family_point(params, channel, theta + kDerivativeStep);
        const FamilyPoint down = family_point(params, channel, theta - kDerivativeStep);
        const double slope = static_cast<double>((up.nu_sq - down.nu_sq) / (2.0L * kDerivativeStep));
        const bool ok = expected == 0 ? std::abs(slope) <= kZero : slope * expected >= -kZero;
        if (!ok) {
            return false;
        }
    }
    return true;
}

EvaluatedSample evaluate(const Sample &sample) {
    const ScenarioPair pair = compare(sample.input, sample.channel);
    return {sample, pair.delta_logneg, pair.metrics_b.fidelity - pair.metrics_a.fidelity};
}

const RuleTally &HeuristicReport::rule(const std::string &name) const {
    for (const RuleTally &r : rules) {
        if (r.name == name) return r;
    }
    throw std::out_of_range("no heuristic rule named " + name);
}

HeuristicReport heuristic_sweep(const SampleRegion &region, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("heuristic sweep needs at least one sample");
    }
    struct Rule {
        RuleTally tally;
        bool (*antecedent)(const EvaluatedSample &);
        bool (*consequent)(const EvaluatedSample &);
    };
    constexpr double tol = kHeuristicTolerance;

    std::vector<Rule> rules = {
        {tally("ordered-noise", "dp >= dq >= 0 or dq <= dp <= 0 => dE_N >= 0", true),
         [](const EvaluatedSample &e) {
             const double q = e.sample.channel.delta_q(), p = e.sample.channel.delta_p();
             return (p >= q && q >= 0.0) || (q <= p && p <= 0.0);
         },
         [](const EvaluatedSample &e) { return e.delta_logneg >= -tol; }},
        {tally("opposite-signs", "dq <= 0 and dp >= 0 => dE_N >= 0", true),
         [](const EvaluatedSample &e) {
             return e.sample.channel.delta_q() <= 0.0 && e.sample.channel.delta_p() >= 0.0;
         },
         [](const EvaluatedSample &e) { return e.delta_logneg >= -tol; }},
        {tally("opposite-signs-rev", "dE_N > 0 => dq <= 0 and dp >= 0", false),
         [](const EvaluatedSample &e) { return e.delta_logneg > tol; },
         [](const EvaluatedSample &e) {
             return e.sample.channel.delta_q() <= 0.0 && e.sample.channel.delta_p() >= 0.0;
         }},
        {tally("phase-insensitive", "y_q1 = y_p1 and y_q2 = y_p2 => dE_N >= 0", true),
         [](const EvaluatedSample &e) {
             const MemoryChannel &c = e.sample.channel;
             return std::abs(c.y_q1 - c.y_p1) <= kExact && std::abs(c.y_q2 - c.y_p2) <= kExact;
         },
         [](const EvaluatedSample &e) { return e.delta_logneg >= -tol; }},
        {tally("converse-ordered", "dq >= dp >= 0 => dE_N <= 0", false),
         [](const EvaluatedSample &e) {
             const double q = e.sample.channel.delta_q(), p = e.sample.channel.delta_p();
             return q >= p && p >= 0.0;
         },
         [](const EvaluatedSample &e) { return e.delta_logneg <= tol; }},
    };

    for (std::size_t i = 0; i < samples; ++i) {
        const EvaluatedSample e = evaluate(draw_sample(region, seed, i));
        for (Rule &r : rules) {
            if (!r.antecedent(e)) continue;
            ++r.tally.applicable;
            if (r.consequent(e)) {
                ++r.tally.holds;
            } else {
                ++r.tally.fails;
                r.tally.failures.push_back(e);
            }
        }
    }

    HeuristicReport rep;
    rep.seed = seed;
    rep.samples = samples;
    for (Rule &r : rules) {
        rep.rules.push_back(std::move(r.tally));
    }
    return rep;
}

std::vector<EvaluatedSample> counterexample_search(const SampleRegion &region, std::size_t samples,
                                                   std::uint64_t seed) {
    std::vector<EvaluatedSample> found;
    for (std::size_t i = 0; i < samples; ++i) {
        const EvaluatedSample e = evaluate(draw_sample(region, seed, i));
        if (std::abs(e.delta_logneg) > kCounterexampleThreshold &&
            std::abs(e.delta_fidelity) > kCounterexampleThreshold &&
            sign_of(e.delta_logneg) != sign_of(e.delta_fidelity)) {
            found.push_back(e);
        }
    }
    return found;
}

}  // namespace gaussmem
