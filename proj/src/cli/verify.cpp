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

#include "gaussmem/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "gaussmem/cli/records.hpp"
#include "gaussmem/gaussian_core.hpp"
#include "gaussmem/sampling.hpp"

namespace gaussmem::cli {

namespace {

constexpr std::size_t kDumpLimit = 5;
constexpr double kPi = std::numbers::pi;

// Collects failures for one property; keeps the worst error seen.
class Check {
   public:
    Check(std::string suite, std::string name) {
        result_.suite = std::move(suite);
        result_.name = std::move(name);
    }

    void count(std::size_t n = 1) { cases_ += n; }
    void error(double e) { worst_ = std::max(worst_, e); }

    void fail(const std::string &what) {
        ++failures_;
        if (result_.counterexamples.size() < kDumpLimit) {
            result_.counterexamples.push_back(what);
        }
    }

    PropertyResult done(std::string note = {}) {
        result_.passed = failures_ == 0;
        std::ostringstream d;
        d << cases_ << " cases, " << failures_ << " failures";
        if (worst_ > 0.0) d << ", max error " << format_number(worst_);
        if (!note.empty()) d << ", " << note;
        result_.detail = d.str();
        return std::move(result_);
    }

   private:
    PropertyResult result_;
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    double worst_ = 0.0;
};

double max_abs(const Mat4 &m) { return m.cwiseAbs().maxCoeff(); }

double relative(double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

std::string describe_cm(const Mat4 &m) {
    std::ostringstream out;
    out << "sigma = [";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out << format_number(m(r, c)) << (c < 3 ? " " : (r < 3 ? "; " : "]"));
        }
    }
    return out.str();
}

// Smallest |eigenvalue| of Omega * Lambda sigma Lambda, an oracle independent of
// the invariant formula.
double nu_tilde_by_eigenvalues(const Mat4 &sigma) {
    const Mat4 flip = Eigen::Vector4d(1.0, 1.0, 1.0, -1.0).asDiagonal();
    const Mat4 m = symplectic_form() * flip * sigma * flip;
    const Eigen::EigenSolver<Mat4> solver(m, false);
    return solver.eigenvalues().cwiseAbs().minCoeff();
}

double inverse_sq(double x) { return 1.0 / std::sqrt(x); }

// Closed forms of both fidelities from the block structure of sigma_a and sigma_b.
std::pair<double, double> closed_form_fidelities(const InputStateParams &in, const MemoryChannel &ch) {
    const double sum = (ch.xi1 + ch.xi2) * (ch.xi1 + ch.xi2) / 4.0;
    const double diff = (ch.xi1 - ch.xi2) * (ch.xi1 - ch.xi2) / 4.0;
    const double s = in.s;
    const double fa = inverse_sq((1.0 + (ch.y_p1 + ch.y_p2) / 2.0 + in.n1 / s * sum + in.n2 * s * diff) *
                                 (1.0 + (ch.y_q1 + ch.y_q2) / 2.0 + in.n2 / s * sum + in.n1 * s * diff));
    const double fb = inverse_sq((1.0 + ch.y_p1 + in.n1 / s * ch.xi1 * ch.xi1) *
                                 (1.0 + ch.y_q2 + in.n2 / s * ch.xi2 * ch.xi2));
    return {fa, fb};
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// ---- core -----------------------------------------------------------------

std::vector<PropertyResult> core_suite(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    const Mat4 omega = symplectic_form();

    {
        Check c("core", "beam-splitter-symplectic");
        for (std::uint64_t i = 0; i < 100; ++i) {
            SampleStream rng(seed, i);
            const double theta = rng.uniform(Range{-2.0 * kPi, 2.0 * kPi});
            const Mat4 r = beam_splitter(theta);
            const double e = std::max(max_abs(r * omega * r.transpose() - omega),
                                      max_abs(r * r.transpose() - Mat4::Identity()));
            c.count();
            c.error(e);
            if (e > 1e-10) c.fail("theta = " + format_number(theta));
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "beam-splitter-composition");
        for (std::uint64_t i = 0; i < 100; ++i) {
            SampleStream rng(seed, 1000 + i);
            const double t1 = rng.uniform(Range{-kPi, kPi});
            const double t2 = rng.uniform(Range{-kPi, kPi});
            const double e = max_abs(beam_splitter(t1) * beam_splitter(t2) - beam_splitter(t1 + t2));
            c.count();
            c.error(e);
            if (e > 1e-10) c.fail("theta1 = " + format_number(t1) + ", theta2 = " + format_number(t2));
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "nu-tilde-eigenvalue-oracle");
        for (std::uint64_t i = 0; i < 1000; ++i) {
            SampleStream rng(seed, 2000 + i);
            const CovMat4 sigma = random_physical_cm(rng);
            const double nu = nu_tilde(pt_invariants(sigma));
            const double oracle = nu_tilde_by_eigenvalues(sigma.matrix());
            const double e = std::abs(nu - oracle) / std::max(1.0, oracle);
            c.count();
            c.error(e);
            if (e > 1e-8) c.fail(describe_cm(sigma.matrix()));
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "fidelity-bounds");
        const double vacuum = teleportation_fidelity(CovMat4::identity());
        c.count();
        c.error(std::abs(vacuum - 0.5));
        if (std::abs(vacuum - 0.5) > 1e-12) c.fail("vacuum F = " + format_number(vacuum));
        for (std::uint64_t i = 0; i < 1000; ++i) {
            SampleStream rng(seed, 3000 + i);
            const CovMat4 sigma = random_physical_cm(rng);
            const double f = teleportation_fidelity(sigma);
            c.count();
            if (!(f > 0.0 && f <= 1.0 + 1e-12)) c.fail(describe_cm(sigma.matrix()));
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "channel-output-symmetric");
        const ChannelRegion region{.y = Range{0.0, 2.0}};
        for (std::uint64_t i = 0; i < 1000; ++i) {
            SampleStream rng(seed, 4000 + i);
            const CovMat4 sigma = random_physical_cm(rng);
            const MemoryChannel ch = draw_sample(region, seed, 4000 + i).channel;
            const Mat4 m = apply_channel(sigma, ch).matrix();
            c.count();
            if (m != m.transpose()) c.fail(describe_cm(m));
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "logneg-monotone-in-noise");
        for (std::uint64_t i = 0; i < 200; ++i) {
            SampleStream rng(seed, 5000 + i);
            const CovMat4 sigma = random_physical_cm(rng);
            const Eigen::Vector4d noise(rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform());
            double previous = metrics(sigma).log_neg;
            for (int k = 1; k <= 20; ++k) {
                const Mat4 noisy = sigma.matrix() + (0.1 * k) * Mat4(noise.asDiagonal());
                const double e = metrics(CovMat4(noisy)).log_neg;
                c.count();
                if (e > previous + 1e-12) c.fail(describe_cm(sigma.matrix()) + ", t = " + format_number(0.1 * k));
                previous = e;
            }
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "identical-cells-symmetry-collapse");
        const ChannelRegion region{.xi = Range{0.5, 1.0}, .y = Range{0.0, 2.0}};
        for (std::uint64_t i = 0; i < 1000; ++i) {
            Sample smp = draw_sample(region, seed, 6000 + i);
            smp.channel.xi2 = smp.channel.xi1;
            smp.channel.y_q2 = smp.channel.y_q1;
            smp.channel.y_p2 = smp.channel.y_p1;
            const double e = max_abs(sigma_a(smp.input, smp.channel).matrix() - sigma_b(smp.input, smp.channel).matrix());
            c.count();
            c.error(e);
            if (e >= 1e-12) c.fail(describe(smp));
        }
        out.push_back(c.done());
    }
    {
        Check c("core", "fidelity-closed-forms");
        const ChannelRegion region{.xi = Range{0.5, 1.0}, .y = Range{0.0, 2.0}};
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const Sample smp = draw_sample(region, seed, 7000 + i);
            const ScenarioPair pair = compare(smp.input, smp.channel);
            const auto [fa, fb] = closed_form_fidelities(smp.input, smp.channel);
            const double e = std::max(std::abs(pair.metrics_a.fidelity - fa), std::abs(pair.metrics_b.fidelity - fb));
            c.count();
            c.error(e);
            if (e > 1e-10) c.fail(describe(smp));
        }
        out.push_back(c.done());
    }
    return out;
}

// ---- criteria -------------------------------------------------------------

std::vector<PropertyResult> criteria_suite(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    const ChannelRegion ideal{.s = Range{1.0, 8.0},
                              .n = Range{1.0, 2.0},
                              .xi = Range{0.7, 1.0},
                              .equal_losses = true,
                              .y = Range{0.0, 1.0},
                              .shape = NoiseShape::QuadratureOnly};
    {
        Check c("criteria", "negativity-biconditional");
        std::size_t skipped = 0;
        for (std::size_t i = 0; i < 1000; ++i) {
            const Sample smp = draw_sample(ideal, seed, i);
            const CriterionVerdict v = ideal_criterion(smp.input, smp.channel);
            if (!v.applicable || std::abs(v.margin) < 1e-12) {
                ++skipped;
                continue;
            }
            const ScenarioPair pair = compare(smp.input, smp.channel);
            if (pair.metrics_a.log_neg == 0.0 && pair.metrics_b.log_neg == 0.0) {
                ++skipped;
                continue;
            }
            c.count();
            if (*v.prefer_entanglement != (pair.metrics_a.log_neg >= pair.metrics_b.log_neg)) c.fail(describe(smp));
        }
        out.push_back(c.done(std::to_string(skipped) + " skipped (not applicable, tie or both separable)"));
    }
    {
        Check c("criteria", "fidelity-biconditional");
        for (std::size_t i = 0; i < 1000; ++i) {
            const Sample smp = draw_sample(ideal, seed, i);
            const CriterionVerdict v = fidelity_criterion(smp.input, smp.channel);
            if (!v.applicable || std::abs(v.margin) < 1e-12) continue;
            const ScenarioPair pair = compare(smp.input, smp.channel);
            const double df = pair.metrics_a.fidelity - pair.metrics_b.fidelity;
            c.count();
            const bool ok = std::abs(df) > 1e-12 ? sign_of(df) == sign_of(v.margin) : false;
            if (!ok) c.fail(describe(smp));
        }
        out.push_back(c.done());
    }
    {
        Check c("criteria", "applicability");
        const InputStateParams outside{4.0, 1.0, 16.0 * 1.01};
        c.count();
        if (ideal_criterion(outside, ideal_channel(0.1, 0.2)).applicable) c.fail("N2/N1 = 1.01 s^2 accepted");
        MemoryChannel noisy_p = ideal_channel(0.1, 0.2);
        noisy_p.y_p2 = 0.1;
        c.count();
        if (ideal_criterion({4.0, 1.0, 1.0}, noisy_p).applicable) c.fail("y_p2 = 0.1 accepted");
        c.count();
        if (fidelity_criterion({4.0, 1.0, 1.0}, noisy_p).applicable) c.fail("fidelity: y_p2 = 0.1 accepted");
        MemoryChannel lossy = ideal_channel(0.1, 0.2);
        lossy.xi2 = 0.9;
        c.count();
        if (ideal_criterion({4.0, 1.0, 1.0}, lossy).applicable) c.fail("xi1 != xi2 accepted");
        out.push_back(c.done());
    }
    {
        Check c("criteria", "no-divergence-at-equal-losses");
        const CellRegion region{.s = Range{2.0, 8.0},
                                .n = Range{1.0, 1.5},
                                .equal_losses = true,
                                .delta_q = Range{0.0, 0.3},
                                .delta_p = Range{0.0, 0.5}};
        const auto found = counterexample_search(region, 10000, seed);
        c.count(10000);
        for (const EvaluatedSample &e : found) c.fail(describe(e.sample));
        out.push_back(c.done());
    }
    {
        Check c("criteria", "loss-stability-grid");
        MemoryCellParams c1{.g = 1.0, .z_sq = 6.4, .delta_at = 0.8, .delta_q = 0.1, .delta_p = 0.3};
        MemoryCellParams c2 = c1;
        c2.delta_at = 0.4;
        const InputStateParams in{8.0, 1.0, 1.0};
        for (int i = 0; i < 25; ++i) {
            for (int k = 0; k < 25; ++k) {
                c1.g = 0.7 + 0.3 * i / 24.0;
                c2.g = 0.7 + 0.3 * k / 24.0;
                const ScenarioPair pair = compare(in, channel_from_cells(c1, c2, LossNoiseConvention::PureLoss));
                c.count();
                if (!(pair.delta_logneg > 0.0)) {
                    c.fail("G1 = " + format_number(c1.g) + ", G2 = " + format_number(c2.g) +
                           ", delta E_N = " + format_number(pair.delta_logneg));
                }
            }
        }
        out.push_back(c.done("loss convention"));
    }
    return out;
}

// ---- appendix -------------------------------------------------------------

std::vector<PropertyResult> appendix_suite(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    const ChannelRegion generic{.s = Range{1.0, 8.0}, .n = Range{1.0, 2.0}, .equal_losses = true};
    ChannelRegion ideal = generic;
    ideal.shape = NoiseShape::QuadratureOnly;
    const auto theta_of = [seed](std::size_t i) {
        SampleStream rng(seed ^ 0x5eedULL, i);
        return rng.uniform(Range{0.0, kPi / 4.0});
    };

    {
        Check c("appendix", "delta-tilde-derivative");
        for (std::size_t i = 0; i < 1000; ++i) {
            const Sample smp = draw_sample(generic, seed, i);
            const double theta = theta_of(i);
            const DerivativeReport rep = appendix_derivatives(smp.input, smp.channel, theta);
            const bool near_zero = std::abs(std::cos(2.0 * theta)) < 1e-3;
            const double e = near_zero ? std::abs(rep.d_delta_tilde - rep.fd_delta_tilde)
                                       : relative(rep.d_delta_tilde, rep.fd_delta_tilde);
            c.count();
            c.error(e);
            if (e > (near_zero ? 1e-8 : 1e-6)) c.fail(describe(smp) + ", theta = " + format_number(theta));
        }
        out.push_back(c.done());
    }
    {
        Check c("appendix", "nu-sq-derivative-ideal");
        std::size_t singular = 0;
        for (std::size_t i = 0; i < 1000; ++i) {
            const Sample smp = draw_sample(ideal, seed, 10000 + i);
            const double theta = theta_of(10000 + i);
            const DerivativeReport rep = appendix_derivatives(smp.input, smp.channel, theta);
            if (!rep.d_nu_sq) {
                ++singular;
                continue;
            }
            const bool near_zero = std::abs(std::cos(2.0 * theta)) < 1e-3;
            const double e = near_zero ? std::abs(*rep.d_nu_sq - rep.fd_nu_sq) : relative(*rep.d_nu_sq, rep.fd_nu_sq);
            c.count();
            c.error(e);
            if (e > (near_zero ? 1e-8 : 1e-6)) c.fail(describe(smp) + ", theta = " + format_number(theta));
        }
        out.push_back(c.done(std::to_string(singular) + " singular"));
    }
    {
        Check c("appendix", "chain-relation");
        std::size_t singular = 0;
        for (std::size_t i = 0; i < 1000; ++i) {
            const Sample smp = draw_sample(generic, seed, 20000 + i);
            const double theta = theta_of(20000 + i);
            const DerivativeReport rep = appendix_derivatives(smp.input, smp.channel, theta);
            if (rep.singular) {
                ++singular;
                continue;
            }
            const double lhs = rep.discriminant_root * rep.fd_nu_sq;
            const double rhs_delta = rep.nu_sq * rep.fd_delta_tilde;
            const double scale = std::max({std::abs(lhs), std::abs(rep.fd_det), std::abs(rhs_delta)});
            const double e = scale == 0.0 ? 0.0 : std::abs(lhs - (rep.fd_det - rhs_delta)) / scale;
            c.count();
            c.error(e);
            if (e > 1e-6) c.fail(describe(smp) + ", theta = " + format_number(theta));
        }
        out.push_back(c.done(std::to_string(singular) + " singular"));
    }
    {
        Check c("appendix", "family-endpoints");
        for (std::size_t i = 0; i < 200; ++i) {
            const Sample smp = draw_sample(generic, seed, 30000 + i);
            const double e =
                std::max(max_abs(sigma_theta(smp.input, smp.channel, 0.0).matrix() - sigma_a(smp.input, smp.channel).matrix()),
                         max_abs(sigma_theta(smp.input, smp.channel, kFiftyFifty).matrix() -
                                 sigma_b(smp.input, smp.channel).matrix()));
            c.count();
            c.error(e);
            if (e > 1e-12) c.fail(describe(smp));
        }
        out.push_back(c.done());
    }
    {
        Check c("appendix", "sign-monotonicity");
        for (std::size_t i = 0; i < 200; ++i) {
            Sample smp = draw_sample(ideal, seed, 40000 + i);
            if (!smp.input.assumption_holds()) continue;
            if (i % 10 == 0) smp.channel.y_q2 = smp.channel.y_q1;
            c.count();
            if (!sign_monotonicity_proof_check(smp.input, smp.channel)) c.fail(describe(smp));
        }
        out.push_back(c.done());
    }
    return out;
}

// ---- heuristics -----------------------------------------------------------

PropertyResult rule_result(const std::string &region, const RuleTally &t, bool informational) {
    PropertyResult r;
    r.suite = "heuristics";
    r.name = region + "/" + t.name;
    r.informational = informational;
    r.passed = t.fails == 0;
    r.detail = t.statement + ": " + std::to_string(t.applicable) + " applicable, " + std::to_string(t.holds) +
               " hold, " + std::to_string(t.fails) + " fail";
    for (std::size_t i = 0; i < std::min(kDumpLimit, t.failures.size()); ++i) {
        const EvaluatedSample &e = t.failures[i];
        r.counterexamples.push_back(describe(e.sample) + ", delta E_N = " + format_number(e.delta_logneg));
    }
    return r;
}

std::vector<PropertyResult> heuristics_suite(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    {
        const ChannelRegion region{.s = Range{4.0, 8.0},
                                   .n = Range{1.0, 1.5},
                                   .balanced_thermal = true,
                                   .xi = Range{0.7, 1.0},
                                   .equal_losses = true,
                                   .y = Range{0.0, 1.0},
                                   .shape = NoiseShape::PhaseInsensitive};
        const HeuristicReport rep = heuristic_sweep(region, 10000, seed);
        out.push_back(rule_result("balanced", rep.rule("phase-insensitive"), false));
    }
    {
        Check c("heuristics", "degenerate-region");
        const ChannelRegion region{.xi = Range{0.5, 1.0}, .y = Range{0.0, 2.0}};
        for (std::size_t i = 0; i < 1000; ++i) {
            Sample smp = draw_sample(region, seed, i);
            smp.channel.xi2 = smp.channel.xi1;
            smp.channel.y_q2 = smp.channel.y_q1;
            smp.channel.y_p2 = smp.channel.y_p1;
            const ScenarioPair pair = compare(smp.input, smp.channel);
            const double e = std::max(std::abs(pair.delta_logneg), std::abs(pair.delta_fidelity));
            c.count();
            c.error(e);
            if (e > 1e-12) c.fail(describe(smp));
        }
        out.push_back(c.done());
    }
    {
        const ChannelRegion adversarial{};
        const HeuristicReport rep = heuristic_sweep(adversarial, 10000, seed);
        for (const RuleTally &t : rep.rules) {
            if (t.applicable > 0) out.push_back(rule_result("free", t, true));
        }
    }
    {
        const ChannelRegion unbalanced{.shape = NoiseShape::PhaseInsensitive};
        const HeuristicReport rep = heuristic_sweep(unbalanced, 10000, seed);
        out.push_back(rule_result("unbalanced", rep.rule("phase-insensitive"), true));
    }
    return out;
}

}  // namespace

std::string describe(const Sample &smp) {
    std::ostringstream out;
    const MemoryChannel &ch = smp.channel;
    out << "#" << smp.index << ": s = " << format_number(smp.input.s) << ", N = (" << format_number(smp.input.n1)
        << ", " << format_number(smp.input.n2) << "), xi = (" << format_number(ch.xi1) << ", "
        << format_number(ch.xi2) << "), y = (" << format_number(ch.y_q1) << ", " << format_number(ch.y_p1) << ", "
        << format_number(ch.y_q2) << ", " << format_number(ch.y_p2) << ")";
    return out.str();
}

std::optional<VerifySuite> parse_suite(std::string_view name) {
    if (name == "core") return VerifySuite::Core;
    if (name == "criteria") return VerifySuite::Criteria;
    if (name == "appendix") return VerifySuite::Appendix;
    if (name == "heuristics") return VerifySuite::Heuristics;
    if (name == "all") return VerifySuite::All;
    return std::nullopt;
}

std::vector<PropertyResult> run_verify(VerifySuite suite, std::uint64_t seed) {
    std::vector<PropertyResult> out;
    const auto add = [&out, suite, seed](VerifySuite which, std::vector<PropertyResult> (*fn)(std::uint64_t)) {
        if (suite == which || suite == VerifySuite::All) {
            std::vector<PropertyResult> part = fn(seed);
            out.insert(out.end(), part.begin(), part.end());
        }
    };
    add(VerifySuite::Core, core_suite);
    add(VerifySuite::Criteria, criteria_suite);
    add(VerifySuite::Appendix, appendix_suite);
    add(VerifySuite::Heuristics, heuristics_suite);
    return out;
}

int cmd_verify(VerifySuite suite, std::uint64_t seed, std::ostream &out) {
    const std::vector<PropertyResult> results = run_verify(suite, seed);
    std::size_t failed = 0;
    for (const PropertyResult &r : results) {
        const char *tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
        failed += !r.informational && !r.passed;
        out << tag << "  " << r.suite << '/' << r.name << "  (" << r.detail << ")\n";
        for (const std::string &ce : r.counterexamples) {
            out << "        " << ce << '\n';
        }
    }
    out << (failed == 0 ? "all properties passed" : std::to_string(failed) + " properties failed") << " (seed "
        << seed << ")\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace gaussmem::cli
