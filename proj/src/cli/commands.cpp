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

#include "gaussmem/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>

#include "gaussmem/gaussian_core.hpp"

namespace gaussmem::cli {

namespace {

constexpr double kTie = 1e-12;

std::string verdict_text(const CriterionVerdict &v, const char *what) {
    if (!v.applicable) {
        return "not applicable (needs y_p1 = y_p2 = 0 and xi1 = xi2" +
               std::string(what[0] == 'e' ? " and 1/s^2 <= N2/N1 <= s^2)" : ")");
    }
    if (std::abs(v.margin) <= kTie) {
        return "either choice optimal (y_q2 = y_q1)";
    }
    return *v.prefer_entanglement ? "store entanglement (y_q2 > y_q1)" : "store squeezing (y_q2 < y_q1)";
}

nlohmann::ordered_json verdict_json(const CriterionVerdict &v) {
    nlohmann::ordered_json j;
    j["applicable"] = v.applicable;
    j["margin"] = v.margin;
    if (v.prefer_entanglement) {
        j["prefer_entanglement"] = *v.prefer_entanglement;
    } else {
        j["prefer_entanglement"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json metrics_json(const ScenarioMetrics &m) {
    return {{"nu_tilde", m.nu_tilde}, {"log_neg", m.log_neg}, {"fidelity", m.fidelity}, {"entangled", m.nu_tilde < 1.0}};
}

const char *entangled(const ScenarioMetrics &m) { return m.nu_tilde < 1.0 ? "entangled" : "separable"; }

}  // namespace

CompareReport run_compare(const RunConfig &config) {
    config.validate();
    const MemoryChannel channel = config.channel();
    return CompareReport{.input = config.input_state,
                         .channel = channel,
                         .channel_overridden = config.channel_override.has_value(),
                         .convention = config.convention,
                         .channel_physical = channel_is_physical(channel),
                         .pair = compare(config.input_state, channel),
                         .entanglement_criterion = ideal_criterion(config.input_state, channel),
                         .fidelity_criterion = fidelity_criterion(config.input_state, channel)};
}

void print_compare(std::ostream &out, const CompareReport &r) {
    const auto num = [](double v) { return format_number(v); };
    const MemoryChannel &ch = r.channel;
    out << "input state   s = " << num(r.input.s) << ", N1 = " << num(r.input.n1) << ", N2 = " << num(r.input.n2)
        << " (1/s^2 <= N2/N1 <= s^2: " << (r.input.assumption_holds() ? "yes" : "no") << ")\n";
    out << "channel       xi = (" << num(ch.xi1) << ", " << num(ch.xi2) << "), y_q = (" << num(ch.y_q1) << ", "
        << num(ch.y_q2) << "), y_p = (" << num(ch.y_p1) << ", " << num(ch.y_p2) << ")";
    if (r.channel_overridden) {
        out << " [direct]\n";
    } else {
        out << " [convention: " << to_string(r.convention) << "]\n";
    }
    out << "channel physical: " << (r.channel_physical ? "yes" : "NO") << "\n\n";

    const ScenarioMetrics &a = r.pair.metrics_a;
    const ScenarioMetrics &b = r.pair.metrics_b;
    out << std::left << std::setw(16) << "" << std::setw(26) << "a: store entanglement" << "b: store squeezing\n";
    out << std::setw(16) << "nu_tilde" << std::setw(26) << num(a.nu_tilde) << num(b.nu_tilde) << '\n';
    out << std::setw(16) << "E_N [ebits]" << std::setw(26) << num(a.log_neg) << num(b.log_neg) << '\n';
    out << std::setw(16) << "fidelity" << std::setw(26) << num(a.fidelity) << num(b.fidelity) << '\n';
    out << std::setw(16) << "state" << std::setw(26) << entangled(a) << entangled(b) << "\n\n";

    out << "delta E_N = E_N(b) - E_N(a):                " << num(r.pair.delta_logneg) << '\n';
    out << "delta F = max(F_b, 1/2) - max(F_a, 1/2):    " << num(r.pair.delta_fidelity) << '\n';
    out << "entanglement criterion: " << verdict_text(r.entanglement_criterion, "entanglement") << '\n';
    out << "fidelity criterion:     " << verdict_text(r.fidelity_criterion, "fidelity") << '\n';
    if (std::abs(r.pair.delta_logneg) <= kTie && std::abs(r.pair.delta_fidelity) <= kTie) {
        out << "note: choices equivalent\n";
    }
}

nlohmann::ordered_json compare_json(const CompareReport &r) {
    nlohmann::ordered_json j;
    j["input_state"] = {{"s", r.input.s}, {"n1", r.input.n1}, {"n2", r.input.n2},
                        {"assumption_holds", r.input.assumption_holds()}};
    const MemoryChannel &ch = r.channel;
    j["channel"] = {{"xi1", ch.xi1},   {"xi2", ch.xi2},   {"y_q1", ch.y_q1},
                    {"y_p1", ch.y_p1}, {"y_q2", ch.y_q2}, {"y_p2", ch.y_p2}};
    j["convention"] = r.channel_overridden ? "direct" : std::string(to_string(r.convention));
    j["channel_physical"] = r.channel_physical;
    j["a"] = metrics_json(r.pair.metrics_a);
    j["b"] = metrics_json(r.pair.metrics_b);
    j["delta_logneg"] = r.pair.delta_logneg;
    j["delta_fidelity_clamped"] = r.pair.delta_fidelity;
    j["entanglement_criterion"] = verdict_json(r.entanglement_criterion);
    j["fidelity_criterion"] = verdict_json(r.fidelity_criterion);
    return j;
}

SweepResult run_sweep(const RunConfig &config) {
    config.validate();
    if (config.axes.empty()) {
        throw ConfigError("sweep needs one or two axes in [sweep]");
    }
    SweepResult result;
    for (const SweepAxis &axis : config.axes) {
        result.axis_names.push_back(axis.name);
    }
    const SweepAxis &outer = config.axes[0];
    const bool two = config.axes.size() == 2;
    const int inner_steps = two ? config.axes[1].steps : 1;
    RunConfig point = config;
    for (int i = 0; i < outer.steps; ++i) {
        set_parameter(point, outer.name, outer.value(i));
        for (int k = 0; k < inner_steps; ++k) {
            std::vector<double> values = {outer.value(i)};
            if (two) {
                set_parameter(point, config.axes[1].name, config.axes[1].value(k));
                values.push_back(config.axes[1].value(k));
            }
            point.input_state.validate();
            result.records.push_back(make_record(std::move(values), point.input_state, point.channel()));
        }
    }
    result.summary = summarize(result.records);
    result.seed = config.seed;
    return result;
}

void write_sweep(std::ostream &out, const SweepResult &result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        write_csv(out, result.axis_names, result.records);
        return;
    }
    nlohmann::ordered_json j;
    j["seed"] = result.seed;
    j["columns"] = result.axis_names;
    for (const std::string &c : metric_columns()) j["columns"].push_back(c);
    j["records"] = nlohmann::ordered_json::array();
    for (const SweepRecord &r : result.records) {
        j["records"].push_back(record_json(result.axis_names, r));
    }
    j["summary"] = summary_json(result.summary);
    out << j.dump(2) << '\n';
}

int cmd_compare(const RunConfig &config, std::ostream &out, std::ostream &err) {
    std::optional<CompareReport> maybe;
    try {
        if (!config.axes.empty()) {
            throw ConfigError("compare takes no sweep axes; use the sweep command");
        }
        maybe = run_compare(config);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const CompareReport &report = *maybe;
    if (!report.channel_physical) {
        err << "warning: the memory channel violates xi^2 >= 1 - sqrt(y_q y_p)\n";
    }
    print_compare(out, report);
    if (!config.output_path.empty()) {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << config.output_path << '\n';
            return 2;
        }
        if (config.format == OutputFormat::Json) {
            file << compare_json(report).dump(2) << '\n';
        } else {
            SweepResult single;
            single.records.push_back(make_record({}, report.input, report.channel));
            write_csv(file, {}, single.records);
        }
        if (!file) {
            err << "error: writing " << config.output_path << " failed\n";
            return 2;
        }
    }
    return 0;
}

int cmd_sweep(const RunConfig &config, std::ostream &out, std::ostream &err) {
    std::optional<SweepResult> maybe;
    try {
        maybe = run_sweep(config);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const SweepResult &result = *maybe;
    if (result.summary.unphysical_channels > 0) {
        err << "warning: " << result.summary.unphysical_channels << " grid points use an unphysical channel\n";
    }
    if (config.output_path.empty()) {
        write_sweep(out, result, config.format);
        print_summary(err, result.summary);
        return 0;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << config.output_path << '\n';
        return 2;
    }
    write_sweep(file, result, config.format);
    file.close();
    if (!file) {
        err << "error: writing " << config.output_path << " failed\n";
        return 2;
    }
    print_summary(out, result.summary);
    return 0;
}

}  // namespace gaussmem::cli
