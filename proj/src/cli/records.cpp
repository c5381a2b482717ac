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

#include "gaussmem/cli/records.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "gaussmem/gaussian_core.hpp"

namespace gaussmem::cli {

namespace {

std::vector<double> metric_values(const SweepRecord &r) {
    return {r.nu_tilde_a,
            r.nu_tilde_b,
            r.logneg_a,
            r.logneg_b,
            r.delta_logneg,
            r.fidelity_a,
            r.fidelity_b,
            r.delta_fidelity_clamped,
            r.channel_physical ? 1.0 : 0.0,
            r.state_a_physical ? 1.0 : 0.0,
            r.state_b_physical ? 1.0 : 0.0};
}

constexpr std::size_t kFirstFlagColumn = 8;

double fraction(std::size_t count, std::size_t total) {
    return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
}

}  // namespace

const std::vector<std::string> &metric_columns() {
    static const std::vector<std::string> columns = {
        "nu_tilde_a", "nu_tilde_b", "logneg_a",         "logneg_b",         "delta_logneg",     "fidelity_a",
        "fidelity_b", "delta_fidelity_clamped", "channel_physical", "state_a_physical", "state_b_physical"};
    return columns;
}

SweepRecord make_record(std::vector<double> axis_values, const InputStateParams &input,
                        const MemoryChannel &channel) {
    const ScenarioPair pair = compare(input, channel);
    SweepRecord r;
    r.axis_values = std::move(axis_values);
    r.nu_tilde_a = pair.metrics_a.nu_tilde;
    r.nu_tilde_b = pair.metrics_b.nu_tilde;
    r.logneg_a = pair.metrics_a.log_neg;
    r.logneg_b = pair.metrics_b.log_neg;
    r.delta_logneg = pair.delta_logneg;
    r.fidelity_a = pair.metrics_a.fidelity;
    r.fidelity_b = pair.metrics_b.fidelity;
    r.delta_fidelity_clamped = pair.delta_fidelity;
    r.channel_physical = channel_is_physical(channel);
    r.state_a_physical = is_physical(pair.sigma_a);
    r.state_b_physical = is_physical(pair.sigma_b);
    return r;
}

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf.data(), ptr);
}

void write_csv(std::ostream &out, const std::vector<std::string> &axis_names,
               const std::vector<SweepRecord> &records) {
    bool first = true;
    const auto cell = [&](const std::string &text) {
        if (!first) out << ',';
        out << text;
        first = false;
    };
    for (const std::string &name : axis_names) cell(name);
    for (const std::string &name : metric_columns()) cell(name);
    out << '\n';
    for (const SweepRecord &r : records) {
        first = true;
        for (double v : r.axis_values) cell(format_number(v));
        const std::vector<double> values = metric_values(r);
        for (std::size_t i = 0; i < values.size(); ++i) {
            cell(i >= kFirstFlagColumn ? (values[i] != 0.0 ? "1" : "0") : format_number(values[i]));
        }
        out << '\n';
    }
}

nlohmann::ordered_json record_json(const std::vector<std::string> &axis_names, const SweepRecord &record) {
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < axis_names.size(); ++i) {
        j[axis_names[i]] = record.axis_values.at(i);
    }
    const std::vector<double> values = metric_values(record);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i >= kFirstFlagColumn) {
            j[metric_columns()[i]] = values[i] != 0.0;
        } else {
            j[metric_columns()[i]] = values[i];
        }
    }
    return j;
}

SweepSummary summarize(const std::vector<SweepRecord> &records) {
    SweepSummary s;
    s.points = records.size();
    for (const SweepRecord &r : records) {
        s.logneg_b_better += r.delta_logneg > 0.0;
        s.logneg_a_better += r.delta_logneg < 0.0;
        s.fidelity_b_better += r.delta_fidelity_clamped > 0.0;
        s.fidelity_a_better += r.delta_fidelity_clamped < 0.0;
        s.separable_a += r.logneg_a == 0.0;
        s.separable_b += r.logneg_b == 0.0;
        s.unphysical_channels += !r.channel_physical;
    }
    return s;
}

void print_summary(std::ostream &out, const SweepSummary &s) {
    out << "grid points:                     " << s.points << '\n'
        << "fraction with delta_logneg > 0:  " << format_number(fraction(s.logneg_b_better, s.points)) << '\n'
        << "fraction with delta_logneg < 0:  " << format_number(fraction(s.logneg_a_better, s.points)) << '\n'
        << "fraction with delta_F_clamp > 0: " << format_number(fraction(s.fidelity_b_better, s.points)) << '\n'
        << "fraction with delta_F_clamp < 0: " << format_number(fraction(s.fidelity_a_better, s.points)) << '\n'
        << "separable states a / b:          " << s.separable_a << " / " << s.separable_b << '\n'
        << "unphysical channels:             " << s.unphysical_channels << '\n';
}

nlohmann::ordered_json summary_json(const SweepSummary &s) {
    return {{"points", s.points},
            {"fraction_delta_logneg_positive", fraction(s.logneg_b_better, s.points)},
            {"fraction_delta_logneg_negative", fraction(s.logneg_a_better, s.points)},
            {"fraction_delta_fidelity_positive", fraction(s.fidelity_b_better, s.points)},
            {"fraction_delta_fidelity_negative", fraction(s.fidelity_a_better, s.points)},
            {"separable_a", s.separable_a},
            {"separable_b", s.separable_b},
            {"unphysical_channels", s.unphysical_channels}};
}

}  // namespace gaussmem::cli
