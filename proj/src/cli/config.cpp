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

#include "gaussmem/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

namespace gaussmem::cli {

namespace pt = boost::property_tree;

namespace {

double parse_number(const std::string &key, const std::string &text) {
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && last[-1] == ' ') --last;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
    }
    return value;
}

long long parse_integer(const std::string &key, const std::string &text) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("'" + key + "': expected an integer, got '" + text + "'");
    }
    return value;
}

double *cell_field(MemoryCellParams &cell, std::string_view key) {
    if (key == "g") return &cell.g;
    if (key == "z_sq") return &cell.z_sq;
    if (key == "delta_at") return &cell.delta_at;
    if (key == "delta_q") return &cell.delta_q;
    if (key == "delta_p") return &cell.delta_p;
    return nullptr;
}

double *channel_field(MemoryChannel &ch, std::string_view key) {
    if (key == "xi1") return &ch.xi1;
    if (key == "xi2") return &ch.xi2;
    if (key == "y_q1") return &ch.y_q1;
    if (key == "y_p1") return &ch.y_p1;
    if (key == "y_q2") return &ch.y_q2;
    if (key == "y_p2") return &ch.y_p2;
    return nullptr;
}

double *input_field(InputStateParams &in, std::string_view key) {
    if (key == "s") return &in.s;
    if (key == "n1") return &in.n1;
    if (key == "n2") return &in.n2;
    return nullptr;
}

double *parameter(RunConfig &config, std::string_view name) {
    if (double *f = input_field(config.input_state, name)) return f;
    const auto dot = name.find('.');
    if (dot == std::string_view::npos) return nullptr;
    const std::string_view section = name.substr(0, dot);
    const std::string_view key = name.substr(dot + 1);
    if (section == "cell1") return cell_field(config.cell1, key);
    if (section == "cell2") return cell_field(config.cell2, key);
    if (section == "channel" && config.channel_override) return channel_field(*config.channel_override, key);
    return nullptr;
}

void read_sweep(const pt::ptree &section, RunConfig &config) {
    std::map<int, SweepAxis> axes;
    for (const auto &[key, node] : section) {
        const std::string value = node.get_value<std::string>();
        if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_integer(key, value));
            continue;
        }
        if (key.rfind("axis", 0) != 0 || key.size() < 5 || (key[4] != '1' && key[4] != '2')) {
            throw ConfigError("unknown key '" + key + "' in [sweep]");
        }
        SweepAxis &axis = axes[key[4] - '0'];
        const std::string suffix = key.substr(5);
        if (suffix.empty()) {
            axis.name = value;
        } else if (suffix == "_min") {
            axis.min = parse_number(key, value);
        } else if (suffix == "_max") {
            axis.max = parse_number(key, value);
        } else if (suffix == "_steps") {
            axis.steps = static_cast<int>(parse_integer(key, value));
        } else {
            throw ConfigError("unknown key '" + key + "' in [sweep]");
        }
    }
    for (auto &[index, axis] : axes) {
        if (axis.name.empty()) {
            throw ConfigError("sweep axis " + std::to_string(index) + " has no parameter name");
        }
        if (index == 2 && !axes.contains(1)) {
            throw ConfigError("axis2 given without axis1");
        }
        config.axes.push_back(axis);
    }
}

void read_output(const pt::ptree &section, RunConfig &config) {
    for (const auto &[key, node] : section) {
        const std::string value = node.get_value<std::string>();
        if (key == "path") {
            config.output_path = value;
        } else if (key == "format") {
            if (value == "csv") {
                config.format = OutputFormat::Csv;
            } else if (value == "json") {
                config.format = OutputFormat::Json;
            } else {
                throw ConfigError("output format must be csv or json, got '" + value + "'");
            }
        } else {
            throw ConfigError("unknown key '" + key + "' in [output]");
        }
    }
}

template <typename Lookup, typename Target>
void read_numbers(const pt::ptree &section, const std::string &name, Target &target, Lookup lookup) {
    for (const auto &[key, node] : section) {
        double *field = lookup(target, key);
        if (field == nullptr) {
            throw ConfigError("unknown key '" + key + "' in [" + name + "]");
        }
        *field = parse_number(name + "." + key, node.data());
    }
}

}  // namespace

double SweepAxis::value(int i) const {
    if (steps < 2) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

MemoryChannel RunConfig::channel() const {
    if (channel_override) return *channel_override;
    return channel_from_cells(cell1, cell2, convention);
}

void RunConfig::validate() const {
    input_state.validate();
    if (!channel_override) {
        cell1.validate();
        cell2.validate();
    }
    if (axes.size() > 2) {
        throw ConfigError("at most two sweep axes are supported");
    }
    const std::vector<std::string> names = sweepable_parameters(*this);
    for (const SweepAxis &axis : axes) {
        if (std::find(names.begin(), names.end(), axis.name) == names.end()) {
            throw ConfigError("sweep axis '" + axis.name + "' is not a parameter of this configuration");
        }
        if (axis.steps < 2) {
            throw ConfigError("sweep axis '" + axis.name + "' needs at least 2 steps");
        }
    }
    if (axes.size() == 2 && axes[0].name == axes[1].name) {
        throw ConfigError("both sweep axes name '" + axes[0].name + "'");
    }
}

std::vector<std::string> sweepable_parameters(const RunConfig &config) {
    std::vector<std::string> names = {"s", "n1", "n2"};
    if (config.channel_override) {
        for (const char *key : {"xi1", "xi2", "y_q1", "y_p1", "y_q2", "y_p2"}) {
            names.push_back(std::string("channel.") + key);
        }
    } else {
        for (const char *cell : {"cell1", "cell2"}) {
            for (const char *key : {"g", "z_sq", "delta_at", "delta_q", "delta_p"}) {
                names.push_back(std::string(cell) + "." + key);
            }
        }
    }
    return names;
}

void set_parameter(RunConfig &config, std::string_view name, double value) {
    double *field = parameter(config, name);
    if (field == nullptr) {
        throw ConfigError("unknown parameter '" + std::string(name) + "'");
    }
    *field = value;
}

RunConfig parse_config(std::istream &in) {
    // The ini reader only knows ';' comments.
    std::ostringstream cleaned;
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') continue;
        cleaned << line << '\n';
    }
    std::istringstream source(cleaned.str());
    pt::ptree tree;
    try {
        pt::read_ini(source, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(std::string("malformed configuration: ") + e.message() + " (line " +
                          std::to_string(e.line()) + ")");
    }

    RunConfig config;
    for (const auto &[name, section] : tree) {
        if (section.empty() && !section.data().empty()) {
            // Top-level key.
            const std::string value = section.get_value<std::string>();
            if (name == "convention") {
                const auto conv = parse_convention(value);
                if (!conv) throw ConfigError("convention must be literal, attenuation or loss");
                config.convention = *conv;
            } else if (name == "seed") {
                config.seed = static_cast<std::uint64_t>(parse_integer(name, value));
            } else {
                throw ConfigError("unknown top-level key '" + name + "'");
            }
        } else if (name == "input_state") {
            read_numbers(section, name, config.input_state, input_field);
        } else if (name == "cell1") {
            read_numbers(section, name, config.cell1, cell_field);
        } else if (name == "cell2") {
            read_numbers(section, name, config.cell2, cell_field);
        } else if (name == "channel") {
            config.channel_override = MemoryChannel::identity();
            read_numbers(section, name, *config.channel_override, channel_field);
        } else if (name == "sweep") {
            read_sweep(section, config);
        } else if (name == "output") {
            read_output(section, config);
        } else {
            throw ConfigError("unknown section [" + name + "]");
        }
    }
    return config;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration file " + path.string());
    }
    return parse_config(in);
}

std::vector<int> parse_grid(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('x', start), text.size());
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, value);
        if (ec != std::errc() || ptr != text.data() + end || value < 2) {
            throw ConfigError("grid must look like 25x25 with every size >= 2, got '" + std::string(text) + "'");
        }
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

}  // namespace gaussmem::cli
