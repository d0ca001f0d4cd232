// Copyright 2026 The qbezier Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbezier/net_file.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace qbezier {

namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, std::size_t byte) {
    const std::size_t end = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
}

int read_index(const json& entry, const char* field, std::size_t position) {
    if (!entry.contains(field) || !entry[field].is_number_integer()) {
        throw NetParseError("entry " + std::to_string(position) +
                            ": missing or non-integer \"" + field + "\"");
    }
    const int value = entry[field].get<int>();
    if (value < 0) {
        throw NetParseError("entry " + std::to_string(position) + ": negative \"" +
                            std::string(field) + "\"");
    }
    return value;
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

} // namespace

NetFile parse_net(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw NetParseError("line " + std::to_string(line_of_byte(text, e.byte)) +
                            ": " + e.what());
    }
    if (!doc.is_object()) {
        throw NetParseError("top-level value must be an object");
    }
    if (!doc.contains("degree") || !doc["degree"].is_number_integer()) {
        throw NetParseError("missing or non-integer \"degree\"");
    }
    const int degree = doc["degree"].get<int>();
    if (degree < 0 || degree > kMaxDegree) {
        throw NetParseError("degree " + std::to_string(degree) +
                            " outside the supported range [0, " +
                            std::to_string(kMaxDegree) + "]");
    }
    if (!doc.contains("q") || !doc["q"].is_number()) {
        throw NetParseError("missing or non-numeric \"q\"");
    }
    const double q = doc["q"].get<double>();
    if (!(q > 0.0) || q > 1.0) {
        throw NetParseError("q = " + format_double(q) + " outside (0, 1]");
    }
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw NetParseError("missing or non-string \"kind\"");
    }
    const std::string kind = doc["kind"].get<std::string>();
    if (kind != "scalar" && kind != "points3d") {
        throw NetParseError("unknown kind \"" + kind +
                            "\" (expected \"scalar\" or \"points3d\")");
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw NetParseError("missing or non-array \"entries\"");
    }
    const auto& entries = doc["entries"];
    const std::size_t expected = tri_entry_count(degree);
    if (entries.size() != expected) {
        throw NetParseError("expected " + std::to_string(expected) +
                            " entries for degree " + std::to_string(degree) +
                            ", found " + std::to_string(entries.size()));
    }

    NetFile out;
    out.q = q;
    std::vector<bool> seen(expected, false);
    const bool scalar = kind == "scalar";
    TriangularNet<double> scalars(degree);
    TriangularNet<Vec3> points(degree);

    std::size_t position = 0;
    for (const auto& entry : entries) {
        ++position;
        if (!entry.is_object()) {
            throw NetParseError("entry " + std::to_string(position) +
                                ": expected an object");
        }
        const int i = read_index(entry, "i", position);
        const int j = read_index(entry, "j", position);
        const int k = read_index(entry, "k", position);
        if (i + j + k != degree) {
            throw NetParseError("entry " + std::to_string(position) + ": (" +
                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + ") does not sum to the degree " +
                                std::to_string(degree));
        }
        const std::size_t flat = tri_offset(degree, i, k);
        if (seen[flat]) {
            throw NetParseError("entry " + std::to_string(position) +
                                ": duplicate index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ")");
        }
        seen[flat] = true;
        if (!entry.contains("value")) {
            throw NetParseError("entry " + std::to_string(position) +
                                ": missing \"value\"");
        }
        const auto& value = entry["value"];
        if (scalar) {
            if (!value.is_number()) {
                throw NetParseError("entry " + std::to_string(position) +
                                    ": scalar net requires a numeric value");
            }
            scalars[flat] = value.get<double>();
        } else {
            if (!value.is_array() || value.size() != 3 || !value[0].is_number() ||
                !value[1].is_number() || !value[2].is_number()) {
                throw NetParseError("entry " + std::to_string(position) +
                                    ": points3d net requires a [x, y, z] value");
            }
            points[flat] = {value[0].get<double>(), value[1].get<double>(),
                            value[2].get<double>()};
        }
    }
    if (scalar) {
        out.net = std::move(scalars);
    } else {
        out.net = std::move(points);
    }
    return out;
}

NetFile load_net(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NetParseError("cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_net(buffer.str());
}

std::string format_net(const NetFile& net) {
    // Hand-formatted so numbers carry 17 significant digits and entries
    // keep the canonical order; output is byte-reproducible.
    std::string out;
    out += "{\n";
    out += "  \"degree\": " + std::to_string(net.degree()) + ",\n";
    out += "  \"q\": " + format_double(net.q) + ",\n";
    out += std::string("  \"kind\": \"") + (net.is_scalar() ? "scalar" : "points3d") +
           "\",\n";
    out += "  \"entries\": [\n";
    const int degree = net.degree();
    std::size_t remaining = tri_entry_count(degree);
    for_each_index(degree, [&](const MultiIndex3& m) {
        out += "    {\"i\": " + std::to_string(m.i) + ", \"j\": " + std::to_string(m.j) +
               ", \"k\": " + std::to_string(m.k) + ", \"value\": ";
        if (net.is_scalar()) {
            out += format_double(net.scalar().at(m));
        } else {
            const Vec3 p = net.points().at(m);
            out += "[" + format_double(p.x) + ", " + format_double(p.y) + ", " +
                   format_double(p.z) + "]";
        }
        out += --remaining == 0 ? "}\n" : "},\n";
    });
    out += "  ]\n";
    out += "}\n";
    return out;
}

void save_net(const NetFile& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw NetParseError("cannot open \"" + path + "\" for writing");
    }
    out << format_net(net);
}

} // namespace qbezier
