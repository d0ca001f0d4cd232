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

#ifndef QBEZIER_NET_FILE_HPP
#define QBEZIER_NET_FILE_HPP

#include "qbezier/geometry.hpp"
#include "qbezier/qcalc.hpp"
#include "qbezier/tri_net.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace qbezier {

/// Raised on malformed net files; the message names the offending line
/// or entry.
class NetParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// On-disk net: JSON object with "degree", "q", "kind" ("scalar" or
/// "points3d") and "entries" of {i, j, k, value}. Entries may appear in
/// any order on input and must cover every triple of the degree exactly
/// once; output is emitted in the canonical (i desc, j desc) order with
/// 17 significant digits, so values round-trip exactly.
struct NetFile {
    double q = 1.0;
    std::variant<TriangularNet<double>, TriangularNet<Vec3>> net;

    bool is_scalar() const noexcept {
        return std::holds_alternative<TriangularNet<double>>(net);
    }
    int degree() const noexcept {
        return is_scalar() ? std::get<TriangularNet<double>>(net).degree()
                           : std::get<TriangularNet<Vec3>>(net).degree();
    }
    const TriangularNet<double>& scalar() const {
        return std::get<TriangularNet<double>>(net);
    }
    const TriangularNet<Vec3>& points() const {
        return std::get<TriangularNet<Vec3>>(net);
    }
    QParam q_param() const { return QParam{q}; }
};

/// Parses a net from JSON text. Throws NetParseError on malformed input.
NetFile parse_net(const std::string& text);

/// Reads and parses a net file. Throws NetParseError (also on I/O failure).
NetFile load_net(const std::string& path);

/// Serializes the net to its canonical JSON form.
std::string format_net(const NetFile& net);

/// Writes the canonical JSON form to a file.
void save_net(const NetFile& net, const std::string& path);

} // namespace qbezier

#endif
