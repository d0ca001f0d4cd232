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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbezier/net_file.hpp"

#include "support/oracles.hpp"

#include <string>

using qbezier::NetFile;
using qbezier::NetParseError;

namespace {

std::string scalar_net_text() {
    return R"({"degree": 1, "q": 0.5, "kind": "scalar", "entries": [
        {"i": 0, "j": 0, "k": 1, "value": 3.0},
        {"i": 1, "j": 0, "k": 0, "value": 1.0},
        {"i": 0, "j": 1, "k": 0, "value": 2.0}
    ]})";
}

} // namespace

TEST_CASE("scalar nets parse regardless of entry order") {
    const NetFile net = qbezier::parse_net(scalar_net_text());
    CHECK(net.is_scalar());
    CHECK(net.degree() == 1);
    CHECK(net.q == 0.5);
    CHECK(net.scalar().at(1, 0, 0) == 1.0);
    CHECK(net.scalar().at(0, 1, 0) == 2.0);
    CHECK(net.scalar().at(0, 0, 1) == 3.0);
}

TEST_CASE("point nets parse and expose 3D values") {
    const std::string text = R"({"degree": 0, "q": 1, "kind": "points3d",
        "entries": [{"i": 0, "j": 0, "k": 0, "value": [1.5, -2.0, 0.25]}]})";
    const NetFile net = qbezier::parse_net(text);
    CHECK_FALSE(net.is_scalar());
    CHECK(net.points().at(0, 0, 0) == qbezier::Vec3{1.5, -2.0, 0.25});
}

TEST_CASE("round trip is exact, including awkward doubles") {
    std::mt19937 rng(911);
    NetFile net;
    net.q = 0.3;
    auto scalars = oracles::random_net(4, rng, -1e3, 1e3);
    scalars.at(4, 0, 0) = 1.0 / 3.0;
    scalars.at(0, 4, 0) = 1e-17;
    scalars.at(0, 0, 4) = -12345.678901234567;
    net.net = scalars;

    const NetFile reparsed = qbezier::parse_net(qbezier::format_net(net));
    CHECK(reparsed.q == net.q);
    REQUIRE(reparsed.is_scalar());
    CHECK(reparsed.scalar() == scalars);

    // Serialization is canonical: formatting the reparse is byte-identical.
    CHECK(qbezier::format_net(reparsed) == qbezier::format_net(net));
}

TEST_CASE("output entries follow the canonical order") {
    const NetFile net = qbezier::parse_net(scalar_net_text());
    const std::string text = qbezier::format_net(net);
    const auto first = text.find("\"i\": 1");
    const auto second = text.find("\"i\": 0, \"j\": 1");
    const auto third = text.find("\"i\": 0, \"j\": 0");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    REQUIRE(third != std::string::npos);
    CHECK(first < second);
    CHECK(second < third);
}

TEST_CASE("malformed JSON reports the line") {
    const std::string broken = "{\n  \"degree\": 1,\n  oops\n}";
    CHECK_THROWS_WITH_AS(qbezier::parse_net(broken), doctest::Contains("line 3"),
                         NetParseError);
}

TEST_CASE("semantic validation") {
    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 1, "q": 0.5, "kind": "scalar", "entries": [
            {"i": 1, "j": 0, "k": 0, "value": 1},
            {"i": 1, "j": 0, "k": 0, "value": 2},
            {"i": 0, "j": 0, "k": 1, "value": 3}]})"),
        doctest::Contains("duplicate"), NetParseError);

    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 1, "q": 0.5, "kind": "scalar", "entries": [
            {"i": 1, "j": 0, "k": 0, "value": 1}]})"),
        doctest::Contains("expected 3 entries"), NetParseError);

    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 1, "q": 0.5, "kind": "scalar", "entries": [
            {"i": 2, "j": 0, "k": 0, "value": 1},
            {"i": 0, "j": 1, "k": 0, "value": 2},
            {"i": 0, "j": 0, "k": 1, "value": 3}]})"),
        doctest::Contains("does not sum"), NetParseError);

    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 1, "q": 1.5, "kind": "scalar", "entries": []})"),
        doctest::Contains("outside (0, 1]"), NetParseError);

    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 1, "q": 0.5, "kind": "matrix", "entries": []})"),
        doctest::Contains("unknown kind"), NetParseError);

    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 0, "q": 0.5, "kind": "scalar", "entries": [
            {"i": 0, "j": 0, "k": 0, "value": [1, 2, 3]}]})"),
        doctest::Contains("numeric value"), NetParseError);

    CHECK_THROWS_WITH_AS(qbezier::parse_net("[1, 2, 3]"),
                         doctest::Contains("object"), NetParseError);

    CHECK_THROWS_WITH_AS(
        qbezier::parse_net(R"({"degree": 61, "q": 0.5, "kind": "scalar", "entries": []})"),
        doctest::Contains("supported range"), NetParseError);

    CHECK_THROWS_AS(qbezier::load_net("/nonexistent/net.json"), NetParseError);
}
