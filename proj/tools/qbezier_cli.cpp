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

// Command-line front end. Exit codes: 0 success, 1 computation failure
// or violated conditioning order, 2 usage error, 3 undefined result,
// 4 parse failure.

#include "qbezier/basis.hpp"
#include "qbezier/decasteljau.hpp"
#include "qbezier/elevation.hpp"
#include "qbezier/net_file.hpp"
#include "qbezier/patch.hpp"
#include "qbezier/stability.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitParse = 4;

struct GlobalOptions {
    std::optional<double> q_override;
    double tolerance = 1e-10;
    unsigned seed = 19937;
};

std::string fmt17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

qbezier::QParam effective_q(const qbezier::NetFile& net, const GlobalOptions& global) {
    if (global.q_override) {
        // Reinterprets the stored coefficients under a different shape
        // parameter; this changes the represented polynomial.
        return qbezier::QParam{*global.q_override};
    }
    return net.q_param();
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open \"" + out_path + "\" for writing");
    }
    out << text;
}

// ---------------------------------------------------------------- eval

int run_eval(const std::string& net_path, double u, double v, bool show_tableau,
             const GlobalOptions& global) {
    const qbezier::NetFile file = qbezier::load_net(net_path);
    const qbezier::QParam q = effective_q(file, global);
    const qbezier::DomainPoint p{u, v};
    if (!p.inside_triangle()) {
        std::cerr << "warning: point (" << fmt17(u) << ", " << fmt17(v)
                  << ") lies outside the parameter triangle; the evaluation is "
                     "still exact but convexity guarantees do not apply\n";
    }

    auto print_layers = [&](const auto& tableau) {
        for (std::size_t r = 0; r < tableau.layers.size(); ++r) {
            std::cout << "layer " << r << "\n";
            const auto& layer = tableau.layers[r];
            qbezier::for_each_index(layer.degree(), [&](const qbezier::MultiIndex3& m) {
                std::cout << m.i << " " << m.j << " " << m.k;
                if constexpr (std::is_same_v<std::decay_t<decltype(layer.at(m))>,
                                             double>) {
                    std::cout << " " << fmt17(layer.at(m)) << "\n";
                } else {
                    const qbezier::Vec3 value = layer.at(m);
                    std::cout << " " << fmt17(value.x) << " " << fmt17(value.y) << " "
                              << fmt17(value.z) << "\n";
                }
            });
        }
    };

    // The full tableau is materialized only on request; the plain path
    // keeps two rolling layers. Both produce the same bits.
    if (file.is_scalar()) {
        if (show_tableau) {
            const auto tableau = qbezier::decasteljau_tableau(file.scalar(), p, q);
            std::cout << fmt17(tableau.result()) << "\n";
            print_layers(tableau);
        } else {
            std::cout << fmt17(qbezier::decasteljau_evaluate(file.scalar(), p, q))
                      << "\n";
        }
    } else {
        auto print_point = [](const qbezier::Vec3& value) {
            std::cout << fmt17(value.x) << " " << fmt17(value.y) << " "
                      << fmt17(value.z) << "\n";
        };
        if (show_tableau) {
            const auto tableau = qbezier::decasteljau_tableau(file.points(), p, q);
            print_point(tableau.result());
            print_layers(tableau);
        } else {
            print_point(qbezier::patch_eval(file.points(), p, q));
        }
    }
    return 0;
}

// ------------------------------------------------------------- elevate

int run_elevate(const std::string& net_path, int target_degree,
                const std::string& out_path, const GlobalOptions& global) {
    const qbezier::NetFile file = qbezier::load_net(net_path);
    if (target_degree < file.degree()) {
        return usage_error("--to " + std::to_string(target_degree) +
                           " is below the net degree " + std::to_string(file.degree()));
    }
    const qbezier::QParam q = effective_q(file, global);
    qbezier::NetFile out;
    out.q = q.value();
    if (file.is_scalar()) {
        out.net = qbezier::elevate_to(file.scalar(), target_degree, q);
    } else {
        out.net = qbezier::elevate_to(file.points(), target_degree, q);
    }
    write_text(qbezier::format_net(out), out_path);
    return 0;
}

// ------------------------------------------------------------- convert

std::vector<double> component(std::span<const qbezier::Vec3> points, int axis) {
    std::vector<double> out(points.size());
    for (std::size_t s = 0; s < points.size(); ++s) {
        out[s] = axis == 0 ? points[s].x : axis == 1 ? points[s].y : points[s].z;
    }
    return out;
}

int run_convert(const std::string& net_path, const std::string& target,
                const std::string& out_path, const GlobalOptions& global) {
    const qbezier::NetFile file = qbezier::load_net(net_path);
    const int n = file.degree();

    qbezier::QParam q = qbezier::QParam::classical();
    double out_q = 1.0;
    bool to_bernstein = target == "bernstein";
    if (to_bernstein) {
        q = effective_q(file, global);
        out_q = 1.0;
    } else {
        // The input is read as classical Bernstein coefficients, i.e. the
        // q = 1 representation; --q names the target parameter. Conversion
        // between two different q values goes through --to bernstein first.
        if (file.q != 1.0) {
            return usage_error(
                "convert --to qbernstein expects a classical input net (q = 1); "
                "run convert --to bernstein first");
        }
        q = global.q_override ? qbezier::QParam{*global.q_override}
                              : qbezier::QParam::classical();
        out_q = q.value();
    }

    const qbezier::BasisMatrix matrix = qbezier::qbernstein_to_bernstein_matrix(n, q);
    auto convert_vector = [&](std::span<const double> coeffs) {
        return to_bernstein ? qbezier::to_bernstein_coefficients(matrix, coeffs)
                            : qbezier::from_bernstein_coefficients(matrix, coeffs);
    };

    qbezier::NetFile out;
    out.q = out_q;
    if (file.is_scalar()) {
        const std::vector<double> converted = convert_vector(file.scalar().values());
        qbezier::TriangularNet<double> net(n);
        for (std::size_t s = 0; s < converted.size(); ++s) {
            net[s] = converted[s];
        }
        out.net = std::move(net);
    } else {
        const auto points = file.points().values();
        const auto cx = convert_vector(component(points, 0));
        const auto cy = convert_vector(component(points, 1));
        const auto cz = convert_vector(component(points, 2));
        qbezier::TriangularNet<qbezier::Vec3> net(n);
        for (std::size_t s = 0; s < cx.size(); ++s) {
            net[s] = {cx[s], cy[s], cz[s]};
        }
        out.net = std::move(net);
    }
    write_text(qbezier::format_net(out), out_path);
    return 0;
}

// ---------------------------------------------------------------- cond

std::vector<qbezier::DomainPoint> parse_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw qbezier::NetParseError("cannot open points file \"" + path + "\"");
    }
    std::vector<qbezier::DomainPoint> points;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        for (char& c : line) {
            if (c == ',') {
                c = ' ';
            }
        }
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream row(line);
        double u = 0.0;
        double v = 0.0;
        if (!(row >> u >> v)) {
            throw qbezier::NetParseError("points file line " +
                                         std::to_string(line_number) +
                                         ": expected two coordinates");
        }
        points.push_back({u, v});
    }
    return points;
}

std::vector<qbezier::DomainPoint> random_triangle_points(std::size_t count,
                                                         unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<qbezier::DomainPoint> points;
    points.reserve(count);
    while (points.size() < count) {
        double u = dist(rng);
        double v = dist(rng);
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        points.push_back({u, v});
    }
    return points;
}

int run_cond(const std::string& net_path, const std::string& points_path,
             int grid_resolution, int random_count, int sup_norm_resolution,
             const GlobalOptions& global) {
    const qbezier::NetFile file = qbezier::load_net(net_path);
    if (!file.is_scalar()) {
        return usage_error("cond requires a scalar net");
    }
    const int sources = (points_path.empty() ? 0 : 1) + (grid_resolution > 0 ? 1 : 0) +
                        (random_count > 0 ? 1 : 0);
    if (sources != 1) {
        return usage_error("choose exactly one of --points, --grid, --random");
    }

    std::vector<qbezier::DomainPoint> points;
    if (!points_path.empty()) {
        points = parse_points_file(points_path);
    } else if (grid_resolution > 0) {
        const qbezier::BarycentricGrid grid(grid_resolution);
        points.reserve(grid.size());
        for (std::size_t f = 0; f < grid.size(); ++f) {
            points.push_back(grid.point(f));
        }
    } else {
        points = random_triangle_points(static_cast<std::size_t>(random_count),
                                        global.seed);
    }

    const qbezier::QParam q = effective_q(file, global);
    const qbezier::ConditioningReport report = qbezier::compare_conditioning(
        file.scalar(), q, points, sup_norm_resolution, global.tolerance);

    std::cout << "u,v,cond_bernstein,cond_q,ratio\n";
    if (!report.defined) {
        for (const auto& entry : report.entries) {
            std::cout << fmt17(entry.point.u) << "," << fmt17(entry.point.v)
                      << ",undefined,undefined,undefined\n";
        }
        std::cout << "max_ratio,undefined\n";
        std::cerr << "error: the function is identically zero on the sup-norm grid; "
                     "condition numbers are undefined\n";
        return kExitUndefined;
    }
    for (const auto& entry : report.entries) {
        std::cout << fmt17(entry.point.u) << "," << fmt17(entry.point.v) << ","
                  << fmt17(entry.cond_bernstein) << "," << fmt17(entry.cond_q) << ","
                  << fmt17(entry.ratio) << "\n";
    }
    std::cout << "max_ratio," << fmt17(report.max_ratio) << "\n";
    if (!report.ordering_holds) {
        std::cerr << "error: conditioning order violated: max ratio "
                  << fmt17(report.max_ratio) << " exceeds 1 + "
                  << fmt17(global.tolerance) << "\n";
        return kExitFailure;
    }
    return 0;
}

// -------------------------------------------------------- basis-sample

int run_basis_sample(int n, int i, int j, int k, int resolution,
                     const GlobalOptions& global) {
    if (n < 0 || i < 0 || j < 0 || k < 0 || i + j + k != n) {
        return usage_error("indices must be nonnegative with i + j + k = n");
    }
    if (n > qbezier::kMaxDegree) {
        return usage_error("degree exceeds the supported maximum " +
                           std::to_string(qbezier::kMaxDegree));
    }
    if (resolution < 1) {
        return usage_error("resolution must be >= 1");
    }
    if (!global.q_override) {
        return usage_error("basis-sample requires --q");
    }
    const qbezier::QParam q{*global.q_override};
    const auto samples =
        qbezier::sample_basis_grid(n, {i, j, k}, q, resolution);
    std::cout << "u,v,value\n";
    for (const auto& s : samples) {
        std::cout << fmt17(s.u) << "," << fmt17(s.v) << "," << fmt17(s.value) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- tessellate

int run_tessellate(const std::string& net_path, int resolution,
                   const std::string& out_path, const GlobalOptions& global) {
    const qbezier::NetFile file = qbezier::load_net(net_path);
    if (file.is_scalar()) {
        return usage_error("tessellate requires a points3d net");
    }
    if (resolution < 1) {
        return usage_error("resolution must be >= 1");
    }
    const qbezier::QParam q = effective_q(file, global);
    const qbezier::TessellationMesh mesh = qbezier::tessellate(file.points(), q, resolution);
    std::ostringstream text;
    qbezier::write_obj(mesh, text);
    write_text(text.str(), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular q-Bezier patches: evaluation, degree elevation, basis "
                 "conversion, conditioning reports, basis sampling and tessellation"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--q", global.q_override,
                   "Override the net file's shape parameter q in (0, 1]. The same "
                   "coefficients are reinterpreted under the new parameter, which "
                   "CHANGES the represented polynomial or surface.");
    app.add_option("--tol", global.tolerance,
                   "Report tolerance for the conditioning order check");
    app.add_option("--seed", global.seed, "Seed for randomized point generation");

    // eval
    std::string eval_net;
    double eval_u = 0.0;
    double eval_v = 0.0;
    bool eval_tableau = false;
    auto* eval_cmd =
        app.add_subcommand("eval", "Evaluate a net at barycentric (u, v)");
    eval_cmd->add_option("net", eval_net, "Net file (JSON)")->required();
    eval_cmd->add_option("u", eval_u, "First barycentric coordinate")->required();
    eval_cmd->add_option("v", eval_v, "Second barycentric coordinate")->required();
    eval_cmd->add_flag("--tableau", eval_tableau,
                       "Also print every corner-cutting layer");
    eval_cmd->fallthrough();

    // elevate
    std::string elevate_net;
    std::string elevate_out;
    int elevate_target = 0;
    auto* elevate_cmd =
        app.add_subcommand("elevate", "Raise the representation degree");
    elevate_cmd->add_option("net", elevate_net, "Net file (JSON)")->required();
    elevate_cmd->add_option("--to", elevate_target, "Target degree")->required();
    elevate_cmd->add_option("--out", elevate_out, "Output file (default: stdout)");
    elevate_cmd->fallthrough();

    // convert
    std::string convert_net;
    std::string convert_out;
    std::string convert_target;
    auto* convert_cmd = app.add_subcommand(
        "convert", "Change between the q-Bernstein and classical Bernstein bases");
    convert_cmd->add_option("net", convert_net, "Net file (JSON)")->required();
    convert_cmd->add_option("--to", convert_target, "Target basis")
        ->required()
        ->check(CLI::IsMember({"bernstein", "qbernstein"}));
    convert_cmd->add_option("--out", convert_out, "Output file (default: stdout)");
    convert_cmd->fallthrough();

    // cond
    std::string cond_net;
    std::string cond_points;
    int cond_grid = 0;
    int cond_random = 0;
    int cond_supnorm_res = 64;
    auto* cond_cmd = app.add_subcommand(
        "cond", "Per-point condition numbers of the q-Bernstein and classical "
                "Bernstein representations");
    cond_cmd->add_option("net", cond_net, "Net file (JSON, scalar)")->required();
    cond_cmd->add_option("--points", cond_points,
                         "File of evaluation points, one \"u v\" or \"u,v\" per line");
    cond_cmd->add_option("--grid", cond_grid,
                         "Evaluate on the uniform barycentric grid of this resolution");
    cond_cmd->add_option("--random", cond_random,
                         "Evaluate at this many random in-triangle points (see --seed)");
    cond_cmd->add_option("--supnorm-res", cond_supnorm_res,
                         "Grid resolution of the sup-norm estimate");
    cond_cmd->fallthrough();

    // basis-sample
    int bs_n = 0;
    int bs_i = 0;
    int bs_j = 0;
    int bs_k = 0;
    int bs_res = 0;
    auto* bs_cmd = app.add_subcommand(
        "basis-sample", "Sample one basis function on the uniform grid (CSV)");
    bs_cmd->add_option("-n,--degree", bs_n, "Degree")->required();
    bs_cmd->add_option("-i", bs_i, "First index")->required();
    bs_cmd->add_option("-j", bs_j, "Second index")->required();
    bs_cmd->add_option("-k", bs_k, "Third index")->required();
    bs_cmd->add_option("-m,--resolution", bs_res, "Grid resolution")->required();
    bs_cmd->fallthrough();

    // tessellate
    std::string tess_net;
    std::string tess_out;
    int tess_res = 0;
    auto* tess_cmd =
        app.add_subcommand("tessellate", "Sample a patch into an OBJ triangle mesh");
    tess_cmd->add_option("net", tess_net, "Net file (JSON, points3d)")->required();
    tess_cmd->add_option("-m,--resolution", tess_res, "Grid resolution")->required();
    tess_cmd->add_option("--out", tess_out, "Output OBJ file (default: stdout)");
    tess_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (global.q_override && (!(*global.q_override > 0.0) || *global.q_override > 1.0)) {
            return usage_error("--q must lie in (0, 1]");
        }
        if (eval_cmd->parsed()) {
            return run_eval(eval_net, eval_u, eval_v, eval_tableau, global);
        }
        if (elevate_cmd->parsed()) {
            return run_elevate(elevate_net, elevate_target, elevate_out, global);
        }
        if (convert_cmd->parsed()) {
            return run_convert(convert_net, convert_target, convert_out, global);
        }
        if (cond_cmd->parsed()) {
            return run_cond(cond_net, cond_points, cond_grid, cond_random,
                            cond_supnorm_res, global);
        }
        if (bs_cmd->parsed()) {
            return run_basis_sample(bs_n, bs_i, bs_j, bs_k, bs_res, global);
        }
        if (tess_cmd->parsed()) {
            return run_tessellate(tess_net, tess_res, tess_out, global);
        }
        return usage_error("no command given");
    } catch (const qbezier::NetParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
