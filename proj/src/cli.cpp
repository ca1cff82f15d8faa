#include "basins/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "basins/boundary.hpp"
#include "basins/julia.hpp"

namespace basins::cli {

namespace {

std::vector<double> parse_doubles(const std::string& text, size_t min_n, size_t max_n,
                                  const char* what) {
    std::vector<double> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        const std::string token =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t used = 0;
        double v;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument(std::string(what) + ": bad number '" + token + "'");
        values.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.size() < min_n || values.size() > max_n)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(min_n) + ".." + std::to_string(max_n) +
                                    " comma-separated numbers");
    return values;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

Complex complex_from_json(const Json& j) {
    return Complex{j.at(0).get<double>(), j.at(1).get<double>()};
}

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("BASINS_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + path;
}

void write_file(const std::string& path, const void* data, size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("write failed: " + path);
}

/// Locus of the configured polynomial, with the factors reordered so the
/// bigger multiplicity comes first (the locus does not depend on labels).
JuliaLocus analytic_locus(const RunConfig& cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("no analytic locus for a single-root polynomial");
    if (cfg.m >= cfg.n) return julia_locus_general(cfg.m, cfg.n, cfg.a, cfg.b);
    return julia_locus_general(cfg.n, cfg.m, cfg.b, cfg.a);
}

int run_render(RunConfig& cfg) {
    if (cfg.out.empty())
        throw std::invalid_argument("render: --out is required");
    const TwoRootPoly poly = TwoRootPoly::make(cfg.a, cfg.b, cfg.m, cfg.n);
    std::optional<JuliaLocus> overlay;
    if (cfg.overlay) overlay = analytic_locus(cfg);

    const BasinGrid grid =
        classify_grid(poly, cfg.method, cfg.viewport, cfg.orbit, cfg.threads);
    const std::vector<std::uint8_t> bytes = render_ppm(grid, Palette{}, overlay);

    const std::string out_path = resolve_out_path(cfg.out);
    write_file(out_path, bytes.data(), bytes.size());

    Json sidecar = config_json(cfg);
    sidecar["locus"] = overlay ? to_json(*overlay) : Json(nullptr);
    const std::string sidecar_text = sidecar.dump(2) + "\n";
    write_file(out_path + ".json", sidecar_text.data(), sidecar_text.size());

    std::cout << "wrote " << out_path << " (" << cfg.viewport.px_w << "x"
              << cfg.viewport.px_h << ") and " << out_path << ".json\n";
    return 0;
}

int run_certify(RunConfig& cfg) {
    // Dynamics are label-symmetric; certify on a factor order with m >= n.
    RunConfig ordered = cfg;
    if (cfg.m < cfg.n) {
        std::swap(ordered.m, ordered.n);
        std::swap(ordered.a, ordered.b);
    }
    const TwoRootPoly poly =
        TwoRootPoly::make(ordered.a, ordered.b, ordered.m, ordered.n);
    const JuliaLocus locus = analytic_locus(ordered);

    int exit_code = 0;
    Json report_json;
    try {
        const BoundaryReport report = boundary_report(
            poly, cfg.method, locus, cfg.rays, cfg.bisect_tol, cfg.orbit);
        report_json = to_json(report, config_json(cfg));
        report_json["config"]["locus"] = to_json(locus);
        report_json["passed"] = report.max_dev <= cfg.tolerance;
        if (report.max_dev > cfg.tolerance) exit_code = 2;
        if (!cfg.csv.empty()) {
            const std::string csv = probes_csv(report);
            write_file(resolve_out_path(cfg.csv), csv.data(), csv.size());
        }
    } catch (const std::runtime_error& e) {
        report_json = Json{};
        report_json["config"] = config_json(cfg);
        report_json["error"] = e.what();
        report_json["passed"] = false;
        exit_code = 2;
    }

    const std::string text = report_json.dump(2) + "\n";
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(resolve_out_path(cfg.out), text.data(), text.size());
    return exit_code;
}

int run_converge(RunConfig& cfg) {
    const TwoRootPoly poly = TwoRootPoly::make(cfg.a, cfg.b, cfg.m, cfg.n);
    const std::vector<Complex> seeds = draw_seeds_near_roots(
        cfg.a, cfg.n >= 1 ? cfg.b : cfg.a, cfg.seeds, cfg.seed_radius, cfg.seed);
    const ConvergenceReport report =
        convergence_report(poly, cfg.method, seeds, cfg.orbit);
    const Json j = to_json(report, config_json(cfg));
    const std::string text = j.dump(2) + "\n";
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(resolve_out_path(cfg.out), text.data(), text.size());
    return 0;
}

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& method_name_arg) {
    sub->add_option_function<std::string>(
           "--method", [&](const std::string& s) { method_name_arg = s; },
           "newton | schroeder | chebyshev | halley | chebyshev-halley");
    sub->add_option_function<double>(
        "--alpha", [&](double v) { cfg.method.alpha = v; },
        "family parameter for --method chebyshev-halley");
    sub->add_option_function<int>(
        "--m", [&](int v) { cfg.m = v; }, "multiplicity of root a (>= 1)");
    sub->add_option_function<int>(
        "--n", [&](int v) { cfg.n = v; }, "multiplicity of root b (>= 0)");
    sub->add_option_function<std::string>(
        "--a", [&](const std::string& s) { cfg.a = parse_complex(s); },
        "root a as re[,im]");
    sub->add_option_function<std::string>(
        "--b", [&](const std::string& s) { cfg.b = parse_complex(s); },
        "root b as re[,im]");
    sub->add_option_function<double>(
        "--conv-tol", [&](double v) { cfg.orbit.conv_tol = v; },
        "orbit convergence tolerance");
    sub->add_option_function<int>(
        "--max-iter", [&](int v) { cfg.orbit.max_iter = v; }, "orbit iteration cap");
    sub->add_option_function<double>(
        "--escape-radius", [&](double v) { cfg.orbit.escape_radius = v; },
        "divergence radius");
    sub->add_option_function<std::string>(
        "--out", [&](const std::string& s) { cfg.out = s; }, "output path");
    sub->add_option("--config", "JSON config (a render sidecar) supplying defaults")
        ->expected(1);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::vector<double> v = parse_doubles(text, 1, 2, "complex");
    return Complex{v[0], v.size() == 2 ? v[1] : 0.0};
}

MethodSpec parse_method(const std::string& name, double alpha) {
    if (name == "newton") return MethodSpec::newton();
    if (name == "schroeder") return MethodSpec::schroeder();
    if (name == "chebyshev") return MethodSpec::chebyshev();
    if (name == "halley") return MethodSpec::halley();
    if (name == "chebyshev-halley") {
        if (!std::isfinite(alpha))
            throw std::invalid_argument("chebyshev-halley needs a finite --alpha");
        return MethodSpec::chebyshev_halley(alpha);
    }
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::string method_name(const MethodSpec& method) {
    switch (method.kind) {
        case Method::newton: return "newton";
        case Method::schroeder: return "schroeder";
        case Method::chebyshev_halley: return "chebyshev-halley";
    }
    return "unknown";
}

Json config_json(const RunConfig& cfg) {
    Json j;
    j["subcommand"] = cfg.subcommand;
    j["method"] = Json{{"kind", method_name(cfg.method)}, {"alpha", cfg.method.alpha}};
    j["poly"] = Json{{"a", Json::array({cfg.a.real(), cfg.a.imag()})},
                     {"b", Json::array({cfg.b.real(), cfg.b.imag()})},
                     {"m", cfg.m},
                     {"n", cfg.n}};
    j["viewport"] =
        Json{{"center", Json::array({cfg.viewport.center.real(), cfg.viewport.center.imag()})},
             {"width", cfg.viewport.width},
             {"height", cfg.viewport.height},
             {"px_w", cfg.viewport.px_w},
             {"px_h", cfg.viewport.px_h}};
    j["orbit"] = Json{{"conv_tol", cfg.orbit.conv_tol},
                      {"max_iter", cfg.orbit.max_iter},
                      {"escape_radius", cfg.orbit.escape_radius}};
    j["overlay"] = cfg.overlay;
    j["out"] = cfg.out;
    j["csv"] = cfg.csv;
    j["rays"] = cfg.rays;
    j["bisect_tol"] = cfg.bisect_tol;
    j["tolerance"] = cfg.tolerance;
    j["seeds"] = cfg.seeds;
    j["seed_radius"] = cfg.seed_radius;
    j["seed"] = cfg.seed;
    return j;
}

RunConfig config_from_json(const Json& j) {
    RunConfig cfg;
    cfg.subcommand = j.value("subcommand", std::string{});
    if (j.contains("method")) {
        const auto& m = j.at("method");
        cfg.method = parse_method(m.value("kind", std::string("schroeder")),
                                  m.value("alpha", 0.0));
    }
    if (j.contains("poly")) {
        const auto& p = j.at("poly");
        if (p.contains("a")) cfg.a = complex_from_json(p.at("a"));
        if (p.contains("b")) cfg.b = complex_from_json(p.at("b"));
        cfg.m = p.value("m", cfg.m);
        cfg.n = p.value("n", cfg.n);
    }
    if (j.contains("viewport")) {
        const auto& v = j.at("viewport");
        if (v.contains("center")) cfg.viewport.center = complex_from_json(v.at("center"));
        cfg.viewport.width = v.value("width", cfg.viewport.width);
        cfg.viewport.height = v.value("height", cfg.viewport.height);
        cfg.viewport.px_w = v.value("px_w", cfg.viewport.px_w);
        cfg.viewport.px_h = v.value("px_h", cfg.viewport.px_h);
    }
    if (j.contains("orbit")) {
        const auto& o = j.at("orbit");
        cfg.orbit.conv_tol = o.value("conv_tol", cfg.orbit.conv_tol);
        cfg.orbit.max_iter = o.value("max_iter", cfg.orbit.max_iter);
        cfg.orbit.escape_radius = o.value("escape_radius", cfg.orbit.escape_radius);
    }
    cfg.overlay = j.value("overlay", cfg.overlay);
    cfg.out = j.value("out", cfg.out);
    cfg.csv = j.value("csv", cfg.csv);
    cfg.rays = j.value("rays", cfg.rays);
    cfg.bisect_tol = j.value("bisect_tol", cfg.bisect_tol);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    cfg.seeds = j.value("seeds", cfg.seeds);
    cfg.seed_radius = j.value("seed_radius", cfg.seed_radius);
    cfg.seed = j.value("seed", cfg.seed);
    return cfg;
}

std::vector<Complex> draw_seeds_near_roots(Complex a, Complex b, int count,
                                           double radius, std::uint64_t seed) {
    std::vector<Complex> seeds;
    seeds.reserve(count);
    std::uint64_t state = seed;
    for (int k = 0; k < count; ++k) {
        const Complex root = (k % 2 == 0) ? a : b;
        const double r = radius * (0.2 + 0.8 * unit_double(state));
        const double theta = 2.0 * std::numbers::pi * unit_double(state);
        seeds.push_back(root + Complex{r * std::cos(theta), r * std::sin(theta)});
    }
    return seeds;
}

int run_cli(int argc, const char* const* argv) {
    // --config supplies defaults; explicit flags override it below.
    RunConfig cfg;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            path = arg.substr(9);
        else
            continue;
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot read config file: " << path << "\n";
            return 1;
        }
        try {
            Json j;
            in >> j;
            cfg = config_from_json(j);
        } catch (const std::exception& e) {
            std::cerr << "bad config file: " << e.what() << "\n";
            return 1;
        }
    }

    CLI::App app{"basins of attraction for one-point root-finding iterations"};
    app.require_subcommand(0, 1);
    std::string method_arg;

    CLI::App* render = app.add_subcommand(
        "render", "rasterize basins of attraction to a PPM image");
    add_common_options(render, cfg, method_arg);
    render->add_option_function<std::string>(
        "--viewport",
        [&](const std::string& s) {
            const auto v = parse_doubles(s, 4, 4, "viewport");
            cfg.viewport.center = Complex{v[0], v[1]};
            cfg.viewport.width = v[2];
            cfg.viewport.height = v[3];
        },
        "viewport as cx,cy,width,height");
    render->add_option_function<std::string>(
        "--px",
        [&](const std::string& s) {
            const auto v = parse_doubles(s, 1, 2, "px");
            cfg.viewport.px_w = static_cast<int>(v[0]);
            cfg.viewport.px_h = static_cast<int>(v.size() == 2 ? v[1] : v[0]);
        },
        "pixels as N or W,H");
    render->add_flag_function(
        "--overlay", [&](std::int64_t) { cfg.overlay = true; },
        "draw the analytic Julia locus in white");
    render->add_option_function<int>(
        "--threads", [&](int v) { cfg.threads = v; },
        "worker threads (output is identical for any value)");

    CLI::App* certify = app.add_subcommand(
        "certify", "locate the basin boundary by bisection and compare with "
                   "the analytic locus");
    add_common_options(certify, cfg, method_arg);
    certify->add_option_function<int>(
        "--rays", [&](int v) { cfg.rays = v; }, "number of probe rays (>= 8)");
    certify->add_option_function<double>(
        "--bisect-tol", [&](double v) { cfg.bisect_tol = v; }, "bisection tolerance");
    certify->add_option_function<double>(
        "--tolerance", [&](double v) { cfg.tolerance = v; },
        "max allowed |empirical - analytic| deviation (exit 2 beyond)");
    certify->add_option_function<std::string>(
        "--csv", [&](const std::string& s) { cfg.csv = s; }, "also write probes CSV");

    CLI::App* converge = app.add_subcommand(
        "converge", "estimate convergence order from seeds near the roots");
    add_common_options(converge, cfg, method_arg);
    converge->add_option_function<int>(
        "--seeds", [&](int v) { cfg.seeds = v; }, "number of seeds");
    converge->add_option_function<double>(
        "--radius", [&](double v) { cfg.seed_radius = v; },
        "seed distance from the roots");
    converge->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t v) { cfg.seed = v; }, "seed for the seed cloud");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App* active = nullptr;
    for (CLI::App* sub : {render, certify, converge})
        if (sub->parsed()) active = sub;
    if (active == nullptr) {
        if (!cfg.subcommand.empty()) {
            // run straight from the config file
            if (cfg.subcommand == "render") active = render;
            else if (cfg.subcommand == "certify") active = certify;
            else if (cfg.subcommand == "converge") active = converge;
        }
        if (active == nullptr) {
            std::cerr << app.help();
            return 1;
        }
    }
    cfg.subcommand = active->get_name();

    try {
        if (!method_arg.empty()) cfg.method = parse_method(method_arg, cfg.method.alpha);
        if (cfg.m < 1 || cfg.n < 0) {
            std::cerr << "error: --m (>= 1) and --n (>= 0) are required\n"
                      << active->help();
            return 1;
        }
        if (active == certify && cfg.n < 1) {
            std::cerr << "error: certify needs two distinct roots (--n >= 1)\n";
            return 1;
        }
        if (active == render) return run_render(cfg);
        if (active == certify) return run_certify(cfg);
        return run_converge(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace basins::cli
