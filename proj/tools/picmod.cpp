// Verification CLI for the W(E6)-invariant decic fourfold.
//
//   picmod verify [--suites ...] [--report out.json] [--cache table.bin]
//                 [--seed N] [--theta-n N] [--tol T] [--slow]
//   picmod cache --path table.bin
//   picmod constants [--name M]
//
// Exit status of `verify` is nonzero iff any selected check fails.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "picmod/checks.hpp"

namespace {

int run_verify(const std::vector<std::string>& suites, const std::string& report_path,
               const std::string& cache_path, std::uint64_t seed, int theta_n, double tol,
               bool slow) {
    picmod::RunConfig cfg;
    try {
        cfg.resolve_suites(suites);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.report_path = report_path;
    cfg.cache_path = cache_path;
    cfg.seed = seed;
    cfg.theta_radius = theta_n;
    cfg.tolerance = tol;
    cfg.slow = slow;

    picmod::Report rep = picmod::run_suites(cfg);
    rep.print_text(std::cout);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << report_path << "\n";
            return 2;
        }
        out << rep.to_json().dump(2) << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

int run_cache(const std::string& path) {
    auto t0 = std::chrono::steady_clock::now();
    const picmod::GroupTable& g = picmod::weyl_group();
    double gen = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    picmod::cache_group(g, path);
    t0 = std::chrono::steady_clock::now();
    picmod::GroupTable back = picmod::load_group(path);
    double load = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "cached " << g.order() << " elements to " << path << " (generate " << gen
              << " s, reload " << load << " s, round-trip "
              << (back.order() == g.order() &&
                          back.elements()[g.order() / 2] == g.elements()[g.order() / 2]
                      ? "ok"
                      : "MISMATCH")
              << ")\n";
    return 0;
}

void print_matrix(const std::string& name, const picmod::Matrix<picmod::Int>& m) {
    std::cout << name << " (" << m.rows() << "x" << m.cols() << ", row-major):\n" << m.str();
}

int run_constants(const std::string& filter) {
    const auto& n = picmod::NamedMatrices::get();
    std::vector<std::pair<std::string, const picmod::Matrix<picmod::Int>*>> table = {
        {"A", &n.A},     {"M", &n.M},     {"E", &n.E},     {"T", &n.T},   {"M22", &n.M22},
        {"MB", &n.MB},   {"Md", &n.Md},   {"Me", &n.Me},   {"Mf", &n.Mf}, {"Mpr", &n.Mpr},
        {"Mip", &n.Mip}, {"MC", &n.MC},   {"MD", &n.MD},   {"M12", &n.M12}};
    bool any = false;
    for (auto& [name, m] : table) {
        if (!filter.empty() && filter != name) continue;
        print_matrix(name, *m);
        any = true;
    }
    if (filter.empty() || filter == "weyl") {
        const auto& g = picmod::WeylGenerators::get();
        std::cout << "eigenspace actions (6x6, on X0 X1 X2 X3 X6 X7):\n";
        for (auto& [name, el] : {std::pair<const char*, const picmod::WeylElement*>{"MB", &g.mb},
                                 {"Md", &g.md},
                                 {"Me", &g.me},
                                 {"Mf", &g.mf}}) {
            std::cout << name << ":\n" << el->to_matrix().str();
        }
        any = true;
    }
    if (!any) {
        std::cerr << "error: unknown constant " << filter << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric verification of the invariant decic fourfold"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run check suites and emit a report");
    std::vector<std::string> suites = {"all"};
    std::string report_path, cache_path;
    std::uint64_t seed = 1;
    int theta_n = 8;
    double tol = 1e-8;
    bool slow = false;
    verify->add_option("--suites", suites,
                       "suites to run: exact, group, variety, boundary, theta, all")
        ->delimiter(',');
    verify->add_option("--report", report_path, "write the JSON report to this path");
    verify->add_option("--cache", cache_path, "group table cache file (load or create)");
    verify->add_option("--seed", seed, "seed for the sampled checks");
    verify->add_option("--theta-n", theta_n, "theta series truncation radius");
    verify->add_option("--tol", tol, "relative zero tolerance for the numeric checks");
    verify->add_flag("--slow", slow, "also run the exhaustive slow checks");

    auto* cache = app.add_subcommand("cache", "generate the group table and store it");
    std::string cache_out;
    cache->add_option("--path", cache_out, "output path")->required();

    auto* constants = app.add_subcommand("constants", "print the named matrices");
    std::string name;
    constants->add_option("--name", name, "print a single named matrix");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed())
        return run_verify(suites, report_path, cache_path, seed, theta_n, tol, slow);
    if (cache->parsed()) return run_cache(cache_out);
    if (constants->parsed()) return run_constants(name);
    return 2;
}
