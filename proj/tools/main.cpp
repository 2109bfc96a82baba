#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli/commands.hpp"
#include "geowaves/errors.hpp"

using namespace geowaves;

int main(int argc, char** argv) {
    CLI::App app{"Geodesic length spectra and vertex wave counts on Platonic solids"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value file");

    cli::RunConfig cfg;
    std::string out_path;
    app.add_option("--sieve-limit", cfg.sieve_limit,
                   "Largest integer covered by representability sieves")
        ->capture_default_str();
    app.add_option("--prime-limit", cfg.prime_limit,
                   "Euler products truncated at this prime bound")
        ->capture_default_str();
    app.add_option("--node-budget", cfg.node_budget,
                   "Abort enumerations after this many search nodes")
        ->capture_default_str();
    app.add_option("--guard-band-scale", cfg.guard_band_scale,
                   "Relative width of the floating-point guard band")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker thread cap for library parallelism")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format: csv or json")
        ->capture_default_str();
    app.add_option("--sieve-cache", cfg.sieve_cache,
                   "Sieve dump path, reused when kind and limit match");
    app.add_option("--out", out_path, "Write the primary table to this file");

    auto* c_const = app.add_subcommand("constants",
                                       "Euler-product and growth constants with bounds");
    c_const->fallthrough();

    std::string solid = "cube";
    double max_l = 100.0;
    auto* c_spec = app.add_subcommand("spectrum", "Length-spectrum counts a(l), b(l)");
    c_spec->fallthrough();
    c_spec->add_option("--solid", solid, "cube, tetrahedron, octahedron or icosahedron")
        ->capture_default_str();
    c_spec->add_option("--max-l", max_l, "Grid extends up to this length")
        ->capture_default_str();

    double t_max = 25.0, step = 0.5;
    bool oracle = false;
    auto* c_waves = app.add_subcommand("waves", "Vertex wave counts N(t) and growth table");
    c_waves->fallthrough();
    c_waves->add_option("--solid", solid, "cube, tetrahedron, octahedron or icosahedron")
        ->capture_default_str();
    c_waves->add_option("--t-max", t_max, "Last arrival time in the table")
        ->capture_default_str();
    c_waves->add_option("--step", step, "Grid spacing")->capture_default_str();
    c_waves->add_flag("--oracle", oracle, "Cross-check counts against the exact oracle (t <= 15)");

    double pent_l = 6.0;
    std::vector<int> strip_path;
    auto* c_pent = app.add_subcommand("pentagon",
                                      "Pentagonal length spectrum / strip decomposition");
    c_pent->fallthrough();
    c_pent->add_option("--max-l", pent_l, "Enumerate lengths below this bound")
        ->capture_default_str();
    c_pent->add_option("--strip", strip_path,
                       "Dodecahedron face path; unfolds it and decomposes the diagonal")
        ->delimiter(',');

    double sec_l = 200.0, sec_start = 0.0, sec_width = -1.0;
    bool full = false;
    auto* c_sec = app.add_subcommand("sector", "Irreducible lattice points in a sector");
    c_sec->fallthrough();
    c_sec->add_option("--solid", solid, "cube, tetrahedron, octahedron or icosahedron")
        ->capture_default_str();
    c_sec->add_option("--max-l", sec_l, "Count vectors of length at most this")
        ->capture_default_str();
    c_sec->add_option("--start", sec_start, "Sector start angle (radians)")
        ->capture_default_str();
    c_sec->add_option("--width", sec_width,
                      "Sector width (radians); default is the solid's natural sector");
    c_sec->add_flag("--full", full, "Use the full circle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are precondition violations
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 2;
        }
        out = &file;
    }

    try {
        if (c_const->parsed()) return cli::cmd_constants(cfg, *out, std::cerr);
        if (c_spec->parsed())
            return cli::cmd_spectrum(cli::kind_from_preset(solid), max_l, cfg, *out,
                                     std::cerr);
        if (c_waves->parsed())
            return cli::cmd_waves(cli::kind_from_preset(solid), t_max, step, oracle, cfg,
                                  *out, std::cerr);
        if (c_pent->parsed()) return cli::cmd_pentagon(pent_l, strip_path, cfg, *out,
                                                       std::cerr);
        if (c_sec->parsed()) {
            auto kind = cli::kind_from_preset(solid);
            auto s = cli::sector_from_preset(kind, full);
            s.start = sec_start;
            if (sec_width > 0) s.width = sec_width;
            return cli::cmd_sector(kind, s, sec_l, cfg, *out, std::cerr);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (nodes " << e.nodes_visited
                  << ")\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
