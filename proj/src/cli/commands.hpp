#pragma once
// Command implementations behind the CLI front end.  Each command writes its
// primary table (CSV or JSON) to `out`, commentary and cross-check verdicts
// to `err`, and returns a process exit code: 0 success, 1 failed cross-check,
// 2 precondition violation, 3 budget exhausted.  Keeping commentary off the
// primary stream keeps CSV output byte-stable between runs.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geowaves/lattice.hpp"

namespace geowaves::cli {

using lattice::LatticeKind;
using lattice::Sector;

struct RunConfig {
    std::int64_t sieve_limit = 100'000'000;
    std::int64_t prime_limit = 10'000'000;
    std::uint64_t node_budget = 1'000'000'000;
    double guard_band_scale = 1e-9;
    std::string format = "csv";  // "csv" or "json"
    std::string sieve_cache;     // optional path for sieve reuse across runs
    int threads = 1;

    void validate() const;  // throws PreconditionError on nonsense values
};

// Deterministic %.17g rendering used for every floating-point cell.
std::string fmt_double(double x);

// "cube" -> Square; "tetrahedron"/"octahedron"/"icosahedron" -> Triangular.
LatticeKind kind_from_preset(const std::string& name);

// Natural sector of the solid: 3*pi/2 for the square lattice, 4*pi/3 for the
// triangular one; "full" gives the whole circle.
Sector sector_from_preset(LatticeKind kind, bool full);

int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_spectrum(LatticeKind kind, double l, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err);

int cmd_waves(LatticeKind kind, double t_max, double step, bool oracle,
              const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_pentagon(double l, const std::vector<int>& strip_path,
                 const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_sector(LatticeKind kind, const Sector& sector, double l, const RunConfig& cfg,
               std::ostream& out, std::ostream& err);

}  // namespace geowaves::cli
