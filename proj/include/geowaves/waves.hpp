#pragma once
// Counting waves arriving at a vertex by time t.
//
// A wave departs along every geodesic class and re-emits on arrival, so
// arrival times are sums  sum_i c_i sqrt(n_i)  over square-free representable
// n_i (the B-set) with non-negative integer multiplicities c_i.  N(t) counts
// the multisets with sum <= t; the empty multiset counts, so N(0) = 1.
// Distinct multisets give distinct times (sqrt of distinct square-free
// integers are linearly independent over Q), hence N(t) also counts distinct
// arrival times.
//
// Enumeration is a depth-first scan over generators in decreasing order with
// capacity pruning.  Comparisons against t are floating-point with a guard
// band delta = guard_band_scale * (1 + #terms): any sum landing within delta
// of t sets boundary_flag instead of silently choosing a side.  Sums made of
// the generator 1 alone are integers, compared exactly, and never flagged.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "geowaves/lattice.hpp"

namespace geowaves::waves {

using lattice::LatticeKind;

// Exact multiset of radicands: value() = sum_n mult[n] * sqrt(n).
struct RadicalSum {
    std::map<std::int64_t, std::int64_t> mult;
    double value() const;
    bool operator==(const RadicalSum&) const = default;
};

struct WaveCount {
    double t;
    std::uint64_t count;
    bool boundary_flag;
    std::uint64_t nodes;
};

struct CountOptions {
    double guard_band_scale = 1e-9;
    std::uint64_t node_budget = 1000000000ull;
    int threads = 1;  // splits the top-level branch; identical results
};

// Generators sqrt(b) for the B-values b <= t^2, in decreasing order.
std::vector<double> generators(LatticeKind kind, double t);

WaveCount count_waves(LatticeKind kind, double t, const CountOptions& opts = {});

// Independent cross-check: plain recursion over generators in *increasing*
// order, no closed-form shortcuts, no memoization.
std::uint64_t oracle_count(LatticeKind kind, double t);

// Plain recursion over generators in the given order (test hook for
// order-invariance of the pruned scan).
std::uint64_t count_with_order(const std::vector<double>& gens, double t);

// All distinct arrival times <= t with one witness multiset each, strictly
// increasing.  Throws BudgetExceeded when more than cap times accumulate.
std::vector<std::pair<double, RadicalSum>> enumerate_lengths(LatticeKind kind, double t,
                                                             std::uint64_t cap);

struct GrowthRow {
    double t;
    std::uint64_t count;
    double ln_count;
    double exponent_ratio;  // ln N(t) / (t^{2/3} (ln t)^{-1/6})
    bool boundary_flag;
};

// Requires every grid point > 1 (the ratio needs ln t > 0).
std::vector<GrowthRow> growth_table(LatticeKind kind, const std::vector<double>& t_grid,
                                    const CountOptions& opts = {});

}  // namespace geowaves::waves
