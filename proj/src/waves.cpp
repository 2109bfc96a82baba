#include "geowaves/waves.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "geowaves/errors.hpp"
#include "geowaves/spectra.hpp"

namespace geowaves::waves {

double RadicalSum::value() const {
    double s = 0.0;
    for (const auto& [n, c] : mult) s += (double)c * std::sqrt((double)n);
    return s;
}

std::vector<double> generators(LatticeKind kind, double t) {
    if (!(t >= 0))
        throw PreconditionError("generators: t must be non-negative");
    std::vector<double> g;
    const std::int64_t limit = (std::int64_t)std::floor(t * t);
    if (limit < 1) return g;
    auto sieve = spectra::build_sieve(kind, limit);
    for (std::int64_t b = limit; b >= 1; --b)
        if (sieve.squarefree_representable.test((std::uint64_t)b))
            g.push_back(std::sqrt((double)b));
    return g;
}

namespace {

// Robust floor(rem / g) under floating rounding near the boundary.
std::int64_t fit_count(double rem, double g) {
    std::int64_t m = (std::int64_t)(rem / g);
    while ((double)(m + 1) * g <= rem) ++m;
    while (m > 0 && (double)m * g > rem) --m;
    return m;
}

// Depth-first counter.  Generators descending, g.back() == 1 (the B-set
// always contains 1).  `pure` tracks whether the partial multiset is empty so
// far, i.e. whether the completed sums below are plain integers k * 1.
struct Dfs {
    const std::vector<double>* g;
    double scale;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    bool flag = false;

    double band(std::int64_t terms) const { return scale * (1.0 + (double)terms); }

    void run(std::size_t i, double rem, std::int64_t terms, bool pure) {
        if (++nodes > budget)
            throw BudgetExceeded("count_waves: node budget exceeded", nodes, count);
        const auto& gen = *g;
        // first generator that still fits (prefix of the suffix is > rem)
        const std::size_t j =
            (std::size_t)(std::partition_point(gen.begin() + (std::ptrdiff_t)i, gen.end(),
                                               [&](double x) { return x > rem; }) -
                          gen.begin());
        if (j > i) {
            // smallest skipped generator: sum would land just above t?
            const double over = gen[j - 1] - rem;
            if (!(pure && j == gen.size()) && over < band(terms + 1)) flag = true;
        }
        if (j == gen.size()) {  // nothing fits, the current multiset is complete
            ++count;
            if (!pure && rem < band(terms)) flag = true;
            return;
        }
        if (j + 1 == gen.size()) {  // only the generator 1 is left: closed form
            const std::int64_t m = (std::int64_t)rem;  // exact when pure (rem == t)
            count += (std::uint64_t)m + 1;
            if (!pure) {
                const double frac = rem - (double)m;
                if (frac < band(terms + m)) flag = true;
                if (1.0 - frac < band(terms + m + 1)) flag = true;
            }
            return;
        }
        const double gc = gen[j];
        const std::int64_t m_max = fit_count(rem, gc);
        for (std::int64_t m = 0; m <= m_max; ++m)
            run(j + 1, rem - (double)m * gc, terms + m, pure && m == 0);
        const double over = (double)(m_max + 1) * gc - rem;
        if (over < band(terms + m_max + 1)) flag = true;
    }
};

std::vector<double> ascending_generators(LatticeKind kind, double t) {
    auto g = generators(kind, t);
    std::reverse(g.begin(), g.end());
    return g;
}

std::uint64_t naive_rec(const std::vector<double>& g, const std::vector<double>& suffix_min,
                        std::size_t i, double rem) {
    if (i == g.size() || rem < suffix_min[i]) return 1;
    std::uint64_t c = 0;
    for (std::int64_t m = 0; (double)m * g[i] <= rem; ++m)
        c += naive_rec(g, suffix_min, i + 1, rem - (double)m * g[i]);
    return c;
}

}  // namespace

WaveCount count_waves(LatticeKind kind, double t, const CountOptions& opts) {
    if (!(t >= 0))
        throw PreconditionError("count_waves: t must be non-negative");
    const auto gens = generators(kind, t);
    if (gens.empty()) return {t, 1, false, 1};

    if (opts.threads <= 1) {
        Dfs dfs{&gens, opts.guard_band_scale, opts.node_budget};
        dfs.run(0, t, 0, true);
        return {t, dfs.count, dfs.flag, dfs.nodes};
    }

    // Split the multiplicities of the largest fitting generator across
    // workers; the per-branch scans are disjoint, so count and flag are
    // identical to the serial run.
    const std::size_t j = (std::size_t)(std::partition_point(gens.begin(), gens.end(),
                                                             [&](double x) { return x > t; }) -
                                        gens.begin());
    Dfs top{&gens, opts.guard_band_scale, opts.node_budget};
    if (j > 0 && top.band(1) > gens[j - 1] - t) top.flag = true;
    if (j >= gens.size() - 1) {  // trivial tree: no parallel benefit
        Dfs dfs{&gens, opts.guard_band_scale, opts.node_budget};
        dfs.run(0, t, 0, true);
        return {t, dfs.count, dfs.flag, dfs.nodes};
    }
    const double gc = gens[j];
    const std::int64_t m_max = fit_count(t, gc);
    std::vector<std::future<Dfs>> parts;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        parts.push_back(std::async(std::launch::async, [&, m] {
            Dfs dfs{&gens, opts.guard_band_scale, opts.node_budget};
            dfs.run(j + 1, t - (double)m * gc, m, m == 0);
            return dfs;
        }));
    }
    std::uint64_t count = 0, nodes = 1;
    bool flag = top.flag;
    for (auto& p : parts) {
        Dfs d = p.get();
        count += d.count;
        nodes += d.nodes;
        flag = flag || d.flag;
    }
    const double over = (double)(m_max + 1) * gc - t;
    if (over < top.band(m_max + 1)) flag = true;
    if (nodes > opts.node_budget)
        throw BudgetExceeded("count_waves: node budget exceeded", nodes, count);
    return {t, count, flag, nodes};
}

std::uint64_t oracle_count(LatticeKind kind, double t) {
    if (!(t >= 0))
        throw PreconditionError("oracle_count: t must be non-negative");
    const auto g = ascending_generators(kind, t);
    if (g.empty()) return 1;
    std::vector<double> suffix_min(g.size());
    double m = g.back();
    for (std::size_t i = g.size(); i-- > 0;) {
        m = std::min(m, g[i]);
        suffix_min[i] = m;
    }
    return naive_rec(g, suffix_min, 0, t);
}

std::uint64_t count_with_order(const std::vector<double>& gens, double t) {
    if (!(t >= 0))
        throw PreconditionError("count_with_order: t must be non-negative");
    if (gens.empty()) return 1;
    std::vector<double> suffix_min(gens.size());
    double m = gens.back();
    for (std::size_t i = gens.size(); i-- > 0;) {
        m = std::min(m, gens[i]);
        suffix_min[i] = m;
    }
    return naive_rec(gens, suffix_min, 0, t);
}

namespace {

struct Enumerator {
    const std::vector<double>* g;          // descending
    const std::vector<std::int64_t>* b;    // radicands matching *g
    std::uint64_t cap;
    std::vector<std::pair<double, RadicalSum>> out;
    RadicalSum current;

    void emit(double sum) {
        if (out.size() >= cap)
            throw BudgetExceeded("enumerate_lengths: cap exceeded", out.size(), out.size());
        out.emplace_back(sum, current);
    }

    void run(std::size_t i, double rem, double sum) {
        const auto& gen = *g;
        if (i == gen.size()) {
            emit(sum);
            return;
        }
        const double gc = gen[i];
        if (gc > rem) {
            run(i + 1, rem, sum);
            return;
        }
        const std::int64_t m_max = fit_count(rem, gc);
        for (std::int64_t m = 0; m <= m_max; ++m) {
            if (m > 0) current.mult[(*b)[i]] = m;
            run(i + 1, rem - (double)m * gc, sum + (double)m * gc);
        }
        current.mult.erase((*b)[i]);
    }
};

}  // namespace

std::vector<std::pair<double, RadicalSum>> enumerate_lengths(LatticeKind kind, double t,
                                                             std::uint64_t cap) {
    if (!(t >= 0))
        throw PreconditionError("enumerate_lengths: t must be non-negative");
    std::vector<std::int64_t> radicands;
    const std::int64_t limit = (std::int64_t)std::floor(t * t);
    if (limit >= 1) {
        auto sieve = spectra::build_sieve(kind, limit);
        for (std::int64_t b = limit; b >= 1; --b)
            if (sieve.squarefree_representable.test((std::uint64_t)b))
                radicands.push_back(b);
    }
    std::vector<double> gens;
    for (std::int64_t b : radicands) gens.push_back(std::sqrt((double)b));

    Enumerator e{&gens, &radicands, cap};
    e.run(0, t, 0.0);
    std::sort(e.out.begin(), e.out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return std::move(e.out);
}

std::vector<GrowthRow> growth_table(LatticeKind kind, const std::vector<double>& t_grid,
                                    const CountOptions& opts) {
    for (double t : t_grid)
        if (!(t > 1.0))
            throw PreconditionError("growth_table: every t must exceed 1");
    std::vector<GrowthRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        const WaveCount w = count_waves(kind, t, opts);
        const double ln_n = std::log((double)w.count);
        const double denom = std::pow(t, 2.0 / 3.0) * std::pow(std::log(t), -1.0 / 6.0);
        rows.push_back({t, w.count, ln_n, ln_n / denom, w.boundary_flag});
    }
    return rows;
}

}  // namespace geowaves::waves
