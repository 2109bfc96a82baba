#include "geowaves/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <string>

#include "geowaves/errors.hpp"

namespace geowaves::lattice {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int sign_of(__int128 v) { return (v > 0) - (v < 0); }

// Cross product of the embedded vectors has the sign of the coordinate
// determinant for both lattices (the triangular embedding scales it by
// sqrt(3)/2 > 0).
__int128 cross_det(const LatticeVec& a, const LatticeVec& b) {
    return (__int128)a.x * b.y - (__int128)a.y * b.x;
}

// Twice the Euclidean dot product of the embeddings, exact in integers.
__int128 dot_twice(const LatticeVec& a, const LatticeVec& b) {
    __int128 d = 2 * ((__int128)a.x * b.x + (__int128)a.y * b.y);
    if (a.kind == LatticeKind::Triangular)
        d += (__int128)a.x * b.y + (__int128)a.y * b.x;
    return d;
}

// angle(v) in [angle(d), angle(d) + pi]?  (>= boundary, strictly below d+pi,
// with the d-aligned ray included and the opposite ray excluded)
bool at_or_after(const LatticeVec& d, const LatticeVec& v) {
    int c = sign_of(cross_det(d, v));
    if (c != 0) return c > 0;
    return dot_twice(d, v) > 0;
}

// angle(v) strictly inside (angle(d) - pi, angle(d))?
bool strictly_before(const LatticeVec& d, const LatticeVec& v) {
    int c = sign_of(cross_det(d, v));
    if (c != 0) return c < 0;
    return dot_twice(d, v) < 0;
}

double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

// Prepared membership test: exact when both boundaries snap to lattice
// directions, float fallback otherwise.
struct SectorTest {
    enum Mode { Full, Exact, Float } mode;
    LatticeVec s{}, e{};
    bool narrow = false;  // width <= pi
    double start = 0.0, width = 0.0;

    static SectorTest prepare(LatticeKind kind, const Sector& sec) {
        if (!(sec.width > 0.0) || sec.width > kTwoPi + 1e-12)
            throw PreconditionError("sector width must lie in (0, 2*pi]");
        SectorTest t;
        t.start = normalize_angle(sec.start);
        t.width = sec.width;
        if (sec.width >= kTwoPi - 1e-12) {
            t.mode = Full;
            return t;
        }
        auto ds = exact_direction(kind, sec.start);
        auto de = exact_direction(kind, sec.start + sec.width);
        if (ds && de) {
            t.mode = Exact;
            t.s = *ds;
            t.e = *de;
            t.narrow = sec.width <= std::numbers::pi;
        } else {
            t.mode = Float;
        }
        return t;
    }

    bool contains(const LatticeVec& v) const {
        switch (mode) {
            case Full:
                return true;
            case Exact:
                if (narrow) return at_or_after(s, v) && strictly_before(e, v);
                // complement of the narrow sector [e, s)
                return !(at_or_after(e, v) && strictly_before(s, v));
            case Float: {
                auto p = embed(v);
                double rel = normalize_angle(std::atan2(p[1], p[0]) - start);
                return rel < width;
            }
        }
        return false;
    }
};

std::array<int, 4> mat_mul(const std::array<int, 4>& m, const std::array<int, 4>& n) {
    return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}

std::vector<std::array<int, 4>> group_closure(std::vector<std::array<int, 4>> gens) {
    std::vector<std::array<int, 4>> g{{1, 0, 0, 1}};
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (const auto& s : gens) {
            auto m = mat_mul(s, g[i]);
            if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(m);
        }
    }
    std::sort(g.begin(), g.end());
    return g;
}

}  // namespace

std::int64_t norm(const LatticeVec& v) {
    __int128 n = (__int128)v.x * v.x + (__int128)v.y * v.y;
    if (v.kind == LatticeKind::Triangular) n += (__int128)v.x * v.y;
    if (n > INT64_MAX)
        throw std::overflow_error("lattice norm exceeds 64-bit range");
    return (std::int64_t)n;
}

bool is_irreducible(const LatticeVec& v) {
    if (v.x == 0 && v.y == 0)
        throw PreconditionError("is_irreducible: zero vector has no direction");
    const auto ax = (std::uint64_t)(v.x < 0 ? -v.x : v.x);
    const auto ay = (std::uint64_t)(v.y < 0 ? -v.y : v.y);
    return std::gcd(ax, ay) == 1;
}

std::array<double, 2> embed(const LatticeVec& v) {
    if (v.kind == LatticeKind::Square) return {(double)v.x, (double)v.y};
    return {(double)v.x + 0.5 * (double)v.y, (double)v.y * (std::numbers::sqrt3 / 2.0)};
}

std::vector<std::array<int, 4>> symmetry_maps(LatticeKind kind) {
    if (kind == LatticeKind::Square) {
        // generators: rotation by 90 deg and reflection across the x-axis
        return group_closure({{0, -1, 1, 0}, {1, 0, 0, -1}});
    }
    // rotation by 60 deg: (x,y) -> (-y, x+y); reflection: (x,y) -> (x+y, -y)
    return group_closure({{0, -1, 1, 1}, {1, 1, 0, -1}});
}

std::optional<LatticeVec> exact_direction(LatticeKind kind, double angle) {
    const double a = normalize_angle(angle);
    std::optional<LatticeVec> best;
    int best_size = INT32_MAX;
    for (int dx = -8; dx <= 8; ++dx) {
        for (int dy = -8; dy <= 8; ++dy) {
            if (dx == 0 && dy == 0) continue;
            if (std::gcd(std::abs(dx), std::abs(dy)) != 1) continue;
            LatticeVec d{kind, dx, dy};
            auto p = embed(d);
            double diff = std::fabs(normalize_angle(std::atan2(p[1], p[0]) - a));
            diff = std::min(diff, kTwoPi - diff);
            if (diff < 1e-9) {
                int size = std::abs(dx) + std::abs(dy);
                if (size < best_size ||
                    (size == best_size && std::tie(dx, dy) < std::tie(best->x, best->y))) {
                    best = d;
                    best_size = size;
                }
            }
        }
    }
    return best;
}

bool sector_contains(const Sector& s, const LatticeVec& v) {
    if (v.x == 0 && v.y == 0)
        throw PreconditionError("sector_contains: zero vector has no direction");
    return SectorTest::prepare(v.kind, s).contains(v);
}

namespace {

std::int64_t count_range(LatticeKind kind, const SectorTest& test, double l2,
                         std::int64_t x_lo, std::int64_t x_hi, std::int64_t y_bound) {
    std::int64_t count = 0;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
        for (std::int64_t y = -y_bound; y <= y_bound; ++y) {
            if (x == 0 && y == 0) continue;
            LatticeVec v{kind, x, y};
            std::int64_t n = (kind == LatticeKind::Square) ? x * x + y * y
                                                           : x * x + x * y + y * y;
            if ((double)n > l2) continue;
            if (std::gcd((std::uint64_t)std::abs(x), (std::uint64_t)std::abs(y)) != 1) continue;
            if (test.contains(v)) ++count;
        }
    }
    return count;
}

}  // namespace

std::int64_t count_irreducible_in_sector(LatticeKind kind, const Sector& s, double l,
                                         int threads) {
    if (!(l > 0))
        throw PreconditionError("count_irreducible_in_sector: l must be positive");
    if (l >= 1.5e9)  // keeps x*x + x*y + y*y inside int64 (and the scan feasible)
        throw PreconditionError("count_irreducible_in_sector: l too large for exact scan");
    const SectorTest test = SectorTest::prepare(kind, s);
    const double l2 = l * l;
    const std::int64_t bound =
        (kind == LatticeKind::Square) ? (std::int64_t)std::floor(l)
                                      : (std::int64_t)std::floor(2.0 * l / std::numbers::sqrt3) + 1;

    if (threads <= 1 || bound < 512) {
        return count_range(kind, test, l2, -bound, bound, bound);
    }
    std::vector<std::future<std::int64_t>> parts;
    const std::int64_t span = 2 * bound + 1;
    const std::int64_t chunk = (span + threads - 1) / threads;
    for (std::int64_t lo = -bound; lo <= bound; lo += chunk) {
        const std::int64_t hi = std::min(bound, lo + chunk - 1);
        parts.push_back(std::async(std::launch::async, [=, &test] {
            return count_range(kind, test, l2, lo, hi, bound);
        }));
    }
    std::int64_t total = 0;
    for (auto& p : parts) total += p.get();
    return total;
}

double irreducible_sector_density(LatticeKind kind, const Sector& s, double l, int threads) {
    return (double)count_irreducible_in_sector(kind, s, l, threads) / (l * l);
}

}  // namespace geowaves::lattice
