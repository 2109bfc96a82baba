#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "geowaves/errors.hpp"
#include "geowaves/pentagon.hpp"
#include "geowaves/semigroup.hpp"

using namespace geowaves;
using namespace geowaves::pentagon;

namespace {

CycloInt make(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return CycloInt{{a0, a1, a2, a3}};
}

CycloInt random_elem(std::mt19937& rng, int span) {
    std::uniform_int_distribution<std::int64_t> d(-span, span);
    return make(d(rng), d(rng), d(rng), d(rng));
}

double shoelace(const PentagonPlacement& p) {
    double area = 0.0;
    for (int s = 0; s < 5; ++s) {
        auto w0 = p.vertices[s].embed();
        auto w1 = p.vertices[(s + 1) % 5].embed();
        area += w0.real() * w1.imag() - w1.real() * w0.imag();
    }
    return area / 2.0;
}

// Self-avoiding-enough random walk on the face graph (no immediate backtrack).
std::vector<int> random_face_path(std::mt19937& rng, int len) {
    const auto& nbr = dodecahedron_faces();
    std::vector<int> path{static_cast<int>(rng() % 12)};
    while (static_cast<int>(path.size()) < len) {
        int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
        int next;
        do {
            next = nbr[path.back()][rng() % 5];
        } while (next == prev);
        path.push_back(next);
    }
    return path;
}

}  // namespace

TEST_CASE("ring identities in Z[zeta]") {
    CycloInt one = CycloInt::zeta_pow(0);
    CHECK(CycloInt::zeta_pow(5) == one);
    CHECK(CycloInt::zeta_pow(-1) == CycloInt::zeta_pow(4));
    CHECK(CycloInt::zeta_pow(7) == CycloInt::zeta_pow(2));

    CycloInt sum;
    for (int k = 0; k < 5; ++k) sum = sum + CycloInt::zeta_pow(k);
    CHECK(sum.is_zero());

    CHECK(CycloInt::zeta_pow(1) * CycloInt::zeta_pow(4) == one);
    CHECK(CycloInt::zeta_pow(2) * CycloInt::zeta_pow(3) == one);

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        CycloInt u = random_elem(rng, 9), v = random_elem(rng, 9), w = random_elem(rng, 9);
        CHECK(u * v == v * u);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK(u.conj().conj() == u);
        CHECK((u * v).conj() == u.conj() * v.conj());
    }
}

TEST_CASE("complex embedding is a ring homomorphism to 1e-12") {
    std::mt19937 rng(11);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        CycloInt u = random_elem(rng, 9), v = random_elem(rng, 9);
        auto eu = u.embed(), ev = v.embed();
        double add_err = std::abs((u + v).embed() - (eu + ev));
        double mul_err = std::abs((u * v).embed() - eu * ev);
        double conj_err = std::abs(u.conj().embed() - std::conj(eu));
        double scale = 1.0 + std::abs(eu) * std::abs(ev);
        worst = std::max({worst, add_err / scale, mul_err / scale, conj_err / scale});
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("real elements convert to exact a + b*phi") {
    CHECK((CycloInt::zeta_pow(1) + CycloInt::zeta_pow(4)).is_real());
    CHECK((CycloInt::zeta_pow(1) + CycloInt::zeta_pow(4)).to_quadreal() == QuadReal{-1, 1});
    CHECK((CycloInt::zeta_pow(2) + CycloInt::zeta_pow(3)).to_quadreal() == QuadReal{0, -1});
    CHECK_FALSE(CycloInt::zeta_pow(1).is_real());
    CHECK_THROWS_AS(CycloInt::zeta_pow(1).to_quadreal(), PreconditionError);
}

TEST_CASE("QuadReal arithmetic and exact ordering") {
    CHECK(QuadReal{0, 1} * QuadReal{0, 1} == QuadReal{1, 1});  // phi^2 = phi + 1
    CHECK(QuadReal{1, 1} * QuadReal{1, 1} == QuadReal{2, 3});
    CHECK(QuadReal{2, -1} * 3 == QuadReal{6, -3});
    CHECK((QuadReal{5, -3} - QuadReal{5, -3}).sign() == 0);

    std::mt19937 rng(13);
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    for (int i = 0; i < 10000; ++i) {
        QuadReal x{d(rng), d(rng)}, y{d(rng), d(rng)};
        // a + b*phi with |b| <= 1e6 is at least ~4e-7 from zero unless it is
        // zero, far above the rounding error of the double evaluation.
        double fx = x.to_double(), fy = y.to_double();
        CHECK(x.sign() == (fx > 0 ? 1 : fx < 0 ? -1 : 0));
        CHECK((x < y) == (fx < fy));
        CHECK((x <= y) == (fx <= fy));
    }
}

TEST_CASE("oriented basis signs and norms") {
    CHECK(sign_pattern(SignCone{0}) == std::array<int, 5>{1, 1, -1, -1, 1});
    for (int j = 0; j < 10; ++j) {
        auto f = oriented_basis(SignCone{j});
        for (int k = 0; k < 5; ++k) {
            CHECK(norm2_exact(f[k]) == QuadReal{1, 0});
            // advancing the cone by two rotates the whole basis by zeta
            CHECK(oriented_basis(SignCone{(j + 2) % 10})[(k + 1) % 5] ==
                  CycloInt::zeta_pow(1) * f[k]);
        }
    }
    CHECK(norm2_exact(CycloInt::zeta_pow(0) + CycloInt::zeta_pow(1)) == QuadReal{1, 1});
    CHECK(norm2_exact(CycloInt{}) == QuadReal{0, 0});
    CHECK(dot2(CycloInt::zeta_pow(0), CycloInt::zeta_pow(0)) == QuadReal{2, 0});
}

TEST_CASE("cone membership partitions all directions") {
    CycloInt z0 = CycloInt::zeta_pow(0), z1 = CycloInt::zeta_pow(1),
             z2 = CycloInt::zeta_pow(2), z3 = CycloInt::zeta_pow(3);

    CHECK(cone_of(z0).index == 0);
    CHECK(cone_of(z1).index == 2);
    CHECK(cone_of(-z0).index == 5);
    CHECK(cone_of(z0 + z1).index == 1);  // 36 degrees

    // boundary rays (perpendicular to an edge) stick to the cone below them
    CHECK(cone_of(z0 - z3).index == 0);         // +18 degrees
    CHECK(cone_of(z0 - z2).index == 9);         // -18 degrees
    CHECK(cone_of((z0 - z2) * z1).index == 1);  // 54 degrees
    CHECK(cone_of((z0 - z3) * z1).index == 2);  // 90 degrees

    // rotation by zeta advances the cone index by two, boundaries included
    std::mt19937 rng(17);
    for (int i = 0; i < 500; ++i) {
        CycloInt v = random_elem(rng, 4);
        if (v.is_zero()) continue;
        int owners = 0;
        for (int j = 0; j < 10; ++j) owners += cone_contains(SignCone{j}, v) ? 1 : 0;
        CHECK(owners == 1);
        CHECK(cone_of(v * CycloInt::zeta_pow(1)).index == (cone_of(v).index + 2) % 10);
    }
    CHECK_THROWS_AS(cone_of(CycloInt{}), PreconditionError);
}

TEST_CASE("epsilon bound: value, strictness, degenerate input") {
    SignCone c{0};
    auto f = oriented_basis(c);
    CycloInt v0;
    for (int k = 0; k < 5; ++k) v0 = v0 + f[k];

    double eps = epsilon_bound(v0, c);
    CHECK(eps == doctest::Approx(1.0 / (4.0 + 4.0 * std::numbers::phi)).epsilon(1e-12));

    // exact exhaustive check of <v, v> > eps * sum n_k^2 for every vector up
    // to length 6, entirely in integer arithmetic:
    //   4 * norm2(v) * norm2(v0)  >  min_dot2^2 * sum n_k^2
    QuadReal n2v0 = norm2_exact(v0);
    QuadReal min2 = dot2(v0, f[0]);
    for (int k = 1; k < 5; ++k) min2 = std::min(min2, dot2(v0, f[k]));
    std::size_t seen = 0;
    for_each_cone_vector(6.0, c, 1u << 24,
                         [&](const std::array<std::int64_t, 5>& n, const CycloInt&,
                             const QuadReal& n2) {
                             ++seen;
                             std::int64_t s2 = 0;
                             for (auto x : n) s2 += x * x;
                             QuadReal lhs = n2 * n2v0 * QuadReal{4, 0};
                             QuadReal rhs = min2 * min2 * QuadReal{s2, 0};
                             CHECK(rhs < lhs);
                         });
    CHECK(seen == 776);

    // v0 perpendicular to one basis vector violates the precondition
    CHECK_THROWS_AS(epsilon_bound(CycloInt::zeta_pow(0) - CycloInt::zeta_pow(3), c),
                    PreconditionError);
}

TEST_CASE("length enumeration: frozen small counts and values") {
    CHECK(enumerate_lengths(0.0, SignCone{0}, 1000).empty());

    // two vectors fit below length 1: a single edge, and f_1 + f_4 with
    // length phi - 1 (socked-in short diagonal direction), norm2 = 2 - phi
    auto l1 = enumerate_lengths(1.0, SignCone{0}, 100000);
    REQUIRE(l1.size() == 2);
    CHECK(l1[0] == QuadReal{2, -1});
    CHECK(l1[1] == QuadReal{1, 0});

    auto l2 = enumerate_lengths(2.0, SignCone{0}, 1000000);
    CHECK(l2.size() == 10);
    CHECK(std::find(l2.begin(), l2.end(), QuadReal{1, 1}) != l2.end());
    CHECK(std::is_sorted(l2.begin(), l2.end(),
                         [](const QuadReal& x, const QuadReal& y) { return x < y; }));

    const std::array<std::size_t, 12> frozen{2,    10,   27,   64,  135,  251,
                                             424,  674,  1026, 1496, 2118, 2920};
    for (int l = 1; l <= 12; ++l)
        CHECK(enumerate_lengths(static_cast<double>(l), SignCone{0}, 1u << 26).size() ==
              frozen[l - 1]);
}

TEST_CASE("length sets agree across all ten cones") {
    auto base = enumerate_lengths(4.0, SignCone{0}, 1u << 24);
    for (int j = 1; j < 10; ++j)
        CHECK(enumerate_lengths(4.0, SignCone{j}, 1u << 24) == base);
}

TEST_CASE("exact norms match floating norms to 1e-9 up to length 6") {
    double worst = 0.0;
    for_each_cone_vector(6.0, SignCone{0}, 1u << 24,
                         [&](const std::array<std::int64_t, 5>&, const CycloInt& v,
                             const QuadReal& n2) {
                             worst = std::max(worst,
                                              std::abs(std::norm(v.embed()) - n2.to_double()));
                         });
    CHECK(worst <= 1e-9);
}

TEST_CASE("fitted polynomial bound holds over the whole window") {
    double gamma = length_bound_gamma(1u << 26);
    CHECK(gamma == doctest::Approx(0.5).epsilon(1e-12));  // 8 * 64 / 4^5
    for (int l = 2; l <= 12; ++l) {
        auto lengths = enumerate_lengths(static_cast<double>(l), SignCone{0}, 1u << 26);
        CHECK(static_cast<double>(lengths.size()) < gamma * std::pow(l, 5));
    }
}

TEST_CASE("parallel enumeration matches the serial scan") {
    auto serial = enumerate_lengths(6.0, SignCone{0}, 1u << 24, 1);
    CHECK(enumerate_lengths(6.0, SignCone{0}, 1u << 24, 2) == serial);
    CHECK(enumerate_lengths(6.0, SignCone{0}, 1u << 24, 3) == serial);
    CHECK_THROWS_AS(enumerate_lengths(6.0, SignCone{0}, 1u << 24, 0), PreconditionError);
}

TEST_CASE("tuple budget is enforced, serial and parallel") {
    try {
        enumerate_lengths(6.0, SignCone{0}, 500);
        FAIL("budget was not enforced");
    } catch (const BudgetExceeded& e) {
        CHECK(e.nodes_visited > 500);
        CHECK(e.nodes_visited < 600);
    }
    CHECK_THROWS_AS(enumerate_lengths(6.0, SignCone{0}, 500, 3), BudgetExceeded);
}

TEST_CASE("face graph is a consistent closed rotation system") {
    const auto& nbr = dodecahedron_faces();
    int directed_edges = 0;
    for (int f = 0; f < 12; ++f) {
        std::set<int> distinct(nbr[f].begin(), nbr[f].end());
        CHECK(distinct.size() == 5);
        CHECK(distinct.count(f) == 0);
        for (int s = 0; s < 5; ++s) {
            ++directed_edges;
            int g = nbr[f][s];
            CHECK(std::count(nbr[g].begin(), nbr[g].end(), f) == 1);
        }
    }
    CHECK(directed_edges == 60);  // 30 undirected edges

    // walking "arrive, then take the next edge" must close up in 3 steps
    // around each of the 20 vertices, giving exactly 20 orbits
    std::set<std::pair<int, int>> visited;
    int orbits = 0;
    for (int f = 0; f < 12; ++f)
        for (int s = 0; s < 5; ++s) {
            if (visited.count({f, s})) continue;
            int cf = f, cs = s, len = 0;
            do {
                visited.insert({cf, cs});
                int g = nbr[cf][cs];
                int back = -1;
                for (int i = 0; i < 5; ++i)
                    if (nbr[g][i] == cf) back = i;
                cf = g;
                cs = (back + 1) % 5;
                ++len;
            } while (!(cf == f && cs == s) && len < 100);
            CHECK(len == 3);
            ++orbits;
        }
    CHECK(orbits == 20);
}

TEST_CASE("strip unfolding: canonical placement, gluing, orientation") {
    auto single = build_strip({3});
    CHECK(single.pentagons.size() == 1);
    CHECK(single.pentagons[0].face == 3);
    CHECK(single.pentagons[0].vertices[0] == make(0, 0, 0, 0));
    CHECK(single.pentagons[0].vertices[1] == make(1, 0, 0, 0));
    CHECK(single.pentagons[0].vertices[2] == make(1, 1, 0, 0));
    CHECK(single.pentagons[0].vertices[3] == make(1, 1, 1, 0));
    CHECK(single.pentagons[0].vertices[4] == make(1, 1, 1, 1));

    auto two = build_strip({0, 1});
    REQUIRE(two.pentagons.size() == 2);
    // mirrored placement frozen by hand: the second pentagon walks backwards
    // through -zeta^k from the shared edge
    CHECK(two.pentagons[1].vertices[0] == make(1, 0, 0, 0));
    CHECK(two.pentagons[1].vertices[1] == make(0, 0, 0, 0));
    CHECK(two.pentagons[1].vertices[2] == make(0, -1, 0, 0));
    CHECK(two.pentagons[1].vertices[3] == make(0, -1, -1, 0));
    CHECK(two.pentagons[1].vertices[4] == make(0, -1, -1, -1));

    std::set<CycloInt> all;
    for (const auto& p : two.pentagons)
        all.insert(p.vertices.begin(), p.vertices.end());
    CHECK(all.size() == 8);  // 10 slots, 2 shared

    std::mt19937 rng(23);
    auto path = random_face_path(rng, 12);
    auto strip = build_strip(path);
    for (std::size_t p = 0; p < strip.pentagons.size(); ++p) {
        // every slot edge is a unit vector and the winding stays ccw
        for (int s = 0; s < 5; ++s)
            CHECK(norm2_exact(strip.pentagons[p].vertices[(s + 1) % 5] -
                              strip.pentagons[p].vertices[s]) == QuadReal{1, 0});
        CHECK(shoelace(strip.pentagons[p]) > 0.0);
        if (p + 1 < strip.pentagons.size()) {
            std::set<CycloInt> a(strip.pentagons[p].vertices.begin(),
                                 strip.pentagons[p].vertices.end());
            int shared = 0;
            for (const auto& v : strip.pentagons[p + 1].vertices) shared += a.count(v);
            CHECK(shared == 2);
        }
    }

    CHECK_THROWS_AS(build_strip({}), PreconditionError);
    CHECK_THROWS_AS(build_strip({0, 6}), PreconditionError);   // not adjacent
    CHECK_THROWS_AS(build_strip({0, 12}), PreconditionError);  // out of range
    CHECK(build_strip({0, 1, 0}).pentagons.size() == 3);       // revisits allowed
}

TEST_CASE("two-pentagon decompositions, frozen by hand") {
    auto strip = build_strip({0, 1});

    auto d = monotone_decompose(strip, {0, 0}, {1, 0});
    CHECK(d.status == DecomposeStatus::Ok);
    CHECK(d.cone.index == 0);
    CHECK(d.coefficients == std::array<std::int64_t, 5>{1, 0, 0, 0, 0});

    d = monotone_decompose(strip, {0, 0}, {1, 3});
    CHECK(d.status == DecomposeStatus::Ok);
    CHECK(d.cone.index == 8);
    CHECK(d.coefficients == std::array<std::int64_t, 5>{0, 1, 1, 0, 0});

    d = monotone_decompose(strip, {0, 0}, {1, 4});
    CHECK(d.status == DecomposeStatus::Ok);
    CHECK(d.cone.index == 9);
    CHECK(d.coefficients == std::array<std::int64_t, 5>{1, 0, 0, 0, 1});

    // a diagonal within one pentagon uses two boundary steps
    d = monotone_decompose(strip, {0, 0}, {0, 2});
    CHECK(d.status == DecomposeStatus::Ok);
    std::int64_t total = 0;
    for (auto n : d.coefficients) total += n;
    CHECK(total == 2);
    CHECK(d.v == make(1, 1, 0, 0));

    // slot (1,1) is the same plane point as (0,0)
    CHECK_THROWS_AS(monotone_decompose(strip, {0, 0}, {1, 1}), PreconditionError);
}

TEST_CASE("self-overlapping strip: endpoint in another placement does not cross") {
    // The segment lies inside the tenth pentagon, but its far endpoint is a
    // vertex only of an overlapping earlier placement of the same face, so
    // there is no chain crossing and no claim of a decomposition.
    auto strip = build_strip({6, 10, 1, 6, 2, 0, 3, 2, 1, 6, 10, 9, 4});
    CHECK_FALSE(strip_covers_segment(strip, {10, 4}, {0, 3}));
    CHECK(monotone_decompose(strip, {10, 4}, {0, 3}).status == DecomposeStatus::NotCrossing);
}

TEST_CASE("random strips: crossing segments always decompose exactly") {
    std::mt19937 rng(12345);
    int ok = 0, rejected = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto path = random_face_path(rng, 2 + static_cast<int>(rng() % 19));
        auto strip = build_strip(path);
        int np = static_cast<int>(strip.pentagons.size());
        for (int rep = 0; rep < 6; ++rep) {
            VertexRef a{static_cast<int>(rng() % np), static_cast<int>(rng() % 5)};
            VertexRef b{static_cast<int>(rng() % np), static_cast<int>(rng() % 5)};
            if (strip.pentagons[a.pentagon].vertices[a.slot] ==
                strip.pentagons[b.pentagon].vertices[b.slot])
                continue;
            bool crossing = strip_covers_segment(strip, a, b);
            auto d = monotone_decompose(strip, a, b);
            if (!crossing) {
                CHECK(d.status == DecomposeStatus::NotCrossing);
                ++rejected;
                continue;
            }
            REQUIRE(d.status == DecomposeStatus::Ok);
            ++ok;
            auto f = oriented_basis(d.cone);
            CycloInt rebuilt;
            for (int k = 0; k < 5; ++k) {
                CHECK(d.coefficients[k] >= 0);
                rebuilt = rebuilt + f[k] * d.coefficients[k];
            }
            CHECK(rebuilt == d.v);
            CHECK(rebuilt == strip.pentagons[b.pentagon].vertices[b.slot] -
                                 strip.pentagons[a.pentagon].vertices[a.slot]);
            CHECK(cone_contains(d.cone, d.v));
        }
    }
    // both outcomes must actually occur for the test to mean anything
    CHECK(ok >= 50);
    CHECK(rejected >= 50);
}

TEST_CASE("growth bound model") {
    auto m = dodec_bound_model(1.0, 2.0);
    CHECK(m.exponent == doctest::Approx(2.0));
    CHECK(m.value == doctest::Approx(std::exp(2.0)));

    auto a = dodec_bound_model(7.0, 1.3);
    auto b = dodec_bound_model(14.0, 1.3);
    CHECK(b.exponent / a.exponent == doctest::Approx(std::pow(2.0, 5.0 / 6.0)));
    CHECK(dodec_bound_model(32.0, 2.0).exponent ==
          doctest::Approx(2.0 * std::pow(2.0, 25.0 / 6.0)));
    CHECK_THROWS_AS(dodec_bound_model(-1.0, 2.0), PreconditionError);

    // the five-generator count model shares the 5/6 exponent law
    double c5 = semigroup::c_g({1.0, 5.0, 0.0});
    CHECK(c5 > 0.0);
    CHECK(std::isfinite(c5));
    auto cm = semigroup::count_model(100.0, {1.0, 5.0, 0.0});
    CHECK(cm.exponent == doctest::Approx(c5 * std::pow(100.0, 5.0 / 6.0)).epsilon(1e-12));
}
