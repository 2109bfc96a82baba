#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <sstream>
#include <vector>

#include "geowaves/errors.hpp"
#include "geowaves/spectra.hpp"

using namespace geowaves;
using namespace geowaves::spectra;

namespace {

// Direct two-variable evaluation of the quadratic forms, no sieve tricks.
bool directly_representable(LatticeKind k, std::int64_t n) {
    for (std::int64_t x = 0; x * x <= n; ++x)
        for (std::int64_t y = 0;; ++y) {
            std::int64_t v = (k == LatticeKind::Square) ? x * x + y * y
                                                        : x * x + x * y + y * y;
            if (v > n) break;
            if (v == n) return true;
        }
    return false;
}

bool squarefree(std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("first representable values") {
    auto sq = build_sieve(LatticeKind::Square, 30);
    auto tr = build_sieve(LatticeKind::Triangular, 30);
    std::vector<std::int64_t> sq_yes = {1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20, 25, 26, 29};
    std::vector<std::int64_t> tr_yes = {1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28};
    for (std::int64_t n = 1; n <= 30; ++n) {
        bool in_sq = std::find(sq_yes.begin(), sq_yes.end(), n) != sq_yes.end();
        bool in_tr = std::find(tr_yes.begin(), tr_yes.end(), n) != tr_yes.end();
        CHECK(sq.representable.test(n) == in_sq);
        CHECK(tr.representable.test(n) == in_tr);
    }
    CHECK_FALSE(sq.representable.test(0));
    CHECK_FALSE(tr.representable.test(0));
}

TEST_CASE("first square-free representable values") {
    auto sq = build_sieve(LatticeKind::Square, 20);
    auto tr = build_sieve(LatticeKind::Triangular, 20);
    CHECK(b_values(sq, 4.0) == std::vector<std::int64_t>{1, 2, 5, 10, 13});
    CHECK(b_values(tr, 4.0) == std::vector<std::int64_t>{1, 3, 7, 13});
}

TEST_CASE("prefix counts") {
    auto sq = build_sieve(LatticeKind::Square, 400);
    CHECK(count_a(sq, 0.5) == 0);
    CHECK(count_a(sq, 1.0) == 1);     // just n = 1
    CHECK(count_a(sq, 1.5) == 2);     // n = 1, 2
    CHECK(count_b(sq, 4.0) == 5);     // 1, 2, 5, 10, 13
    CHECK(count_b(sq, 20.0) <= count_a(sq, 20.0));
    for (int l = 2; l <= 20; ++l)
        CHECK(count_a(sq, (double)l) >= count_a(sq, (double)(l - 1)));
}

TEST_CASE("sieve equals direct form evaluation up to 10^4") {
    for (auto k : {LatticeKind::Square, LatticeKind::Triangular}) {
        auto s = build_sieve(k, 10'000);
        for (std::int64_t n = 1; n <= 10'000; ++n) {
            CHECK(s.representable.test(n) == directly_representable(k, n));
            CHECK(s.squarefree_representable.test(n) ==
                  (directly_representable(k, n) && squarefree(n)));
        }
    }
}

TEST_CASE("prime-power characterization up to 10^5") {
    // Square form: n representable iff every prime p = 3 (mod 4) divides n to
    // an even power; triangular: the same with p = 2 (mod 3).
    const std::int64_t limit = 100'000;
    auto sq = build_sieve(LatticeKind::Square, limit);
    auto tr = build_sieve(LatticeKind::Triangular, limit);
    for (std::int64_t n = 1; n <= limit; ++n) {
        std::int64_t m = n;
        bool sq_ok = true, tr_ok = true;
        for (std::int64_t p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            int e = 0;
            while (m % p == 0) m /= p, ++e;
            if (e % 2) {
                if (p % 4 == 3) sq_ok = false;
                if (p % 3 == 2) tr_ok = false;
            }
        }
        if (m > 1) {  // leftover prime appears once
            if (m % 4 == 3) sq_ok = false;
            if (m % 3 == 2) tr_ok = false;
        }
        CHECK(sq.representable.test(n) == sq_ok);
        CHECK(tr.representable.test(n) == tr_ok);
    }
}

TEST_CASE("B equals A minus integer multiples of other A-values") {
    // sqrt(n) is a multiple of a shorter length iff n = k^2 m with k >= 2 and
    // m representable; with representability closed under dividing by squares
    // this is exactly the non-square-free case.
    const std::int64_t limit = 20'000;
    for (auto k : {LatticeKind::Square, LatticeKind::Triangular}) {
        auto s = build_sieve(k, limit);
        for (std::int64_t n = 1; n <= limit; ++n) {
            if (!s.representable.test(n)) {
                CHECK_FALSE(s.squarefree_representable.test(n));
                continue;
            }
            bool multiple = false;
            for (std::int64_t d = 2; d * d <= n && !multiple; ++d)
                if (n % (d * d) == 0 && s.representable.test(n / (d * d)))
                    multiple = true;
            CHECK(s.squarefree_representable.test(n) == !multiple);
        }
    }
}

TEST_CASE("bit array prefix counting at word boundaries") {
    BitArray b(130);
    for (std::uint64_t i : {0u, 63u, 64u, 65u, 128u}) b.set(i);
    CHECK(b.count_prefix(0) == 1);
    CHECK(b.count_prefix(62) == 1);
    CHECK(b.count_prefix(63) == 2);
    CHECK(b.count_prefix(64) == 3);
    CHECK(b.count_prefix(127) == 4);
    CHECK(b.count_prefix(129) == 5);
    b.reset(64);
    CHECK(b.count_prefix(129) == 4);
}

TEST_CASE("dump and load round-trip") {
    for (std::int64_t limit : {63, 64, 127, 1000}) {
        auto s = build_sieve(LatticeKind::Triangular, limit);
        std::stringstream buf;
        dump_sieve(s, buf);
        auto r = load_sieve(buf);
        CHECK(r.kind == s.kind);
        CHECK(r.limit == s.limit);
        CHECK(r.representable == s.representable);
        CHECK(r.squarefree_representable == s.squarefree_representable);
    }
}

TEST_CASE("load rejects corrupt input") {
    auto s = build_sieve(LatticeKind::Square, 100);
    std::stringstream buf;
    dump_sieve(s, buf);
    std::string bytes = buf.str();

    std::stringstream bad_magic(std::string("QQQQ") + bytes.substr(4));
    CHECK_THROWS_AS(load_sieve(bad_magic), PreconditionError);

    std::stringstream truncated(bytes.substr(0, bytes.size() - 5));
    CHECK_THROWS_AS(load_sieve(truncated), PreconditionError);

    std::string bad_kind = bytes;
    bad_kind[4] = 7;
    std::stringstream bk(bad_kind);
    CHECK_THROWS_AS(load_sieve(bk), PreconditionError);
}

TEST_CASE("query preconditions") {
    auto s = build_sieve(LatticeKind::Square, 100);
    CHECK_THROWS_AS(count_a(s, 11.0), PreconditionError);  // 121 > 100
    CHECK_THROWS_AS(count_a(s, -1.0), PreconditionError);
    CHECK_THROWS_AS(build_sieve(LatticeKind::Square, 0), PreconditionError);
}