#include "geowaves/spectra.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <new>
#include <string>

#include "geowaves/errors.hpp"

namespace geowaves::spectra {

BitArray::BitArray(std::uint64_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

std::uint64_t BitArray::count_prefix(std::uint64_t n) const {
    if (bits_ == 0) return 0;
    if (n >= bits_) n = bits_ - 1;
    const std::uint64_t full = n / 64;
    std::uint64_t c = 0;
    for (std::uint64_t w = 0; w < full; ++w) c += (std::uint64_t)std::popcount(words_[w]);
    const unsigned rem = (unsigned)(n % 64);
    const std::uint64_t mask = rem == 63 ? ~0ull : ((1ull << (rem + 1)) - 1);
    c += (std::uint64_t)std::popcount(words_[full] & mask);
    return c;
}

void BitArray::and_with(const BitArray& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

SpectrumSieve build_sieve(LatticeKind kind, std::int64_t limit) {
    if (limit < 1)
        throw PreconditionError("build_sieve: limit must be >= 1");
    SpectrumSieve s;
    s.kind = kind;
    s.limit = limit;
    try {
        s.representable = BitArray((std::uint64_t)limit + 1);
        s.squarefree_representable = BitArray((std::uint64_t)limit + 1);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("build_sieve: allocation failed for limit " +
                                 std::to_string(limit));
    }

    // Both forms are symmetric in x, y and every value is attained with
    // 0 <= x <= y, so that range marks the whole value set.
    if (kind == LatticeKind::Square) {
        for (std::int64_t x = 0; x * x <= limit; ++x) {
            std::int64_t n = 2 * x * x;
            for (std::int64_t y = x; n <= limit; ++y) {
                if (n > 0) s.representable.set((std::uint64_t)n);
                n += 2 * y + 1;  // (y+1)^2 - y^2
            }
        }
    } else {
        for (std::int64_t x = 0; 3 * x * x <= limit; ++x) {
            std::int64_t n = 3 * x * x;
            for (std::int64_t y = x; n <= limit; ++y) {
                if (n > 0) s.representable.set((std::uint64_t)n);
                n += x + 2 * y + 1;  // increment of x^2 + xy + y^2 in y
            }
        }
    }

    // square-free mask: strike multiples of p^2
    std::vector<std::uint64_t>& sf = s.squarefree_representable.words();
    for (auto& w : sf) w = ~0ull;
    std::int64_t root = (std::int64_t)std::sqrt((double)limit);
    while (root > 1 && root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<bool> composite((std::size_t)root + 1, false);
    for (std::int64_t p = 2; p <= root; ++p) {
        if (composite[(std::size_t)p]) continue;
        for (std::int64_t m = p * p; m <= root; m += p) composite[(std::size_t)m] = true;
        for (std::int64_t m = p * p; m <= limit; m += p * p)
            s.squarefree_representable.reset((std::uint64_t)m);
    }
    s.squarefree_representable.and_with(s.representable);
    return s;
}

namespace {

std::int64_t threshold_for(const SpectrumSieve& s, double l) {
    if (!(l >= 0))
        throw PreconditionError("spectrum query: l must be non-negative");
    const double l2 = l * l;
    if (l2 > (double)s.limit)
        throw PreconditionError("spectrum query: l^2 exceeds sieve limit " +
                                std::to_string(s.limit));
    return (std::int64_t)std::floor(l2);
}

}  // namespace

std::int64_t count_a(const SpectrumSieve& s, double l) {
    const std::int64_t t = threshold_for(s, l);
    if (t < 1) return 0;
    return (std::int64_t)s.representable.count_prefix((std::uint64_t)t);
}

std::int64_t count_b(const SpectrumSieve& s, double l) {
    const std::int64_t t = threshold_for(s, l);
    if (t < 1) return 0;
    return (std::int64_t)s.squarefree_representable.count_prefix((std::uint64_t)t);
}

std::vector<std::int64_t> b_values(const SpectrumSieve& s, double l) {
    const std::int64_t t = threshold_for(s, l);
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= t; ++n)
        if (s.squarefree_representable.test((std::uint64_t)n)) out.push_back(n);
    return out;
}

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (char)((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read((char*)b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= (std::uint64_t)b[i] << (8 * i);
    return v;
}

void put_bits(std::ostream& out, const BitArray& a) {
    for (std::uint64_t w : a.words()) put_u64(out, w);
}

void get_bits(std::istream& in, BitArray& a) {
    for (auto& w : a.words()) w = get_u64(in);
}

}  // namespace

void dump_sieve(const SpectrumSieve& s, std::ostream& out) {
    out.write("SPCT", 4);
    const char kind_pad[4] = {(char)(s.kind == LatticeKind::Square ? 0 : 1), 0, 0, 0};
    out.write(kind_pad, 4);
    put_u64(out, (std::uint64_t)s.limit);
    put_bits(out, s.representable);
    put_bits(out, s.squarefree_representable);
    if (!out) throw std::runtime_error("dump_sieve: write failed");
}

SpectrumSieve load_sieve(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != "SPCT")
        throw PreconditionError("load_sieve: bad magic");
    char kind_pad[4];
    in.read(kind_pad, 4);
    if (kind_pad[0] != 0 && kind_pad[0] != 1)
        throw PreconditionError("load_sieve: bad kind byte");
    const std::uint64_t limit = get_u64(in);
    if (!in || limit < 1 || limit > (1ull << 40))
        throw PreconditionError("load_sieve: implausible limit");
    SpectrumSieve s;
    s.kind = kind_pad[0] == 0 ? LatticeKind::Square : LatticeKind::Triangular;
    s.limit = (std::int64_t)limit;
    s.representable = BitArray(limit + 1);
    s.squarefree_representable = BitArray(limit + 1);
    get_bits(in, s.representable);
    get_bits(in, s.squarefree_representable);
    if (!in) throw PreconditionError("load_sieve: truncated file");
    return s;
}

void dump_sieve_file(const SpectrumSieve& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("dump_sieve: cannot open " + path);
    dump_sieve(s, f);
}

SpectrumSieve load_sieve_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("load_sieve: cannot open " + path);
    return load_sieve(f);
}

}  // namespace geowaves::spectra
