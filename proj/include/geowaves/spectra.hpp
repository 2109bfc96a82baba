#pragma once
// Value-set sieves for the two lattice norm forms.
//
// A-set: integers n > 0 representable as x^2 + y^2 (Square) or
//        x^2 + xy + y^2 (Triangular); sqrt(n) is then a geodesic length.
// B-set: square-free members of the A-set.  Every A-value is an integer
//        square times a B-value, so the B-values generate all lengths and
//        b(l)/a(l) -> 6/pi^2.
//
// a(l) = #{0 < n <= l^2 : n in A},  b(l) likewise for B.
//
// Binary dump format (little-endian):
//   bytes 0..3   magic "SPCT"
//   byte  4      kind (0 = Square, 1 = Triangular)
//   bytes 5..7   zero padding
//   bytes 8..15  limit, unsigned 64-bit
//   then the two bit arrays (representable, squarefree_representable),
//   each ceil((limit+1)/64) 64-bit words, bit n = membership of n.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "geowaves/lattice.hpp"

namespace geowaves::spectra {

using lattice::LatticeKind;

class BitArray {
  public:
    BitArray() = default;
    explicit BitArray(std::uint64_t bits);

    bool test(std::uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::uint64_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::uint64_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }

    std::uint64_t bits() const { return bits_; }
    std::uint64_t count_prefix(std::uint64_t n) const;  // set bits with index <= n
    void and_with(const BitArray& other);

    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }
    bool operator==(const BitArray&) const = default;

  private:
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct SpectrumSieve {
    LatticeKind kind;
    std::int64_t limit;
    BitArray representable;
    BitArray squarefree_representable;
};

// Marks every form value up to limit, then strikes multiples of p^2 to get
// the square-free subset.  Allocation failures are reported with the limit.
SpectrumSieve build_sieve(LatticeKind kind, std::int64_t limit);

std::int64_t count_a(const SpectrumSieve& s, double l);
std::int64_t count_b(const SpectrumSieve& s, double l);

// Ascending B-values n <= l^2; sqrt(n) are the wave generators.
std::vector<std::int64_t> b_values(const SpectrumSieve& s, double l);

void dump_sieve(const SpectrumSieve& s, std::ostream& out);
SpectrumSieve load_sieve(std::istream& in);
void dump_sieve_file(const SpectrumSieve& s, const std::string& path);
SpectrumSieve load_sieve_file(const std::string& path);

}  // namespace geowaves::spectra
