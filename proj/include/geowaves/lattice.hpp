#pragma once
// Integer lattices behind vertex-to-vertex geodesics on Platonic solids.
//
// Unfolding the cube turns a geodesic between vertices into a straight
// segment to a point of the square lattice Z^2 (squared length x^2 + y^2);
// the tetrahedron, octahedron and icosahedron unfold onto the triangular
// lattice (squared length x^2 + xy + y^2 in lattice coordinates).  Geodesics
// that avoid other vertices correspond to irreducible vectors, i.e. coprime
// coordinates, and for each solid only an angular sector of directions is
// realized (3*pi/2 for the cube, 4*pi/3 for the triangular solids).
//
// Sector membership is decided by exact integer sign arithmetic whenever the
// boundary direction coincides with a lattice direction (all the preset
// angles do); otherwise a documented floating-point fallback is used.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace geowaves::lattice {

enum class LatticeKind { Square, Triangular };

struct LatticeVec {
    LatticeKind kind;
    std::int64_t x;
    std::int64_t y;
};

// Half-open angular sector [start, start + width), width in (0, 2*pi].
struct Sector {
    double start;
    double width;
};

// Squared Euclidean length; exact, throws std::overflow_error instead of wrapping.
std::int64_t norm(const LatticeVec& v);

// Coprime coordinates; the zero vector violates the contract.
bool is_irreducible(const LatticeVec& v);

// Euclidean embedding: Square (x, y); Triangular (x + y/2, y*sqrt(3)/2).
std::array<double, 2> embed(const LatticeVec& v);

// Point symmetries as integer 2x2 matrices {a,b,c,d} acting by
// (x, y) -> (a x + b y, c x + d y): 8 maps for Square, 12 for Triangular.
std::vector<std::array<int, 4>> symmetry_maps(LatticeKind kind);

// Primitive lattice direction within 1e-9 rad of `angle`, if any (checked up
// to coordinate size 8; covers every multiple of 45 deg on the square lattice
// and 30 deg on the triangular one).
std::optional<LatticeVec> exact_direction(LatticeKind kind, double angle);

bool sector_contains(const Sector& s, const LatticeVec& v);

// Number of irreducible vectors with 0 < norm(v) <= l^2 whose direction lies
// in the sector.  threads > 1 partitions the coordinate range; the sum is
// order-independent, so the result is deterministic either way.
std::int64_t count_irreducible_in_sector(LatticeKind kind, const Sector& s, double l,
                                         int threads = 1);

// count / l^2.
double irreducible_sector_density(LatticeKind kind, const Sector& s, double l,
                                  int threads = 1);

}  // namespace geowaves::lattice
