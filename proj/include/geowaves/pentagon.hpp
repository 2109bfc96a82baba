#pragma once
// Exact arithmetic for pentagonal unfoldings of the dodecahedron.
//
// Unfolded vertex positions live in the ring Z[zeta], zeta = exp(2*pi*i/5),
// stored on the basis 1, zeta, zeta^2, zeta^3 with the reduction
// zeta^4 = -1 - zeta - zeta^2 - zeta^3.  Squared lengths of ring vectors are
// exact elements a + b*phi of Z[phi] (phi the golden ratio), compared by
// integer sign arithmetic, never by floating point.
//
// Directions fall into ten 36-degree cones delimited by the perpendiculars
// of the five edge directions zeta^k; within cone j (angles in
// (36j - 18, 36j + 18] degrees) the dot products against sigma_k zeta^k are
// all non-negative for a fixed sign pattern sigma.  The oriented basis
// f_k = sigma_k zeta^k supports the non-negative decomposition of any
// segment that crosses a strip of unfolded pentagons.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace geowaves::pentagon {

// a + b*phi, phi = (1 + sqrt 5)/2.  All comparisons are exact.
struct QuadReal {
    std::int64_t a = 0;
    std::int64_t b = 0;

    double to_double() const;
    int sign() const;  // of the real value

    QuadReal operator+(const QuadReal& o) const { return {a + o.a, b + o.b}; }
    QuadReal operator-(const QuadReal& o) const { return {a - o.a, b - o.b}; }
    QuadReal operator-() const { return {-a, -b}; }
    QuadReal operator*(const QuadReal& o) const;  // uses phi^2 = phi + 1
    QuadReal operator*(std::int64_t k) const { return {a * k, b * k}; }

    bool operator==(const QuadReal&) const = default;
    bool operator<(const QuadReal& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadReal& o) const { return (*this - o).sign() <= 0; }
};

// Element a0 + a1 zeta + a2 zeta^2 + a3 zeta^3 of Z[zeta].
struct CycloInt {
    std::array<std::int64_t, 4> a{0, 0, 0, 0};

    static CycloInt zeta_pow(int k);  // zeta^k, any integer k

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator-() const;
    CycloInt operator*(const CycloInt& o) const;  // full ring product
    CycloInt operator*(std::int64_t k) const;
    bool operator==(const CycloInt&) const = default;
    bool operator<(const CycloInt& o) const { return a < o.a; }  // lexicographic, for maps

    bool is_zero() const { return a == std::array<std::int64_t, 4>{0, 0, 0, 0}; }
    CycloInt conj() const;  // complex conjugation, zeta -> zeta^4
    bool is_real() const;
    QuadReal to_quadreal() const;  // requires is_real()

    std::complex<double> embed() const;
};

// Twice the Euclidean dot product <u, v> = Re(u * conj(v)); exact.
QuadReal dot2(const CycloInt& u, const CycloInt& v);

// Exact squared length v * conj(v).
QuadReal norm2_exact(const CycloInt& v);

struct SignCone {
    int index = 0;  // 0..9; cone j covers direction angles (36j-18, 36j+18] deg
};

// Sign pattern sigma_k = sign cos(36j - 72k degrees); never zero.
std::array<int, 5> sign_pattern(SignCone c);

// f_k = sigma_k * zeta^k.
std::array<CycloInt, 5> oriented_basis(SignCone c);

// Exact membership with the half-open boundary rule: a direction
// perpendicular to an edge belongs to the cone it closes from below
// (each cone keeps its upper boundary ray), so the ten cones partition
// all directions and rotation by 36 degrees maps cone j onto cone j+1.
bool cone_contains(SignCone c, const CycloInt& v);

// The cone of a non-zero vector.
SignCone cone_of(const CycloInt& v);

// epsilon = (min_k <f_k, v0>)^2 / <v0, v0>, requiring every <f_k, v0> > 0;
// then <v, v> >= epsilon * sum n_k^2 for every v = sum n_k f_k, n_k >= 0.
double epsilon_bound(const CycloInt& v0, SignCone c);

// Visit every v = sum n_k f_k with n_k >= 0, v != 0, norm2(v) <= l^2, and v
// inside the cone.  `budget` caps the number of candidate tuples scanned.
void for_each_cone_vector(
    double l, SignCone c, std::uint64_t budget,
    const std::function<void(const std::array<std::int64_t, 5>&, const CycloInt&,
                             const QuadReal&)>& fn);

// Distinct exact squared lengths in ascending order.  With threads > 1 the
// outermost coefficient range is partitioned across workers and the exact
// per-worker norm sets are merged afterwards, so the result is identical to
// the single-threaded scan.
std::vector<QuadReal> enumerate_lengths(double l, SignCone c, std::uint64_t budget,
                                        int threads = 1);

// Constant for the distinct-length count bound count(l) < gamma * l^5,
// calibrated once at l = 4 as gamma = 8 * count(4) / 4^5 and then held fixed.
// The margin factor 8 makes the fixed constant dominate the small-l end of
// the range, where count(l) / l^5 is largest (the ratio at l = 2 is exactly
// five times the ratio at l = 4), while staying well below the volumetric
// constant from the epsilon bound.
double length_bound_gamma(std::uint64_t budget, int threads = 1);

// Dodecahedron face graph: faces()[f][j] is the face glued across edge j of
// face f; edge j of a placed pentagon runs from vertex j to vertex j+1 mod 5.
// Neighbor lists are ordered consistently with an outward orientation.
const std::array<std::array<int, 5>, 12>& dodecahedron_faces();

struct PentagonPlacement {
    int face;
    std::array<CycloInt, 5> vertices;  // counterclockwise; slot j matches edge j
};

struct PentagonStrip {
    std::vector<int> faces;
    std::vector<PentagonPlacement> pentagons;
};

// Unfold the face path into the plane.  The first pentagon has vertices
// 0, 1, 1+zeta, 1+zeta+zeta^2, 1+zeta+zeta^2+zeta^3; each later one is the
// mirror image of its predecessor across the shared edge (exact ring map
// z -> p + u^2 * conj(z - p)).  Consecutive faces must be adjacent; a path
// may revisit faces.
PentagonStrip build_strip(const std::vector<int>& face_path);

struct VertexRef {
    int pentagon;  // index into strip.pentagons
    int slot;      // 0..4
};

enum class DecomposeStatus { Ok, NotCrossing };

struct Decomposition {
    DecomposeStatus status;
    SignCone cone;                            // cone of v = to - from
    std::array<std::int64_t, 5> coefficients; // v = sum coefficients[k] * f_k
    CycloInt v;
};

// True when the straight segment between the two strip vertices crosses the
// chain: some consecutive window of pentagons carries it, the endpoints are
// vertices of the window's first and last pentagon, and each pentagon in
// between extends the covered parameter range without a gap (floating-point
// clip with a small slack; both chain directions are tried).  Segments that
// merely jump between overlapping placements of a self-intersecting strip do
// not cross.
bool strip_covers_segment(const PentagonStrip& strip, VertexRef from, VertexRef to);

// Non-negative decomposition of to - from over the oriented basis of its
// cone, built from a breadth-first walk along strip edges whose projections
// on v never decrease.  Returns NotCrossing when the segment leaves the
// strip; throws PreconditionError when from == to.
Decomposition monotone_decompose(const PentagonStrip& strip, VertexRef from, VertexRef to);

struct BoundModel {
    double exponent;  // c * t^{5/6}
    double value;     // exp(exponent)
};

// Upper-bound model exp(c * t^{5/6}) for the dodecahedron wave count; c is
// supplied by the caller, never asserted here.
BoundModel dodec_bound_model(double t, double c);

}  // namespace geowaves::pentagon
