#include "geowaves/pentagon.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <numbers>
#include <queue>
#include <set>

#include "geowaves/errors.hpp"

namespace geowaves::pentagon {

namespace {

int sign_of(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

double QuadReal::to_double() const {
    return static_cast<double>(a) + static_cast<double>(b) * std::numbers::phi;
}

// Multiply by the Galois conjugate a + b(1-phi): the product is the integer
// a^2 + ab - b^2, whose sign combined with the sign of the trace 2a + b (when
// the conjugates agree) or of b (when they differ, since the difference is
// b*sqrt5) decides the sign of a + b*phi without any floating point.
int QuadReal::sign() const {
    if (a == 0 && b == 0) return 0;
    __int128 n = static_cast<__int128>(a) * a + static_cast<__int128>(a) * b -
                 static_cast<__int128>(b) * b;
    if (n > 0) return sign_of(2 * static_cast<__int128>(a) + b);
    if (n < 0) return sign_of(b);
    return 0;  // unreachable for integer a, b not both zero
}

QuadReal QuadReal::operator*(const QuadReal& o) const {
    return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b};
}

CycloInt CycloInt::zeta_pow(int k) {
    int m = ((k % 5) + 5) % 5;
    if (m == 4) return CycloInt{{-1, -1, -1, -1}};
    CycloInt r;
    r.a[m] = 1;
    return r;
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
    CycloInt r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
    CycloInt r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

CycloInt CycloInt::operator-() const {
    CycloInt r;
    for (int i = 0; i < 4; ++i) r.a[i] = -a[i];
    return r;
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
    std::int64_t c[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i + j] += a[i] * o.a[j];
    // zeta^4 = -(1 + zeta + zeta^2 + zeta^3), zeta^5 = 1, zeta^6 = zeta
    CycloInt r;
    for (int i = 0; i < 4; ++i) r.a[i] = c[i] - c[4];
    r.a[0] += c[5];
    r.a[1] += c[6];
    return r;
}

CycloInt CycloInt::operator*(std::int64_t k) const {
    CycloInt r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] * k;
    return r;
}

CycloInt CycloInt::conj() const {
    return CycloInt{{a[0] - a[1], -a[1], a[3] - a[1], a[2] - a[1]}};
}

bool CycloInt::is_real() const { return a[1] == 0 && a[2] == a[3]; }

QuadReal CycloInt::to_quadreal() const {
    if (!is_real())
        throw PreconditionError("CycloInt::to_quadreal: element is not real");
    // zeta^2 + zeta^3 = -phi, so a0 + a2 (zeta^2 + zeta^3) = a0 - a2 phi.
    return {a[0], -a[2]};
}

std::complex<double> CycloInt::embed() const {
    std::complex<double> z = 0;
    for (int k = 0; k < 4; ++k) {
        double ang = 2.0 * std::numbers::pi * k / 5.0;
        z += static_cast<double>(a[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

QuadReal dot2(const CycloInt& u, const CycloInt& v) {
    return (u * v.conj() + v * u.conj()).to_quadreal();
}

QuadReal norm2_exact(const CycloInt& v) { return (v * v.conj()).to_quadreal(); }

std::array<int, 5> sign_pattern(SignCone c) {
    std::array<int, 5> s;
    for (int k = 0; k < 5; ++k) {
        // sign of cos(36(j - 2k) degrees); never zero at multiples of 36.
        int m = ((c.index - 2 * k) % 10 + 10) % 10;
        s[k] = (m <= 2 || m >= 8) ? 1 : -1;
    }
    return s;
}

std::array<CycloInt, 5> oriented_basis(SignCone c) {
    auto s = sign_pattern(c);
    std::array<CycloInt, 5> f;
    for (int k = 0; k < 5; ++k) {
        f[k] = CycloInt::zeta_pow(k);
        if (s[k] < 0) f[k] = -f[k];
    }
    return f;
}

bool cone_contains(SignCone c, const CycloInt& v) {
    if (v.is_zero()) return false;
    auto sig = sign_pattern(c);
    auto f = oriented_basis(c);
    for (int k = 0; k < 5; ++k) {
        int s = dot2(v, f[k]).sign();
        if (s < 0) return false;
        if (s == 0) {
            // v is perpendicular to f_k, i.e. on a cone boundary.  Every cone
            // keeps exactly its counterclockwise boundary ray (the one where
            // f_k points 90 degrees clockwise of the ray, at direction angle
            // 36(j - 2) degrees).  This tie rule commutes with the dihedral
            // symmetries of the lattice, which is what makes the ten per-cone
            // length sets identical; assigning every boundary to the smaller
            // cone index instead would leave cone 9 without either of its
            // boundary rays and its length set strictly poorer.
            int dir = (2 * k + (sig[k] < 0 ? 5 : 0)) % 10;
            if (dir != ((c.index - 2) % 10 + 10) % 10) return false;
        }
    }
    return true;
}

SignCone cone_of(const CycloInt& v) {
    if (v.is_zero()) throw PreconditionError("cone_of: zero vector has no direction");
    for (int j = 0; j < 10; ++j)
        if (cone_contains(SignCone{j}, v)) return SignCone{j};
    throw PreconditionError("cone_of: no cone matched");  // unreachable
}

double epsilon_bound(const CycloInt& v0, SignCone c) {
    auto f = oriented_basis(c);
    QuadReal min2{0, 0};
    bool first = true;
    for (int k = 0; k < 5; ++k) {
        QuadReal d = dot2(v0, f[k]);
        if (d.sign() <= 0)
            throw PreconditionError(
                "epsilon_bound: v0 must have positive dot product with every basis vector");
        if (first || d < min2) {
            min2 = d;
            first = false;
        }
    }
    double md = min2.to_double() / 2.0;
    return md * md / norm2_exact(v0).to_double();
}

namespace {

// QuadReal <= double bound, safe because values a + b*phi with b != 0 are
// at least 1/(sqrt5 |b|) away from any rational and b == 0 compares as a
// plain integer.
bool quad_le(const QuadReal& q, double bound) {
    if (q.b == 0) return static_cast<double>(q.a) <= bound;
    return q.to_double() <= bound;
}

}  // namespace

namespace {

// v0 = sum f_k satisfies <f_k, v0> >= 1, so <v, v0> >= sum n_k and |v| <= l
// forces sum n_k <= l |v0| = l sqrt(4 + 4 phi).
std::int64_t simplex_total(double l) {
    return static_cast<std::int64_t>(
               std::floor(l * std::sqrt(4.0 + 4.0 * std::numbers::phi))) +
           1;
}

// Walk every coefficient tuple with sum n_k <= total whose first coordinate
// lies in {first, first + stride, ...}, with one ring addition per step.
// leaf(n, v) sees every tuple, including v = 0.
template <typename Leaf>
void walk_tuples(const std::array<CycloInt, 5>& f, std::int64_t total,
                 std::int64_t first, std::int64_t stride, Leaf&& leaf) {
    std::array<std::int64_t, 5> n{0, 0, 0, 0, 0};
    for (n[0] = first; n[0] <= total; n[0] += stride) {
        CycloInt v1 = f[0] * n[0];
        for (n[1] = 0; n[0] + n[1] <= total; ++n[1], v1 = v1 + f[1]) {
            CycloInt v2 = v1;
            for (n[2] = 0; n[0] + n[1] + n[2] <= total; ++n[2], v2 = v2 + f[2]) {
                CycloInt v3 = v2;
                for (n[3] = 0; n[0] + n[1] + n[2] + n[3] <= total;
                     ++n[3], v3 = v3 + f[3]) {
                    CycloInt v4 = v3;
                    for (n[4] = 0; n[0] + n[1] + n[2] + n[3] + n[4] <= total;
                         ++n[4], v4 = v4 + f[4])
                        leaf(n, v4);
                }
            }
        }
    }
}

}  // namespace

void for_each_cone_vector(
    double l, SignCone c, std::uint64_t budget,
    const std::function<void(const std::array<std::int64_t, 5>&, const CycloInt&,
                             const QuadReal&)>& fn) {
    if (l < 0) throw PreconditionError("for_each_cone_vector: l must be non-negative");
    auto f = oriented_basis(c);
    double l2 = l * l;
    std::uint64_t visited = 0;
    std::uint64_t emitted = 0;
    walk_tuples(f, simplex_total(l), 0, 1,
                [&](const std::array<std::int64_t, 5>& n, const CycloInt& v) {
                    if (++visited > budget)
                        throw BudgetExceeded("for_each_cone_vector: tuple budget exhausted",
                                             visited, emitted);
                    if (v.is_zero()) return;
                    QuadReal n2 = norm2_exact(v);
                    if (!quad_le(n2, l2)) return;
                    if (!cone_contains(c, v)) return;
                    ++emitted;
                    fn(n, v, n2);
                });
}

std::vector<QuadReal> enumerate_lengths(double l, SignCone c, std::uint64_t budget,
                                        int threads) {
    if (threads < 1) throw PreconditionError("enumerate_lengths: threads must be >= 1");
    if (threads == 1) {
        std::set<QuadReal> lengths;
        for_each_cone_vector(l, c, budget,
                             [&](const std::array<std::int64_t, 5>&, const CycloInt&,
                                 const QuadReal& n2) { lengths.insert(n2); });
        return {lengths.begin(), lengths.end()};
    }

    if (l < 0) throw PreconditionError("enumerate_lengths: l must be non-negative");
    auto f = oriented_basis(c);
    std::int64_t total = simplex_total(l);
    double l2 = l * l;
    std::atomic<std::uint64_t> visited{0};

    // Partition the first coefficient round-robin; each worker deduplicates
    // into its own exact-norm set and the sets are merged at the end.
    auto scan = [&](std::int64_t start) {
        std::set<QuadReal> local;
        walk_tuples(f, total, start, threads,
                    [&](const std::array<std::int64_t, 5>&, const CycloInt& v) {
                        std::uint64_t seen =
                            visited.fetch_add(1, std::memory_order_relaxed) + 1;
                        if (seen > budget)
                            throw BudgetExceeded(
                                "enumerate_lengths: tuple budget exhausted", seen,
                                static_cast<std::uint64_t>(local.size()));
                        if (v.is_zero()) return;
                        QuadReal n2 = norm2_exact(v);
                        if (!quad_le(n2, l2)) return;
                        if (!cone_contains(c, v)) return;
                        local.insert(n2);
                    });
        return local;
    };

    std::vector<std::future<std::set<QuadReal>>> workers;
    workers.reserve(threads - 1);
    for (int w = 1; w < threads; ++w)
        workers.push_back(std::async(std::launch::async, scan, w));
    std::set<QuadReal> merged = scan(0);
    for (auto& w : workers) {
        std::set<QuadReal> part = w.get();
        merged.insert(part.begin(), part.end());
    }
    return {merged.begin(), merged.end()};
}

double length_bound_gamma(std::uint64_t budget, int threads) {
    auto fit = enumerate_lengths(4.0, SignCone{0}, budget, threads);
    return 8.0 * static_cast<double>(fit.size()) / std::pow(4.0, 5);
}

const std::array<std::array<int, 5>, 12>& dodecahedron_faces() {
    // Face 0 is the top, faces 1..5 the upper ring, 6..10 the lower ring
    // (face 5+i hangs below the edge shared by upper faces i and i+1), and
    // face 11 the bottom.  Every list walks the face's neighbors in a
    // consistent rotational order, so edge j runs from vertex j to j+1.
    static const std::array<std::array<int, 5>, 12> t = {{
        {1, 2, 3, 4, 5},     // 0: top
        {0, 5, 10, 6, 2},    // 1: upper ring
        {0, 1, 6, 7, 3},     // 2
        {0, 2, 7, 8, 4},     // 3
        {0, 3, 8, 9, 5},     // 4
        {0, 4, 9, 10, 1},    // 5
        {2, 1, 10, 11, 7},   // 6: lower ring
        {3, 2, 6, 11, 8},    // 7
        {4, 3, 7, 11, 9},    // 8
        {5, 4, 8, 11, 10},   // 9
        {1, 5, 9, 11, 6},    // 10
        {6, 10, 9, 8, 7},    // 11: bottom
    }};
    return t;
}

PentagonStrip build_strip(const std::vector<int>& face_path) {
    if (face_path.empty()) throw PreconditionError("build_strip: empty face path");
    const auto& nbr = dodecahedron_faces();
    for (int f : face_path)
        if (f < 0 || f >= 12)
            throw PreconditionError("build_strip: face index out of range");

    PentagonStrip strip;
    strip.faces = face_path;

    PentagonPlacement first;
    first.face = face_path[0];
    first.vertices[0] = CycloInt{};
    for (int s = 1; s < 5; ++s)
        first.vertices[s] = first.vertices[s - 1] + CycloInt::zeta_pow(s - 1);
    strip.pentagons.push_back(first);

    for (std::size_t p = 0; p + 1 < face_path.size(); ++p) {
        int f = face_path[p];
        int h = face_path[p + 1];
        int j = -1, ih = -1;
        for (int s = 0; s < 5; ++s) {
            if (nbr[f][s] == h) j = s;
            if (nbr[h][s] == f) ih = s;
        }
        if (j < 0 || ih < 0)
            throw PreconditionError("build_strip: consecutive faces are not adjacent");

        const auto& w = strip.pentagons.back().vertices;
        CycloInt pt = w[j];
        CycloInt q = w[(j + 1) % 5];
        CycloInt u = q - pt;   // unit edge direction +-zeta^k
        CycloInt u2 = u * u;   // = zeta^{2k}; squaring drops the sign
        auto reflect = [&](const CycloInt& z) { return pt + u2 * (z - pt).conj(); };

        PentagonPlacement next;
        next.face = h;
        next.vertices[ih] = q;
        next.vertices[(ih + 1) % 5] = pt;
        next.vertices[(ih + 2) % 5] = reflect(w[(j + 4) % 5]);
        next.vertices[(ih + 3) % 5] = reflect(w[(j + 3) % 5]);
        next.vertices[(ih + 4) % 5] = reflect(w[(j + 2) % 5]);
        strip.pentagons.push_back(next);
    }
    return strip;
}

namespace {

CycloInt vertex_at(const PentagonStrip& strip, VertexRef r) {
    if (r.pentagon < 0 || r.pentagon >= static_cast<int>(strip.pentagons.size()) ||
        r.slot < 0 || r.slot >= 5)
        throw PreconditionError("vertex reference out of range");
    return strip.pentagons[r.pentagon].vertices[r.slot];
}

double cross2(std::complex<double> a, std::complex<double> b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

}  // namespace

namespace {

struct ClipInterval {
    double lo = 0.0;
    double hi = 1.0;
    bool empty = false;
};

// Clip the segment a + t*d, t in [0, 1], against one closed pentagon.
ClipInterval clip_to_pentagon(const PentagonPlacement& pent, std::complex<double> a,
                              std::complex<double> d, double eps) {
    ClipInterval c;
    for (int s = 0; s < 5 && !c.empty; ++s) {
        std::complex<double> w0 = pent.vertices[s].embed();
        std::complex<double> w1 = pent.vertices[(s + 1) % 5].embed();
        std::complex<double> e = w1 - w0;
        // inside the ccw pentagon: cross(e, z - w0) >= 0
        double c0 = cross2(e, a - w0);
        double slope = cross2(e, d);
        if (std::abs(slope) < 1e-15) {
            if (c0 < -eps) c.empty = true;
        } else if (slope > 0) {
            c.lo = std::max(c.lo, (-eps - c0) / slope);
        } else {
            c.hi = std::min(c.hi, (-eps - c0) / slope);
        }
    }
    if (c.lo > c.hi + 1e-12) c.empty = true;
    return c;
}

}  // namespace

bool strip_covers_segment(const PentagonStrip& strip, VertexRef from, VertexRef to) {
    CycloInt ca = vertex_at(strip, from);
    CycloInt cb = vertex_at(strip, to);
    if (ca == cb) return true;
    int n = static_cast<int>(strip.pentagons.size());

    // The segment crosses the strip only if some consecutive window of the
    // chain carries it: the start point is a vertex of the window's first
    // pentagon, the end point a vertex of its last, and each pentagon in
    // between extends the covered prefix of [0, 1] without a gap.  A mere
    // union-coverage test would also accept segments that jump between
    // overlapping placements of a self-intersecting strip, and for those the
    // monotone edge-path construction can fail.  Both chain directions are
    // admissible, so the window test runs once per orientation.
    auto is_vertex_of = [&](const CycloInt& z, int i) {
        for (int s = 0; s < 5; ++s)
            if (strip.pentagons[i].vertices[s] == z) return true;
        return false;
    };
    auto crosses_forward = [&](const CycloInt& va, const CycloInt& vb) {
        std::complex<double> a = va.embed();
        std::complex<double> b = vb.embed();
        std::complex<double> d = b - a;
        const double eps = 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
        std::vector<ClipInterval> iv(n);
        for (int i = 0; i < n; ++i) iv[i] = clip_to_pentagon(strip.pentagons[i], a, d, eps);
        for (int i0 = 0; i0 < n; ++i0) {
            if (iv[i0].empty || iv[i0].lo > 1e-9 || !is_vertex_of(va, i0)) continue;
            double frontier = iv[i0].hi;
            for (int i1 = i0; i1 < n; ++i1) {
                if (i1 > i0) {
                    if (iv[i1].empty || iv[i1].lo > frontier + 1e-9) break;
                    frontier = std::max(frontier, iv[i1].hi);
                }
                if (frontier >= 1.0 - 1e-9 && is_vertex_of(vb, i1)) return true;
            }
        }
        return false;
    };
    return crosses_forward(ca, cb) || crosses_forward(cb, ca);
}

Decomposition monotone_decompose(const PentagonStrip& strip, VertexRef from, VertexRef to) {
    CycloInt a = vertex_at(strip, from);
    CycloInt b = vertex_at(strip, to);
    CycloInt v = b - a;
    if (v.is_zero())
        throw PreconditionError("monotone_decompose: endpoints coincide");

    Decomposition out;
    out.v = v;
    out.coefficients = {0, 0, 0, 0, 0};
    if (!strip_covers_segment(strip, from, to)) {
        out.status = DecomposeStatus::NotCrossing;
        out.cone = SignCone{0};
        return out;
    }
    out.cone = cone_of(v);
    auto f = oriented_basis(out.cone);

    // Vertex graph of the strip, deduplicated by exact coordinates.
    std::map<CycloInt, int> id;
    std::vector<CycloInt> pos;
    auto intern = [&](const CycloInt& z) {
        auto [it, fresh] = id.try_emplace(z, static_cast<int>(pos.size()));
        if (fresh) pos.push_back(z);
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& pent : strip.pentagons)
        for (int s = 0; s < 5; ++s)
            edges.emplace_back(intern(pent.vertices[s]),
                               intern(pent.vertices[(s + 1) % 5]));

    std::vector<std::vector<int>> adj(pos.size());
    for (auto [x, y] : edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }

    // A step u along a strip edge is admitted iff u equals one of the f_k;
    // those are exactly the unit steps whose projection on v is >= 0 (with
    // the perpendicular step oriented by the cone's sign pattern).
    auto step_index = [&](const CycloInt& u) {
        for (int k = 0; k < 5; ++k)
            if (u == f[k]) return k;
        return -1;
    };

    int src = intern(a);
    int dst = intern(b);
    std::vector<int> parent(pos.size(), -1);
    std::vector<int> via(pos.size(), -1);
    std::vector<char> seen(pos.size(), 0);
    std::queue<int> bfs;
    bfs.push(src);
    seen[src] = 1;
    while (!bfs.empty() && !seen[dst]) {
        int x = bfs.front();
        bfs.pop();
        for (int y : adj[x]) {
            if (seen[y]) continue;
            int k = step_index(pos[y] - pos[x]);
            if (k < 0) continue;
            seen[y] = 1;
            parent[y] = x;
            via[y] = k;
            bfs.push(y);
        }
    }
    if (!seen[dst]) {
        out.status = DecomposeStatus::NotCrossing;
        return out;
    }

    for (int x = dst; x != src; x = parent[x]) ++out.coefficients[via[x]];

    CycloInt check;
    for (int k = 0; k < 5; ++k) check = check + f[k] * out.coefficients[k];
    if (!(check == v))
        throw PreconditionError("monotone_decompose: internal reconstruction mismatch");
    out.status = DecomposeStatus::Ok;
    return out;
}

BoundModel dodec_bound_model(double t, double c) {
    if (t < 0) throw PreconditionError("dodec_bound_model: t must be non-negative");
    double e = c * std::pow(t, 5.0 / 6.0);
    return {e, std::exp(e)};
}

}  // namespace geowaves::pentagon
