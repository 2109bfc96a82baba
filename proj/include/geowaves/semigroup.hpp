#pragma once
// Analytic constants for the arithmetical-semigroup counting model.
//
// The number of distinct geodesic lengths <= l follows a Landau-Ramanujan
// law  gamma * l^2 / (2 sqrt(ln l))  with
//   gamma_square     = sqrt( 1/2          * prod_{p = 3 mod 4} p^2/(p^2-1) )
//   gamma_triangular = sqrt( 1/(2 sqrt 3) * prod_{p = 2 mod 3} p^2/(p^2-1) )
// and the number of wave arrival times <= t (multisets of lengths) obeys
//   N(t) = exp{ [c_G + o(1)] * t^{kappa/(kappa+1)} * (ln t)^{nu/(kappa+1)} }
// where, for a generator count pi(x) ~ C x^kappa (ln x)^nu,
//   c_G = kappa^-1 (kappa+1)^{(kappa-nu+1)/(kappa+1)}
//         * [kappa C Gamma(kappa+1) zeta(kappa+1)]^{1/(kappa+1)}.
// Every constant is returned together with a rigorous truncation bound.

#include <cstdint>
#include <vector>

#include "geowaves/lattice.hpp"

namespace geowaves::semigroup {

struct EulerProductResult {
    double value;
    std::int64_t prime_limit;
    double tail_bound;  // relative: true value <= value * (1 + tail_bound)
};

struct SeriesResult {
    double value;
    double error_bound;  // |value - true| <= error_bound
    std::int64_t terms;
};

// Generator-count parameters: pi(x) ~ C x^kappa (ln x)^nu.
struct SemigroupParams {
    double C;
    double kappa;
    double nu;
};

struct CountModel {
    double exponent;  // c_G * x^{kappa/(kappa+1)} * (ln x)^{nu/(kappa+1)}
    double value;     // exp(exponent); +inf when the exponent overflows
};

std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Partial Euler product up to prime_limit (>= 3).  The factors all exceed 1,
// so the partial value increases monotonically to the true constant and
//   sum_{p > L} ln(p^2/(p^2-1)) <= sum_{n > L} 1/(n^2-1) < 1/L
// gives the relative tail bound exp(1/(2L)) - 1 on the square root.
EulerProductResult landau_ramanujan(lattice::LatticeKind kind, std::int64_t prime_limit);

// Direct series for zeta(s), s > 1.  The tail after N terms is bracketed by
// integral comparison; the midpoint of the bracket is added, which leaves an
// error below the bracket half-width (< N^-s).
SeriesResult zeta_series(double s, double tolerance);
double zeta(double s, double tolerance);

// c_G by the general formula.  kappa must be a (near-)integer: Gamma(kappa+1)
// is evaluated as a factorial, anything else is outside this model's scope.
double c_g(const SemigroupParams& p);

// The kappa = 2, nu = -1/2 specialization: (3^{7/6}/2) * (4 C zeta(3))^{1/3}.
double c_g_quadratic(double C);

// Same constant, radical form in the Landau-Ramanujan constant itself:
// sqrt(27)/cbrt(2) * cbrt(zeta(3) * gamma / pi^2)   (uses C = 3 gamma / pi^2).
double c_g_radical(double gamma);

// exp{ c_G x^{kappa/(kappa+1)} (ln x)^{nu/(kappa+1)} } for x > 1.
CountModel count_model(double x, const SemigroupParams& p);

}  // namespace geowaves::semigroup
