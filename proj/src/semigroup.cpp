#include "geowaves/semigroup.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "geowaves/errors.hpp"

namespace geowaves::semigroup {

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite((std::size_t)n + 1, false);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[(std::size_t)p]) continue;
        primes.push_back(p);
        for (std::int64_t m = p * p; m <= n; m += p) composite[(std::size_t)m] = true;
    }
    return primes;
}

EulerProductResult landau_ramanujan(lattice::LatticeKind kind, std::int64_t prime_limit) {
    if (prime_limit < 3)
        throw PreconditionError("landau_ramanujan: prime_limit must be >= 3");
    const bool square = kind == lattice::LatticeKind::Square;
    const std::int64_t residue = square ? 3 : 2;
    const std::int64_t mod = square ? 4 : 3;
    double product = 1.0;
    for (std::int64_t p : primes_up_to(prime_limit)) {
        if (p % mod != residue) continue;
        const double p2 = (double)p * (double)p;
        product *= p2 / (p2 - 1.0);
    }
    const double prefactor = square ? 0.5 : 0.5 / std::numbers::sqrt3;
    EulerProductResult r;
    r.value = std::sqrt(prefactor * product);
    r.prime_limit = prime_limit;
    r.tail_bound = std::expm1(0.5 / (double)prime_limit);
    return r;
}

SeriesResult zeta_series(double s, double tolerance) {
    if (!(s > 1.0))
        throw PreconditionError("zeta_series: s must exceed 1");
    if (!(tolerance > 0.0))
        throw PreconditionError("zeta_series: tolerance must be positive");

    long double sum = 0.0L;  // extended precision keeps accumulation error tiny
    std::int64_t n = 0;
    std::int64_t target = 16;
    for (;;) {
        while (n < target) {
            ++n;
            sum += powl((long double)n, (long double)-s);
        }
        // integral bracket for the tail: [(N+1)^{1-s}, N^{1-s}] / (s-1)
        const double hi = std::pow((double)n, 1.0 - s) / (s - 1.0);
        const double lo = std::pow((double)n + 1.0, 1.0 - s) / (s - 1.0);
        const double half_width = 0.5 * (hi - lo);
        if (half_width <= 0.5 * tolerance || target > (std::int64_t)1 << 40) {
            const double value = (double)(sum + 0.5L * (long double)(hi + lo));
            // truncation bias plus an allowance for accumulated rounding
            const double rounding =
                value * ((double)n * 5.5e-20 + 2.3e-16);
            return {value, half_width + rounding, n};
        }
        target *= 2;
    }
}

double zeta(double s, double tolerance) { return zeta_series(s, tolerance).value; }

double c_g(const SemigroupParams& p) {
    if (!(p.C > 0.0))
        throw PreconditionError("c_g: C must be positive");
    const double k = p.kappa;
    if (!(k > 0.0) || std::fabs(k - std::round(k)) > 1e-9)
        throw PreconditionError(
            "c_g: kappa must be a positive integer (Gamma is evaluated as a factorial)");
    const std::int64_t ki = (std::int64_t)std::llround(k);
    double gamma_k1 = 1.0;  // Gamma(kappa + 1) = kappa!
    for (std::int64_t i = 2; i <= ki; ++i) gamma_k1 *= (double)i;

    const double z = zeta(k + 1.0, 1e-14);
    return (1.0 / k) * std::pow(k + 1.0, (k - p.nu + 1.0) / (k + 1.0)) *
           std::pow(k * p.C * gamma_k1 * z, 1.0 / (k + 1.0));
}

double c_g_quadratic(double C) {
    const double z3 = zeta(3.0, 1e-14);
    return 0.5 * std::pow(3.0, 7.0 / 6.0) * std::cbrt(4.0 * C * z3);
}

double c_g_radical(double gamma) {
    const double z3 = zeta(3.0, 1e-14);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return std::sqrt(27.0) / std::cbrt(2.0) * std::cbrt(z3 * gamma / pi2);
}

CountModel count_model(double x, const SemigroupParams& p) {
    if (!(x > 1.0))
        throw PreconditionError("count_model: x must exceed 1");
    const double cg = c_g(p);
    const double k = p.kappa;
    const double exponent =
        cg * std::pow(x, k / (k + 1.0)) * std::pow(std::log(x), p.nu / (k + 1.0));
    return {exponent, std::exp(exponent)};
}

}  // namespace geowaves::semigroup
