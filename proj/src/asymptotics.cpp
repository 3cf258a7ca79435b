#include "acx/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "acx/errors.hpp"

namespace acx {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Bisect f on [lo, hi] assuming f(lo) < 0 < f(hi) or f(lo) > 0 > f(hi).
// Returns the midpoint of the final interval.
double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw NoRootInBracketError("characteristic equation has no sign change in the bracket");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double log_add(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == kNegInf) return a;
    return a + std::log1p(std::exp(b - a));
}

// n-th coefficient of the product of two series given by log-coefficients.
double log_conv_at(const std::vector<double>& la, const std::vector<double>& lb, int n) {
    double acc = kNegInf;
    for (int i = 0; i <= n; ++i) acc = log_add(acc, la[i] + lb[n - i]);
    return acc;
}

}  // namespace

AsymptoticsResult edge_rate(long long delta) {
    if (delta < 2) throw InvalidParamsError("edge_rate requires max degree >= 2");
    const double q = static_cast<double>(delta - 1) / static_cast<double>(2 * delta - 1);
    const double q2 = q * q;
    const auto charpoly = [&](double x) {
        return q2 * x * x * x + q2 * x * x - (3.0 + q2) * x + 1.0 - q2;
    };

    AsymptoticsResult r;
    r.delta = delta;
    r.q = q;
    r.bracket_lo = 0.0;
    r.bracket_hi = 1.0 / q - 1.0;
    r.tau = bisect_root(charpoly, r.bracket_lo, r.bracket_hi);
    r.residual = std::abs(charpoly(r.tau));
    const double t = r.tau;
    r.rho = (1.0 - 3.0 * t) * (1.0 - 3.0 * t) / (2.0 * t * t * (1.0 - t));

    const double lo = std::sqrt(5.0) - 2.0;
    const double hi = 4.0 / 13.0;
    if (!(r.tau > lo && r.tau < hi)) {
        throw BoundViolatedError("edge characteristic root left (sqrt(5)-2, 4/13) for delta=" +
                                 std::to_string(delta));
    }
    if (!(r.rho < 1.0)) {
        throw BoundViolatedError("edge growth rate reached 1 for delta=" + std::to_string(delta));
    }
    return r;
}

AsymptoticsResult vertex_rate(long long delta, double alpha) {
    if (delta < 2) throw InvalidParamsError("vertex_rate requires max degree >= 2");
    if (!(alpha > 0.0)) throw InvalidParamsError("vertex_rate requires alpha > 0");
    const double d = static_cast<double>(delta);
    const double c4 = 1.0 / (std::cbrt(d) * alpha * alpha * alpha * alpha);
    const double c2 = 1.0 / (8.0 * alpha * alpha * alpha);
    // x*phi'(x) - phi(x) factored; strictly increasing on [0, 1] with
    // g(0) = -(c2 + c4) and g(1) = 16 c4, so the bracket always works.
    const auto g = [&](double x) {
        const double s = 1.0 + x;
        return c4 * s * s * s * (3.0 * x - 1.0) + c2 * s * (x - 1.0);
    };

    AsymptoticsResult r;
    r.delta = delta;
    r.alpha = alpha;
    r.q = 1.0 / (alpha * std::pow(d, 4.0 / 3.0));
    r.bracket_lo = 0.0;
    r.bracket_hi = 1.0;
    r.tau = bisect_root(g, r.bracket_lo, r.bracket_hi);
    r.residual = std::abs(g(r.tau));
    const double s = 1.0 + r.tau;
    r.rho = 4.0 * c4 * s * s * s + 2.0 * c2 * s;
    return r;
}

SeriesCoeffs::SeriesCoeffs(std::vector<double> log_coeff) : log_(std::move(log_coeff)) {
    if (log_.empty()) throw InvalidParamsError("series needs at least the order-0 coefficient");
}

double SeriesCoeffs::log_coeff(int n) const {
    if (n < 0 || n > order()) throw InvalidParamsError("series coefficient index out of range");
    return log_[static_cast<std::size_t>(n)];
}

double SeriesCoeffs::coeff(int n) const { return std::exp(log_coeff(n)); }

double SeriesCoeffs::ratio(int n) const {
    if (n < 1 || n > order()) throw InvalidParamsError("series ratio index out of range");
    return std::exp(log_[static_cast<std::size_t>(n)] - log_[static_cast<std::size_t>(n) - 1]);
}

SeriesCoeffs edge_series(long long delta, int order) {
    if (delta < 2) throw InvalidParamsError("edge_series requires max degree >= 2");
    if (order < 1) throw InvalidParamsError("edge_series requires order >= 1");
    const double q = static_cast<double>(delta - 1) / static_cast<double>(2 * delta - 1);
    const double lq2 = 2.0 * std::log(q);
    const double lq4 = 4.0 * std::log(q);
    const double lden = std::log(1.0 - q * q);

    const std::size_t n = static_cast<std::size_t>(order);
    // A = 1 + R; S = R / z satisfies S (1 - q^2 A^2) = q^4 A^4 once the
    // j = m term of the convolution with A^2 (whose constant term is 1)
    // is moved to the left-hand side.
    std::vector<double> la(n + 1, kNegInf), la2(n + 1, kNegInf), la4(n + 1, kNegInf);
    std::vector<double> ls(n, kNegInf);
    la[0] = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        la2[m] = log_conv_at(la, la, static_cast<int>(m));
        la4[m] = log_conv_at(la2, la2, static_cast<int>(m));
        double acc = lq4 + la4[m];
        for (std::size_t j = 0; j < m; ++j) acc = log_add(acc, lq2 + la2[m - j] + ls[j]);
        ls[m] = acc - lden;
        la[m + 1] = ls[m];  // R_{m+1} = S_m
    }

    std::vector<double> lr(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) lr[i] = ls[i - 1];
    return SeriesCoeffs(std::move(lr));
}

SeriesCoeffs vertex_series(long long delta, double alpha, int order) {
    if (delta < 2) throw InvalidParamsError("vertex_series requires max degree >= 2");
    if (!(alpha > 0.0)) throw InvalidParamsError("vertex_series requires alpha > 0");
    if (order < 1) throw InvalidParamsError("vertex_series requires order >= 1");
    const double d = static_cast<double>(delta);
    const double lc4 = -(std::log(d) / 3.0 + 4.0 * std::log(alpha));
    const double lc2 = -(std::log(8.0) + 3.0 * std::log(alpha));

    const std::size_t n = static_cast<std::size_t>(order);
    std::vector<double> la(n + 1, kNegInf), la2(n + 1, kNegInf), la4(n + 1, kNegInf);
    la[0] = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        la2[m] = log_conv_at(la, la, static_cast<int>(m));
        la4[m] = log_conv_at(la2, la2, static_cast<int>(m));
        la[m + 1] = log_add(lc2 + la2[m], lc4 + la4[m]);  // R_{m+1}
    }

    std::vector<double> lr(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) lr[i] = la[i];
    return SeriesCoeffs(std::move(lr));
}

}  // namespace acx
