#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace acx {

// Location of the dominant singularity of a witness-tree generating
// function.  tau is the root of the characteristic equation x*phi'(x) =
// phi(x) inside the stated bracket and rho = phi'(tau) is the growth rate
// of the coefficient sequence: rho < 1 means the probability that a run
// survives n phases decays geometrically in n.
struct AsymptoticsResult {
    long long delta = 0;
    std::optional<double> alpha;  // set for vertex colorings only
    double q = 0.0;               // per-node weight base
    double tau = 0.0;             // characteristic root
    double rho = 0.0;             // growth rate phi'(tau)
    double residual = 0.0;        // |characteristic(tau)| at the returned root
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// Edge-coloring rate with the guaranteed palette of 2*delta - 1 colors.
// Here q = (delta - 1) / (2*delta - 1), the characteristic equation is the
// cubic q^2 x^3 + q^2 x^2 - (3 + q^2) x + 1 - q^2 = 0 on (0, 1/q - 1), and
// rho = (1 - 3 tau)^2 / (2 tau^2 (1 - tau)).  Checks tau in
// (sqrt(5) - 2, 4/13) and rho < 1, which hold for every delta >= 2; a
// violation throws BoundViolatedError.
AsymptoticsResult edge_rate(long long delta);

// Vertex-coloring rate with a palette of ceil(alpha * delta^{4/3}) +
// delta + 1 colors.  phi(x) = (1+x)^4 / (delta^{1/3} alpha^4) +
// (1+x)^2 / (8 alpha^3); the characteristic root is bracketed in (0, 1)
// and rho = phi'(tau).  rho may be above or below 1 depending on alpha
// and delta, so no range check is made.  The q field holds
// 1 / (alpha * delta^{4/3}).
AsymptoticsResult vertex_rate(long long delta, double alpha);

// Coefficients R_0..R_N of a witness-tree generating function, stored in
// log space so that large orders do not overflow.  R_0 = 1 by convention
// (the empty tree); all coefficients are positive.
class SeriesCoeffs {
public:
    explicit SeriesCoeffs(std::vector<double> log_coeff);

    int order() const { return static_cast<int>(log_.size()) - 1; }
    double log_coeff(int n) const;
    double coeff(int n) const;  // exp(log_coeff(n)); may overflow to +inf
    double ratio(int n) const;  // R_n / R_{n-1}, defined for 1 <= n <= order()

private:
    std::vector<double> log_;
};

// Coefficients of the edge witness-tree series: R_n sums, over trees with
// n nodes whose nodes carry 2k-cycles (k >= 3), the weights
// q^{2k-2} per node.  Satisfies R(z) = z * q^4 A^4 / (1 - q^2 A^2) with
// A = 1 + R, evaluated by a progressive O(order^2) convolution.
SeriesCoeffs edge_series(long long delta, int order);

// Vertex analogue: nodes carry either a 4-cycle (weight 1 / (8 alpha^3),
// two child slots) or a 5-path (weight 1 / (delta^{1/3} alpha^4), four
// child slots), giving R(z) = z * (c2 A^2 + c4 A^4) with A = 1 + R.
SeriesCoeffs vertex_series(long long delta, double alpha, int order);

}  // namespace acx
