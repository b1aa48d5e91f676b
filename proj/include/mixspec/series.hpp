#pragma once

#include <utility>
#include <vector>

#include "mixspec/model.hpp"

namespace mixspec {

// Truncated formal power series: coeffs[k] is the coefficient of z^k,
// 0 <= k <= order(). All arithmetic stays inside the truncation order.
struct PowerSeries {
    std::vector<double> coeffs;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<double> c) : coeffs(std::move(c)) {}
    static PowerSeries constant(double value, int order);

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

// Exact truncated ring operations. Operands must share the truncation order.
PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, double s);

// a^s by repeated squaring, truncating after every multiply. a^0 = 1.
PowerSeries ps_pow(const PowerSeries& a, int s);

// Multiplicative inverse: ps_mul(a, ps_recip(a)) = 1 + O(z^{N+1}).
// Requires a nonzero constant term.
PowerSeries ps_recip(const PowerSeries& a);

// Taylor expansions about z = 0 of the three scalar functions driving the
// eigenvalue-moment fluctuation formulas, for the spherical model (c, G):
//   P(z) = -1 + Integral t z / (1 + c t z) dG(t)
//   Q(z) =      Integral t^2 / (1 + c t z)^3 dG(t)
//   R(z) = 1 - c Integral (z t)^2 / (1 + c t z)^2 dG(t)
PowerSeries P_series(const MixingDistribution& G, double c, int order);
std::pair<PowerSeries, PowerSeries> QR_series(const MixingDistribution& G, double c, int order);

// u_{s,t}: coefficient of z^t in P(z)^s. u_{0,0} = 1 and u_{0,t>0} = 0.
double u_coeff(const MixingDistribution& G, double c, int s, int t);

// Expansion of (1 + c t z)^{-2}; per-atom factor in the kurtosis term of the
// fluctuation covariance.
PowerSeries inv_sq_series(double t, double c, int order);

}  // namespace mixspec
