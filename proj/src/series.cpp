#include "mixspec/series.hpp"

#include <cmath>

#include "mixspec/errors.hpp"

namespace mixspec {

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw InvalidInput(std::string(op) + ": truncation order mismatch");
    }
}
}  // namespace

PowerSeries PowerSeries::constant(double value, int order) {
    if (order < 0) throw InvalidInput("PowerSeries: negative order");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return PowerSeries(std::move(c));
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "ps_add");
    PowerSeries out = a;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
    return out;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "ps_sub");
    PowerSeries out = a;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] -= b.coeffs[k];
    return out;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "ps_mul");
    const int n = a.order();
    PowerSeries out = PowerSeries::constant(0.0, n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs[i] == 0.0) continue;
        for (int j = 0; i + j <= n; ++j) {
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

PowerSeries ps_scale(const PowerSeries& a, double s) {
    PowerSeries out = a;
    for (double& c : out.coeffs) c *= s;
    return out;
}

PowerSeries ps_pow(const PowerSeries& a, int s) {
    if (s < 0) throw InvalidInput("ps_pow: negative exponent");
    PowerSeries result = PowerSeries::constant(1.0, a.order());
    PowerSeries base = a;
    int e = s;
    while (e > 0) {
        if (e & 1) result = ps_mul(result, base);
        e >>= 1;
        if (e > 0) base = ps_mul(base, base);
    }
    return result;
}

PowerSeries ps_recip(const PowerSeries& a) {
    if (a.coeffs.empty() || a.coeffs[0] == 0.0) {
        throw SingularSeries("ps_recip: zero constant term");
    }
    const int n = a.order();
    PowerSeries out = PowerSeries::constant(0.0, n);
    out.coeffs[0] = 1.0 / a.coeffs[0];
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += a.coeffs[j] * out.coeffs[k - j];
        out.coeffs[k] = -acc / a.coeffs[0];
    }
    return out;
}

PowerSeries P_series(const MixingDistribution& G, double c, int order) {
    if (order < 1) throw InvalidInput("P_series: order must be >= 1");
    // P(z) = -1 - (1/c) sum_{k>=1} gamma_k (-c z)^k, i.e. the coefficient of
    // z^k is -(-1)^k c^{k-1} gamma_k.
    PowerSeries out = PowerSeries::constant(-1.0, order);
    double cpow = 1.0;  // c^{k-1} built incrementally
    double sign = -1.0;  // -(-1)^k
    for (int k = 1; k <= order; ++k) {
        out.coeffs[k] = -sign * cpow * G.moment(k);
        cpow *= c;
        sign = -sign;
    }
    return out;
}

std::pair<PowerSeries, PowerSeries> QR_series(const MixingDistribution& G, double c, int order) {
    if (order < 1) throw InvalidInput("QR_series: order must be >= 1");
    PowerSeries q = PowerSeries::constant(0.0, order);
    PowerSeries r = PowerSeries::constant(1.0, order);
    // (1+x)^{-3} = sum_k C(k+2,2) (-x)^k and (1+x)^{-2} = sum_k (k+1) (-x)^k
    // with x = c t z, integrated termwise against G.
    for (int k = 0; k <= order; ++k) {
        double mck = std::pow(-c, k);
        q.coeffs[k] = 0.5 * (k + 1) * (k + 2) * mck * G.moment(k + 2);
        if (k >= 2) {
            // z^2 t^2 * (k-2 binomial term): coefficient of z^k collects
            // -(k-1) (-c)^{k-2} c gamma_k.
            r.coeffs[k] = -c * (k - 1) * std::pow(-c, k - 2) * G.moment(k);
        }
    }
    return {std::move(q), std::move(r)};
}

double u_coeff(const MixingDistribution& G, double c, int s, int t) {
    if (s < 0 || t < 0) throw InvalidInput("u_coeff: negative index");
    if (s == 0) return t == 0 ? 1.0 : 0.0;
    int order = std::max(t, 1);
    PowerSeries p = P_series(G, c, order);
    return ps_pow(p, s)[t];
}

PowerSeries inv_sq_series(double t, double c, int order) {
    if (order < 0) throw InvalidInput("inv_sq_series: negative order");
    PowerSeries out = PowerSeries::constant(0.0, order);
    double x = 1.0;  // (-c t)^k
    for (int k = 0; k <= order; ++k) {
        out.coeffs[k] = (k + 1) * x;
        x *= -c * t;
    }
    return out;
}

}  // namespace mixspec
