#pragma once

#include <complex>
#include <string>
#include <vector>

namespace mixspec {

// Standard normal CDF / survival function / quantile.
// cdf and sf are computed through erfc so both tails keep full relative
// accuracy; quantile uses Acklam's rational approximation polished by one
// Halley step (|relative error| < 1e-13 over (0,1)).
double normal_cdf(double x);
double normal_sf(double x);
double normal_quantile(double prob);

// Regularized incomplete gamma functions P(a,x) (lower) and Q(a,x) (upper),
// a > 0, x >= 0. Series expansion for x < a+1, modified Lentz continued
// fraction otherwise; absolute accuracy ~1e-14.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chisq_sf(double df, double x);

// All complex roots of a polynomial with complex coefficients
// c[0] + c[1] z + ... + c[n] z^n, via the eigenvalues of the companion
// matrix. Negligible leading coefficients (relative to the largest) are
// stripped first so nearly-degenerate leading terms do not poison the
// companion matrix.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

// Real-coefficient convenience wrapper.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

// Evaluate c[0] + c[1] z + ... by Horner's rule.
std::complex<double> polynomial_eval(const std::vector<std::complex<double>>& coeffs,
                                     std::complex<double> z);
double polynomial_eval(const std::vector<double>& coeffs, double x);

// Shortest round-trippable decimal representation (%.17g): every value we
// serialize must re-parse to the identical bits so emitted files are
// byte-deterministic.
std::string format_double(double v);

// n! as a double, exact for n <= 22.
double factorial(int n);

}  // namespace mixspec
