#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mixspec {

// Discrete mixing distribution G = sum_j alpha_j * delta_{sigma_j^2}:
// the law of the squared scalar mixing variable. Atoms are strictly positive,
// stored sorted ascending with exact duplicates merged; weights are strictly
// positive and sum to 1 (inputs within 1e-12 of the simplex are renormalized,
// anything farther is rejected).
class MixingDistribution {
  public:
    MixingDistribution(std::vector<double> atoms, std::vector<double> weights);

    const std::vector<double>& atoms() const { return atoms_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return atoms_.size(); }

    // k-th moment: sum_j alpha_j * (sigma_j^2)^k, in atom order.
    double moment(int k) const;

  private:
    std::vector<double> atoms_;
    std::vector<double> weights_;
};

// Moment of a mixing distribution (free-function form mirroring moment()).
double moment(const MixingDistribution& md, int k);

// Empirical mixing distribution of observed squared mixing values: equal
// weights 1/n, duplicates merged.
MixingDistribution empirical_md(const std::vector<double>& w_squares);

// Multiplies every atom by s > 0 (weights unchanged).
MixingDistribution scale(const MixingDistribution& md, double s);

// Limit of the spectral distribution of the shape matrix T_p^2. Same shape
// as a mixing distribution plus the identification constraint that the first
// moment equals 1 (tr(T_p^2) = p).
class PopulationSpectralDistribution {
  public:
    PopulationSpectralDistribution(std::vector<double> atoms, std::vector<double> weights);

    const std::vector<double>& atoms() const { return dist_.atoms(); }
    const std::vector<double>& weights() const { return dist_.weights(); }
    double moment(int k) const { return dist_.moment(k); }
    const MixingDistribution& as_mixing() const { return dist_; }

  private:
    MixingDistribution dist_;
};

// Full limiting-model parameterization: dimensional ratio c, mixing
// distribution G, and optionally a non-trivial population spectral
// distribution H (absent means H = delta_1, the spherical case).
struct LsdModel {
    double c;
    MixingDistribution G;
    std::optional<PopulationSpectralDistribution> H;

    LsdModel(double c_, MixingDistribution G_,
             std::optional<PopulationSpectralDistribution> H_ = std::nullopt);

    bool spherical() const { return !H.has_value(); }
};

// Base law of the i.i.d. entries z_ij: mean 0, variance 1 in every variant.
// Each carries its analytic kurtosis excess Delta = E z^4 - 3.
enum class BaseDistribution {
    StandardNormal,      // Delta = 0
    ScaledT6,            // sqrt(4/6) * t_6,                Delta = 3
    StandardizedChiSq3,  // sqrt(1/6) * (chi^2_3 - 3),      Delta = 4
    Uniform,             // U(-sqrt(3), sqrt(3)),           Delta = -1.2
};

double kurtosis_excess(BaseDistribution base);
std::string to_string(BaseDistribution base);
BaseDistribution base_distribution_from_string(const std::string& name);

// JSON forms used by CLI configs:
//   MixingDistribution            {"atoms":[...], "weights":[...]}
//   LsdModel                      {"c":0.5, "G":{...}, "H":{...}?}
nlohmann::json to_json(const MixingDistribution& md);
MixingDistribution mixing_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LsdModel& model);
LsdModel lsd_model_from_json(const nlohmann::json& j);

}  // namespace mixspec
