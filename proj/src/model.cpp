#include "mixspec/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "mixspec/errors.hpp"

namespace mixspec {

MixingDistribution::MixingDistribution(std::vector<double> atoms, std::vector<double> weights) {
    if (atoms.empty() || atoms.size() != weights.size()) {
        throw InvalidInput("MixingDistribution: atoms/weights must be non-empty and equal-length");
    }
    for (double a : atoms) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw InvalidInput("MixingDistribution: atoms must be finite and > 0");
        }
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InvalidInput("MixingDistribution: weights must be finite and > 0");
        }
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw InvalidInput("MixingDistribution: weights sum to " + std::to_string(total) +
                           ", farther than 1e-12 from 1");
    }

    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });

    for (std::size_t idx : order) {
        double a = atoms[idx];
        double w = weights[idx] / total;  // renormalize within-tolerance input
        if (!atoms_.empty() && a == atoms_.back()) {
            weights_.back() += w;  // merge duplicate atoms
        } else {
            atoms_.push_back(a);
            weights_.push_back(w);
        }
    }
}

double MixingDistribution::moment(int k) const {
    if (k < 0) throw InvalidInput("MixingDistribution::moment: negative order");
    double sum = 0.0;
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
        sum += weights_[j] * std::pow(atoms_[j], k);
    }
    return sum;
}

double moment(const MixingDistribution& md, int k) { return md.moment(k); }

MixingDistribution empirical_md(const std::vector<double>& w_squares) {
    if (w_squares.empty()) throw InvalidInput("empirical_md: empty sample");
    std::vector<double> weights(w_squares.size(), 1.0 / static_cast<double>(w_squares.size()));
    return MixingDistribution(w_squares, weights);
}

MixingDistribution scale(const MixingDistribution& md, double s) {
    if (!(s > 0.0)) throw InvalidInput("scale: factor must be > 0");
    std::vector<double> atoms = md.atoms();
    for (double& a : atoms) a *= s;
    return MixingDistribution(atoms, md.weights());
}

PopulationSpectralDistribution::PopulationSpectralDistribution(std::vector<double> atoms,
                                                               std::vector<double> weights)
    : dist_(std::move(atoms), std::move(weights)) {
    double m1 = dist_.moment(1);
    if (std::fabs(m1 - 1.0) > 1e-12) {
        throw InvalidInput("PopulationSpectralDistribution: first moment is " +
                           std::to_string(m1) + ", must equal 1 (tr(T_p^2) = p)");
    }
}

LsdModel::LsdModel(double c_, MixingDistribution G_,
                   std::optional<PopulationSpectralDistribution> H_)
    : c(c_), G(std::move(G_)), H(std::move(H_)) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw InvalidInput("LsdModel: dimensional ratio c must be finite and > 0");
    }
}

double kurtosis_excess(BaseDistribution base) {
    switch (base) {
        case BaseDistribution::StandardNormal: return 0.0;
        case BaseDistribution::ScaledT6: return 3.0;
        case BaseDistribution::StandardizedChiSq3: return 4.0;
        case BaseDistribution::Uniform: return -1.2;
    }
    throw InvalidInput("kurtosis_excess: unknown base distribution");
}

std::string to_string(BaseDistribution base) {
    switch (base) {
        case BaseDistribution::StandardNormal: return "normal";
        case BaseDistribution::ScaledT6: return "t6";
        case BaseDistribution::StandardizedChiSq3: return "chisq3";
        case BaseDistribution::Uniform: return "uniform";
    }
    throw InvalidInput("to_string: unknown base distribution");
}

BaseDistribution base_distribution_from_string(const std::string& name) {
    if (name == "normal") return BaseDistribution::StandardNormal;
    if (name == "t6") return BaseDistribution::ScaledT6;
    if (name == "chisq3") return BaseDistribution::StandardizedChiSq3;
    if (name == "uniform") return BaseDistribution::Uniform;
    throw InvalidInput("unknown base distribution '" + name +
                       "' (expected normal|t6|chisq3|uniform)");
}

nlohmann::json to_json(const MixingDistribution& md) {
    return nlohmann::json{{"atoms", md.atoms()}, {"weights", md.weights()}};
}

MixingDistribution mixing_from_json(const nlohmann::json& j) {
    if (!j.contains("atoms") || !j.contains("weights")) {
        throw ParseError("mixing distribution JSON needs \"atoms\" and \"weights\" arrays");
    }
    return MixingDistribution(j.at("atoms").get<std::vector<double>>(),
                              j.at("weights").get<std::vector<double>>());
}

nlohmann::json to_json(const LsdModel& model) {
    nlohmann::json j{{"c", model.c}, {"G", to_json(model.G)}};
    if (model.H) {
        j["H"] = nlohmann::json{{"atoms", model.H->atoms()}, {"weights", model.H->weights()}};
    }
    return j;
}

LsdModel lsd_model_from_json(const nlohmann::json& j) {
    if (!j.contains("c") || !j.contains("G")) {
        throw ParseError("model JSON needs \"c\" and \"G\"");
    }
    std::optional<PopulationSpectralDistribution> H;
    if (j.contains("H") && !j.at("H").is_null()) {
        H.emplace(j.at("H").at("atoms").get<std::vector<double>>(),
                  j.at("H").at("weights").get<std::vector<double>>());
    }
    return LsdModel(j.at("c").get<double>(), mixing_from_json(j.at("G")), std::move(H));
}

}  // namespace mixspec
