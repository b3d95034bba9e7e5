#include "permutent/serialize.hpp"

namespace permutent {

namespace {

template <class T>
Json optional_number(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

SpectrumSource source_from_string(const std::string& s) {
    if (s == "FiniteExact") return SpectrumSource::FiniteExact;
    if (s == "Thermodynamic") return SpectrumSource::Thermodynamic;
    if (s == "UniformMixed") return SpectrumSource::UniformMixed;
    throw DomainError("unknown spectrum source '" + s + "'");
}

}  // namespace

Json sector_to_json(const SectorConfig& cfg) {
    Json j;
    if (cfg.is_finite()) {
        j["L"] = cfg.size();
        j["d"] = cfg.dim();
        j["occupations"] = cfg.occupations();
    } else {
        j["L"] = "inf";
        j["d"] = cfg.dim();
        j["densities"] = cfg.densities();
    }
    return j;
}

SectorConfig sector_from_json(const Json& j) {
    if (j.at("L").is_string()) {
        if (j.at("L").get<std::string>() != "inf") throw DomainError("L must be an integer or \"inf\"");
        return SectorConfig::infinite(j.at("densities").get<std::vector<double>>());
    }
    auto cfg = SectorConfig::finite(j.at("occupations").get<std::vector<int>>());
    if (cfg.size() != j.at("L").get<int>()) throw DomainError("occupations do not sum to L");
    return cfg;
}

Json spectrum_to_json(const Spectrum& s) {
    Json header = s.sector ? sector_to_json(*s.sector) : Json{{"d", s.dim}};
    header["n"] = s.block_size;
    header["source"] = std::string(to_string(s.source));
    header["support_size"] = s.entries.size();
    header["dropped_mass"] = static_cast<double>(s.dropped_mass);

    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json rec;
        rec["composition"] = e.composition;
        rec["log2_weight"] = static_cast<double>(e.weight.log2());
        if (e.exact) rec["weight"] = e.exact->get_str();
        entries.push_back(std::move(rec));
    }
    return Json{{"header", std::move(header)}, {"entries", std::move(entries)}};
}

Spectrum spectrum_from_json(const Json& j) {
    const auto& h = j.at("header");
    Spectrum s;
    s.source = source_from_string(h.at("source").get<std::string>());
    s.block_size = h.at("n").get<int>();
    s.dim = h.at("d").get<int>();
    if (h.contains("L")) s.sector = sector_from_json(h);
    s.dropped_mass = h.value("dropped_mass", 0.0);
    for (const auto& rec : j.at("entries")) {
        SpectrumEntry e;
        e.composition = rec.at("composition").get<Composition>();
        if (static_cast<int>(e.composition.size()) != s.dim) throw DomainError("composition length differs from d");
        e.weight = LogWeight::from_log2(rec.at("log2_weight").get<double>());
        if (rec.contains("weight")) {
            e.exact = Rational(rec.at("weight").get<std::string>(), 10);
            e.exact->canonicalize();
        }
        s.entries.push_back(std::move(e));
    }
    return s;
}

Json report_to_json(const EntropyReport& r) {
    return Json{
        {"exact_bits", r.exact_bits},
        {"asymptotic_bits", optional_number(r.asymptotic_bits)},
        {"gaussian_bits", optional_number(r.gaussian_bits)},
        {"sup_bound_bits", r.sup_bound_bits},
        {"constant_C_bits", optional_number(r.constant_C_bits)},
        {"prefactor_gamma", optional_number(r.prefactor_gamma)},
        {"within_validity", r.within_validity},
    };
}

Json report_to_json(const CorrectionReport& r) {
    return Json{
        {"n_over_L", r.n_over_L},
        {"delta_per_bits", r.delta_per_bits},
        {"delta_per_leading_bits", r.delta_per_leading_bits},
        {"delta_cr_bits", r.delta_cr_bits},
        {"delta_cr_leading_bits", r.delta_cr_leading_bits},
        {"central_charge", r.central_charge},
    };
}

Json model_to_json(const GaussianModel& g) {
    Json mean = Json::array();
    for (Eigen::Index i = 0; i < g.mean.size(); ++i) mean.push_back(g.mean(i));
    Json cov = Json::array();
    for (Eigen::Index i = 0; i < g.covariance.rows(); ++i)
        for (Eigen::Index k = 0; k < g.covariance.cols(); ++k) cov.push_back(g.covariance(i, k));
    return Json{
        {"dim", g.dim},
        {"n", g.block_size},
        {"eliminated_level", g.eliminated},
        {"retained_levels", g.retained},
        {"mean", std::move(mean)},
        {"covariance", std::move(cov)},
        {"det_A", g.det_precision},
    };
}

Json report_to_json(const oracle::MatchReport& r) {
    Json config{{"kind", r.kind}, {"L", r.sites}, {"d", r.dim}};
    if (!r.occupations.empty()) config["occupations"] = r.occupations;
    return Json{
        {"config", std::move(config)},
        {"n", r.block},
        {"max_abs_dev", r.max_abs_dev},
        {"support_size_formula", r.support_size_formula},
        {"support_size_dense", r.support_size_dense},
        {"pass", r.pass},
    };
}

}  // namespace permutent
