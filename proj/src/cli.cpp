#include "permutent/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "permutent/entropy.hpp"
#include "permutent/gaussian.hpp"
#include "permutent/oracle.hpp"
#include "permutent/serialize.hpp"
#include "permutent/svg.hpp"

namespace permutent::cli {

namespace {

constexpr double kFaultPerturbation = 1e-6;

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Rational parse_rational(const std::string& token) {
    if (token.empty()) throw DomainError("empty density entry");
    const auto slash = token.find('/');
    if (slash != std::string::npos) {
        Rational q;
        if (q.set_str(token, 10) != 0 || q.get_den() == 0) throw DomainError("malformed fraction '" + token + "'");
        q.canonicalize();
        return q;
    }
    // Decimal: digits with optional point and exponent, converted exactly.
    std::string mantissa = token;
    long exponent = 0;
    if (const auto e = token.find_first_of("eE"); e != std::string::npos) {
        mantissa = token.substr(0, e);
        try {
            exponent = std::stol(token.substr(e + 1));
        } catch (const std::exception&) {
            throw DomainError("malformed number '" + token + "'");
        }
    }
    std::string digits;
    bool negative = false;
    for (std::size_t i = 0; i < mantissa.size(); ++i) {
        const char c = mantissa[i];
        if (c == '-' && i == 0) {
            negative = true;
        } else if (c == '+' && i == 0) {
        } else if (c == '.') {
            exponent -= static_cast<long>(mantissa.size() - i - 1);
        } else if (c >= '0' && c <= '9') {
            digits += c;
        } else {
            throw DomainError("malformed number '" + token + "'");
        }
    }
    if (digits.empty() || std::count(mantissa.begin(), mantissa.end(), '.') > 1)
        throw DomainError("malformed number '" + token + "'");
    Rational q{BigInt(digits, 10)};
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0)
        q *= scale;
    else
        q /= scale;
    if (negative) q = -q;
    return q;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + path + "'");
    f << content;
}

std::string join(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<double>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + fmt::format("{}", v[i]);
    return s;
}

std::string number(std::optional<double> v) { return v ? fmt::format("{}", *v) : std::string(); }

struct SectorFlags {
    std::string size;
    int dim = 0;
    std::string occupations;
    std::string densities;

    void attach(CLI::App* cmd) {
        cmd->add_option("--L", size, "system size, or \"inf\" for the thermodynamic limit");
        cmd->add_option("--d", dim, "local dimension d = 2 sigma + 1");
        auto* occ = cmd->add_option("--occ", occupations, "occupations N_0,...,N_{d-1}");
        auto* dens = cmd->add_option("--dens", densities, "densities p_0,...,p_{d-1} (fractions allowed)");
        occ->excludes(dens);
    }
    SectorConfig sector() const { return make_sector(size, dim, occupations, densities); }
};

struct RangeFlags {
    std::optional<int> n_min;
    std::optional<int> n_max;
    int step = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n-min", n_min, "first block size");
        cmd->add_option("--n-max", n_max, "last block size");
        cmd->add_option("--step", step, "block size increment")->check(CLI::PositiveNumber);
    }
    std::vector<int> values(int default_min, std::optional<int> default_max) const {
        const int lo = n_min.value_or(default_min);
        const auto hi = n_max ? n_max : default_max;
        if (!hi) throw DomainError("--n-max is required when L = inf");
        if (lo < 0) throw DomainError("negative block size");
        std::vector<int> out;
        for (int n = lo; n <= *hi; n += step) out.push_back(n);
        return out;
    }
};

// ---- spectrum ---------------------------------------------------------------

struct SpectrumJob {
    SectorFlags sector;
    int n = 0;
    std::string format = "json";
    std::string out_path;
    bool exact = false;
    double cutoff = 0.0;
};

int cmd_spectrum(const SpectrumJob& job, std::ostream& out, std::ostream& err) {
    const auto cfg = job.sector.sector();
    Spectrum s = cfg.is_finite()
                     ? exact_spectrum(cfg, job.n, job.exact ? ExactWeights::On : ExactWeights::Off)
                     : thermo_spectrum(cfg.densities(), job.n, job.cutoff);

    std::string content;
    if (job.format == "json") {
        content = spectrum_to_json(s).dump(2) + "\n";
    } else {
        content = "composition,log2_weight,weight\n";
        for (const auto& e : s.entries)
            content += fmt::format("{},{},{}\n", join(e.composition, ';'), static_cast<double>(e.weight.log2()),
                                   e.exact ? e.exact->get_str() : std::string());
    }
    emit(content, job.out_path, out);

    long double wmin = 1.0L, wmax = 0.0L;
    for (const auto& e : s.entries) {
        wmin = std::min(wmin, e.weight.value());
        wmax = std::max(wmax, e.weight.value());
    }
    std::ostream& summary = job.out_path.empty() ? err : out;
    summary << fmt::format("support_size={} min_weight={} max_weight={} normalization_residual={} dropped_mass={}\n",
                           s.entries.size(), static_cast<double>(wmin), static_cast<double>(wmax),
                           static_cast<double>(s.total_weight() + s.dropped_mass - 1.0L),
                           static_cast<double>(s.dropped_mass));
    return kSuccess;
}

// ---- entropy ----------------------------------------------------------------

struct EntropyJob {
    SectorFlags sector;
    int n = 0;
    std::string format = "json";
    std::string out_path;
    bool nats = false;
};

int cmd_entropy(const EntropyJob& job, std::ostream& out, std::ostream&) {
    const auto cfg = job.sector.sector();
    auto report = entropy_report(cfg, job.n);
    if (job.nats) {
        const double f = std::numbers::ln2;
        report.exact_bits *= f;
        report.sup_bound_bits *= f;
        for (auto* v : {&report.asymptotic_bits, &report.gaussian_bits, &report.constant_C_bits})
            if (*v) **v *= f;
    }
    Json j{{"sector", sector_to_json(cfg)}, {"n", job.n}, {"units", job.nats ? "nats" : "bits"}};
    j["report"] = report_to_json(report);
    emit(j.dump(2) + "\n", job.out_path, out);
    return kSuccess;
}

// ---- sweep ------------------------------------------------------------------

struct SweepRow {
    int n = 0;
    double exact = 0.0;
    std::optional<double> asym;
    double sup = 0.0;
};

std::vector<SweepRow> sweep_rows(const SectorConfig& cfg, const std::vector<int>& ns) {
    std::vector<SweepRow> rows(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        SweepRow r;
        r.n = n;
        r.exact = block_entropy(cfg, n);
        r.sup = max_entropy_bound(n, cfg.dim());
        const bool interior = cfg.is_finite() ? (n > 0 && n < cfg.size()) : n > 0;
        const auto p = cfg.densities();
        if (interior && std::all_of(p.begin(), p.end(), [](double x) { return x > 0; }))
            r.asym = asymptotic_entropy(cfg, n);
        rows[i] = r;
    });
    return rows;
}

std::string sweep_csv(const SectorConfig& cfg, const std::vector<SweepRow>& rows, double scale, bool header = true) {
    std::string s;
    if (header)
        s += fmt::format("L,d,n,{},S_exact,S_asym,S_sup,gap\n", cfg.is_finite() ? "occupations" : "densities");
    const std::string size = cfg.is_finite() ? std::to_string(cfg.size()) : "inf";
    const std::string levels = cfg.is_finite() ? join(cfg.occupations(), ';') : join(cfg.densities(), ';');
    for (const auto& r : rows) {
        std::optional<double> asym, gap;
        if (r.asym) {
            asym = *r.asym * scale;
            gap = (r.exact - *r.asym) * scale;
        }
        s += fmt::format("{},{},{},{},{},{},{},{}\n", size, cfg.dim(), r.n, levels, r.exact * scale, number(asym),
                         r.sup * scale, number(gap));
    }
    return s;
}

std::string sector_label(const SectorConfig& cfg) {
    return cfg.is_finite() ? fmt::format("L={}", cfg.size()) : std::string("L=inf");
}

std::vector<svg::Series> sweep_series(const std::vector<SweepRow>& rows, std::size_t color, const std::string& label) {
    svg::Series pts{label, svg::Series::Style::Points, svg::palette(color), {}};
    svg::Series curve{"", svg::Series::Style::Line, svg::palette(color), {}};
    for (const auto& r : rows) {
        pts.points.emplace_back(r.n, r.exact);
        curve.points.emplace_back(r.n, r.asym ? *r.asym : std::numeric_limits<double>::quiet_NaN());
    }
    return {pts, curve};
}

struct SweepJob {
    SectorFlags sector;
    RangeFlags range;
    std::string format = "csv";
    std::string out_path;
    std::string svg_path;
    bool nats = false;
};

int cmd_sweep(const SweepJob& job, std::ostream& out, std::ostream&) {
    const auto cfg = job.sector.sector();
    const auto ns = job.range.values(0, cfg.is_finite() ? std::optional<int>(cfg.size()) : std::nullopt);
    if (cfg.is_finite() && !ns.empty() && ns.back() > cfg.size()) throw DomainError("n exceeds L");
    const auto rows = sweep_rows(cfg, ns);
    const double scale = job.nats ? std::numbers::ln2 : 1.0;

    const auto plot = [&] {
        svg::PlotOptions opt;
        opt.title = fmt::format("Block entropy, d={} {}: exact (points) vs asymptotic (curve)", cfg.dim(), sector_label(cfg));
        return svg::render(sweep_series(rows, 0, sector_label(cfg)), opt);
    };

    if (job.format == "svg") {
        emit(plot(), job.out_path, out);
    } else if (job.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json row{{"n", r.n}, {"S_exact", r.exact * scale}};
            row["S_asym"] = r.asym ? Json(*r.asym * scale) : Json(nullptr);
            row["S_sup"] = r.sup * scale;
            row["gap"] = r.asym ? Json((r.exact - *r.asym) * scale) : Json(nullptr);
            arr.push_back(std::move(row));
        }
        emit(Json{{"sector", sector_to_json(cfg)}, {"rows", std::move(arr)}}.dump(2) + "\n", job.out_path, out);
    } else {
        emit(sweep_csv(cfg, rows, scale), job.out_path, out);
    }
    if (!job.svg_path.empty()) emit(plot(), job.svg_path, out);
    return kSuccess;
}

// ---- corrections ------------------------------------------------------------

struct CorrectionsJob {
    SectorFlags sector;
    RangeFlags range;
    double central_charge = kDefaultCentralCharge;
    std::string format = "csv";
    std::string out_path;
};

int cmd_corrections(const CorrectionsJob& job, std::ostream& out, std::ostream&) {
    SectorFlags flags = job.sector;
    // Only L and sigma matter; allow --L/--d without occupations.
    if (flags.occupations.empty() && flags.densities.empty()) {
        if (flags.size.empty() || flags.size == "inf" || flags.dim < 2)
            throw DomainError("corrections need a finite --L and --d (or --occ)");
        std::vector<int> occ(static_cast<std::size_t>(flags.dim), 0);
        occ[0] = std::stoi(flags.size);
        flags.occupations = join(occ, ',');
    }
    const auto cfg = flags.sector();
    if (!cfg.is_finite()) throw DomainError("corrections need a finite system size");
    const auto ns = job.range.values(1, cfg.size() - 1);

    std::vector<CorrectionReport> rows(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) rows[i] = finite_size_corrections(cfg, ns[i], job.central_charge);

    if (job.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(report_to_json(r));
        emit(Json{{"L", cfg.size()}, {"d", cfg.dim()}, {"rows", std::move(arr)}}.dump(2) + "\n", job.out_path, out);
        return kSuccess;
    }
    std::string s = "n_over_L,delta_per,delta_per_leading,delta_cr,delta_cr_leading\n";
    for (const auto& r : rows)
        s += fmt::format("{},{},{},{},{}\n", r.n_over_L, r.delta_per_bits, r.delta_per_leading_bits, r.delta_cr_bits,
                         r.delta_cr_leading_bits);
    emit(s, job.out_path, out);
    return kSuccess;
}

// ---- gaussian ---------------------------------------------------------------

struct GaussianJob {
    SectorFlags sector;
    int n = 1;
    int eliminated = 0;
    std::string out_path;
};

int cmd_gaussian(const GaussianJob& job, std::ostream& out, std::ostream&) {
    const auto cfg = job.sector.sector();
    const auto model = build_gaussian(cfg.densities(), job.n, job.eliminated);
    Json j = model_to_json(model);
    j["entropy_bits"] = gaussian_entropy(model);
    emit(j.dump(2) + "\n", job.out_path, out);
    return kSuccess;
}

// ---- verify -----------------------------------------------------------------

struct VerifyJob {
    std::string grid = "2:8,3:6";
    double tol = oracle::kDefaultMatchTolerance;
    std::optional<int> fault_case;
    std::string out_path;
};

struct VerifyCase {
    bool uniform = false;
    std::vector<int> occupations;
    int sites = 0;
    int dim = 0;
    int n = 0;
};

std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
    std::vector<std::pair<int, int>> grid;
    if (text.empty()) return grid;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw DomainError("grid entries look like d:Lmax, got '" + item + "'");
        try {
            const int d = std::stoi(parts[0]);
            const int lmax = std::stoi(parts[1]);
            if (d < 2 || lmax < 1) throw DomainError("grid needs d >= 2 and Lmax >= 1");
            grid.emplace_back(d, lmax);
        } catch (const std::logic_error&) {
            throw DomainError("grid entries look like d:Lmax, got '" + item + "'");
        }
    }
    return grid;
}

int cmd_verify(const VerifyJob& job, std::ostream& out, std::ostream& err) {
    std::vector<VerifyCase> cases;
    for (const auto& [d, lmax] : parse_grid(job.grid)) {
        for (int L = 1; L <= lmax; ++L) {
            for (BoundedCompositionIter it(L, std::vector<int>(static_cast<std::size_t>(d), L)); it.valid(); it.advance())
                for (int n = 0; n <= L; ++n) cases.push_back({false, it.current(), L, d, n});
            for (int n = 0; n <= L; ++n) cases.push_back({true, {}, L, d, n});
        }
    }
    if (cases.empty()) {
        err << "warning: verification grid is empty; nothing was checked\n";
        if (!job.out_path.empty()) emit("[]\n", job.out_path, out);
        out << "verified 0 cases\n";
        return kSuccess;
    }

    // The fault hook indexes theorem cases only, in grid order.
    std::optional<std::size_t> fault_at;
    if (job.fault_case) {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < cases.size() && !fault_at; ++i)
            if (!cases[i].uniform && seen++ == static_cast<std::size_t>(*job.fault_case)) fault_at = i;
        if (!fault_at) throw DomainError("--inject-fault index exceeds the number of theorem cases");
    }

    std::vector<oracle::MatchReport> reports(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        if (c.uniform) {
            reports[i] = oracle::verify_uniform_mixture(c.sites, c.dim, c.n, job.tol);
        } else {
            std::optional<double> fault;
            if (fault_at == i) fault = kFaultPerturbation;
            reports[i] = oracle::verify_theorem(SectorConfig::finite(c.occupations), c.n, job.tol, fault);
        }
    });

    std::size_t failures = 0;
    Json arr = Json::array();
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
        if (!r.pass) {
            ++failures;
            err << fmt::format("MISMATCH {} L={} d={}{} n={} max_abs_dev={} support formula/dense={}/{}\n", r.kind,
                               r.sites, r.dim, r.occupations.empty() ? "" : " occ=" + join(r.occupations, ','),
                               r.block, r.max_abs_dev, r.support_size_formula, r.support_size_dense);
        }
    }
    if (!job.out_path.empty()) emit(arr.dump(2) + "\n", job.out_path, out);
    out << fmt::format("verified {} cases, {} mismatches\n", reports.size(), failures);
    return failures ? kVerificationMismatch : kSuccess;
}

// ---- figures ----------------------------------------------------------------

struct FiguresJob {
    std::string out_dir = "figures";
};

int cmd_figures(const FiguresJob& job, std::ostream& out, std::ostream&) {
    std::filesystem::create_directories(job.out_dir);
    const auto path = [&](const std::string& name) { return (std::filesystem::path(job.out_dir) / name).string(); };

    // Spin 1, equal thirds, growing L.
    {
        std::vector<svg::Series> series;
        std::string csv;
        std::size_t color = 0;
        for (int L : {30, 60, 120, 240, 0}) {
            const auto cfg = L ? SectorConfig::finite({L / 3, L / 3, L / 3})
                               : SectorConfig::infinite({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
            std::vector<int> ns;
            for (int n = 0; n <= 240 && (L == 0 || n <= L); ++n) ns.push_back(n);
            const auto rows = sweep_rows(cfg, ns);
            csv += sweep_csv(cfg, rows, 1.0, color == 0);
            for (auto& s : sweep_series(rows, color, sector_label(cfg))) series.push_back(std::move(s));
            ++color;
        }
        emit(csv, path("fig1_spin1.csv"), out);
        emit(svg::render(series, {"Spin 1, p_i = 1/3: exact (points) vs asymptotic (curves)"}), path("fig1_spin1.svg"),
             out);
    }
    // L = 120, equal partitions, sigma = 1/2 .. 2.
    {
        std::vector<svg::Series> series;
        std::string csv;
        std::size_t color = 0;
        for (int d : {2, 3, 4, 5}) {
            const auto cfg = SectorConfig::finite(std::vector<int>(static_cast<std::size_t>(d), 120 / d));
            std::vector<int> ns;
            for (int n = 0; n <= 120; ++n) ns.push_back(n);
            const auto rows = sweep_rows(cfg, ns);
            csv += sweep_csv(cfg, rows, 1.0, color == 0);
            for (auto& s : sweep_series(rows, color, fmt::format("d={}", d))) series.push_back(std::move(s));
            ++color;
        }
        emit(csv, path("fig2_spins.csv"), out);
        emit(svg::render(series, {"L = 120, equal partitions: exact (points) vs asymptotic (curves)"}),
             path("fig2_spins.svg"), out);
    }
    out << "wrote figures to " << job.out_dir << "\n";
    return kSuccess;
}

}  // namespace

std::vector<int> parse_occupations(std::string_view text) {
    std::vector<int> occ;
    for (const auto& tok : split(text, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::logic_error&) {
            throw DomainError("malformed occupation '" + tok + "'");
        }
        if (pos != tok.size()) throw DomainError("malformed occupation '" + tok + "'");
        occ.push_back(v);
    }
    return occ;
}

std::vector<double> parse_densities(std::string_view text) {
    std::vector<Rational> q;
    Rational total = 0;
    for (const auto& tok : split(text, ',')) {
        q.push_back(parse_rational(tok));
        if (sgn(q.back()) < 0) throw DomainError("negative density");
        total += q.back();
    }
    const Rational residual = abs(total - 1);
    if (residual > Rational(1, 1'000'000'000)) throw DomainError("densities must sum to 1");
    std::vector<double> p;
    for (auto& x : q) {
        x /= total;
        p.push_back(x.get_d());
    }
    return p;
}

SectorConfig make_sector(const std::string& size, int dim, const std::string& occupations,
                         const std::string& densities) {
    if (!occupations.empty() && !densities.empty()) throw DomainError("--occ and --dens are mutually exclusive");
    std::optional<SectorConfig> cfg;
    if (!densities.empty()) {
        if (!size.empty() && size != "inf") throw DomainError("--dens requires --L inf");
        cfg = SectorConfig::infinite(parse_densities(densities));
    } else if (!occupations.empty()) {
        if (size == "inf") throw DomainError("--occ requires a finite --L");
        cfg = SectorConfig::finite(parse_occupations(occupations));
        if (!size.empty()) {
            int L = 0;
            try {
                L = std::stoi(size);
            } catch (const std::logic_error&) {
                throw DomainError("--L must be an integer or \"inf\"");
            }
            if (L != cfg->size()) throw DomainError("occupations do not sum to L");
        }
    } else {
        throw DomainError("one of --occ or --dens is required");
    }
    if (dim != 0 && dim != cfg->dim()) throw DomainError("--d does not match the number of levels");
    return *cfg;
}

unsigned thread_count() {
    if (const char* env = std::getenv("PERMUTENT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement spectra and entropies of permutation-invariant spin states", "permutent"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "permutent 0.1.0");

    SpectrumJob spectrum_job;
    auto* spectrum = app.add_subcommand("spectrum", "reduced density matrix spectrum of an n-site block");
    spectrum_job.sector.attach(spectrum);
    spectrum->add_option("--n", spectrum_job.n, "block size")->required();
    spectrum->add_option("--format", spectrum_job.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    spectrum->add_option("--out", spectrum_job.out_path, "output file (default stdout)");
    spectrum->add_flag("--exact", spectrum_job.exact, "include exact rational weights (L <= 300)");
    spectrum->add_option("--cutoff", spectrum_job.cutoff, "relative weight cutoff (L = inf only)");

    EntropyJob entropy_job;
    auto* entropy = app.add_subcommand("entropy", "exact, asymptotic, Gaussian and bound entropies");
    entropy_job.sector.attach(entropy);
    entropy->add_option("--n", entropy_job.n, "block size")->required();
    entropy->add_option("--format", entropy_job.format, "output format")->check(CLI::IsMember({"json"}));
    entropy->add_option("--out", entropy_job.out_path, "output file (default stdout)");
    entropy->add_flag("--nats", entropy_job.nats, "report natural-log units");

    SweepJob sweep_job;
    auto* sweep = app.add_subcommand("sweep", "entropy versus block size");
    sweep_job.sector.attach(sweep);
    sweep_job.range.attach(sweep);
    sweep->add_option("--format", sweep_job.format, "output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    sweep->add_option("--out", sweep_job.out_path, "output file (default stdout)");
    sweep->add_option("--svg", sweep_job.svg_path, "also write an SVG plot here");
    sweep->add_flag("--nats", sweep_job.nats, "report natural-log units");

    CorrectionsJob corrections_job;
    auto* corrections = app.add_subcommand("corrections", "finite-size corrections, permutation-invariant vs critical");
    corrections_job.sector.attach(corrections);
    corrections_job.range.attach(corrections);
    corrections->add_option("--c", corrections_job.central_charge, "central charge of the critical comparison");
    corrections->add_option("--format", corrections_job.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    corrections->add_option("--out", corrections_job.out_path, "output file (default stdout)");

    GaussianJob gaussian_job;
    auto* gaussian = app.add_subcommand("gaussian", "Gaussian model of the thermodynamic spectrum");
    gaussian_job.sector.attach(gaussian);
    gaussian->add_option("--n", gaussian_job.n, "block size")->required();
    gaussian->add_option("--eliminate", gaussian_job.eliminated, "level removed by the sum constraint");
    gaussian->add_option("--out", gaussian_job.out_path, "output file (default stdout)");

    VerifyJob verify_job;
    auto* verify = app.add_subcommand("verify", "dense partial-trace cross-check");
    verify->add_option("--grid", verify_job.grid, "comma list of d:Lmax (default 2:8,3:6)");
    verify->add_option("--tol", verify_job.tol, "max absolute eigenvalue deviation");
    verify->add_option("--inject-fault", verify_job.fault_case, "perturb one weight of the k-th theorem case (0-based) by 1e-6");
    verify->add_option("--out", verify_job.out_path, "JSON match reports");

    FiguresJob figures_job;
    auto* figures = app.add_subcommand("figures", "entropy curves for spin 1 and for sigma = 1/2..2");
    figures->add_option("--out-dir", figures_job.out_dir, "directory for the CSV and SVG files");

    std::vector<const char*> argv{"permutent"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationError;
    }

    try {
        if (*spectrum) return cmd_spectrum(spectrum_job, out, err);
        if (*entropy) return cmd_entropy(entropy_job, out, err);
        if (*sweep) return cmd_sweep(sweep_job, out, err);
        if (*corrections) return cmd_corrections(corrections_job, out, err);
        if (*gaussian) return cmd_gaussian(gaussian_job, out, err);
        if (*verify) return cmd_verify(verify_job, out, err);
        if (*figures) return cmd_figures(figures_job, out, err);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
    return kValidationError;
}

}  // namespace permutent::cli
