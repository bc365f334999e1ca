#include "mindist/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "mindist/approx.hpp"
#include "mindist/bounds.hpp"
#include "mindist/codetable.hpp"

namespace mindist {

namespace {

constexpr int kExitBelowThreshold = 1;
constexpr int kExitUsage = 2;

std::string format_general(double value) {
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

// Uniform grid with both endpoints hit exactly.
double grid_point(double lo, double hi, int i, int count) {
    if (count == 1) {
        return lo;
    }
    const int last = count - 1;
    return (lo * (last - i) + hi * i) / last;
}

std::optional<double> try_value(const std::function<double()>& f) {
    try {
        return f();
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

std::optional<double> asymptotic_series(Series s, double delta) {
    BoundFamily family{};
    switch (s) {
        case Series::GilbertVarshamov: family = BoundFamily::GilbertVarshamov; break;
        case Series::Hamming: family = BoundFamily::Hamming; break;
        case Series::Mrrw: family = BoundFamily::Mrrw; break;
        case Series::QuadraticModel: family = BoundFamily::QuadraticModel; break;
        default: return std::nullopt;
    }
    return try_value([&] {
        return asymptotic_bound(BoundKind::make(family, Regime::Asymptotic), NormalizedDistance(delta)).value();
    });
}

std::optional<double> finite_series(Series s, int n, double delta) {
    const double scaled = delta * n;
    const double d = std::round(scaled);
    const bool on_code_grid = std::abs(scaled - d) <= 1e-9 && d >= 1 && d <= n;
    switch (s) {
        case Series::GilbertVarshamov:
            if (!on_code_grid) return std::nullopt;
            return gilbert_finite(n, static_cast<int>(d)).value();
        case Series::Hamming:
            if (!on_code_grid) return std::nullopt;
            return hamming_finite(n, static_cast<int>(d)).value();
        case Series::Plotkin:
            return try_value([&] { return plotkin_finite(n, NormalizedDistance(delta)).value(); });
        case Series::Approximation:
            return try_value([&] { return rate_from_delta(n, NormalizedDistance(delta)).value(); });
        default:
            return std::nullopt;
    }
}

std::optional<double> dmin_series(Series s, int n, double r) {
    switch (s) {
        case Series::GilbertVarshamov: return gilbert_implied_distance(n, r);
        case Series::Hamming: return hamming_implied_distance(n, r);
        case Series::Approximation: return try_value([&] { return dmin(n, r * n); });
        default: return std::nullopt;
    }
}

template <typename Bound>
int largest_distance_with_rate(int n, double r, Bound bound) {
    // bound(n, d) is nonincreasing in d and bound(n, 1) = 1 >= r.
    int lo = 1;
    int hi = n;
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        if (bound(n, mid).value() >= r) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

void write_row(std::ostream& out, const std::string& x, const std::vector<std::optional<double>>& values) {
    out << x;
    for (const auto& v : values) {
        out << ',';
        if (v) {
            out << format_general(*v);
        }
    }
    out << '\n';
}

BoundFamily parse_family(const std::string& name) {
    if (name == "gv") return BoundFamily::GilbertVarshamov;
    if (name == "hamming") return BoundFamily::Hamming;
    if (name == "plotkin") return BoundFamily::Plotkin;
    if (name == "mrrw") return BoundFamily::Mrrw;
    if (name == "quadratic") return BoundFamily::QuadraticModel;
    throw UsageError("unknown bound '" + name + "'");
}

}  // namespace

std::vector<Series> supported_series(CurveMode mode) {
    switch (mode) {
        case CurveMode::RateVsDeltaAsymptotic:
            return {Series::GilbertVarshamov, Series::Hamming, Series::Mrrw, Series::QuadraticModel};
        case CurveMode::RateVsDeltaFinite:
            return {Series::GilbertVarshamov, Series::Hamming, Series::Plotkin, Series::Approximation};
        case CurveMode::DminVsN:
            return {Series::GilbertVarshamov, Series::Hamming, Series::Approximation};
    }
    return {};
}

std::string series_name(Series s) {
    switch (s) {
        case Series::GilbertVarshamov: return "gv";
        case Series::Hamming: return "hamming";
        case Series::Plotkin: return "plotkin";
        case Series::Mrrw: return "mrrw";
        case Series::QuadraticModel: return "quadratic";
        case Series::Approximation: return "approx";
    }
    return "unknown";
}

Series parse_series(const std::string& name) {
    for (auto s : {Series::GilbertVarshamov, Series::Hamming, Series::Plotkin, Series::Mrrw, Series::QuadraticModel,
                   Series::Approximation}) {
        if (series_name(s) == name) {
            return s;
        }
    }
    throw UsageError("unknown series '" + name + "'");
}

CurveMode parse_curve_mode(const std::string& name) {
    if (name == "asymptotic") return CurveMode::RateVsDeltaAsymptotic;
    if (name == "finite") return CurveMode::RateVsDeltaFinite;
    if (name == "dmin") return CurveMode::DminVsN;
    throw UsageError("unknown curve mode '" + name + "' (expected asymptotic, finite or dmin)");
}

void validate_request(const CurveRequest& request) {
    if (request.sample_count < 1) {
        throw UsageError("sample count must be positive");
    }
    const auto allowed = supported_series(request.mode);
    for (auto s : request.series) {
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
            throw UsageError("series '" + series_name(s) + "' is not available in this curve mode");
        }
    }
    if (request.x_min && request.x_max && *request.x_min > *request.x_max) {
        throw UsageError("curve range is empty");
    }
    switch (request.mode) {
        case CurveMode::RateVsDeltaAsymptotic:
            if (request.n || request.rate || request.integer_grid) {
                throw UsageError("asymptotic curves take neither -n, --rate nor --integer-grid");
            }
            break;
        case CurveMode::RateVsDeltaFinite:
            if (!request.n || *request.n < 1) {
                throw UsageError("finite curves need a positive -n");
            }
            if (request.rate) {
                throw UsageError("finite curves do not take --rate");
            }
            break;
        case CurveMode::DminVsN:
            if (!request.rate || !(*request.rate > 0.0) || *request.rate > 1.0) {
                throw UsageError("dmin curves need --rate in (0, 1]");
            }
            if (request.n || request.integer_grid) {
                throw UsageError("dmin curves range over n; use --from/--to instead of -n");
            }
            for (const auto& bound : {request.x_min, request.x_max}) {
                if (bound && (*bound < 1.0 || *bound != std::floor(*bound))) {
                    throw UsageError("dmin curve range must be positive integers");
                }
            }
            break;
    }
}

void write_curve(const CurveRequest& request, std::ostream& out) {
    validate_request(request);
    const auto series = request.series.empty() ? supported_series(request.mode) : request.series;
    out << (request.mode == CurveMode::DminVsN ? "n" : "delta");
    for (auto s : series) {
        out << ',' << series_name(s);
    }
    out << '\n';

    std::vector<std::optional<double>> values(series.size());
    switch (request.mode) {
        case CurveMode::RateVsDeltaAsymptotic: {
            const double lo = request.x_min.value_or(0.01);
            const double hi = request.x_max.value_or(0.99);
            for (int i = 0; i < request.sample_count; ++i) {
                const double delta = grid_point(lo, hi, i, request.sample_count);
                for (std::size_t j = 0; j < series.size(); ++j) {
                    values[j] = asymptotic_series(series[j], delta);
                }
                write_row(out, format_general(delta), values);
            }
            break;
        }
        case CurveMode::RateVsDeltaFinite: {
            const int n = *request.n;
            const int count = request.integer_grid ? n : request.sample_count;
            const double lo = request.x_min.value_or(1.0 / n);
            const double hi = request.x_max.value_or(1.0);
            for (int i = 0; i < count; ++i) {
                const double delta =
                    request.integer_grid ? static_cast<double>(i + 1) / n : grid_point(lo, hi, i, count);
                for (std::size_t j = 0; j < series.size(); ++j) {
                    values[j] = finite_series(series[j], n, delta);
                }
                write_row(out, format_general(delta), values);
            }
            break;
        }
        case CurveMode::DminVsN: {
            const int lo = static_cast<int>(request.x_min.value_or(16));
            const int hi = static_cast<int>(request.x_max.value_or(256));
            for (int n = lo; n <= hi; ++n) {
                for (std::size_t j = 0; j < series.size(); ++j) {
                    values[j] = dmin_series(series[j], n, *request.rate);
                }
                write_row(out, std::to_string(n), values);
            }
            break;
        }
    }
}

int gilbert_implied_distance(int n, double r) { return largest_distance_with_rate(n, r, gilbert_finite); }

int hamming_implied_distance(int n, double r) { return largest_distance_with_rate(n, r, hamming_finite); }

std::string format_fixed(double value, int decimals) {
    if (value == 0.0) {
        value = 0.0;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rate versus minimum distance bounds and approximation for binary codes", "mindist"};
    app.require_subcommand(1);

    // bound
    auto* bound = app.add_subcommand("bound", "Evaluate a classical bound on the code rate");
    std::string bound_kind;
    bool finite = false;
    bool asymptotic = false;
    std::optional<int> bound_n;
    std::optional<int> bound_d;
    std::optional<double> bound_delta;
    bound->add_option("kind", bound_kind, "gv, hamming, plotkin, mrrw or quadratic")->required();
    auto* finite_flag = bound->add_flag("--finite", finite, "Finite-length form (needs -n)");
    bound->add_flag("--asymptotic", asymptotic, "Asymptotic form (needs --delta)")->excludes(finite_flag);
    bound->add_option("-n", bound_n, "Code length");
    bound->add_option("-d", bound_d, "Minimum distance");
    bound->add_option("--delta", bound_delta, "Normalized minimum distance d/n");

    // params
    auto* params = app.add_subcommand("params", "Print the quadratic-segment parameters for a code length");
    int params_n = 0;
    params->add_option("-n", params_n, "Code length (>= 2)")->required();

    // approx
    auto* approx = app.add_subcommand("approx", "Approximate maximum rate for (n, d) or (n, delta)");
    int approx_n = 0;
    std::optional<int> approx_d;
    std::optional<double> approx_delta;
    approx->add_option("-n", approx_n, "Code length")->required();
    auto* approx_d_opt = approx->add_option("-d", approx_d, "Minimum distance");
    approx->add_option("--delta", approx_delta, "Normalized minimum distance")->excludes(approx_d_opt);

    // invert
    auto* invert = app.add_subcommand("invert", "Approximate minimum distance for (n, k) or (n, rate)");
    int invert_n = 0;
    std::optional<double> invert_k;
    std::optional<double> invert_rate;
    invert->add_option("-n", invert_n, "Code length")->required();
    auto* invert_k_opt = invert->add_option("-k", invert_k, "Information length (may be fractional)");
    invert->add_option("--rate", invert_rate, "Code rate k/n")->excludes(invert_k_opt);

    // curve
    auto* curve = app.add_subcommand("curve", "Emit plot-ready CSV curves");
    std::string mode_name = "asymptotic";
    std::vector<std::string> series_names;
    CurveRequest request;
    curve->add_option("--mode", mode_name, "asymptotic, finite or dmin")->capture_default_str();
    curve->add_option("--series", series_names, "Comma-separated series: gv,hamming,plotkin,mrrw,quadratic,approx")
        ->delimiter(',');
    curve->add_option("-n", request.n, "Code length (finite mode)");
    curve->add_option("--rate", request.rate, "Code rate (dmin mode)");
    curve->add_option("--samples", request.sample_count, "Number of delta samples")->capture_default_str();
    curve->add_flag("--integer-grid", request.integer_grid, "Finite mode: sample delta = d/n for d = 1..n");
    curve->add_option("--from", request.x_min, "Lower end of the x range (delta, or n in dmin mode)");
    curve->add_option("--to", request.x_max, "Upper end of the x range");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Score the approximation against a code table");
    std::string table_path;
    bool include_inexact = false;
    validate_cmd->add_option("table", table_path, "Code-table file (n,k,d or n,k,d_lower,d_upper)")->required();
    validate_cmd->add_flag("--include-inexact", include_inexact, "Score bracketed entries against d_lower");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bound->parsed()) {
            const BoundFamily family = parse_family(bound_kind);
            Regime regime;
            if (finite) {
                regime = Regime::Finite;
            } else if (asymptotic) {
                regime = Regime::Asymptotic;
            } else if (family == BoundFamily::Plotkin) {
                regime = Regime::Finite;
            } else if (family == BoundFamily::Mrrw || family == BoundFamily::QuadraticModel) {
                regime = Regime::Asymptotic;
            } else {
                regime = bound_n ? Regime::Finite : Regime::Asymptotic;
            }
            if (!BoundKind::is_valid(family, regime)) {
                throw UsageError(to_string(family) + " has no " +
                                 (regime == Regime::Finite ? "finite" : "asymptotic") + " form");
            }
            double value = 0.0;
            if (regime == Regime::Asymptotic) {
                if (!bound_delta || bound_n || bound_d) {
                    throw UsageError("asymptotic bounds take --delta only");
                }
                value = asymptotic_bound({family, regime}, NormalizedDistance(*bound_delta)).value();
            } else if (family == BoundFamily::Plotkin) {
                if (!bound_n || (bound_d.has_value() == bound_delta.has_value())) {
                    throw UsageError("plotkin needs -n and exactly one of -d or --delta");
                }
                const auto delta = bound_d ? NormalizedDistance::of_code(*bound_n, *bound_d)
                                           : NormalizedDistance(*bound_delta);
                value = plotkin_finite(*bound_n, delta).value();
            } else {
                if (!bound_n || !bound_d || bound_delta) {
                    throw UsageError("finite " + bound_kind + " needs -n and -d");
                }
                value = family == BoundFamily::GilbertVarshamov ? gilbert_finite(*bound_n, *bound_d).value()
                                                                : hamming_finite(*bound_n, *bound_d).value();
            }
            out << format_fixed(value) << '\n';
        } else if (params->parsed()) {
            if (params_n < 2) {
                throw UsageError("params needs n >= 2");
            }
            const auto p = solve_params(params_n);
            out << "n=" << p.n << '\n'
                << "xi=" << format_fixed(p.xi) << '\n'
                << "a=" << format_fixed(p.a) << '\n'
                << "b=" << format_fixed(p.b) << '\n'
                << "c=" << format_fixed(p.c) << '\n'
                << "delta1=" << format_fixed(p.delta1) << '\n'
                << "delta2=" << format_fixed(p.delta2) << '\n'
                << "delta3=" << format_fixed(p.delta3) << '\n'
                << "r1=" << format_fixed(p.r1) << '\n'
                << "r2=" << format_fixed(p.r2) << '\n'
                << "r3=" << format_fixed(p.r3) << '\n';
        } else if (approx->parsed()) {
            if (!approx_d && !approx_delta) {
                throw UsageError("approx needs -d or --delta");
            }
            const Rate r = approx_d ? rate_from_dmin(approx_n, *approx_d)
                                    : rate_from_delta(approx_n, NormalizedDistance(*approx_delta));
            out << format_fixed(r.value()) << '\n';
        } else if (invert->parsed()) {
            if (!invert_k && !invert_rate) {
                throw UsageError("invert needs -k or --rate");
            }
            if (invert_n < 1) {
                throw UsageError("invert needs n >= 1");
            }
            const double k = invert_k ? *invert_k : Rate(*invert_rate).value() * invert_n;
            const double d = dmin(invert_n, k);
            out << "d=" << format_fixed(d) << '\n' << "delta=" << format_fixed(d / invert_n) << '\n';
        } else if (curve->parsed()) {
            request.mode = parse_curve_mode(mode_name);
            for (const auto& name : series_names) {
                request.series.push_back(parse_series(name));
            }
            write_curve(request, out);
        } else if (validate_cmd->parsed()) {
            const auto entries = parse_table_file(table_path);
            const auto report = validate(entries, !include_inexact);
            write_report(report, out);
            return report.frac_within_2 == 1.0 ? 0 : kExitBelowThreshold;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}

}  // namespace mindist
