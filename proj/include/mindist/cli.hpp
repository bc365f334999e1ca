#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindist {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class CurveMode { RateVsDeltaAsymptotic, RateVsDeltaFinite, DminVsN };

/// gv/hamming mean the finite bounds in finite and dmin modes and the
/// asymptotic ones in asymptotic mode.
enum class Series { GilbertVarshamov, Hamming, Plotkin, Mrrw, QuadraticModel, Approximation };

struct CurveRequest {
    CurveMode mode = CurveMode::RateVsDeltaAsymptotic;
    std::optional<int> n;        ///< finite mode
    std::optional<double> rate;  ///< dmin mode
    std::vector<Series> series;  ///< empty selects every series the mode supports
    int sample_count = 200;
    bool integer_grid = false;   ///< finite mode: sample delta = d/n, d = 1..n
    std::optional<double> x_min;
    std::optional<double> x_max;
};

std::vector<Series> supported_series(CurveMode mode);
std::string series_name(Series s);
Series parse_series(const std::string& name);
CurveMode parse_curve_mode(const std::string& name);

/// Throws UsageError when the request is inconsistent.
void validate_request(const CurveRequest& request);

/// Header row, then one `x,series...` row per sample; missing values are
/// empty fields.
void write_curve(const CurveRequest& request, std::ostream& out);

/// Largest d with gilbert_finite(n, d) >= r (codes with at least this
/// distance exist).
int gilbert_implied_distance(int n, double r);
/// Largest d with hamming_finite(n, d) >= r (no code of rate r has more).
int hamming_implied_distance(int n, double r);

/// Value formatting shared by every subcommand.
std::string format_fixed(double value, int decimals = 6);

/// Parses and dispatches the command line. Returns the process exit status:
/// 0 success, 1 validation below the 100% |e| < 2 threshold, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mindist
