#pragma once

// Invertible two-segment approximation of the rate versus minimum distance
// trade-off: a per-n parabola for small delta that hands over to the
// Plotkin expression at delta_2 = ceil(n/2 + xi(n)) / n.

#include <functional>
#include <memory>

#include "mindist/types.hpp"

namespace mindist {

/// Transition offset log2(n)/2.
double xi(int n);

using XiFunction = std::function<double(int)>;

/// Coefficients of the quadratic segment for one code length, together with
/// the three anchor points it interpolates.
struct QuadraticParams {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double xi = 0.0;
    double delta1 = 0.0, delta2 = 0.0, delta3 = 0.0;
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;

    // First divided difference (r2 - r1)/(delta2 - delta1); the second one is a.
    double slope12 = 0.0;

    /// a delta^2 + b delta + c, evaluated in Newton form about delta1 so the
    /// anchor r1 is reproduced exactly.
    [[nodiscard]] double evaluate(double delta) const noexcept;
};

/// Which root of (2 delta - 1)^2 = r to return.
enum class InverseRoot {
    Decreasing,  ///< (1 - sqrt r)/2, on the limb the model actually uses
    AsPrinted,   ///< (1 + sqrt r)/2
};

/// The approximation for a given choice of xi(n). Parameters are solved
/// lazily and cached per n; the cache is safe for concurrent use.
class TwoSegmentModel {
public:
    TwoSegmentModel();
    explicit TwoSegmentModel(XiFunction xi_function);
    ~TwoSegmentModel();

    TwoSegmentModel(TwoSegmentModel&&) noexcept;
    TwoSegmentModel& operator=(TwoSegmentModel&&) noexcept;

    [[nodiscard]] double xi(int n) const;

    /// Solves the 3x3 interpolation system through (1/n, 1), (delta_2, r_2)
    /// and (delta_3, r_3). Requires n >= 2.
    [[nodiscard]] QuadraticParams solve_params(int n) const;

    [[nodiscard]] Rate rate_from_delta(int n, NormalizedDistance delta) const;
    [[nodiscard]] Rate rate_from_dmin(int n, int d) const;
    [[nodiscard]] NormalizedDistance delta_from_rate(int n, Rate r) const;
    [[nodiscard]] double dmin(int n, double k) const;

private:
    struct Impl;
    [[nodiscard]] double invert(int n, double r, double rn) const;
    std::unique_ptr<Impl> impl_;
};

/// Model with xi(n) = log2(n)/2, shared by the free functions below.
const TwoSegmentModel& default_model();

QuadraticParams solve_params(int n);
Rate rate_from_delta(int n, NormalizedDistance delta);
Rate rate_from_dmin(int n, int d);
NormalizedDistance delta_from_rate(int n, Rate r);

/// Real-valued minimum distance n * delta(n, k/n); not rounded.
double dmin(int n, double k);

/// Inverse of the asymptotic model (2 delta - 1)^2. Returns a plain double
/// since the decreasing root reaches 0 at r = 1.
double asymptotic_delta_from_rate(Rate r, InverseRoot root = InverseRoot::Decreasing);

}  // namespace mindist
