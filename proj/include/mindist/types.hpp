#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace mindist {

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Code rate r = k/n, always in [0, 1].
class Rate {
public:
    constexpr Rate() = default;
    explicit Rate(double value);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Rate, Rate) = default;

private:
    double value_ = 0.0;
};

/// Normalized minimum distance delta = d/n.
///
/// Codes only produce values in (0, 1]. Larger values show up as formal
/// evaluation points (the Plotkin expression at delta_3 for n <= 3, or the
/// inverse map at rates below 1/n), so the type itself only requires a
/// finite positive value; each operation checks its own range.
class NormalizedDistance {
public:
    explicit NormalizedDistance(double value);

    /// d/n for an actual code, 1 <= d <= n.
    static NormalizedDistance of_code(int n, int d);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend constexpr auto operator<=>(NormalizedDistance, NormalizedDistance) = default;

private:
    double value_;
};

enum class BoundFamily { GilbertVarshamov, Hamming, Plotkin, Mrrw, QuadraticModel };
enum class Regime { Finite, Asymptotic };

/// A bound family together with its regime. Plotkin is finite-only, MRRW
/// and the quadratic model are asymptotic-only; other combinations are
/// rejected by make().
struct BoundKind {
    BoundFamily family;
    Regime regime;

    static BoundKind make(BoundFamily family, Regime regime);
    static bool is_valid(BoundFamily family, Regime regime) noexcept;

    friend constexpr bool operator==(BoundKind, BoundKind) = default;
};

std::string to_string(BoundFamily family);

}  // namespace mindist
