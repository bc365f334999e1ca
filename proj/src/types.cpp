#include "mindist/types.hpp"

#include <cmath>

namespace mindist {

Rate::Rate(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw DomainError("rate must lie in [0, 1], got " + std::to_string(value));
    }
}

NormalizedDistance::NormalizedDistance(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError("normalized distance must be finite and positive, got " + std::to_string(value));
    }
}

NormalizedDistance NormalizedDistance::of_code(int n, int d) {
    if (n < 1 || d < 1 || d > n) {
        throw DomainError("need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    return NormalizedDistance(static_cast<double>(d) / n);
}

bool BoundKind::is_valid(BoundFamily family, Regime regime) noexcept {
    switch (family) {
        case BoundFamily::Plotkin:
            return regime == Regime::Finite;
        case BoundFamily::Mrrw:
        case BoundFamily::QuadraticModel:
            return regime == Regime::Asymptotic;
        case BoundFamily::GilbertVarshamov:
        case BoundFamily::Hamming:
            return true;
    }
    return false;
}

BoundKind BoundKind::make(BoundFamily family, Regime regime) {
    if (!is_valid(family, regime)) {
        throw std::invalid_argument(to_string(family) + " has no " +
                                    (regime == Regime::Finite ? "finite" : "asymptotic") + " form");
    }
    return {family, regime};
}

std::string to_string(BoundFamily family) {
    switch (family) {
        case BoundFamily::GilbertVarshamov: return "Gilbert-Varshamov";
        case BoundFamily::Hamming: return "Hamming";
        case BoundFamily::Plotkin: return "Plotkin";
        case BoundFamily::Mrrw: return "MRRW";
        case BoundFamily::QuadraticModel: return "quadratic model";
    }
    return "unknown";
}

}  // namespace mindist
