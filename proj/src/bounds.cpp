#include "mindist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mindist {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kMaxFormalDelta = 1.5;

void require_code(int n, int d) {
    if (n < 1 || d < 1 || d > n) {
        throw DomainError("need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
}

// log2 of a positive integer: exact exponent plus the log of the leading
// 63 bits.
double log2_of(const cpp_int& value) {
    const auto top_bit = static_cast<long>(boost::multiprecision::msb(value));
    if (top_bit < 63) {
        return std::log2(value.convert_to<double>());
    }
    const long shift = top_bit - 62;
    const auto leading = static_cast<std::uint64_t>(value >> shift);
    return std::log2(static_cast<double>(leading)) + static_cast<double>(shift);
}

}  // namespace

double binary_entropy(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError("binary entropy argument must lie in [0, 1], got " + std::to_string(q));
    }
    if (q == 0.0 || q == 1.0) {
        return 0.0;
    }
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double log2_binomial_sum(int n, int t) {
    if (n < 1 || t < 0 || t > n) {
        throw DomainError("need n >= 1 and 0 <= t <= n, got n=" + std::to_string(n) + " t=" + std::to_string(t));
    }
    if (t == n) {
        return static_cast<double>(n);
    }
    cpp_int term = 1;
    cpp_int sum = 1;
    for (int i = 0; i < t; ++i) {
        term *= n - i;
        term /= i + 1;  // exact: term is C(n, i+1)
        sum += term;
    }
    return log2_of(sum);
}

Rate gilbert_finite(int n, int d) {
    require_code(n, d);
    const double r = 1.0 - log2_binomial_sum(n, d - 1) / n;
    return Rate(std::clamp(r, 0.0, 1.0));
}

Rate hamming_finite(int n, int d) {
    require_code(n, d);
    const double r = 1.0 - log2_binomial_sum(n, (d - 1) / 2) / n;
    return Rate(std::clamp(r, 0.0, 1.0));
}

Rate plotkin_finite(int n, NormalizedDistance delta) {
    if (n < 1) {
        throw DomainError("code length must be positive, got " + std::to_string(n));
    }
    const double x = delta.value();
    if (!(x > 0.5) || x > kMaxFormalDelta) {
        throw DomainError("Plotkin bound needs 1/2 < delta <= 1.5, got " + std::to_string(x));
    }
    const double r = (1.0 - std::log2(2.0 - 1.0 / x)) / n;
    return Rate(std::min(r, 1.0));
}

Rate asymptotic_bound(BoundKind kind, NormalizedDistance delta) {
    if (kind.regime != Regime::Asymptotic || !BoundKind::is_valid(kind.family, kind.regime)) {
        throw std::invalid_argument("asymptotic_bound called with a finite-regime bound");
    }
    const double x = delta.value();
    const bool closed = kind.family == BoundFamily::Mrrw || kind.family == BoundFamily::QuadraticModel;
    if (closed ? x > 1.0 : x >= 1.0) {
        throw DomainError("asymptotic " + to_string(kind.family) + " bound needs delta in (0, 1" +
                          (closed ? "]" : ")") + ", got " + std::to_string(x));
    }
    switch (kind.family) {
        case BoundFamily::GilbertVarshamov:
            return Rate(std::max(0.0, 1.0 - binary_entropy(x)));
        case BoundFamily::Hamming:
            return Rate(1.0 - binary_entropy(x / 2.0));
        case BoundFamily::Mrrw: {
            // sqrt(x(1-x)) <= 1/2 on (0, 1], so the argument stays in [0, 1/2].
            const double arg = std::max(0.0, 0.5 - std::sqrt(x * (1.0 - x)));
            return Rate(binary_entropy(arg));
        }
        case BoundFamily::QuadraticModel: {
            const double m = 2.0 * x - 1.0;
            return Rate(m * m);
        }
        case BoundFamily::Plotkin:
            break;
    }
    throw std::invalid_argument("asymptotic_bound called with a finite-regime bound");
}

}  // namespace mindist
