#pragma once

// Reference implementations used only by the tests. They deliberately share
// nothing with the library: binomial sums use a hand-rolled base-2^32
// integer built from Pascal-row additions, and the quadratic segment is
// rebuilt by Lagrange interpolation in long double.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

class Natural {
public:
    explicit Natural(std::uint32_t v = 0) {
        if (v != 0) limbs_.push_back(v);
    }

    Natural& operator+=(const Natural& other) {
        if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint64_t sum =
                carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : std::uint64_t{0});
            limbs_[i] = static_cast<std::uint32_t>(sum);
            carry = sum >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }

    // log2 from the top three limbs; the dropped tail contributes < 2^-64.
    [[nodiscard]] long double log2() const {
        const std::size_t size = limbs_.size();
        long double mantissa = 0.0L;
        const std::size_t take = size < 3 ? size : 3;
        for (std::size_t i = 0; i < take; ++i) {
            mantissa = mantissa * 4294967296.0L + limbs_[size - 1 - i];
        }
        return std::log2(mantissa) + 32.0L * static_cast<long double>(size - take);
    }

private:
    std::vector<std::uint32_t> limbs_;
};

/// log2 of sum_{i<=t} C(n, i) for every t in [0, n].
inline std::vector<long double> log2_prefix_sums(int n) {
    std::vector<Natural> row{Natural(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<Natural> next(static_cast<std::size_t>(m) + 1, Natural(1));
        for (int i = 1; i < m; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    std::vector<long double> out;
    Natural sum;
    for (const auto& c : row) {
        sum += c;
        out.push_back(sum.log2());
    }
    return out;
}

inline long double plotkin(int n, long double delta) {
    return (1.0L - std::log2(2.0L - 1.0L / delta)) / n;
}

struct Parabola {
    long double a, b, c;
    long double operator()(long double x) const { return (a * x + b) * x + c; }
};

/// Parabola through three points, expanded from the Lagrange basis.
inline Parabola lagrange(const std::array<long double, 3>& x, const std::array<long double, 3>& y) {
    Parabola p{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        const long double xj = x[(i + 1) % 3];
        const long double xk = x[(i + 2) % 3];
        const long double w = y[i] / ((x[i] - xj) * (x[i] - xk));
        p.a += w;
        p.b -= w * (xj + xk);
        p.c += w * xj * xk;
    }
    return p;
}

/// Anchors (1/n, 1), (m/n, P(m/n)), ((m+1)/n, P((m+1)/n)) with
/// m = ceil(n/2 + log2(n)/2).
inline Parabola model_parabola(int n) {
    const long double m = std::ceil(n / 2.0L + std::log2(static_cast<long double>(n)) / 2.0L);
    const std::array<long double, 3> x{1.0L / n, m / n, (m + 1) / n};
    return lagrange(x, {1.0L, plotkin(n, x[1]), plotkin(n, x[2])});
}

inline long double entropy(long double q) {
    return -q * std::log2(q) - (1 - q) * std::log2(1 - q);
}

}  // namespace oracle
