#include "mindist/approx.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "mindist/bounds.hpp"

namespace mindist {

double xi(int n) {
    if (n < 1) {
        throw DomainError("code length must be positive, got " + std::to_string(n));
    }
    return std::log2(static_cast<double>(n)) / 2.0;
}

double QuadraticParams::evaluate(double delta) const noexcept {
    return r1 + (delta - delta1) * (slope12 + a * (delta - delta2));
}

struct TwoSegmentModel::Impl {
    XiFunction xi_function;
    mutable std::shared_mutex mutex;
    mutable std::unordered_map<int, QuadraticParams> cache;
};

TwoSegmentModel::TwoSegmentModel() : TwoSegmentModel(XiFunction(&mindist::xi)) {}

TwoSegmentModel::TwoSegmentModel(XiFunction xi_function) : impl_(std::make_unique<Impl>()) {
    if (!xi_function) {
        throw std::invalid_argument("xi function must be callable");
    }
    impl_->xi_function = std::move(xi_function);
}

TwoSegmentModel::~TwoSegmentModel() = default;
TwoSegmentModel::TwoSegmentModel(TwoSegmentModel&&) noexcept = default;
TwoSegmentModel& TwoSegmentModel::operator=(TwoSegmentModel&&) noexcept = default;

double TwoSegmentModel::xi(int n) const {
    if (n < 1) {
        throw DomainError("code length must be positive, got " + std::to_string(n));
    }
    return impl_->xi_function(n);
}

QuadraticParams TwoSegmentModel::solve_params(int n) const {
    if (n < 2) {
        throw DomainError("quadratic segment needs n >= 2, got " + std::to_string(n));
    }
    {
        std::shared_lock lock(impl_->mutex);
        if (auto it = impl_->cache.find(n); it != impl_->cache.end()) {
            return it->second;
        }
    }

    QuadraticParams p;
    p.n = n;
    p.xi = xi(n);
    const double transition = std::ceil(n / 2.0 + p.xi);
    p.delta1 = 1.0 / n;
    p.delta2 = transition / n;
    p.delta3 = (transition + 1.0) / n;
    if (!(p.delta1 < p.delta2)) {
        throw DomainError("xi(" + std::to_string(n) + ") puts the transition at or below 1/n");
    }
    p.r1 = 1.0;
    p.r2 = plotkin_finite(n, NormalizedDistance(p.delta2)).value();
    p.r3 = plotkin_finite(n, NormalizedDistance(p.delta3)).value();

    // Newton divided differences of the three anchors.
    p.slope12 = (p.r2 - p.r1) / (p.delta2 - p.delta1);
    const double slope23 = (p.r3 - p.r2) / (p.delta3 - p.delta2);
    p.a = (slope23 - p.slope12) / (p.delta3 - p.delta1);
    p.b = p.slope12 - p.a * (p.delta1 + p.delta2);
    p.c = p.r1 - p.slope12 * p.delta1 + p.a * p.delta1 * p.delta2;

    std::unique_lock lock(impl_->mutex);
    impl_->cache.emplace(n, p);
    return p;
}

Rate TwoSegmentModel::rate_from_delta(int n, NormalizedDistance delta) const {
    if (n < 1) {
        throw DomainError("code length must be positive, got " + std::to_string(n));
    }
    const double x = delta.value();
    if (x < 1.0 / n || x > 1.0) {
        throw DomainError("delta must lie in [1/n, 1], got " + std::to_string(x) + " for n=" + std::to_string(n));
    }
    if (n == 1) {
        return Rate(1.0);
    }
    const QuadraticParams p = solve_params(n);
    const double r = x < p.delta2 ? p.evaluate(x) : plotkin_finite(n, delta).value();
    return Rate(std::clamp(r, 0.0, 1.0));
}

Rate TwoSegmentModel::rate_from_dmin(int n, int d) const {
    return rate_from_delta(n, NormalizedDistance::of_code(n, d));
}

// Returns delta; rn is r*n supplied exactly by callers that know k.
double TwoSegmentModel::invert(int n, double r, double rn) const {
    if (n < 1) {
        throw DomainError("code length must be positive, got " + std::to_string(n));
    }
    if (!(r > 0.0) || r > 1.0) {
        throw DomainError("rate must lie in (0, 1], got " + std::to_string(r));
    }
    if (n == 1) {
        return 1.0;
    }
    if (r > std::log2(n + 1.0) / n) {
        const QuadraticParams p = solve_params(n);
        const double discriminant = p.b * p.b - 4.0 * p.a * (p.c - r);
        if (discriminant < 0.0) {
            throw std::logic_error("negative discriminant inverting n=" + std::to_string(n) +
                                   " r=" + std::to_string(r));
        }
        // The left limb reaches r = 1 at delta1; keep rounding from undershooting it.
        return std::max(p.delta1, (-p.b - std::sqrt(discriminant)) / (2.0 * p.a));
    }
    const double half = std::exp2(rn - 1.0);
    return half / (2.0 * half - 1.0);
}

NormalizedDistance TwoSegmentModel::delta_from_rate(int n, Rate r) const {
    return NormalizedDistance(invert(n, r.value(), r.value() * n));
}

double TwoSegmentModel::dmin(int n, double k) const {
    if (n < 1 || !(k > 0.0) || k > n) {
        throw DomainError("need 0 < k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    const double r = k / n;
    if (n > 1 && !(r > std::log2(n + 1.0) / n)) {
        // n * 2^(k-1) / (2^k - 1), kept exact for integer k.
        const double half = std::exp2(k - 1.0);
        return n * half / (2.0 * half - 1.0);
    }
    return n * invert(n, r, k);
}

const TwoSegmentModel& default_model() {
    static const TwoSegmentModel model;
    return model;
}

QuadraticParams solve_params(int n) { return default_model().solve_params(n); }

Rate rate_from_delta(int n, NormalizedDistance delta) { return default_model().rate_from_delta(n, delta); }

Rate rate_from_dmin(int n, int d) { return default_model().rate_from_dmin(n, d); }

NormalizedDistance delta_from_rate(int n, Rate r) { return default_model().delta_from_rate(n, r); }

double dmin(int n, double k) { return default_model().dmin(n, k); }

double asymptotic_delta_from_rate(Rate r, InverseRoot root) {
    const double s = std::sqrt(r.value());
    return root == InverseRoot::Decreasing ? (1.0 - s) / 2.0 : (1.0 + s) / 2.0;
}

}  // namespace mindist
