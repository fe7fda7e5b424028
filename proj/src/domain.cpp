#include "slicereg/domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace slicereg {

namespace {

Bounds intersect_bounds(const Bounds& a, const Bounds& b) {
    Bounds r{std::max(a.alpha_min, b.alpha_min), std::min(a.alpha_max, b.alpha_max),
             std::min(a.beta_max, b.beta_max)};
    if (r.alpha_min > r.alpha_max || r.beta_max < 0.0) {
        throw DomainError("domains do not intersect");
    }
    return r;
}

std::optional<Bounds> intersect_optional(const std::optional<Bounds>& a, const std::optional<Bounds>& b) {
    if (!a) return b;
    if (!b) return a;
    return intersect_bounds(*a, *b);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        out[static_cast<std::size_t>(t)] = lo + (hi - lo) * t / (n - 1);
    }
    return out;
}

}  // namespace

PlanarDomain PlanarDomain::rectangle(double alpha_min, double alpha_max, double beta_max) {
    if (!(alpha_min < alpha_max) || !(beta_max > 0.0)) {
        throw DomainError("rectangle needs alpha_min < alpha_max and beta_max > 0");
    }
    return PlanarDomain(Kind::Rectangle, Bounds{alpha_min, alpha_max, beta_max});
}

PlanarDomain PlanarDomain::plane_minus_real_axis(std::optional<Bounds> clip) {
    if (clip && (!(clip->alpha_min < clip->alpha_max) || !(clip->beta_max > 0.0))) {
        throw DomainError("invalid clipping rectangle");
    }
    return PlanarDomain(Kind::PlaneMinusRealAxis, clip);
}

bool PlanarDomain::contains(double alpha, double beta) const {
    if (kind_ == Kind::PlaneMinusRealAxis && beta == 0.0) {
        return false;
    }
    if (!bounds_) {
        return std::isfinite(alpha) && std::isfinite(beta);
    }
    return alpha >= bounds_->alpha_min && alpha <= bounds_->alpha_max && std::abs(beta) <= bounds_->beta_max;
}

Bounds PlanarDomain::bounding_box() const { return bounds_.value_or(Bounds{}); }

PlanarDomain PlanarDomain::intersect(const PlanarDomain& other) const {
    if (kind_ == Kind::WholePlane) return other;
    if (other.kind_ == Kind::WholePlane) return *this;
    const auto b = intersect_optional(bounds_, other.bounds_);
    if (kind_ == Kind::PlaneMinusRealAxis || other.kind_ == Kind::PlaneMinusRealAxis) {
        return PlanarDomain(Kind::PlaneMinusRealAxis, b);
    }
    return PlanarDomain(Kind::Rectangle, b);
}

std::string PlanarDomain::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::WholePlane: os << "whole-plane"; break;
        case Kind::Rectangle: os << "rectangle"; break;
        case Kind::PlaneMinusRealAxis: os << "plane-minus-real-axis"; break;
    }
    if (bounds_) {
        os << " alpha in [" << bounds_->alpha_min << ", " << bounds_->alpha_max << "], |beta| <= "
           << bounds_->beta_max;
    }
    return os.str();
}

void GridSpec::validate() const {
    if (n_alpha < 2 || n_beta < 2) {
        throw DomainError("grid dimensions must be at least 2");
    }
}

std::vector<GridPoint> grid_points(const PlanarDomain& domain, const GridSpec& grid) {
    grid.validate();
    const Bounds box = domain.bounding_box();
    const auto alphas = linspace(box.alpha_min, box.alpha_max, grid.n_alpha);
    auto betas = linspace(-box.beta_max, box.beta_max, grid.n_beta);
    const double da = (box.alpha_max - box.alpha_min) / (grid.n_alpha - 1);
    const double db = 2.0 * box.beta_max / (grid.n_beta - 1);

    if (!domain.contains_real()) {
        for (double& b : betas) {
            if (std::abs(b) < 1e-12 * box.beta_max) {
                b = 0.5 * db;
            }
        }
    }

    std::vector<GridPoint> out;
    out.reserve(alphas.size() * betas.size());
    std::mt19937_64 rng(grid.seed.value_or(0));
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    for (double a : alphas) {
        for (double b : betas) {
            GridPoint pt{a, b};
            if (grid.seed) {
                pt.alpha = std::clamp(a + jitter(rng) * da, box.alpha_min, box.alpha_max);
                pt.beta = std::clamp(b + jitter(rng) * db, -box.beta_max, box.beta_max);
                if (!domain.contains_real() && pt.beta == 0.0) {
                    pt.beta = 0.25 * db;
                }
            }
            if (domain.contains(pt.alpha, pt.beta)) {
                out.push_back(pt);
            }
        }
    }
    return out;
}

}  // namespace slicereg
