#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Numeric tolerances shared by the evaluation, series and root-finding code.
struct Tolerances {
    double eval = 1e-9;      ///< identity residuals and "identically zero" tests
    double series = 1e-12;   ///< remainder bound for truncated star series
    double root = 1e-9;      ///< polynomial root residual
    double cluster = 1e-6;   ///< multiplicity grouping, relative to |root| + 1
};

/// alpha in [alpha_min, alpha_max], beta in [-beta_max, beta_max].
struct Bounds {
    double alpha_min = -2.0;
    double alpha_max = 2.0;
    double beta_max = 2.0;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Conjugation-symmetric planar set D whose circularization is the domain
/// of a slice function.  Every kind has simply connected slices.
class PlanarDomain {
public:
    enum class Kind { WholePlane, Rectangle, PlaneMinusRealAxis };

    static PlanarDomain whole_plane() { return PlanarDomain(Kind::WholePlane, std::nullopt); }
    static PlanarDomain rectangle(double alpha_min, double alpha_max, double beta_max);
    /// Optionally clipped to a bounding rectangle (still excluding beta = 0).
    static PlanarDomain plane_minus_real_axis(std::optional<Bounds> clip = std::nullopt);

    Kind kind() const { return kind_; }
    const std::optional<Bounds>& bounds() const { return bounds_; }
    bool contains_real() const { return kind_ != Kind::PlaneMinusRealAxis; }
    bool contains(double alpha, double beta) const;

    /// The explicit bounds, or [-2,2] x [-2,2] for unbounded kinds.
    Bounds bounding_box() const;

    PlanarDomain intersect(const PlanarDomain& other) const;

    std::string describe() const;

    friend bool operator==(const PlanarDomain&, const PlanarDomain&) = default;

private:
    PlanarDomain(Kind kind, std::optional<Bounds> bounds) : kind_(kind), bounds_(bounds) {}

    Kind kind_;
    std::optional<Bounds> bounds_;
};

/// Sampling grid over the bounding box of a domain.
struct GridSpec {
    int n_alpha = 21;
    int n_beta = 21;
    /// When set, every node is jittered inside its cell (deterministically per seed).
    std::optional<std::uint64_t> seed;

    /// Throws DomainError unless both dimensions are >= 2.
    void validate() const;
};

struct GridPoint {
    double alpha;
    double beta;
};

/// Grid nodes inside `domain`; beta = 0 is avoided when the domain has no real points.
std::vector<GridPoint> grid_points(const PlanarDomain& domain, const GridSpec& grid);

}  // namespace slicereg
