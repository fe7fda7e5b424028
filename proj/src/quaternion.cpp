#include "slicereg/quaternion.hpp"

#include <array>
#include <cstdio>
#include <ostream>

namespace slicereg {

Quaternion inv(const Quaternion& a) {
    const double n2 = norm2(a);
    if (n2 == 0.0) {
        throw DomainError("inverse of the zero quaternion");
    }
    return conj(a) / n2;
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& u, double tol) : u_(u) {
    if (std::abs(u.w) > tol || std::abs(norm(u) - 1.0) > tol) {
        throw DomainError("not a unit imaginary quaternion: " + to_string(u));
    }
}

ImaginaryUnit ImaginaryUnit::normalized(const Quaternion& v) {
    const Quaternion im = vec(v);
    const double n = norm(im);
    if (n == 0.0) {
        throw DomainError("cannot normalize a real quaternion to an imaginary unit");
    }
    return ImaginaryUnit(im / n);
}

SphereCoords sphere_coords(const Quaternion& a, double tol) {
    const Quaternion im = vec(a);
    const double beta = norm(im);
    if (beta < tol) {
        return {a.w, 0.0, std::nullopt};
    }
    return {a.w, beta, ImaginaryUnit(im / beta)};
}

OrthonormalBasis orthonormal_basis(const ImaginaryUnit& I) {
    const Quaternion& u = I.value();
    const std::array<Quaternion, 3> axes{Quaternion::i(), Quaternion::j(), Quaternion::k()};
    const std::array<double, 3> align{std::abs(u.x), std::abs(u.y), std::abs(u.z)};

    std::size_t best = 0;
    for (std::size_t a = 1; a < 3; ++a) {
        if (align[a] < align[best]) {
            best = a;
        }
    }
    const Quaternion e = axes[best];
    const Quaternion J = e - u * dot(e, u);
    const ImaginaryUnit Ju(J / norm(J));
    return {I, Ju, ImaginaryUnit(u * Ju.value())};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << to_string(q);
}

std::string to_string(const Quaternion& q) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi%+.12gj%+.12gk", q.w, q.x, q.y, q.z);
    return buf;
}

}  // namespace slicereg
