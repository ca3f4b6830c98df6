#include "cech/geom2d.hpp"

#include <algorithm>

namespace cech {

CircleIntersections circle_circle_intersections(const Disk& a, const Disk& b, Tolerance tol) {
    const double eps = tol.eps;
    const Point2 delta = b.center - a.center;
    const double d = norm(delta);

    CircleIntersections out;
    if (d <= eps && std::abs(a.radius - b.radius) <= eps) {
        out.identical = true;
        return out;
    }

    const double sum = a.radius + b.radius;
    const double diff = std::abs(a.radius - b.radius);
    const bool tangent = std::abs(d - sum) <= eps || std::abs(d - diff) <= eps;
    if (!tangent && (d > sum || d < diff)) return out;  // disjoint or nested

    // Radical-line construction: foot point on the center line at distance t
    // from a, chord half-length h perpendicular to it.
    const double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    const Point2 foot = a.center + (t / d) * delta;
    if (tangent) {
        out.count = 1;
        out.points[0] = foot;
        return out;
    }
    const double h = std::sqrt(std::max(0.0, a.radius * a.radius - t * t));
    const Point2 off{-(h / d) * delta.y, (h / d) * delta.x};
    out.count = 2;
    out.points[0] = foot + off;
    out.points[1] = foot - off;
    return out;
}

bool point_in_disk(Point2 p, const Disk& d, Tolerance tol) {
    return dist(p, d.center) <= d.radius + tol.eps;
}

bool disk_in_disk(const Disk& inner, const Disk& outer, Tolerance tol) {
    return dist(inner.center, outer.center) + inner.radius <= outer.radius + tol.eps;
}

bool point_in_all(Point2 p, std::span<const Disk> disks, Tolerance tol) {
    return std::ranges::all_of(disks, [&](const Disk& d) { return point_in_disk(p, d, tol); });
}

}  // namespace cech
