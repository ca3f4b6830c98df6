#include "cech/geom3d.hpp"

#include <algorithm>

namespace cech {

Plane make_plane(Point3 origin, Vec3 normal) {
    Plane f;
    f.origin = origin;
    f.normal = normalized(normal);
    const double ax = std::abs(f.normal.x);
    const double ay = std::abs(f.normal.y);
    const double az = std::abs(f.normal.z);
    Vec3 e{1, 0, 0};
    if (ay <= ax && ay <= az)
        e = {0, 1, 0};
    else if (az <= ax && az <= ay)
        e = {0, 0, 1};
    f.basis_u = normalized(cross(f.normal, e));
    f.basis_v = cross(f.normal, f.basis_u);
    return f;
}

SphereIntersection sphere_sphere_intersection(const Ball& a, const Ball& b, Tolerance tol) {
    const double eps = tol.eps;
    const Vec3 delta = b.center - a.center;
    const double d = norm(delta);

    SphereIntersection out;
    if (d <= eps && std::abs(a.radius - b.radius) <= eps) {
        out.identical = true;
        return out;
    }

    const double sum = a.radius + b.radius;
    const double diff = std::abs(a.radius - b.radius);
    const bool tangent = std::abs(d - sum) <= eps || std::abs(d - diff) <= eps;
    if (!tangent && (d > sum || d < diff)) return out;  // disjoint or nested

    // Radical-plane construction; the crease circle sits at distance t from a
    // along the center line.
    const double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    const Point3 center = a.center + (t / d) * delta;
    const double r = tangent ? 0.0 : std::sqrt(std::max(0.0, a.radius * a.radius - t * t));
    out.circle = Circle3{make_plane(center, delta), r};
    return out;
}

std::optional<Disk> ball_plane_intersection(const Ball& b, const Plane& f, Tolerance tol) {
    const Vec3 rel = b.center - f.origin;
    const double h = dot(rel, f.normal);
    if (std::abs(h) > b.radius + tol.eps) return std::nullopt;
    const double r = std::sqrt(std::max(0.0, b.radius * b.radius - h * h));
    return Disk{b.id, Point2{dot(rel, f.basis_u), dot(rel, f.basis_v)}, r};
}

bool point_in_ball(Point3 p, const Ball& b, Tolerance tol) {
    return dist(p, b.center) <= b.radius + tol.eps;
}

bool ball_in_ball(const Ball& inner, const Ball& outer, Tolerance tol) {
    return dist(inner.center, outer.center) + inner.radius <= outer.radius + tol.eps;
}

bool point_in_all(Point3 p, std::span<const Ball> balls, Tolerance tol) {
    return std::ranges::all_of(balls, [&](const Ball& b) { return point_in_ball(p, b, tol); });
}

Point3 lift_to_3d(Point2 p, const Plane& f) {
    return f.origin + p.x * f.basis_u + p.y * f.basis_v;
}

Point2 project_to_plane(Point3 p, const Plane& f) {
    const Vec3 rel = p - f.origin;
    return {dot(rel, f.basis_u), dot(rel, f.basis_v)};
}

}  // namespace cech
