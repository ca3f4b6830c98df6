#pragma once

#include <cmath>
#include <optional>
#include <span>

#include "cech/geom2d.hpp"

namespace cech {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};
using Vec3 = Point3;

inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 p) { return std::sqrt(dot(p, p)); }
inline double dist(Point3 a, Point3 b) { return norm(a - b); }
inline Vec3 normalized(Vec3 v) { return (1.0 / norm(v)) * v; }

struct Ball {
    int id = -1;
    Point3 center;
    double radius = 0.0;
};

// Oriented plane with a deterministic in-plane frame.
// normal, basis_u, basis_v are orthonormal and basis_u x basis_v = normal.
struct Plane {
    Point3 origin;
    Vec3 normal;
    Vec3 basis_u;
    Vec3 basis_v;
};

// Frame construction: basis_u = normalize(normal x e) where e is the
// coordinate axis with the smallest |normal| component, basis_v = normal x basis_u.
Plane make_plane(Point3 origin, Vec3 normal);

// Circle in 3-space; the plane origin sits at the circle center.
// Radius 0 encodes a tangency point.
struct Circle3 {
    Plane plane;
    double radius = 0.0;
};

struct SphereIntersection {
    bool identical = false;
    std::optional<Circle3> circle;
};

SphereIntersection sphere_sphere_intersection(const Ball& a, const Ball& b, Tolerance tol);

// Section of a ball by a plane, expressed in the plane's (basis_u, basis_v)
// coordinates; the section keeps the ball's id. Absent when the plane misses.
std::optional<Disk> ball_plane_intersection(const Ball& b, const Plane& f, Tolerance tol);

bool point_in_ball(Point3 p, const Ball& b, Tolerance tol);
bool ball_in_ball(const Ball& inner, const Ball& outer, Tolerance tol);
bool point_in_all(Point3 p, std::span<const Ball> balls, Tolerance tol);

Point3 lift_to_3d(Point2 p, const Plane& f);
Point2 project_to_plane(Point3 p, const Plane& f);

}  // namespace cech
