#pragma once

#include <array>
#include <cmath>
#include <span>

namespace cech {

// Absolute tolerance (length units) governing every containment decision of a
// construction run. One instance is threaded through an entire build.
struct Tolerance {
    double eps = 1e-9;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Dataset disks are validated to have radius > 0 and ids 0..n-1. Radius 0 is
// still representable: plane sections of tangent balls produce such disks.
struct Disk {
    int id = -1;
    Point2 center;
    double radius = 0.0;
};

// Points of the boundary intersection of two circles. `identical` marks
// coincident boundaries (infinitely many common points); callers resolve
// those through the containment branch instead.
struct CircleIntersections {
    bool identical = false;
    int count = 0;
    std::array<Point2, 2> points{};
};

CircleIntersections circle_circle_intersections(const Disk& a, const Disk& b, Tolerance tol);

// Closed-disk test: |p - center| <= r + eps.
bool point_in_disk(Point2 p, const Disk& d, Tolerance tol);

// |center_in - center_out| + r_in <= r_out + eps.
bool disk_in_disk(const Disk& inner, const Disk& outer, Tolerance tol);

bool point_in_all(Point2 p, std::span<const Disk> disks, Tolerance tol);

}  // namespace cech
