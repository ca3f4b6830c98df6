#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cech/geom2d.hpp"
#include "cech/geom3d.hpp"

namespace cech {

struct Box2 {
    double lo_x = 0, lo_y = 0;
    double hi_x = 1, hi_y = 1;
};

struct Box3 {
    double lo_x = 0, lo_y = 0, lo_z = 0;
    double hi_x = 1, hi_y = 1, hi_z = 1;
};

// Bridson dart throwing: pairwise distances >= min_spacing, approximately
// maximal coverage with the given number of candidate attempts per active
// sample. Deterministic for a fixed seed.
std::vector<Point2> poisson_disk_positions(const Box2& extent, double min_spacing,
                                           std::uint64_t seed, int attempts = 30);
std::vector<Point3> poisson_disk_positions(const Box3& extent, double min_spacing,
                                           std::uint64_t seed, int attempts = 30);

std::vector<Point2> uniform_positions(const Box2& extent, int n, std::uint64_t seed);
std::vector<Point3> uniform_positions(const Box3& extent, int n, std::uint64_t seed);

// Radii alpha * base_radius with alpha ~ U(alpha_lo, alpha_hi).
std::vector<double> sample_radii(int n, double base_radius, double alpha_lo, double alpha_hi,
                                 std::uint64_t seed);

std::vector<Disk> make_disks(std::span<const Point2> positions, std::span<const double> radii);
std::vector<Ball> make_balls(std::span<const Point3> positions, std::span<const double> radii);

}  // namespace cech
