#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "cech/complex_store.hpp"
#include "cech/construct.hpp"

namespace cech {

// Exhaustive reference verifier: (a) minimum-radius disk contained in all
// others, (b) every pairwise boundary intersection tested against all disks.
// No caching, no incremental structure.
std::optional<Point2> verify_reference_2d(std::span<const Disk> disks, Tolerance tol);

// 3D analog: (a) any ball contained in all others, (b) every pairwise crease
// circle sectioned against all remaining balls, with the exhaustive 2D scheme
// run inside each crease plane.
std::optional<Point3> verify_reference_3d(std::span<const Ball> balls, Tolerance tol);

// Exact non-emptiness of the common intersection (closed elements).
bool oracle_2d(std::span<const Disk> disks, Tolerance tol);
bool oracle_3d(std::span<const Ball> balls, Tolerance tol);

// Vietoris-Rips complex by inductive clique expansion over the neighborhood
// graph; purely combinatorial, no geometry beyond the 1-skeleton.
struct VRComplex {
    std::vector<SimplexSet> levels;  // levels[k] holds the k-simplices

    int max_dimension() const { return static_cast<int>(levels.size()) - 1; }
};
VRComplex vr_complex(const NeighborhoodGraph& g, int max_dimension = -1);

inline constexpr std::uint64_t kMebDefaultSeed = 0x9e3779b97f4a7c15ull;

// Smallest enclosing ball via Welzl's randomized incremental algorithm with
// move-to-front; the shuffle is seeded for reproducibility. The support
// points determining the ball are reported for certification.
struct EnclosingBall2 {
    Point2 center;
    double radius = -1.0;  // negative: no points
    int support_count = 0;
    std::array<Point2, 3> support{};
};
struct EnclosingBall3 {
    Point3 center;
    double radius = -1.0;
    int support_count = 0;
    std::array<Point3, 4> support{};
};

EnclosingBall2 minimum_enclosing_ball(std::span<const Point2> points,
                                      std::uint64_t seed = kMebDefaultSeed);
EnclosingBall3 minimum_enclosing_ball(std::span<const Point3> points,
                                      std::uint64_t seed = kMebDefaultSeed);

// Equal-radius simplex test: MEB radius of the centers <= r + eps.
bool verify_meb(std::span<const Point2> centers, double radius, Tolerance tol);
bool verify_meb(std::span<const Point3> centers, double radius, Tolerance tol);

// Full reference pipeline: per level k, all k-combinations from each vertex's
// higher-indexed neighbor set, each candidate checked by the exhaustive
// verifier. The max-dimension cap in opts emulates early stopping.
CechComplex2 build_complex_reference(std::span<const Disk> disks, const BuildOptions& opts);
CechComplex3 build_complex_reference(std::span<const Ball> balls, const BuildOptions& opts);

// Incremental enumeration with minimum-enclosing-ball verification; valid for
// equal radii only (throws ValidationError otherwise).
CechComplex2 build_complex_meb(std::span<const Disk> disks, const BuildOptions& opts);
CechComplex3 build_complex_meb(std::span<const Ball> balls, const BuildOptions& opts);

}  // namespace cech
