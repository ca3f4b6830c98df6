#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cech/complex_store.hpp"

namespace cech {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VerifyMode { Geometric, HellySubsets, HellyFaces };

struct BuildOptions {
    int max_dimension = -1;  // -1: grow until a level comes out empty
    Tolerance tol{};
    VerifyMode verify_mode = VerifyMode::Geometric;
    int threads = 1;  // 0: hardware concurrency
    bool deterministic = false;
    bool keep_all_witnesses = false;
};

// Throws ValidationError unless ids are 0..n-1 in order, radii positive and
// coordinates finite.
void validate_dataset(std::span<const Disk> disks);
void validate_dataset(std::span<const Ball> balls);

// Edge (i,j) present iff |p_i - p_j| <= r_i + r_j + eps (closed intersection).
// All-pairs by default; a uniform-grid bucket index kicks in for large n.
NeighborhoodGraph build_neighborhood_graph(std::span<const Disk> disks, Tolerance tol);
NeighborhoodGraph build_neighborhood_graph(std::span<const Ball> balls, Tolerance tol);

struct Candidate {
    Simplex base;
    int vertex;
    bool operator==(const Candidate&) const = default;
};

// Candidate pairs (s, d) with d a common neighbor of s's vertices and
// d > max(s). Every true k-simplex is produced exactly once, as
// (its omit-max face, its max vertex). Sorted (s lexicographic, d ascending)
// when `deterministic`.
std::vector<Candidate> generate_candidates(const SimplexSet& prev_level,
                                           const NeighborhoodGraph& g,
                                           bool deterministic = true);

// Incremental candidate verification. Branch order: (1) smallest element of
// s_prev + {d} contained in all others -> its center; (2) cached witness of
// s_prev inside d -> unchanged; (3) boundary intersections of d with each
// member of s_prev, tested against the whole candidate.
std::optional<Point2> verify_candidate_2d(const Simplex& s_prev, const Disk& d, Point2 cached_p,
                                          std::span<const Disk> all_disks, Tolerance tol);

// 3D analog: branch (3) walks the crease circle of d against each member,
// sections the remaining balls with the crease plane and runs the 2D
// containment logic in that plane.
std::optional<Point3> verify_candidate_3d(const Simplex& s_prev, const Ball& b, Point3 cached_p,
                                          std::span<const Ball> all_balls, Tolerance tol);

// Witness for a 1-simplex: the radical point of the two boundaries on the
// center segment, clamped into both elements; for nested pairs the smaller
// element's center.
Point2 edge_witness(const Disk& a, const Disk& b, Tolerance tol);
Point3 edge_witness(const Ball& a, const Ball& b, Tolerance tol);

// Builds the complete level of k-simplices from the completed (k-1)-level.
// `ambient_simplices` (the completed ambient-dimension level) is required for
// VerifyMode::HellySubsets above the ambient dimension.
ComplexLevel2 build_k_simplices(const ComplexLevel2& prev, const NeighborhoodGraph& g,
                                std::span<const Disk> disks, const BuildOptions& opts,
                                LevelStats* stats = nullptr,
                                const SimplexSet* ambient_simplices = nullptr);
ComplexLevel3 build_k_simplices(const ComplexLevel3& prev, const NeighborhoodGraph& g,
                                std::span<const Ball> balls, const BuildOptions& opts,
                                LevelStats* stats = nullptr,
                                const SimplexSet* ambient_simplices = nullptr);

CechComplex2 build_complex(std::span<const Disk> disks, const BuildOptions& opts);
CechComplex3 build_complex(std::span<const Ball> balls, const BuildOptions& opts);

// Same level loop with the verification step swapped out; used by the
// minimum-enclosing-ball construction. The hook sees (base simplex, cached
// witness or null, extension vertex) and returns a witness to accept.
using VerifyHook2 = std::function<std::optional<Point2>(const Simplex&, const Point2*, int)>;
using VerifyHook3 = std::function<std::optional<Point3>(const Simplex&, const Point3*, int)>;
CechComplex2 build_complex_with_verifier(std::span<const Disk> disks, const BuildOptions& opts,
                                         const VerifyHook2& hook);
CechComplex3 build_complex_with_verifier(std::span<const Ball> balls, const BuildOptions& opts,
                                         const VerifyHook3& hook);

}  // namespace cech
