#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cech/geom2d.hpp"
#include "cech/geom3d.hpp"
#include "cech/simplex.hpp"

namespace cech {

// One dimension of the complex. Membership and witnesses are kept apart so a
// level can drop its witness map (memory policy) while staying queryable.
// Helly-verified levels above the ambient dimension carry no witnesses.
template <typename Point>
struct ComplexLevel {
    int dimension = 0;
    SimplexSet members;
    std::unordered_map<Simplex, Point, SimplexHash> witnesses;

    ComplexLevel() = default;
    explicit ComplexLevel(int dim) : dimension(dim) {}

    bool contains(const Simplex& s) const { return members.contains(s); }
    std::size_t size() const { return members.size(); }

    void insert(const Simplex& s, std::optional<Point> witness) {
        if (s.dimension() != dimension)
            throw std::logic_error("simplex dimension does not match level");
        if (!members.insert(s).second) return;  // idempotent re-insert
        if (witness) witnesses.emplace(s, *witness);
    }

    const Point* witness(const Simplex& s) const {
        auto it = witnesses.find(s);
        return it == witnesses.end() ? nullptr : &it->second;
    }
};

using ComplexLevel2 = ComplexLevel<Point2>;
using ComplexLevel3 = ComplexLevel<Point3>;

// 1-skeleton as per-vertex sorted neighbor lists; symmetric, no self-loops.
struct NeighborhoodGraph {
    std::vector<std::vector<int>> neighbors;

    int vertex_count() const { return static_cast<int>(neighbors.size()); }
    std::size_t edge_count() const;
    bool adjacent(int u, int v) const;
};

// Intersection of the neighbor sets of s's vertices; never contains s's own
// vertices (no self-loops).
std::vector<int> common_neighbors(const NeighborhoodGraph& g, const Simplex& s);

struct LevelStats {
    int k = 0;
    std::uint64_t candidates = 0;
    std::uint64_t cech_count = 0;
    std::optional<std::uint64_t> vr_count;
    std::uint64_t verify_ns = 0;
    std::uint64_t total_ns = 0;
};

struct BenchStats {
    std::uint64_t graph_ns = 0;
    std::uint64_t total_ns = 0;
    std::vector<LevelStats> levels;
};

template <typename Point>
struct CechComplex {
    int ambient_dim = 0;
    double eps = 0.0;
    std::vector<ComplexLevel<Point>> levels;  // levels[k] holds the k-simplices
    BenchStats stats;

    int max_dimension() const { return static_cast<int>(levels.size()) - 1; }
};

using CechComplex2 = CechComplex<Point2>;
using CechComplex3 = CechComplex<Point3>;

}  // namespace cech
