#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <unordered_set>
#include <vector>

namespace cech {

// Abstract simplex: strictly increasing vertex indices, length = dimension + 1.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<int> verts);
    Simplex(std::initializer_list<int> verts);

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    int max_vertex() const { return vertices.back(); }

    bool operator==(const Simplex&) const = default;
    auto operator<=>(const Simplex&) const = default;  // lexicographic
};

// Simplex with `v` added; `v` must not already be a vertex.
Simplex with_vertex(const Simplex& s, int v);

// All codimension-1 faces, omitting vertex positions 0..k in that order.
std::vector<Simplex> faces(const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        // FNV-1a over the vertex words
        std::uint64_t h = 1469598103934665603ull;
        for (int v : s.vertices) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

// Calls fn(const std::vector<int>&) for every size-r subset of `items`,
// in lexicographic order. Stops early if fn returns false.
template <typename Fn>
bool for_each_combination(const std::vector<int>& items, int r, Fn&& fn) {
    const int n = static_cast<int>(items.size());
    if (r < 0 || r > n) return true;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> combo(r);
    while (true) {
        for (int i = 0; i < r; ++i) combo[i] = items[idx[i]];
        if (!fn(static_cast<const std::vector<int>&>(combo))) return false;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace cech
