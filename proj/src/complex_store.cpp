#include "cech/complex_store.hpp"

#include <algorithm>

namespace cech {

std::size_t NeighborhoodGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& nbr : neighbors) deg += nbr.size();
    return deg / 2;
}

bool NeighborhoodGraph::adjacent(int u, int v) const {
    const auto& nbr = neighbors[u];
    return std::binary_search(nbr.begin(), nbr.end(), v);
}

std::vector<int> common_neighbors(const NeighborhoodGraph& g, const Simplex& s) {
    std::vector<int> acc = g.neighbors[s.vertices.front()];
    std::vector<int> tmp;
    for (std::size_t i = 1; i < s.vertices.size() && !acc.empty(); ++i) {
        const auto& nbr = g.neighbors[s.vertices[i]];
        tmp.clear();
        std::set_intersection(acc.begin(), acc.end(), nbr.begin(), nbr.end(),
                              std::back_inserter(tmp));
        acc.swap(tmp);
    }
    return acc;
}

}  // namespace cech
