#include "cech/helly.hpp"

#include <stdexcept>

namespace cech {

bool verify_helly_subsets(const Simplex& s, const SimplexSet& ambient_simplices, int ambient_dim) {
    if (s.dimension() <= ambient_dim)
        throw std::logic_error("Helly verification requires dimension above the ambient dimension");
    Simplex probe;
    return for_each_combination(s.vertices, ambient_dim + 1, [&](const std::vector<int>& combo) {
        probe.vertices = combo;
        return ambient_simplices.contains(probe);
    });
}

bool verify_helly_faces(const Simplex& s, const SimplexSet& prev_simplices, int ambient_dim,
                        bool skip_omit_max) {
    if (s.dimension() <= ambient_dim)
        throw std::logic_error("Helly verification requires dimension above the ambient dimension");
    const std::size_t count = s.vertices.size();
    Simplex face;
    face.vertices.resize(count - 1);
    // face omitting position `omit`; position count-1 is the omit-max face
    const std::size_t last = skip_omit_max ? count - 1 : count;
    for (std::size_t omit = 0; omit < last; ++omit) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < count; ++i)
            if (i != omit) face.vertices[w++] = s.vertices[i];
        if (!prev_simplices.contains(face)) return false;
    }
    return true;
}

}  // namespace cech
