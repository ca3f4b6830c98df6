#include "cech/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cech {

namespace {

void check_strictly_increasing(const std::vector<int>& verts) {
    if (verts.empty()) throw std::logic_error("simplex must have at least one vertex");
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (verts[i] >= verts[i + 1])
            throw std::logic_error("simplex vertices must be strictly increasing");
    if (verts.front() < 0) throw std::logic_error("simplex vertices must be non-negative");
}

}  // namespace

Simplex::Simplex(std::vector<int> verts) : vertices(std::move(verts)) {
    check_strictly_increasing(vertices);
}

Simplex::Simplex(std::initializer_list<int> verts) : Simplex(std::vector<int>(verts)) {}

Simplex with_vertex(const Simplex& s, int v) {
    Simplex out;
    out.vertices.reserve(s.vertices.size() + 1);
    auto pos = std::lower_bound(s.vertices.begin(), s.vertices.end(), v);
    if (pos != s.vertices.end() && *pos == v)
        throw std::logic_error("vertex already present in simplex");
    out.vertices.assign(s.vertices.begin(), pos);
    out.vertices.push_back(v);
    out.vertices.insert(out.vertices.end(), pos, s.vertices.end());
    return out;
}

std::vector<Simplex> faces(const Simplex& s) {
    if (s.dimension() < 1) throw std::logic_error("faces() requires dimension >= 1");
    std::vector<Simplex> out;
    out.reserve(s.vertices.size());
    for (std::size_t omit = 0; omit < s.vertices.size(); ++omit) {
        Simplex f;
        f.vertices.reserve(s.vertices.size() - 1);
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
            if (i != omit) f.vertices.push_back(s.vertices[i]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace cech
