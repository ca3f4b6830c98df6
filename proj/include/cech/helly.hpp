#pragma once

#include "cech/simplex.hpp"

namespace cech {

// Helly shortcut, direct form: s (dim > ambient_dim) spans a simplex iff every
// (ambient_dim+1)-subset of its vertices is a member of the complete level of
// ambient_dim-simplices. O(C(k+1, d+1)) membership queries.
bool verify_helly_subsets(const Simplex& s, const SimplexSet& ambient_simplices, int ambient_dim);

// Helly shortcut, face form: s spans a simplex iff all k+1 codimension-1 faces
// are in the complete (k-1)-level. With max-index candidate generation the
// omit-max face is already known present; pass skip_omit_max to save a query.
bool verify_helly_faces(const Simplex& s, const SimplexSet& prev_simplices, int ambient_dim,
                        bool skip_omit_max = false);

}  // namespace cech
