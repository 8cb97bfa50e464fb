#pragma once

#include "bierfan/simplicial_complex.hpp"

namespace bierfan {

// The Bier sphere of K lives on the disjoint union [m] ⊔ [m'], encoded on
// the ground set [2m]: label i is the vertex i, label m+i is the primed
// vertex i'. Every face is I ⊔ J' with I ∈ K, J' ∈ K^∨ and I ∩ J = ∅; the
// complex is pure of dimension m-2.
struct BierComplex {
    int m = 1;
    SimplicialComplex complex;  // on [2m]
    SimplicialComplex source;   // the K it was built from, on [m]

    FaceMask unprimed_part(FaceMask f) const { return f & ((FaceMask(1) << m) - 1); }
    FaceMask primed_part(FaceMask f) const { return f >> m; }  // as a subset of [m]
    FaceMask join_parts(FaceMask I, FaceMask J) const { return I | (J << m); }

    long long geometric_vertex_count() const {
        return (long long)complex.geometric_vertices().size();
    }
    long long ghost_vertex_count() const { return 2LL * m - geometric_vertex_count(); }
};

// Alexander dual K^∨ on a ground set of the same size (primed labels are
// implicit): σ ∈ K^∨ iff [m] \ σ ∉ K. Requires m >= 2 and K ≠ Δ_[m].
SimplicialComplex alexander_dual(const SimplicialComplex& K);

// Deleted join of K and K^∨. Requires m >= 2 and K ≠ Δ_[m].
BierComplex bier_sphere(const SimplicialComplex& K);

// Incremental facet rewrite: given Bier(K) and a minimal non-face A of K,
// produces Bier(K ∪ {A}) by replacing the facets
//   D1 = {(A \ {i}) ⊔ (A^c)' | i ∈ A}    with
//   D2 = {A ⊔ (A^c \ {i})' | i ∈ A^c}.
// A = [m] is rejected (K ∪ {A} would be the full simplex).
BierComplex bier_increment(const BierComplex& B, FaceMask A);

}  // namespace bierfan
