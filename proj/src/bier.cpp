#include "bierfan/bier.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bierfan {

SimplicialComplex alexander_dual(const SimplicialComplex& K) {
    const int m = K.ground_size();
    if (m < 2) throw std::invalid_argument("Alexander dual requires m >= 2");
    if (K.is_full_simplex())
        throw std::domain_error("Bier construction requires K != Delta");

    const FaceMask full = (FaceMask(1) << m) - 1;
    std::vector<FaceMask> faces;
    for (FaceMask s = 0; s <= full; ++s)
        if (!K.contains(full & ~s)) faces.push_back(s);
    return SimplicialComplex::from_face_family(m, std::move(faces));
}

BierComplex bier_sphere(const SimplicialComplex& K) {
    const int m = K.ground_size();
    if (m > 30) throw std::invalid_argument("Bier construction supports m <= 30");
    const SimplicialComplex dual = alexander_dual(K);  // validates m and K != Delta

    std::vector<FaceMask> faces;
    for (FaceMask I : K.faces())
        for (FaceMask J : dual.faces())
            if ((I & J) == 0) faces.push_back(I | (J << m));

    BierComplex B;
    B.m = m;
    B.complex = SimplicialComplex::from_face_family(2 * m, std::move(faces));
    B.source = K;
    assert(B.complex.dim() == m - 2 && B.complex.pure());
    return B;
}

BierComplex bier_increment(const BierComplex& B, FaceMask A) {
    const int m = B.m;
    const FaceMask full = (FaceMask(1) << m) - 1;
    const SimplicialComplex& K = B.source;
    if (A & ~full) throw std::invalid_argument("A is not a subset of the ground set");
    if (K.contains(A)) throw std::invalid_argument("A is already a face of K");
    {
        FaceMask rest = A;
        while (rest) {
            FaceMask bit = rest & (FaceMask(0) - rest);
            if (!K.contains(A ^ bit))
                throw std::invalid_argument("A is not a minimal non-face of K");
            rest ^= bit;
        }
    }
    if (A == full) throw std::domain_error("adding A = [m] would create the full simplex");

    const FaceMask Ac = full & ~A;
    std::vector<FaceMask> facets = B.complex.facet_masks();

    // D1: facets (A \ {i}) ⊔ (A^c)' leave, one per i ∈ A.
    for (FaceMask rest = A; rest;) {
        FaceMask bit = rest & (FaceMask(0) - rest);
        FaceMask gone = (A ^ bit) | (Ac << m);
        auto it = std::find(facets.begin(), facets.end(), gone);
        if (it == facets.end())
            throw std::logic_error("rewrite expected facet missing from Bier(K)");
        facets.erase(it);
        rest ^= bit;
    }
    // D2: facets A ⊔ (A^c \ {i})' enter, one per i ∈ A^c.
    for (FaceMask rest = Ac; rest;) {
        FaceMask bit = rest & (FaceMask(0) - rest);
        facets.push_back(A | ((Ac ^ bit) << m));
        rest ^= bit;
    }

    std::vector<FaceMask> source_faces = K.faces();
    source_faces.push_back(A);

    BierComplex out;
    out.m = m;
    out.complex = SimplicialComplex::from_face_family(2 * m, close_downward(facets));
    out.source = SimplicialComplex::from_face_family(m, std::move(source_faces));
#ifndef NDEBUG
    assert(out.complex == bier_sphere(out.source).complex);
#endif
    return out;
}

}  // namespace bierfan
