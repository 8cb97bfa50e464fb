#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bierfan {

// Faces of a complex on a ground set [m] = {1,...,m} are stored as bitmasks:
// label l occupies bit (l-1). Ground sets stay small (desk scale, 2m <= 64),
// so the whole downward-closed face family is materialized explicitly and
// facet / minimal-non-face views are derived on demand.
using FaceMask = std::uint64_t;

int mask_size(FaceMask f);
std::vector<int> mask_labels(FaceMask f);
FaceMask mask_from_labels(const std::vector<int>& labels, int m);

// Order on subsets induced by lexicographic comparison of their ascending
// label sequences ({1} < {1,2} < {1,3} < {2}). Serialization and the
// deterministic enumeration order both use it.
bool label_lex_less(FaceMask a, FaceMask b);

// Downward closure of a family of generator masks, including the empty face.
std::vector<FaceMask> close_downward(const std::vector<FaceMask>& generators);

// An abstract simplicial complex on [m]: a nonempty, downward-closed family
// of subsets of [m] containing the empty face. The face list is kept sorted
// ascending by mask value. Values are immutable once constructed.
class SimplicialComplex {
  public:
    // Default: the void complex {∅} on [1].
    SimplicialComplex() : m_(1), faces_{0} {}

    // Validates m >= 1, faces within [m], presence of ∅, and downward closure.
    static SimplicialComplex from_face_family(int m, std::vector<FaceMask> faces);

    int ground_size() const { return m_; }
    const std::vector<FaceMask>& faces() const { return faces_; }

    bool contains(FaceMask f) const;

    // dim(K) = max face cardinality - 1; the void complex has dimension -1.
    int dim() const;
    bool pure() const;
    bool is_void() const { return faces_.size() == 1; }
    bool is_full_simplex() const;

    // Number of faces of the given dimension (d = -1 counts the empty face).
    long long face_count(int d) const;

    // Inclusion-maximal faces, sorted ascending by mask.
    std::vector<FaceMask> facet_masks() const;

    // Labels l with {l} a face, ascending.
    std::vector<int> geometric_vertices() const;
    std::vector<int> ghost_vertices() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.faces_ == b.faces_;
    }

  private:
    int m_;
    std::vector<FaceMask> faces_;
};

// Builds the complex generated by the listed facets: their downward closure
// plus the empty face. Labels outside 1..m are rejected; non-maximal inputs
// are absorbed. An empty list yields the void complex.
SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);

// f- and h-vector of a complex, indexed so that f[i] counts the (i-1)-faces:
// f = (f_{-1}, f_0, ..., f_{n-1}) and h = (h_0, ..., h_n) with n = dim + 1,
// tied together by sum_i h_i t^(n-i) = sum_j f_j (t-1)^(n-j-1).
// euler = sum_{i>=0} (-1)^i f_i.
struct FHVectors {
    int n = 0;
    std::vector<long long> f;
    std::vector<long long> h;
    long long euler = 0;
};

FHVectors fh_vectors(const SimplicialComplex& K);

// All inclusion-minimal subsets of [m] not in K, sorted ascending by mask.
// Singletons in the result are exactly the ghost vertices.
std::vector<FaceMask> minimal_non_faces(const SimplicialComplex& K);

// Relabels by the bijection perm (perm[l-1] is the new label of l).
SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& perm);

// Drops ghost vertices and relabels the survivors 1..|V(K)| preserving order.
// A complex with no geometric vertices strips to the void complex on [1].
SimplicialComplex strip_ghost_vertices(const SimplicialComplex& K);

// Minimal relabeling of K over all permutations of its ground set, taking the
// smallest sorted face-mask list. Two complexes are isomorphic iff their
// canonical forms are equal; the map is idempotent. Ground sets larger than
// max_ground are rejected (the search is factorial).
SimplicialComplex canonical_form(const SimplicialComplex& K, bool strip_ghosts = false,
                                 int max_ground = 10);

}  // namespace bierfan
