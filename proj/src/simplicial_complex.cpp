#include "bierfan/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bierfan {

int mask_size(FaceMask f) { return std::popcount(f); }

std::vector<int> mask_labels(FaceMask f) {
    std::vector<int> labels;
    labels.reserve(static_cast<size_t>(std::popcount(f)));
    while (f) {
        labels.push_back(std::countr_zero(f) + 1);
        f &= f - 1;
    }
    return labels;
}

FaceMask mask_from_labels(const std::vector<int>& labels, int m) {
    FaceMask f = 0;
    for (int l : labels) {
        if (l < 1 || l > m)
            throw std::invalid_argument("vertex label " + std::to_string(l) +
                                        " outside ground set [" + std::to_string(m) + "]");
        f |= FaceMask(1) << (l - 1);
    }
    return f;
}

bool label_lex_less(FaceMask a, FaceMask b) {
    while (a || b) {
        if (!a) return true;  // a is a proper prefix of b
        if (!b) return false;
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::vector<FaceMask> close_downward(const std::vector<FaceMask>& generators) {
    std::vector<FaceMask> out;
    out.push_back(0);
    for (FaceMask g : generators) {
        // Enumerate all submasks of g, including g itself and 0.
        FaceMask s = g;
        while (true) {
            out.push_back(s);
            if (s == 0) break;
            s = (s - 1) & g;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::from_face_family(int m, std::vector<FaceMask> faces) {
    if (m < 1 || m > 60) throw std::invalid_argument("ground set size must be in 1..60");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.empty() || faces.front() != 0)
        throw std::invalid_argument("a complex must contain the empty face");
    const FaceMask full = (FaceMask(1) << m) - 1;
    for (FaceMask f : faces) {
        if (f & ~full) throw std::invalid_argument("face outside the ground set");
        // Downward closure: dropping any single vertex must stay inside.
        FaceMask rest = f;
        while (rest) {
            FaceMask bit = rest & (FaceMask(0) - rest);
            if (!std::binary_search(faces.begin(), faces.end(), f ^ bit))
                throw std::invalid_argument("face family is not downward closed");
            rest ^= bit;
        }
    }
    SimplicialComplex K;
    K.m_ = m;
    K.faces_ = std::move(faces);
    return K;
}

bool SimplicialComplex::contains(FaceMask f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f);
}

int SimplicialComplex::dim() const {
    int best = -1;
    for (FaceMask f : faces_) best = std::max(best, mask_size(f) - 1);
    return best;
}

bool SimplicialComplex::pure() const {
    const int d = dim();
    for (FaceMask f : facet_masks())
        if (mask_size(f) - 1 != d) return false;
    return true;
}

bool SimplicialComplex::is_full_simplex() const {
    return faces_.size() == (size_t(1) << m_);
}

long long SimplicialComplex::face_count(int d) const {
    long long count = 0;
    for (FaceMask f : faces_)
        if (mask_size(f) == d + 1) ++count;
    return count;
}

std::vector<FaceMask> SimplicialComplex::facet_masks() const {
    std::vector<FaceMask> out;
    for (FaceMask f : faces_) {
        bool maximal = true;
        for (int l = 1; l <= m_ && maximal; ++l) {
            FaceMask bit = FaceMask(1) << (l - 1);
            if (!(f & bit) && contains(f | bit)) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

std::vector<int> SimplicialComplex::geometric_vertices() const {
    std::vector<int> out;
    for (int l = 1; l <= m_; ++l)
        if (contains(FaceMask(1) << (l - 1))) out.push_back(l);
    return out;
}

std::vector<int> SimplicialComplex::ghost_vertices() const {
    std::vector<int> out;
    for (int l = 1; l <= m_; ++l)
        if (!contains(FaceMask(1) << (l - 1))) out.push_back(l);
    return out;
}

SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
    if (m < 1) throw std::invalid_argument("ground set size must be positive");
    std::vector<FaceMask> generators;
    generators.reserve(facets.size());
    for (const auto& f : facets) generators.push_back(mask_from_labels(f, m));
    return SimplicialComplex::from_face_family(m, close_downward(generators));
}

FHVectors fh_vectors(const SimplicialComplex& K) {
    FHVectors r;
    r.n = K.dim() + 1;
    r.f.assign(r.n + 1, 0);
    for (FaceMask f : K.faces()) ++r.f[mask_size(f)];  // f[s] = f_{s-1}

    // Expand sum_j f_j (t-1)^(n-j-1) and read h_i off the t^(n-i) coefficient.
    std::vector<long long> coeff(r.n + 1, 0);  // coeff[k] multiplies t^k
    for (int s = 0; s <= r.n; ++s) {
        const int p = r.n - s;  // power of (t-1) for faces of cardinality s
        long long binom = 1;
        for (int k = 0; k <= p; ++k) {
            long long sign = ((p - k) % 2 == 0) ? 1 : -1;
            coeff[k] += r.f[s] * sign * binom;
            binom = binom * (p - k) / (k + 1);
        }
    }
    r.h.assign(r.n + 1, 0);
    for (int i = 0; i <= r.n; ++i) r.h[i] = coeff[r.n - i];

    r.euler = 0;
    for (int s = 1; s <= r.n; ++s) r.euler += (s % 2 == 1 ? 1 : -1) * r.f[s];
    return r;
}

std::vector<FaceMask> minimal_non_faces(const SimplicialComplex& K) {
    const int m = K.ground_size();
    std::vector<FaceMask> out;
    for (FaceMask f = 1; f < (FaceMask(1) << m); ++f) {
        if (K.contains(f)) continue;
        bool minimal = true;
        FaceMask rest = f;
        while (rest && minimal) {
            FaceMask bit = rest & (FaceMask(0) - rest);
            if (!K.contains(f ^ bit)) minimal = false;
            rest ^= bit;
        }
        if (minimal) out.push_back(f);
    }
    return out;
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& perm) {
    const int m = K.ground_size();
    if ((int)perm.size() != m) throw std::invalid_argument("permutation size mismatch");
    FaceMask seen = 0;
    for (int img : perm) {
        if (img < 1 || img > m) throw std::invalid_argument("permutation image out of range");
        seen |= FaceMask(1) << (img - 1);
    }
    if (seen != (FaceMask(1) << m) - 1) throw std::invalid_argument("not a permutation");

    std::vector<FaceMask> faces;
    faces.reserve(K.faces().size());
    for (FaceMask f : K.faces()) {
        FaceMask g = 0;
        FaceMask rest = f;
        while (rest) {
            int l = std::countr_zero(rest) + 1;
            g |= FaceMask(1) << (perm[l - 1] - 1);
            rest &= rest - 1;
        }
        faces.push_back(g);
    }
    return SimplicialComplex::from_face_family(m, std::move(faces));
}

SimplicialComplex strip_ghost_vertices(const SimplicialComplex& K) {
    const auto vertices = K.geometric_vertices();
    if (vertices.empty()) return SimplicialComplex();  // void on [1]
    std::vector<int> new_label(K.ground_size() + 1, 0);
    for (size_t i = 0; i < vertices.size(); ++i) new_label[vertices[i]] = int(i) + 1;

    std::vector<FaceMask> faces;
    faces.reserve(K.faces().size());
    for (FaceMask f : K.faces()) {
        FaceMask g = 0;
        FaceMask rest = f;
        while (rest) {
            int l = std::countr_zero(rest) + 1;
            g |= FaceMask(1) << (new_label[l] - 1);  // every vertex of a face is geometric
            rest &= rest - 1;
        }
        faces.push_back(g);
    }
    return SimplicialComplex::from_face_family(int(vertices.size()), std::move(faces));
}

SimplicialComplex canonical_form(const SimplicialComplex& K, bool strip_ghosts, int max_ground) {
    const SimplicialComplex base = strip_ghosts ? strip_ghost_vertices(K) : K;
    const int m = base.ground_size();
    if (m > max_ground)
        throw std::invalid_argument("canonical_form: ground set size " + std::to_string(m) +
                                    " exceeds the enumeration bound " + std::to_string(max_ground));

    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i + 1;

    const auto& faces = base.faces();
    std::vector<FaceMask> best;
    std::vector<FaceMask> candidate(faces.size());
    do {
        for (size_t k = 0; k < faces.size(); ++k) {
            FaceMask g = 0;
            FaceMask rest = faces[k];
            while (rest) {
                int l = std::countr_zero(rest) + 1;
                g |= FaceMask(1) << (perm[l - 1] - 1);
                rest &= rest - 1;
            }
            candidate[k] = g;
        }
        std::sort(candidate.begin(), candidate.end());
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return SimplicialComplex::from_face_family(m, std::move(best));
}

}  // namespace bierfan
