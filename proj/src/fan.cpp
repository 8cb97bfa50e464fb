#include "bierfan/fan.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace bierfan {

namespace {

using i128 = __int128;

// Fraction-free (Bareiss) determinant. Entries here are in {-1,0,1} and the
// dimension is capped at 15, so 128-bit intermediates cannot overflow
// (Hadamard bound 15^7.5 < 2^30).
i128 det_bareiss(std::vector<std::vector<i128>> a) {
    const int n = (int)a.size();
    if (n == 0) return 1;
    int sign = 1;
    i128 prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

void check_det_guard(int m) {
    if (m - 1 > 15)
        throw std::overflow_error(
            "exact determinants are guaranteed only for m <= 16; larger ground sets "
            "need arbitrary-precision arithmetic");
}

// Determinant of the matrix whose columns are the given vectors.
long long column_det(const std::vector<LatticeVector>& cols, int dim) {
    std::vector<std::vector<i128>> a(dim, std::vector<i128>(dim, 0));
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) a[i][j] = cols[j].c[i];
    return (long long)det_bareiss(std::move(a));
}

// Generalized cross product: the integer normal of the hyperplane spanned by
// rows[0..k-1] in Z^(k+1), via signed maximal minors. For a facet vertex u,
// dot(normal, g_u) equals det([g_u; rows]), so the sign test below is exact.
std::vector<long long> hyperplane_normal(const std::vector<LatticeVector>& rows, int dim) {
    std::vector<long long> n(dim, 0);
    for (int drop = 0; drop < dim; ++drop) {
        std::vector<std::vector<i128>> a(dim - 1, std::vector<i128>(dim - 1, 0));
        for (int r = 0; r < dim - 1; ++r) {
            int cj = 0;
            for (int j = 0; j < dim; ++j) {
                if (j == drop) continue;
                a[r][cj++] = rows[r].c[j];
            }
        }
        i128 d = det_bareiss(std::move(a));
        n[drop] = (drop % 2 == 0) ? (long long)d : -(long long)d;
    }
    return n;
}

int dot_sign(const std::vector<long long>& n, const LatticeVector& v) {
    i128 acc = 0;
    for (size_t i = 0; i < n.size(); ++i) acc += i128(n[i]) * v.c[i];
    return (acc > 0) - (acc < 0);
}

// Exact solve of x = Σ c_v g_v over the generators G(I,J) of one face tag,
// combined with the strict-positivity filter. The generator matrix is
// diagonal away from the single (±1,...,±1) column, so the system decouples
// per coordinate:
//   no (±1,...,±1) column:  x_i = -c_i (i ∈ I), x_j = d_j (j ∈ J),
//                           x_k = 0 elsewhere;
//   -e_m column (m ∈ I):    x_i = t - c_i, x_j = t + d_j, x_k = t elsewhere;
//   e_m column (m ∈ J):     x_i = -t - c_i, x_j = -t + d_j, x_k = -t.
// Checking every coordinate equation is exactly the reconstruction test
// Σ c_v g_v = x. Returns true iff the solution exists with all coefficients
// strictly positive.
bool interior_hit(int m, ConeTag tag, const RationalPoint& x) {
    const int dim = m - 1;
    const FaceMask mbit = FaceMask(1) << (m - 1);
    const bool m_in_I = (tag.I & mbit) != 0;
    const bool m_in_J = (tag.J & mbit) != 0;

    if (!m_in_I && !m_in_J) {
        for (int k = 1; k <= dim; ++k) {
            const FaceMask bit = FaceMask(1) << (k - 1);
            const int s = x.coords[k - 1].sign();
            if (tag.I & bit) {
                if (s >= 0) return false;  // c_k = -x_k must be > 0
            } else if (tag.J & bit) {
                if (s <= 0) return false;  // d_k = x_k must be > 0
            } else {
                if (s != 0) return false;  // outside the span
            }
        }
        return true;
    }

    // t is the coefficient of the (1,...,1)-type generator; every coordinate
    // outside I ∪ J must read off the same value (at least one exists since
    // |I| + |J| <= m-1).
    Rational t;
    bool have_t = false;
    for (int k = 1; k <= dim; ++k) {
        const FaceMask bit = FaceMask(1) << (k - 1);
        if ((tag.I & bit) || (tag.J & bit)) continue;
        const Rational v = m_in_I ? x.coords[k - 1] : -x.coords[k - 1];
        if (!have_t) {
            t = v;
            have_t = true;
        } else if (v != t) {
            return false;  // outside the span
        }
    }
    if (!have_t || t.sign() <= 0) return false;

    const Rational threshold = m_in_I ? t : -t;
    for (int k = 1; k <= dim; ++k) {
        const FaceMask bit = FaceMask(1) << (k - 1);
        if (tag.I & bit) {
            if (!(x.coords[k - 1] < threshold)) return false;  // c_k > 0
        } else if (tag.J & bit) {
            if (!(x.coords[k - 1] > threshold)) return false;  // d_k > 0
        }
    }
    return true;
}

}  // namespace

bool tag_less(const ConeTag& a, const ConeTag& b) {
    if (a.I != b.I) return label_lex_less(a.I, b.I);
    return label_lex_less(a.J, b.J);
}

std::string tag_str(const ConeTag& t) {
    auto set_str = [](FaceMask f) {
        std::string s = "{";
        bool first = true;
        for (int l : mask_labels(f)) {
            if (!first) s += ",";
            s += std::to_string(l);
            first = false;
        }
        return s + "}";
    };
    return "(I=" + set_str(t.I) + ", J=" + set_str(t.J) + ")";
}

std::string RationalPoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].str();
    }
    return s + ")";
}

FanInvariantError::FanInvariantError(RationalPoint point, std::vector<ConeTag> tags)
    : std::runtime_error("point " + point.str() + " lies in the interior of " +
                         std::to_string(tags.size()) + " cone tags"),
      point_(std::move(point)),
      tags_(std::move(tags)) {}

LatticeVector vertex_generator(int label, int m) {
    if (m < 2) throw std::invalid_argument("fan construction requires m >= 2");
    if (label < 1 || label > 2 * m)
        throw std::invalid_argument("Bier vertex label out of range 1..2m");
    const bool primed = label > m;
    const int i = primed ? label - m : label;
    const long long s = primed ? 1 : -1;  // e_i for primed, -e_i otherwise
    LatticeVector v;
    v.c.assign(m - 1, 0);
    if (i < m)
        v.c[i - 1] = s;
    else
        for (auto& entry : v.c) entry = -s;  // e_m = -(1,...,1)
    return v;
}

Fan canonical_fan(const BierComplex& B) {
    Fan F;
    F.m = B.m;
    F.source = B;
    for (FaceMask facet : B.complex.facet_masks()) {
        Cone cone;
        cone.tag = ConeTag{B.unprimed_part(facet), B.primed_part(facet)};
        for (int label : mask_labels(facet))
            cone.generators.push_back(vertex_generator(label, B.m));
        F.max_cones.push_back(std::move(cone));
    }
    return F;
}

RegularityReport is_regular(const Fan& F) {
    check_det_guard(F.m);
    const int dim = F.m - 1;
    for (const Cone& cone : F.max_cones) {
        if ((int)cone.generators.size() != dim)
            return {false, cone.tag, 0};
        const long long det = column_det(cone.generators, dim);
        if (det != 1 && det != -1) return {false, cone.tag, det};
    }
    return {};
}

ConeTag locate_point(const Fan& F, const RationalPoint& x) {
    const int m = F.m;
    if ((int)x.coords.size() != m - 1)
        throw std::invalid_argument("point dimension must be m-1");

    // γ = (x_1, ..., x_{m-1}, 0); x = Σ (γ_i - c) e_i for every threshold c,
    // so the candidate thresholds are exactly the distinct γ-values.
    std::vector<Rational> gamma(x.coords);
    gamma.push_back(Rational());
    std::vector<Rational> thresholds = gamma;
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    std::vector<ConeTag> matches;
    for (const Rational& c : thresholds) {
        ConeTag tag;
        for (int i = 1; i <= m; ++i) {
            if (gamma[i - 1] < c)
                tag.I |= FaceMask(1) << (i - 1);
            else if (gamma[i - 1] > c)
                tag.J |= FaceMask(1) << (i - 1);
        }
        if (F.source.complex.contains(F.source.join_parts(tag.I, tag.J)))
            matches.push_back(tag);
    }
    if (matches.size() != 1) throw FanInvariantError(x, std::move(matches));
    return matches[0];
}

std::vector<ConeTag> locate_point_bruteforce(const Fan& F, const RationalPoint& x) {
    const int m = F.m;
    if ((int)x.coords.size() != m - 1)
        throw std::invalid_argument("point dimension must be m-1");
    std::vector<ConeTag> hits;
    for (FaceMask face : F.source.complex.faces()) {
        ConeTag tag{F.source.unprimed_part(face), F.source.primed_part(face)};
        if (interior_hit(m, tag, x)) hits.push_back(tag);
    }
    return hits;
}

RationalPoint sample_point(SplitMix64& rng, int dim) {
    RationalPoint p;
    p.coords.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        const long long q = 1 + (long long)(rng.next() % 7);
        const long long p_num = (long long)(rng.next() % (20 * q + 1)) - 10 * q;
        p.coords.emplace_back(p_num, q);
    }
    return p;
}

CompletenessReport verify_complete(const Fan& F, int samples, std::uint64_t seed) {
    CompletenessReport report;
    report.samples = samples;
    report.seed = seed;

    const RegularityReport reg = is_regular(F);
    report.regular = reg.regular;
    if (!reg.regular) {
        report.detail = "cone " + tag_str(*reg.offender) + " has determinant " +
                        std::to_string(reg.det);
        return report;
    }

    const SimplicialComplex& C = F.source.complex;
    const int m = F.m;
    std::vector<FaceMask> facets;
    for (const Cone& cone : F.max_cones)
        facets.push_back(F.source.join_parts(cone.tag.I, cone.tag.J));
    std::sort(facets.begin(), facets.end());

    // (a) Pseudomanifold: each ridge lies in exactly two facets, and the
    // ridges collected from facets exhaust the (m-3)-faces.
    for (FaceMask f : facets) {
        if (mask_size(f) != m - 1) {
            report.bad_ridge = f;
            report.detail = "facet of wrong cardinality";
            return report;
        }
    }
    std::map<FaceMask, std::vector<int>> ridge_facets;
    for (size_t fi = 0; fi < facets.size(); ++fi) {
        FaceMask rest = facets[fi];
        while (rest) {
            FaceMask bit = rest & (FaceMask(0) - rest);
            ridge_facets[facets[fi] ^ bit].push_back((int)fi);
            rest ^= bit;
        }
    }
    for (const auto& [ridge, owners] : ridge_facets) {
        if (owners.size() != 2) {
            report.bad_ridge = ridge;
            report.bad_ridge_facet_count = (int)owners.size();
            report.detail = "ridge lies in " + std::to_string(owners.size()) + " facets";
            return report;
        }
    }
    if ((long long)ridge_facets.size() != C.face_count(m - 3)) {
        report.detail = "ridge count does not match the (m-3)-face count";
        return report;
    }
    report.pseudomanifold = true;

    // (b) Wall condition: the two generators opposite a ridge sit strictly on
    // opposite sides of the ridge's hyperplane; facet graph connected.
    for (const auto& [ridge, owners] : ridge_facets) {
        std::vector<LatticeVector> span;
        for (int label : mask_labels(ridge)) span.push_back(vertex_generator(label, m));
        const std::vector<long long> normal = hyperplane_normal(span, m - 1);
        const int u = std::countr_zero(facets[owners[0]] & ~ridge) + 1;
        const int v = std::countr_zero(facets[owners[1]] & ~ridge) + 1;
        const int su = dot_sign(normal, vertex_generator(u, m));
        const int sv = dot_sign(normal, vertex_generator(v, m));
        if (su == 0 || sv == 0 || su == sv) {
            report.bad_ridge = ridge;
            report.detail = "opposite generators do not separate across the ridge";
            return report;
        }
    }
    {
        std::vector<std::vector<int>> adj(facets.size());
        for (const auto& [ridge, owners] : ridge_facets) {
            adj[owners[0]].push_back(owners[1]);
            adj[owners[1]].push_back(owners[0]);
        }
        std::vector<char> seen(facets.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        size_t visited = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int nb : adj[cur])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    ++visited;
                    stack.push_back(nb);
                }
        }
        if (visited != facets.size()) {
            report.detail = "facet adjacency graph is disconnected";
            return report;
        }
    }
    report.wall = true;

    // (c) Sampled interior uniqueness, with the threshold locator checked
    // against the per-face exact solver.
    SplitMix64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const RationalPoint x = sample_point(rng, m - 1);
        std::vector<ConeTag> brute = locate_point_bruteforce(F, x);
        if (brute.size() != 1) {
            report.bad_point = x;
            report.bad_point_tags = std::move(brute);
            report.detail = "sampled point lies in " +
                            std::to_string(report.bad_point_tags.size()) + " cone interiors";
            return report;
        }
        try {
            const ConeTag located = locate_point(F, x);
            if (!(located == brute[0])) {
                report.bad_point = x;
                report.bad_point_tags = {located, brute[0]};
                report.detail = "threshold locator and exact solver disagree";
                return report;
            }
        } catch (const FanInvariantError& e) {
            report.bad_point = e.point();
            report.bad_point_tags = e.tags();
            report.detail = e.what();
            return report;
        }
    }
    report.sampling = true;
    return report;
}

}  // namespace bierfan
