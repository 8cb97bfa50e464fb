#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bierfan/bier.hpp"
#include "bierfan/rational.hpp"

namespace bierfan {

// Integer vector in Z^(m-1). Generators are -e_i for vertex i and e_i for
// vertex i', under the convention e_m := -(e_1 + ... + e_(m-1)), so every
// generator is primitive by construction.
struct LatticeVector {
    std::vector<long long> c;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

// A cone of Σ_K is tagged by the pair (I, J) of disjoint subsets of [m]
// whose Bier face is I ⊔ J'; its generator set is G(I,J) = {-e_i | i ∈ I}
// ∪ {e_j | j ∈ J}, listed in ascending Bier-label order.
struct ConeTag {
    FaceMask I = 0;
    FaceMask J = 0;
    friend bool operator==(const ConeTag&, const ConeTag&) = default;
};

// Orders tags by the label sequences of I, then J.
bool tag_less(const ConeTag& a, const ConeTag& b);

std::string tag_str(const ConeTag& t);

struct Cone {
    ConeTag tag;
    std::vector<LatticeVector> generators;
};

// The canonical fan Σ_K: one maximal cone per facet of Bier(K). Lower cones
// are never materialized; they are identified with the faces of Bier(K).
struct Fan {
    int m = 1;
    std::vector<Cone> max_cones;  // sorted by facet mask
    BierComplex source;
};

// Exact rational point in Q^(m-1).
struct RationalPoint {
    std::vector<Rational> coords;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    std::string str() const;
};

// Signals a violation of the interior-uniqueness property: a point that lies
// in the interior of zero or of several cone tags. Never swallowed; callers
// verifying a fan convert it into a failure report.
class FanInvariantError : public std::runtime_error {
  public:
    FanInvariantError(RationalPoint point, std::vector<ConeTag> tags);
    const RationalPoint& point() const { return point_; }
    const std::vector<ConeTag>& tags() const { return tags_; }

  private:
    RationalPoint point_;
    std::vector<ConeTag> tags_;
};

// Generator vector of a Bier vertex label (1..2m) in Z^(m-1):
// i maps to -e_i and m+i maps to e_i, with e_m expanded to -(1,...,1).
LatticeVector vertex_generator(int label, int m);

Fan canonical_fan(const BierComplex& B);

struct RegularityReport {
    bool regular = true;
    std::optional<ConeTag> offender;
    long long det = 0;
};

// Every maximal cone's generator matrix must have determinant ±1; purity of
// Bier(K) makes the maximal-cone check sufficient for the whole fan.
// Throws std::overflow_error when m > 16 (128-bit determinant guard).
RegularityReport is_regular(const Fan& F);

// Locates x in the unique open cone C°(I,J) with I ⊔ J' ∈ Bier(K).
// Lifts x to γ ∈ Q^m with γ_m = 0 and scans the distinct γ-values c as
// thresholds: I(c) = {i | γ_i < c}, J(c) = {j | γ_j > c}. Exactly one
// threshold yields a Bier face; anything else throws FanInvariantError.
// The origin locates to (∅, ∅).
ConeTag locate_point(const Fan& F, const RationalPoint& x);

// Independent oracle for the same question: for every face I ⊔ J' of
// Bier(K) solves x = Σ c_v g_v exactly on the linearly independent
// generators and collects the tags whose coefficients are all strictly
// positive (the empty face matches only the origin). A correct fan yields
// exactly one tag.
std::vector<ConeTag> locate_point_bruteforce(const Fan& F, const RationalPoint& x);

inline constexpr std::uint64_t kDefaultSeed = 0xB1E2;
inline constexpr int kDefaultSamples = 1000;

// Deterministic generator for sample points (splitmix64); kept free of
// std::uniform_int_distribution so outputs are identical on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Random rational point with coordinates in [-10, 10] and denominator <= 7.
RationalPoint sample_point(SplitMix64& rng, int dim);

struct CompletenessReport {
    bool regular = false;
    bool pseudomanifold = false;
    bool wall = false;      // opposite-sides test plus facet-graph connectivity
    bool sampling = false;  // interior uniqueness on sampled points
    int samples = 0;
    std::uint64_t seed = 0;

    std::optional<FaceMask> bad_ridge;  // witness for (a) or (b), as a Bier mask
    int bad_ridge_facet_count = 0;
    std::optional<RationalPoint> bad_point;  // witness for (c)
    std::vector<ConeTag> bad_point_tags;
    std::string detail;

    bool complete() const { return regular && pseudomanifold && wall && sampling; }
    std::string verdict() const { return complete() ? "complete (verified)" : "not verified"; }
};

// Three falsifiable consequences of completeness, all exact:
//   (a) every ridge of Bier(K) lies in exactly two facets,
//   (b) the two opposite generators of each ridge lie strictly on opposite
//       sides of the ridge's hyperplane, and the facet graph is connected,
//   (c) sampled points locate to exactly one face, with locate_point and
//       locate_point_bruteforce in agreement.
// Regularity is checked first. Witnesses are reported in sorted order.
CompletenessReport verify_complete(const Fan& F, int samples = kDefaultSamples,
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace bierfan
