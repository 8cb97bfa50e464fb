#pragma once

#include <functional>

#include "bierfan/bier.hpp"
#include "bierfan/fan.hpp"
#include "bierfan/simplicial_complex.hpp"

namespace bierfan {

// Emits every downward-closed family on [m] containing the empty face and
// distinct from the full simplex, exactly once, ordered lexicographically by
// sorted facet list. Distinct labelings of isomorphic complexes are distinct
// entries. Guarded at m <= 5.
void enumerate_complexes(int m, const std::function<void(const SimplicialComplex&)>& emit);
std::vector<SimplicialComplex> enumerate_complexes(int m);

struct BierClass {
    SimplicialComplex canonical;      // ghost-stripped canonical Bier complex
    long long multiplicity = 0;       // labeled source complexes in the class
    SimplicialComplex representative; // first K (in enumeration order) hitting it
    FHVectors fh;                     // f/h of the Bier sphere
    bool fan_regular = false;
    bool fan_complete = false;
};

struct ClassificationReport {
    int m = 1;
    long long total_complexes = 0;
    bool fans_checked = false;
    std::vector<BierClass> classes;  // sorted by canonical form
};

// Buckets the Bier spheres of all enumerated complexes on [m] by the
// canonical form of their ghost-stripped complex. With check_fans set, the
// fan of each class representative is verified regular and complete.
// Guarded at m <= 4 (isomorphism testing on up to 8 geometric vertices).
ClassificationReport classify_bier(int m, bool check_fans = true,
                                   int samples = kDefaultSamples,
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace bierfan
