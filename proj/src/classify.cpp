#include "bierfan/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bierfan {

namespace {

bool comparable(FaceMask a, FaceMask b) {
    return (a & b) == a || (a & b) == b;
}

}  // namespace

void enumerate_complexes(int m, const std::function<void(const SimplicialComplex&)>& emit) {
    if (m < 1 || m > 5)
        throw std::invalid_argument("enumeration is guarded at m <= 5");

    // Candidate facets: all nonempty subsets of [m] in label-lex order. A
    // complex corresponds to the antichain of its facets, so a DFS that
    // extends antichains in increasing order emits facet lists in
    // lexicographic order, the void complex first.
    std::vector<FaceMask> sets;
    for (FaceMask f = 1; f < (FaceMask(1) << m); ++f) sets.push_back(f);
    std::sort(sets.begin(), sets.end(), label_lex_less);
    const FaceMask full = (FaceMask(1) << m) - 1;

    std::vector<FaceMask> chosen;
    auto dfs = [&](auto&& self, size_t start) -> void {
        if (!(chosen.size() == 1 && chosen[0] == full))  // skip the full simplex
            emit(SimplicialComplex::from_face_family(m, close_downward(chosen)));
        for (size_t idx = start; idx < sets.size(); ++idx) {
            bool ok = true;
            for (FaceMask c : chosen)
                if (comparable(sets[idx], c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(sets[idx]);
            self(self, idx + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
}

std::vector<SimplicialComplex> enumerate_complexes(int m) {
    std::vector<SimplicialComplex> out;
    enumerate_complexes(m, [&](const SimplicialComplex& K) { out.push_back(K); });
    return out;
}

ClassificationReport classify_bier(int m, bool check_fans, int samples, std::uint64_t seed) {
    if (m < 2 || m > 4)
        throw std::invalid_argument("classification is guarded at 2 <= m <= 4");

    ClassificationReport report;
    report.m = m;
    report.fans_checked = check_fans;

    // Keyed by (ground size, face list) of the ghost-stripped canonical form.
    std::map<std::pair<int, std::vector<FaceMask>>, BierClass> buckets;
    enumerate_complexes(m, [&](const SimplicialComplex& K) {
        ++report.total_complexes;
        const BierComplex B = bier_sphere(K);
        const SimplicialComplex canon = canonical_form(B.complex, /*strip_ghosts=*/true);
        auto key = std::make_pair(canon.ground_size(), canon.faces());
        auto [it, inserted] = buckets.try_emplace(std::move(key));
        BierClass& cls = it->second;
        if (inserted) {
            cls.canonical = canon;
            cls.representative = K;
            cls.fh = fh_vectors(B.complex);
        }
        ++cls.multiplicity;
    });

    for (auto& [key, cls] : buckets) {
        if (check_fans) {
            const Fan F = canonical_fan(bier_sphere(cls.representative));
            cls.fan_regular = is_regular(F).regular;
            cls.fan_complete = verify_complete(F, samples, seed).complete();
        }
        report.classes.push_back(std::move(cls));
    }
    return report;
}

}  // namespace bierfan
