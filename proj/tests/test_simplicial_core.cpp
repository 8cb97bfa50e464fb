#include <doctest.h>

#include <algorithm>

#include "bierfan/bier.hpp"
#include "bierfan/classify.hpp"
#include "bierfan/fan.hpp"
#include "bierfan/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace bierfan;

namespace {
const SimplicialComplex kPentagonK = from_facets(3, {{1}, {2, 3}});
}

TEST_CASE("from_facets closes downward and absorbs redundant generators") {
    // faces {∅,{1},{2},{3},{2,3}} as masks
    CHECK(kPentagonK.faces() == std::vector<FaceMask>{0, 1, 2, 4, 6});
    CHECK(from_facets(3, {{2, 3}, {3}}) == from_facets(3, {{2, 3}}));
    CHECK(from_facets(4, {}).is_void());
    CHECK(from_facets(4, {}).faces() == std::vector<FaceMask>{0});
    CHECK_THROWS_AS(from_facets(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(0, {}), std::invalid_argument);
}

TEST_CASE("face family constructor rejects families that are not complexes") {
    CHECK_THROWS_AS(SimplicialComplex::from_face_family(2, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_face_family(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_face_family(2, {0, 4}), std::invalid_argument);
}

TEST_CASE("every constructed complex is downward closed") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& K : enumerate_complexes(m)) CHECK(oracle::downward_closed(K));
}

TEST_CASE("label_lex_less orders sets like their sorted label sequences") {
    auto mk = [](std::vector<int> labels) { return mask_from_labels(labels, 6); };
    CHECK(label_lex_less(mk({1}), mk({1, 2})));
    CHECK(label_lex_less(mk({1, 2}), mk({1, 3})));
    CHECK(label_lex_less(mk({1, 3}), mk({2})));
    CHECK(!label_lex_less(mk({2}), mk({1, 3})));
    CHECK(!label_lex_less(mk({2}), mk({2})));
}

TEST_CASE("fh_vectors matches hand-expanded examples") {
    SUBCASE("boundary of the triangle") {
        const FHVectors v = fh_vectors(oracle::boundary_of_simplex(3));
        CHECK(v.n == 2);
        CHECK(v.f == std::vector<long long>{1, 3, 3});
        CHECK(v.h == std::vector<long long>{1, 1, 1});
        CHECK(v.euler == 0);
    }
    SUBCASE("pentagon") {
        const FHVectors v = fh_vectors(bier_sphere(kPentagonK).complex);
        CHECK(v.f == std::vector<long long>{1, 5, 5});
        CHECK(v.h == std::vector<long long>{1, 3, 1});
        CHECK(v.euler == 0);
    }
    SUBCASE("full simplex on [2]") {
        const FHVectors v = fh_vectors(from_facets(2, {{1, 2}}));
        CHECK(v.f == std::vector<long long>{1, 2, 1});
        CHECK(v.h == std::vector<long long>{1, 0, 0});
        CHECK(v.euler == 1);
    }
    SUBCASE("void complex") {
        const FHVectors v = fh_vectors(from_facets(5, {}));
        CHECK(v.n == 0);
        CHECK(v.f == std::vector<long long>{1});
        CHECK(v.h == std::vector<long long>{1});
        CHECK(v.euler == 0);
    }
}

TEST_CASE("the f/h identity holds for every enumerated complex on m <= 5") {
    for (int m = 2; m <= 5; ++m) {
        long long failures = 0;
        enumerate_complexes(m, [&](const SimplicialComplex& K) {
            // evaluation at n+3 points pins a degree-n polynomial identity
            const FHVectors v = fh_vectors(K);
            for (long long t = -1; t <= v.n + 1; ++t)
                if (oracle::h_side(v, t) != oracle::f_side(v, t)) ++failures;
        });
        CHECK(failures == 0);
    }
}

TEST_CASE("minimal non-faces") {
    for (int m = 2; m <= 5; ++m) {
        const FaceMask full = (FaceMask(1) << m) - 1;
        CHECK(minimal_non_faces(oracle::boundary_of_simplex(m)) == std::vector<FaceMask>{full});
        CHECK(minimal_non_faces(from_facets(m, {mask_labels(full)})).empty());
    }
    // {{1,2},{1,3}} as masks 3 and 5
    CHECK(minimal_non_faces(kPentagonK) == std::vector<FaceMask>{3, 5});

    SUBCASE("agreement with the antichain-filter oracle, and antichain-ness") {
        for (int m = 2; m <= 4; ++m)
            for (const auto& K : enumerate_complexes(m)) {
                auto got = minimal_non_faces(K);
                auto want = oracle::minimal_non_faces(K);
                std::sort(want.begin(), want.end());
                CHECK(got == want);
                for (FaceMask a : got)
                    for (FaceMask b : got)
                        if (a != b) CHECK((a & b) != a);
            }
    }
}

TEST_CASE("facets of a pure complex all have cardinality dim+1") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& K : enumerate_complexes(m)) {
            if (!K.pure()) continue;
            for (FaceMask f : K.facet_masks()) CHECK(mask_size(f) == K.dim() + 1);
        }
}

TEST_CASE("relabel validates its permutation") {
    CHECK_THROWS_AS(relabel(kPentagonK, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(relabel(kPentagonK, {1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(relabel(kPentagonK, {1, 2, 4}), std::invalid_argument);
    CHECK(relabel(kPentagonK, {1, 2, 3}) == kPentagonK);
    CHECK(relabel(kPentagonK, {2, 1, 3}) == from_facets(3, {{2}, {1, 3}}));
}

TEST_CASE("strip_ghost_vertices relabels the geometric vertices in order") {
    const BierComplex B = bier_sphere(from_facets(3, {}));  // lives on primed labels 4,5,6
    CHECK(strip_ghost_vertices(B.complex) == oracle::boundary_of_simplex(3));
    CHECK(strip_ghost_vertices(from_facets(5, {})) == SimplicialComplex());
    CHECK(strip_ghost_vertices(kPentagonK) == kPentagonK);
}

TEST_CASE("canonical_form is idempotent and respects isomorphism") {
    SplitMix64 rng(17);
    for (int m = 2; m <= 4; ++m)
        for (const auto& K : enumerate_complexes(m)) {
            const SimplicialComplex canon = canonical_form(K);
            CHECK(canonical_form(canon) == canon);
            // random relabeling
            std::vector<int> perm(m);
            for (int i = 0; i < m; ++i) perm[i] = i + 1;
            for (int i = m - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.next() % (i + 1)]);
            CHECK(canonical_form(relabel(K, perm)) == canon);
        }
}

TEST_CASE("canonical equality decides isomorphism (oracle cross-check)") {
    const auto all3 = enumerate_complexes(3);
    for (const auto& A : all3)
        for (const auto& B : all3) {
            const bool canon_eq = canonical_form(A) == canonical_form(B);
            CHECK(canon_eq == oracle::isomorphic(A, B));
        }
}

TEST_CASE("the ghost-stripped pentagon is the standard 5-cycle") {
    const BierComplex B = bier_sphere(kPentagonK);  // vertices {1,2,3,5,6}, ghost 4 = 1'
    CHECK(B.complex.ghost_vertices() == std::vector<int>{4});
    const SimplicialComplex pentagon = canonical_form(B.complex, /*strip_ghosts=*/true);
    CHECK(pentagon == canonical_form(oracle::cycle_complex(5)));
}

TEST_CASE("Bier(K) and Bier(K dual) have equal canonical forms") {
    const SimplicialComplex dual = alexander_dual(kPentagonK);
    CHECK(canonical_form(bier_sphere(kPentagonK).complex) ==
          canonical_form(bier_sphere(dual).complex));
}

TEST_CASE("canonical_form enforces the enumeration bound") {
    CHECK_THROWS_AS(canonical_form(from_facets(11, {{1}}), false, 10), std::invalid_argument);
    CHECK_NOTHROW(canonical_form(from_facets(11, {{1}}), /*strip_ghosts=*/true, 10));
}
