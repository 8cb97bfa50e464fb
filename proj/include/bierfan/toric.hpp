#pragma once

#include "bierfan/bier.hpp"
#include "bierfan/fan.hpp"
#include "bierfan/simplicial_complex.hpp"

namespace bierfan {

// Canonical characteristic matrix Λ_K: one column per geometric vertex of
// Bier(K), in increasing label order, with vertex i mapped to -e_i and i' to
// e_i. Shape is (m-1) x f_0(Bier(K)); ghost vertices contribute no column.
struct CharColumn {
    int label = 0;
    LatticeVector v;
};

struct CharMatrix {
    int m = 1;
    std::vector<CharColumn> columns;
    std::vector<std::vector<int>> mod2;  // (m-1) x columns, entries 0/1
};

// Builds Λ_K and verifies that every facet's column submatrix is unimodular
// (the matrix restates fan regularity; disagreement is an internal error).
CharMatrix char_matrix(const BierComplex& B);

// ε-criterion for orientability of the real toric manifold: all columns of
// the mod-2 matrix must have odd coordinate sum. The verdict is reported
// next to the parity of m rather than assumed equal to it; the two can
// differ only when both m and m' are ghost vertices.
struct OrientabilityRecord {
    bool criterion = false;
    bool m_even = false;
    bool matches = false;
};

OrientabilityRecord is_orientable_real(const BierComplex& B);

struct ToricDims {
    long long dim_Z = 0;       // moment-angle manifold, 2m + f_0(K) - f_{m-2}(K) - 1
    long long dim_R = 0;       // real moment-angle manifold, m - 1
    long long dim_M = 0;       // toric manifold, 2(m-1)
    long long dim_M_real = 0;  // real toric manifold, m - 1
    long long rank_H = 0;      // f_0(Bier(K)) - (m-1)
};

// Toric invariants of Σ_K: Betti numbers β_{2i} = h_i(Bier(K)) with odd
// Betti numbers zero, Euler characteristic Σ h_i (the facet count),
// dimension and rank bookkeeping, the Dehn-Sommerville verdict h_i = h_{n-i},
// and the orientability record.
struct ToricReport {
    int m = 1;
    FHVectors fh;
    std::vector<long long> betti;  // β_0 .. β_{2(m-1)}
    long long euler = 0;
    ToricDims dims;
    bool ds_ok = false;
    OrientabilityRecord orientability;
};

ToricReport toric_report(const BierComplex& B);

}  // namespace bierfan
