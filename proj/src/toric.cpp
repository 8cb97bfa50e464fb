#include "bierfan/toric.hpp"

#include <stdexcept>

namespace bierfan {

CharMatrix char_matrix(const BierComplex& B) {
    CharMatrix M;
    M.m = B.m;
    for (int label : B.complex.geometric_vertices())
        M.columns.push_back({label, vertex_generator(label, B.m)});

    const int dim = B.m - 1;
    M.mod2.assign(dim, std::vector<int>(M.columns.size(), 0));
    for (size_t j = 0; j < M.columns.size(); ++j)
        for (int i = 0; i < dim; ++i)
            M.mod2[i][j] = ((M.columns[j].v.c[i] % 2) + 2) % 2;

    // Facet column submatrices must be unimodular; this is fan regularity
    // expressed on Λ_K and must never fail for a genuine Bier complex.
    const Fan F = canonical_fan(B);
    const RegularityReport reg = is_regular(F);
    if (!reg.regular)
        throw FanInvariantError(RationalPoint{}, {*reg.offender});
    return M;
}

OrientabilityRecord is_orientable_real(const BierComplex& B) {
    const CharMatrix M = char_matrix(B);
    OrientabilityRecord rec;
    rec.criterion = true;
    for (size_t j = 0; j < M.columns.size(); ++j) {
        int sum = 0;
        for (size_t i = 0; i < M.mod2.size(); ++i) sum += M.mod2[i][j];
        if (sum % 2 == 0) {
            rec.criterion = false;
            break;
        }
    }
    rec.m_even = B.m % 2 == 0;
    rec.matches = rec.criterion == rec.m_even;
    return rec;
}

ToricReport toric_report(const BierComplex& B) {
    ToricReport r;
    r.m = B.m;
    r.fh = fh_vectors(B.complex);

    const int n = r.fh.n;  // = m - 1 for a Bier sphere
    r.betti.assign(2 * n + 1, 0);
    r.euler = 0;
    for (int i = 0; i <= n; ++i) {
        r.betti[2 * i] = r.fh.h[i];
        r.euler += r.fh.h[i];
    }

    const long long f0_K = B.source.face_count(0);
    const long long fm2_K = B.source.face_count(B.m - 2);
    r.dims.dim_Z = 2LL * B.m + f0_K - fm2_K - 1;
    r.dims.dim_R = B.m - 1;
    r.dims.dim_M = 2LL * (B.m - 1);
    r.dims.dim_M_real = B.m - 1;
    r.dims.rank_H = B.geometric_vertex_count() - (B.m - 1);

    r.ds_ok = true;
    for (int i = 0; i <= n; ++i)
        if (r.fh.h[i] != r.fh.h[n - i]) r.ds_ok = false;

    r.orientability = is_orientable_real(B);
    return r;
}

}  // namespace bierfan
