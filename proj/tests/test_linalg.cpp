#include "doctest.h"
#include "nchodge/linalg.hpp"
#include "nchodge/rng.hpp"

using namespace nchodge;

TEST_SUITE_BEGIN("linalg");

namespace {

Scalar qs(long n) { return Scalar::integer(field_q(), n); }

SparseMatrix from_dense(const std::vector<std::vector<long>>& rows) {
    SparseMatrix m;
    m.tag = field_q();
    m.nrows = (int)rows.size();
    int ncols = rows.empty() ? 0 : (int)rows[0].size();
    m.cols.assign(ncols, {});
    for (int i = 0; i < m.nrows; ++i)
        for (int j = 0; j < ncols; ++j)
            if (rows[i][j] != 0) m.cols[j][i] = qs(rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("rank and kernel of small matrices") {
    SparseMatrix m = from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(sparse_rank(m) == 2);
    auto ker = sparse_kernel(m);
    REQUIRE(ker.size() == 1);
    // kernel vector satisfies m k = 0
    CHECK(m.apply(ker[0]).empty());

    CHECK(sparse_rank(from_dense({{0, 0}, {0, 0}})) == 0);
    CHECK(sparse_rank(from_dense({{1, 0}, {0, 1}})) == 2);
}

TEST_CASE("echelon insert and membership") {
    Echelon e;
    SpVec v1{{0, qs(1)}, {2, qs(2)}};
    SpVec v2{{1, qs(1)}};
    CHECK(e.insert(v1) == 0);
    CHECK(e.insert(v2) == 1);
    SpVec dep{{0, qs(3)}, {1, qs(5)}, {2, qs(6)}}; // 3*v1 + 5*v2
    CHECK(e.insert(dep) == -1);
    CHECK(e.rank() == 2);
    SpVec probe{{2, qs(1)}};
    CHECK(e.insert(probe) != -1);
    CHECK(e.rank() == 3);
}

TEST_CASE("homology of a two-step complex") {
    // 0 -> Q -> Q^2 -> Q -> 0 with into = (1,1)^T, outof = (1,-1):
    // middle homology is 1-dimensional iff outof*into = 0... here it is
    // (1)-(1) = 0, dim ker outof = 1, rank into = 1, so H = 0.
    SparseMatrix into = from_dense({{1}, {1}});
    SparseMatrix outof = from_dense({{1, -1}});
    HomologySummary h = homology_core(into, outof);
    CHECK(h.dim == 0);
    CHECK(homology_dim_ranks(into, outof) == 0);

    // change outof to 0: H = ker/im = 2 - 1 = 1
    SparseMatrix zero = from_dense({{0, 0}});
    HomologySummary h2 = homology_core(into, zero);
    CHECK(h2.dim == 1);
    CHECK(homology_dim_ranks(into, zero) == 1);
}

TEST_CASE("homology_core rejects non-complexes") {
    SparseMatrix into = from_dense({{1}, {0}});
    SparseMatrix outof = from_dense({{1, 0}});
    CHECK_THROWS(homology_core(into, outof));
    CHECK_NOTHROW(homology_core(into, outof, false));
}

TEST_CASE("induced homology rank of the identity is the homology dim") {
    // V = Q^2, outof = (1,-1), into' the same complex shifted: rank of the
    // identity map on a 1-dimensional homology is 1.
    SparseMatrix zero_in = from_dense({{0}, {0}});
    SparseMatrix outof = from_dense({{1, -1}});
    SparseMatrix id = from_dense({{1, 0}, {0, 1}});
    CHECK(induced_homology_rank(id, outof, zero_in) == 1);
    // the zero map induces rank 0
    SparseMatrix zmap = from_dense({{0, 0}, {0, 0}});
    CHECK(induced_homology_rank(zmap, outof, zero_in) == 0);
}

TEST_CASE("graded maps check degrees and compute supertrace") {
    GradedSpace V;
    V.add("a", 0);
    V.add("b", 1);
    SparseMap f;
    f.tag = field_q();
    f.dom = V;
    f.cod = V;
    f.degree = 0;
    f.add_entry("a", "a", qs(3));
    f.add_entry("b", "b", qs(5));
    f.check_degrees();
    CHECK(supertrace(f) == qs(-2)); // 3 - 5

    SparseMap bad = f;
    bad.add_entry("b", "a", qs(1)); // degree 1 entry in a degree-0 map
    CHECK_THROWS(bad.check_degrees());
}

TEST_CASE("supertrace is Koszul-cyclic on random homogeneous maps") {
    Rng rng(41);
    GradedSpace V;
    V.add("a0", 0);
    V.add("a1", 1);
    V.add("b0", 2);
    V.add("b1", 3);
    for (int trial = 0; trial < 50; ++trial) {
        int dF = (int)rng.below(3) - 1;
        auto random_map = [&](int degree) {
            SparseMap m;
            m.tag = field_q();
            m.dom = V;
            m.cod = V;
            m.degree = degree;
            for (int i = 0; i < V.dim(); ++i)
                for (int j = 0; j < V.dim(); ++j)
                    if (V.degrees[i] == V.degrees[j] + degree && rng.coin())
                        m.entries[{i, j}] = qs(rng.range(-3, 3));
            return m;
        };
        SparseMap F = random_map(dF);
        SparseMap G = random_map(-dF); // FG and GF are degree 0
        auto compose = [&](const SparseMap& A, const SparseMap& B) {
            SparseMap out;
            out.tag = field_q();
            out.dom = V;
            out.cod = V;
            out.degree = 0;
            for (const auto& [ij, c] : A.entries)
                for (const auto& [kl, d] : B.entries)
                    if (ij.second == kl.first) {
                        auto [it, fresh] = out.entries.try_emplace(
                            {ij.first, kl.second}, Scalar::zero(field_q()));
                        it->second += c * d;
                    }
            return out;
        };
        Scalar lhs = supertrace(compose(F, G));
        Scalar rhs = supertrace(compose(G, F));
        if (dF & 1) {
            // |F||G| odd: str(FG) = -str(GF)
            CHECK(lhs == -rhs);
        } else {
            CHECK(lhs == rhs);
        }
    }
}

TEST_SUITE_END();
