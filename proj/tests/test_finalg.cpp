#include <doctest.h>

#include "nakct/errors.hpp"
#include "nakct/finalg.hpp"

using namespace nakct;

namespace {

// path algebra of the linear quiver 1 -> 2 -> ... -> k, all paths kept
FinAlg linear_quiver_algebra(int k) {
    FinAlg a;
    for (int i = 0; i < k; i++) a.objects.push_back("v" + std::to_string(i + 1));
    a.identity_of.assign(k, -1);
    // basis (i, j) for i <= j: the path from i to j
    std::vector<std::vector<int>> idx(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; i++)
        for (int j = i; j < k; j++) {
            FinAlg::BasisElt b{i, j, i == j, "p"};
            idx[i][j] = a.dim();
            a.basis.push_back(b);
            if (i == j) a.identity_of[i] = idx[i][j];
        }
    const int n = a.dim();
    a.table.assign(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < k; i++)
        for (int j = i; j < k; j++)
            for (int l = j; l < k; l++) a.table[static_cast<size_t>(idx[i][j]) * n + idx[j][l]] = idx[i][l];
    return a;
}

FinAlg semisimple(int k) {
    FinAlg a;
    for (int i = 0; i < k; i++) {
        a.objects.push_back("v" + std::to_string(i));
        a.basis.push_back({i, i, true, "e"});
        a.identity_of.push_back(i);
    }
    a.table.assign(static_cast<size_t>(k) * k, -1);
    for (int i = 0; i < k; i++) a.table[static_cast<size_t>(i) * k + i] = i;
    return a;
}

}  // namespace

TEST_CASE("structure checks") {
    for (int k : {1, 2, 3, 4}) {
        FinAlg a = linear_quiver_algebra(k);
        CHECK(a.associative());
        CHECK(a.radical_closed());
        CHECK(a.radical_nilpotency_index() <= a.dim());
    }
    FinAlg bad = linear_quiver_algebra(3);
    bad.table[static_cast<size_t>(1) * bad.dim() + 2] = 0;  // corrupt one product
    CHECK_FALSE(bad.associative());
}

TEST_CASE("projective modules") {
    FinAlg a2 = linear_quiver_algebra(2);
    RightModule p1 = projective_module(a2, 0);
    CHECK(p1.dims == std::vector<int>{1, 1});  // source projective has dim 2
    RightModule p2 = projective_module(a2, 1);
    CHECK(p2.dims == std::vector<int>{0, 1});

    FinAlg s = semisimple(3);
    for (int e = 0; e < 3; e++) CHECK(projective_module(s, e).total_dim() == 1);
}

TEST_CASE("tops and covers") {
    FinAlg a3 = linear_quiver_algebra(3);
    RightModule p1 = projective_module(a3, 0);
    CHECK(top_dims(p1) == std::vector<int>{1, 0, 0});

    CoverResult c = proj_cover_and_syzygy(p1);
    CHECK(c.cover_mults == std::vector<int>{1, 0, 0});
    CHECK(c.kernel.is_zero());  // projective input

    RightModule r = radical_of_projective(a3, 0);
    CHECK(r.dims == std::vector<int>{0, 1, 1});
    CoverResult cr = proj_cover_and_syzygy(r);
    CHECK(cr.cover_mults == std::vector<int>{0, 1, 0});
    CHECK(cr.kernel.is_zero());  // rad P(1) is the projective at vertex 2

    CHECK_THROWS_AS(proj_cover_and_syzygy(zero_module_over(a3)), nakct_error);
}

TEST_CASE("rank-nullity of covers") {
    FinAlg a4 = linear_quiver_algebra(4);
    for (int e = 0; e < 4; e++) {
        RightModule m = radical_of_projective(a4, e);
        if (m.is_zero()) continue;
        CoverResult c = proj_cover_and_syzygy(m);
        int cover_dim = 0;
        for (int v = 0; v < 4; v++) cover_dim += c.cover_mults[v] * projective_module(a4, v).total_dim();
        CHECK(cover_dim == m.total_dim() + c.kernel.total_dim());
    }
}

TEST_CASE("global dimension") {
    CHECK(gldim(semisimple(2), 5).value == 0);
    for (int k : {2, 3, 5}) {
        GldimResult g = gldim(linear_quiver_algebra(k), 5);
        CHECK_FALSE(g.exceeded);
        CHECK(g.value == 1);
    }
    GldimResult tight = gldim(linear_quiver_algebra(3), 0);
    CHECK(tight.exceeded);
}
