#include "cotangent/harrison.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cotangent;
using Module = CoefficientModule;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("fat point construction", "[harrison]") {
    const auto z1 = make_fat_point(1);
    CHECK(z1.n() == 1);
    CHECK(z1.multiply(z1.basis(0), z1.basis(0)) == AlgebraElement(2));
    const auto z2 = make_fat_point(2);
    CHECK(z2.n() + 1 == 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(z2.product(i, j) == AlgebraElement(3));
    CHECK(z2.is_local());
    CHECK(make_truncated_polynomial(3).is_local());
    CHECK_THROWS_AS(make_fat_point(0), std::invalid_argument);
}

TEST_CASE("structure constants are validated", "[harrison]") {
    // e1 e2 = e1 but e2 e1 = 0.
    std::vector<AlgebraElement> noncomm(4, AlgebraElement(3));
    noncomm[0 * 2 + 1][1] = 1;
    CHECK_THROWS_AS(FiniteLocalAlgebra(2, noncomm), std::invalid_argument);

    // e1^2 = e2, e2^2 = e1, e1 e2 = 0: (e1 e1) e2 = e1 but e1 (e1 e2) = 0.
    std::vector<AlgebraElement> nonassoc(4, AlgebraElement(3));
    nonassoc[0][2] = 1;
    nonassoc[3][1] = 1;
    CHECK_THROWS_AS(FiniteLocalAlgebra(2, nonassoc), std::invalid_argument);

    // e1^2 = 1 is commutative and associative but not local.
    std::vector<AlgebraElement> split(1, AlgebraElement(2));
    split[0][0] = 1;
    CHECK_FALSE(FiniteLocalAlgebra(1, split).is_local());
}

TEST_CASE("shuffle elements", "[harrison]") {
    const auto s11 = shuffle_element(1, 1);
    REQUIRE(s11.size() == 2);
    CHECK(s11[0].perm == std::vector<std::size_t>{0, 1});
    CHECK(s11[0].sign == 1);
    CHECK(s11[1].perm == std::vector<std::size_t>{1, 0});
    CHECK(s11[1].sign == -1);
    CHECK(shuffle_element(1, 2).size() == 3);
    CHECK(shuffle_element(2, 2).size() == 6);
    CHECK_THROWS_AS(shuffle_element(0, 2), std::invalid_argument);

    for (std::size_t p = 1; p <= 4; ++p)
        for (std::size_t q = 1; q <= 4; ++q) {
            const auto terms = shuffle_element(p, q);
            CHECK(terms.size() == binomial(p + q, p));
            for (const auto& t : terms) {
                CHECK(std::is_sorted(t.perm.begin(), t.perm.begin() + p));
                CHECK(std::is_sorted(t.perm.begin() + p, t.perm.end()));
            }
        }
}

TEST_CASE("shuffle-invariant dimensions", "[harrison]") {
    CHECK(shuffle_invariant_dim(make_fat_point(2), Module::trivial, 2) == 3);
    CHECK(shuffle_invariant_dim(make_fat_point(3), Module::trivial, 3) == 8);
    CHECK(shuffle_invariant_dim(make_fat_point(3), Module::regular, 1) == 3 * 4);
    CHECK(shuffle_invariant_dim(make_truncated_polynomial(2), Module::trivial, 1) == 2);
    // Degree 2 invariants are the symmetric functionals.
    for (std::size_t m = 1; m <= 6; ++m)
        CHECK(shuffle_invariant_dim(make_fat_point(m), Module::trivial, 2) == m * (m + 1) / 2);
}

TEST_CASE("shuffle-invariant basis vectors satisfy every shuffle relation", "[harrison]") {
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto space = CochainSpace::shuffle_invariant(2, k);
        for (std::size_t s = 0; s < space.dimension(); ++s) {
            std::vector<BigRational> dense(space.tuple_count());
            for (const auto& [t, c] : space.basis()[s]) dense[t] = c;
            CHECK(space.is_shuffle_invariant(dense, 1));
        }
        // The all-ones functional: symmetric, so invariant in degree 2; the (1,2)
        // shuffle has signs summing to 1, so not invariant from degree 3 on.
        if (k >= 3)
            CHECK_FALSE(space.is_shuffle_invariant(std::vector<BigRational>(space.tuple_count(), 1), 1));
    }
}

TEST_CASE("coboundary vanishes on fat points with trivial coefficients", "[harrison]") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t k = 1; k <= 4; ++k) CHECK(coboundary_matrix(make_fat_point(m), Module::trivial, k).is_zero());
}

TEST_CASE("coboundary squares to zero", "[harrison]") {
    const std::vector<FiniteLocalAlgebra> algebras{make_fat_point(2), make_fat_point(3),
                                                   make_truncated_polynomial(2),
                                                   make_truncated_polynomial(3)};
    for (const auto& a : algebras)
        for (auto module : {Module::trivial, Module::regular})
            for (auto kind : {ComplexKind::harrison, ComplexKind::hochschild}) {
                CochainComplex cx(a, module, kind);
                for (std::size_t k = 1; k <= 3; ++k) {
                    INFO("n=" << a.n() << " k=" << k);
                    CHECK((cx.coboundary(k + 1) * cx.coboundary(k)).is_zero());
                }
            }
}

TEST_CASE("regular coefficients on Z_2: rank bookkeeping in low degree", "[harrison]") {
    CochainComplex cx(make_fat_point(2), Module::regular, ComplexKind::harrison);
    const auto d1 = cx.coboundary(1);
    CHECK(d1.cols() == 3 * c_mk(2, 1));
    CHECK(cx.cohomology_dim(1) == d1.cols() - mat_rank(d1));
    CHECK(cx.cochain_dim(2) - cx.coboundary_rank(2) - mat_rank(d1) == fatpoint_tdim(2, 1));
}

TEST_CASE("harrison_dim examples", "[harrison]") {
    CHECK(harrison_dim(make_fat_point(2), Module::trivial, 3) == 2);
    CHECK(harrison_dim(make_fat_point(2), Module::regular, 2) == 4);
    CHECK(harrison_dim(make_fat_point(2), Module::regular, 3) == 1);
}

TEST_CASE("Harrison oracle agrees with c_mk on small fat points", "[harrison][oracle]") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t k = 1; k <= 4; ++k) {
            INFO("m=" << m << " k=" << k);
            const auto a = make_fat_point(m);
            CHECK(harrison_dim(a, Module::trivial, k) == c_mk(m, k));
            CHECK(harrison_dim(a, Module::trivial, k) == shuffle_invariant_dim(a, Module::trivial, k));
        }
    for (std::size_t m = 2; m <= 3; ++m)
        for (unsigned i = 1; i <= 2; ++i) CHECK(harrison_dim(make_fat_point(m), Module::regular, i + 1) == fatpoint_tdim(m, i));
}

TEST_CASE("hypersurface Q[x]/(x^(r+1)): T^1 has dimension r, higher T^i vanish", "[harrison]") {
    for (std::size_t r = 1; r <= 3; ++r) {
        const auto a = make_truncated_polynomial(r);
        INFO("r=" << r);
        CHECK(harrison_dim(a, Module::regular, 2) == r);
        CHECK(harrison_dim(a, Module::regular, 3) == 0);
        CHECK(harrison_dim(a, Module::regular, 4) == 0);
        // One generator, one relation.
        CHECK(harrison_dim(a, Module::trivial, 1) == 1);
        CHECK(harrison_dim(a, Module::trivial, 2) == 1);
        CHECK(harrison_dim(a, Module::trivial, 3) == 0);
    }
}

TEST_CASE("hochschild_dim examples", "[harrison]") {
    CHECK(hochschild_dim(make_fat_point(1), Module::trivial, 1) == 1);
    CHECK(hochschild_dim(make_fat_point(2), Module::trivial, 2) == 4);
}

TEST_CASE("Hochschild dominates Harrison", "[harrison][property]") {
    const std::vector<FiniteLocalAlgebra> algebras{make_fat_point(1), make_fat_point(2),
                                                   make_fat_point(3), make_truncated_polynomial(2),
                                                   make_truncated_polynomial(3)};
    for (const auto& a : algebras)
        for (auto module : {Module::trivial, Module::regular})
            for (std::size_t k = 1; k <= 3; ++k) {
                INFO("n=" << a.n() << " k=" << k);
                CHECK(hochschild_dim(a, module, k) >= harrison_dim(a, module, k));
            }
}

TEST_CASE("zero map from regular to trivial coefficients", "[harrison]") {
    CHECK(zero_map_check(2, 2));
    CHECK(zero_map_check(3, 2));
    CHECK(zero_map_check(2, 3));
    CHECK_THROWS_AS(zero_map_check(1, 2), std::invalid_argument);
    // Degree 1: a derivation D with e_i D(e_j) + e_j D(e_i) = 0 has no scalar part.
    CHECK(zero_map_check(2, 1));
}

TEST_CASE("budget is enforced", "[harrison]") {
    CHECK_THROWS_AS(harrison_dim(make_fat_point(4), Module::trivial, 9), BudgetExceeded);
    CHECK_THROWS_AS(harrison_dim(make_fat_point(2), Module::trivial, 3, 8), BudgetExceeded);  // needs 2^4
    CHECK(harrison_dim(make_fat_point(2), Module::trivial, 3, 16) == 2);
    CHECK_THROWS_AS(shuffle_invariant_dim(make_fat_point(3), Module::trivial, 7), BudgetExceeded);
}
