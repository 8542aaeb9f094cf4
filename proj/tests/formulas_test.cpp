#include "cotangent/fixtures.hpp"
#include "cotangent/formulas.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace cotangent;
namespace fx = cotangent::fixtures;

namespace {

BigInt f3(const BigInt& d) { return (d - 1) * (d - 2) * (d - 3) / 2; }
BigInt f4(const BigInt& d) { return (d - 1) * (d - 2) * (2 * d * d - 8 * d + 9) / 6; }

std::vector<fx::GraphData> random_rational_data(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::vector<fx::GraphData> out;
    while (static_cast<int>(out.size()) < count) {
        auto data = oracle::random_tree(rng, 9, 2, 4);
        try {
            const auto g = data.build();
            if (is_rational(g) && multiplicity(g) >= 3) out.push_back(std::move(data));
        } catch (const GraphError&) {
        }
    }
    return out;
}

// Same graph with vertices shuffled and renamed.
template <typename Rng>
fx::GraphData relabel(const fx::GraphData& in, Rng& rng) {
    std::vector<std::size_t> perm(in.vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < perm.size(); ++i) rename[in.vertices[perm[i]].id] = "W" + std::to_string(i);
    fx::GraphData out;
    for (std::size_t i = 0; i < perm.size(); ++i) out.vertices.push_back({"W" + std::to_string(i), in.vertices[perm[i]].b});
    for (const auto& [u, w] : in.edges) out.edges.emplace_back(rename.at(w), rename.at(u));
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    return out;
}

}  // namespace

TEST_CASE("tdim examples", "[formulas]") {
    CHECK(tdim(multiplicity_tree(fx::cone(5).build()), 3) == 12);
    CHECK(tdim(multiplicity_tree(fx::star(3, {3, 3, 3}).build()), 3) == 30);
    CHECK(tdim(multiplicity_tree(fx::chain({3, 2, 3}).build()), 4) == 9);
    CHECK_THROWS_AS(tdim(multiplicity_tree(fx::cone(5).build()), 2), std::invalid_argument);
}

TEST_CASE("tdim on the family is f_i(3k-4) + 3 f_i(k)", "[formulas]") {
    for (int k = 3; k <= 8; ++k) {
        const auto tree = multiplicity_tree(fx::d4_generalization(k).build());
        CHECK(tdim(tree, 3) == f3(3 * k - 4) + 3 * f3(k));
        CHECK(tdim(tree, 4) == f4(3 * k - 4) + 3 * f4(k));
    }
}

TEST_CASE("T^2, cod_AC and the deformation check", "[formulas]") {
    const auto star = fx::star(3, {3, 3, 3}).build();
    const auto st = multiplicity_tree(star);
    CHECK(t2_report(st) == BoundedValue{15, true});
    CHECK(codim_ac_report(st) == BoundedValue{3, true});
    const auto sg = gmd_check(star, st);
    CHECK(sg.sum_d_minus_1 == 7);
    CHECK(sg.sum_b_minus_1 == 8);
    CHECK_FALSE(sg.obstructed);

    // Z = 2C + L1 + L2 + L3 is not reduced: values become lower bounds.
    const auto nr = multiplicity_tree(fx::star(2, {3, 3, 3}).build());
    CHECK(t2_report(nr) == BoundedValue{8, false});
    CHECK(codim_ac_report(nr) == BoundedValue{2, false});

    for (int d = 3; d <= 8; ++d) {
        const auto g = fx::cone(d).build();
        const auto gmd = gmd_check(g, multiplicity_tree(g));
        CHECK(gmd.sum_d_minus_1 == d - 1);
        CHECK(gmd.sum_b_minus_1 == d - 1);
        CHECK(gmd.obstructed);
    }
}

TEST_CASE("analyze examples", "[formulas]") {
    const auto cone = analyze(fx::cone(6).build());
    REQUIRE(cone.status == AnalysisStatus::ok);
    CHECK(cone.report.mult == 6);
    CHECK(cone.report.tdims.at(3) == 30);
    CHECK(cone.report.tdims.at(4) == 110);
    CHECK(cone.report.tdims.size() == 4);
    CHECK(cone.report.reduced_everywhere);

    CHECK(analyze(fx::cone(6).build(), 4).report.tdims.size() == 2);

    const auto d4 = analyze(fx::d4().build());
    CHECK(d4.status == AnalysisStatus::not_applicable);
    CHECK(d4.report.rational);
    CHECK(d4.report.mult == 2);
    CHECK_FALSE(d4.report.tree);

    const auto nr = analyze(fx::star(2, {3, 3, 3, 3}).build());
    CHECK(nr.status == AnalysisStatus::not_rational);
    CHECK_FALSE(nr.report.rational);
    CHECK(nr.report.mult == 4);
}

TEST_CASE("recursive and flat sums agree", "[formulas][property]") {
    for (const auto& data : random_rational_data(7, 40)) {
        const auto tree = multiplicity_tree(data.build());
        for (std::size_t i = 3; i <= 7; ++i) CHECK(tdim(tree, i) == tdim_recursive(tree, i));
    }
}

TEST_CASE("dimensions are nonnegative and the bounds hold", "[formulas][property]") {
    for (const auto& data : random_rational_data(13, 40)) {
        const auto res = analyze(data.build(), 7);
        REQUIRE(res.status == AnalysisStatus::ok);
        for (const auto& [i, v] : res.report.tdims) CHECK(v >= 0);
        CHECK(res.report.t2.value >= 0);
        CHECK(res.report.codim_ac.value >= 0);
        CHECK(res.report.t2.exact == res.report.reduced_everywhere);
        CHECK(res.report.codim_ac.exact == res.report.reduced_everywhere);
    }
}

TEST_CASE("results do not depend on vertex labels or order", "[formulas][property]") {
    std::mt19937 rng(5);
    for (const auto& data : random_rational_data(19, 30)) {
        const auto a = analyze(data.build());
        const auto b = analyze(relabel(data, rng).build());
        CHECK(a.report.mult == b.report.mult);
        CHECK(a.report.tdims == b.report.tdims);
        CHECK(a.report.t2 == b.report.t2);
        CHECK(a.report.codim_ac == b.report.codim_ac);
        CHECK(a.report.sum_d_minus_1 == b.report.sum_d_minus_1);
        CHECK(a.report.gmd_obstructed == b.report.gmd_obstructed);
        auto ma = node_multiplicities(*a.report.tree), mb = node_multiplicities(*b.report.tree);
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        CHECK(ma == mb);
    }
}
