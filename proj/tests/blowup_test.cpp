#include "cotangent/blowup.hpp"
#include "cotangent/fixtures.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cotangent;
namespace fx = cotangent::fixtures;

namespace {

// Random rational graphs of multiplicity >= 3.
std::vector<ResolutionGraph> random_rational_graphs(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::vector<ResolutionGraph> out;
    while (static_cast<int>(out.size()) < count) {
        try {
            auto g = oracle::random_tree(rng, 9, 2, 4).build();
            if (is_rational(g) && multiplicity(g) >= 3) out.push_back(std::move(g));
        } catch (const GraphError&) {
        }
    }
    return out;
}

std::vector<std::string> ids_of(const ResolutionGraph& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices()) out.push_back(v.id);
    return out;
}

}  // namespace

TEST_CASE("blowup_components examples", "[blowup]") {
    const auto cone = fx::cone(5).build();
    CHECK(blowup_components(cone, fundamental_cycle(cone)).empty());

    const auto chain = fx::chain({3, 2, 3}).build();
    const auto comps = blowup_components(chain, fundamental_cycle(chain));
    REQUIRE(comps.size() == 1);
    CHECK(ids_of(comps[0]) == std::vector<std::string>{"E2"});

    const auto star = fx::star(3, {3, 3, 3}).build();
    const auto sc = blowup_components(star, fundamental_cycle(star));
    REQUIRE(sc.size() == 1);
    CHECK(ids_of(sc[0]) == std::vector<std::string>{"C"});
}

TEST_CASE("multiplicity_tree examples", "[blowup]") {
    const auto star = multiplicity_tree(fx::star(3, {3, 3, 3}).build());
    CHECK(star.mult == 6);
    CHECK(star.reduced);
    REQUIRE(star.children.size() == 1);
    CHECK(star.children[0].mult == 3);
    CHECK(star.children[0].children.empty());

    const auto chain = multiplicity_tree(fx::chain({3, 2, 3}).build());
    CHECK(chain.mult == 4);
    CHECK(chain.children.empty());
    CHECK(chain.dropped_rdp_count == 1);

    const auto nonreduced = multiplicity_tree(fx::star(2, {3, 3, 3}).build());
    CHECK(nonreduced.mult == 5);
    CHECK_FALSE(nonreduced.reduced);

    CHECK_THROWS_AS(multiplicity_tree(fx::d4().build()), NotApplicable);
    CHECK_THROWS_AS(multiplicity_tree(fx::star(2, {3, 3, 3, 3}).build()), NotRational);
}

TEST_CASE("cones have a single node", "[blowup]") {
    for (int d = 3; d <= 12; ++d) {
        const auto t = multiplicity_tree(fx::cone(d).build());
        CHECK(t.mult == d);
        CHECK(t.children.empty());
        CHECK(t.dropped_rdp_count == 0);
    }
}

TEST_CASE("family: multiplicity 3k-4 with three children of multiplicity k", "[blowup]") {
    for (int k = 3; k <= 7; ++k) {
        INFO("k=" << k);
        const auto t = multiplicity_tree(fx::d4_generalization(k).build());
        CHECK(t.mult == 3 * k - 4);
        REQUIRE(t.children.size() == 3);
        for (std::size_t a = 0; a < 3; ++a) {
            CHECK(t.children[a].mult == k);
            CHECK(t.children[a].children.empty());
            CHECK(t.children[a].graph.size() == 1);
            CHECK(t.children[a].graph.vertices()[0].id == "A" + std::to_string(a + 1));
        }
    }
}

TEST_CASE("blow-up invariants on random rational graphs", "[blowup][property]") {
    for (const auto& g : random_rational_graphs(41, 60)) {
        const auto tree = multiplicity_tree(g);
        for_each_node(tree, [](const MultiplicityTree& node) {
            CHECK(node.mult >= 3);
            CHECK(is_negative_definite(intersection_matrix(node.graph)));
            CHECK(is_rational(node.graph));
            CHECK(node.cycle.coefficients() == fundamental_cycle(node.graph).coefficients());
            CHECK(blowup_components(node.graph, node.cycle).size() ==
                  node.children.size() + node.dropped_rdp_count);
            for (const auto& child : node.children) {
                CHECK(child.graph.size() < node.graph.size());
                CHECK(child.mult <= node.mult);
                for (const auto& v : child.graph.vertices()) CHECK_NOTHROW(node.graph.index_of(v.id));
            }
        });
    }
}
