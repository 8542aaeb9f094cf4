#pragma once

// Named resolution graphs used by the self-test and the test suites.

#include "cotangent/resgraph.hpp"

#include <string>
#include <vector>

namespace cotangent::fixtures {

/// Raw vertex/edge lists; build() validates.
struct GraphData {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    ResolutionGraph build() const { return ResolutionGraph::create(vertices, edges); }
    std::string json() const {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : vertices) vs.push_back({{"id", v.id}, {"b", v.b}});
        nlohmann::json es = nlohmann::json::array();
        for (const auto& [u, w] : edges) es.push_back({u, w});
        return nlohmann::json{{"vertices", vs}, {"edges", es}}.dump();
    }
};

/// Single curve with self-intersection -d: the cone over the rational normal curve of degree d.
inline GraphData cone(std::int64_t d) { return {{{"E1", d}}, {}}; }

/// Center "C" joined to one leaf "L<j>" per entry of `leaves`.
inline GraphData star(std::int64_t center_b, const std::vector<std::int64_t>& leaves) {
    GraphData g{{{"C", center_b}}, {}};
    for (std::size_t j = 0; j < leaves.size(); ++j) {
        const std::string id = "L" + std::to_string(j + 1);
        g.vertices.push_back({id, leaves[j]});
        g.edges.emplace_back("C", id);
    }
    return g;
}

/// Path E1 - E2 - ... with the given weights.
inline GraphData chain(const std::vector<std::int64_t>& bs) {
    GraphData g;
    for (std::size_t j = 0; j < bs.size(); ++j) {
        g.vertices.push_back({"E" + std::to_string(j + 1), bs[j]});
        if (j > 0) g.edges.emplace_back("E" + std::to_string(j), "E" + std::to_string(j + 1));
    }
    return g;
}

inline GraphData d4() { return star(2, {2, 2, 2}); }

/// Higher-multiplicity analogue of D_4: a (-2)-curve "C" meeting three
/// (-k)-curves "A1".."A3", each of which carries k-2 further (-2)-leaves.
/// Multiplicity 3k-4, first blow-up has three cone points of multiplicity k.
inline GraphData d4_generalization(std::int64_t k) {
    GraphData g{{{"C", 2}}, {}};
    for (int a = 1; a <= 3; ++a) {
        const std::string arm = "A" + std::to_string(a);
        g.vertices.push_back({arm, k});
        g.edges.emplace_back("C", arm);
        for (std::int64_t l = 1; l <= k - 2; ++l) {
            const std::string leaf = arm + "L" + std::to_string(l);
            g.vertices.push_back({leaf, 2});
            g.edges.emplace_back(arm, leaf);
        }
    }
    return g;
}

}  // namespace cotangent::fixtures
