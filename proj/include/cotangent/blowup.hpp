#pragma once

// Infinitely near singular points of a rational surface singularity.
//
// The singular points of the first blow-up correspond to the connected
// components of the curves with Z . E_i = 0 (Z the fundamental cycle); each
// keeps its induced subgraph as minimal resolution graph (Tyurina).

#include "cotangent/errors.hpp"
#include "cotangent/resgraph.hpp"

#include <vector>

namespace cotangent {

struct MultiplicityTree {
    ResolutionGraph graph;
    Cycle cycle;
    BigInt mult;
    bool reduced = false;
    std::vector<MultiplicityTree> children;
    std::size_t dropped_rdp_count = 0;  // multiplicity-2 points pruned at this node
};

/// Components of the full subgraph on {E_i : Z . E_i = 0}, ordered by their
/// first vertex in the parent's order. Empty when the blow-up is smooth.
inline std::vector<ResolutionGraph> blowup_components(const ResolutionGraph& g, const Cycle& z) {
    const std::size_t n = g.size();
    std::vector<bool> keep(n, false);
    for (std::size_t i = 0; i < n; ++i) keep[i] = pairing(g, z, i) == 0;

    std::vector<ResolutionGraph> out;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (!keep[start] || seen[start]) continue;
        std::vector<std::size_t> component;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            component.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (keep[j] && !seen[j] && g.edge_multiplicity(i, j) > 0) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        std::sort(component.begin(), component.end());
        out.push_back(g.induced_subgraph(component));
    }
    return out;
}

namespace detail {

inline MultiplicityTree build_tree(const ResolutionGraph& g, Cycle z, BigInt mult) {
    MultiplicityTree node{g, std::move(z), std::move(mult), false, {}, 0};
    node.reduced = is_reduced(node.cycle);
    for (auto& component : blowup_components(node.graph, node.cycle)) {
        Cycle zc = fundamental_cycle(component);
        if (pa_cycle(component, zc) != 0)
            throw std::logic_error("blow-up component of a rational graph is not rational");
        BigInt d = -self_intersection(component, zc);
        if (d <= 2) {
            ++node.dropped_rdp_count;
            continue;
        }
        node.children.push_back(build_tree(component, std::move(zc), std::move(d)));
    }
    return node;
}

}  // namespace detail

/// Tree of infinitely near singular points of multiplicity >= 3, rooted at g.
/// Throws NotRational or NotApplicable (multiplicity <= 2 at the root).
inline MultiplicityTree multiplicity_tree(const ResolutionGraph& g) {
    Cycle z = fundamental_cycle(g);
    if (pa_cycle(g, z) != 0) throw NotRational("multiplicity_tree: graph is not rational");
    BigInt d = -self_intersection(g, z);
    if (d <= 2)
        throw NotApplicable("multiplicity_tree: multiplicity " + d.str() +
                            " (rational double point); formulas need d >= 3");
    return detail::build_tree(g, std::move(z), std::move(d));
}

/// Visits every node, parents before children.
template <typename Fn>
void for_each_node(const MultiplicityTree& tree, Fn&& fn) {
    fn(tree);
    for (const auto& child : tree.children) for_each_node(child, fn);
}

}  // namespace cotangent
