#pragma once

// Dimension formulas for the cotangent cohomology of a rational surface
// singularity, summed over its infinitely near points of multiplicity >= 3:
//   dim T^i   = sum_P f_i(d(P))                       (i >= 3)
//   dim T^2   = sum_P (d(P)-1)(d(P)-3) + sum_P c(X_P)
//   cod_AC(X) = sum_P (d(P)-3)         + sum_P c(X_P)
// The corrections c(X_P) vanish when every fundamental cycle is reduced; they
// are never estimated otherwise, only flagged.

#include "cotangent/blowup.hpp"
#include "cotangent/errors.hpp"
#include "cotangent/resgraph.hpp"
#include "cotangent/series.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cotangent {

/// A value that is exact, or a lower bound when correction terms are unknown.
struct BoundedValue {
    BigInt value;
    bool exact = true;

    friend bool operator==(const BoundedValue&, const BoundedValue&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BoundedValue& v) {
        return os << v.value << (v.exact ? "" : " (lower bound)");
    }
};

struct GmdCheck {
    BigInt sum_d_minus_1;  // over infinitely near points of multiplicity >= 3
    BigInt sum_b_minus_1;  // over all vertices of the graph
    bool obstructed = false;
};

/// d(P) for every node, collected iteratively (parents before children).
inline std::vector<BigInt> node_multiplicities(const MultiplicityTree& tree) {
    std::vector<BigInt> out;
    std::vector<const MultiplicityTree*> stack{&tree};
    while (!stack.empty()) {
        const auto* node = stack.back();
        stack.pop_back();
        out.push_back(node->mult);
        for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
            stack.push_back(&*it);
    }
    return out;
}

inline bool reduced_everywhere(const MultiplicityTree& tree) {
    bool all = true;
    for_each_node(tree, [&](const MultiplicityTree& n) { all = all && n.reduced; });
    return all;
}

/// dim T^i = sum over nodes of f_i(d(P)), for i >= 3.
inline BigInt tdim(const MultiplicityTree& tree, std::size_t i) {
    if (i < 3) throw std::invalid_argument("tdim: index must be at least 3 (use t2_report for i = 2)");
    BigInt s = 0;
    for (const auto& d : node_multiplicities(tree)) s += f_val(i, d);
    return s;
}

/// Same sum, one blow-up at a time: f_i(d) + contributions of the children.
inline BigInt tdim_recursive(const MultiplicityTree& tree, std::size_t i) {
    if (i < 3) throw std::invalid_argument("tdim_recursive: index must be at least 3");
    BigInt s = f_val(i, tree.mult);
    for (const auto& child : tree.children) s += tdim_recursive(child, i);
    return s;
}

inline BoundedValue t2_report(const MultiplicityTree& tree) {
    BigInt s = 0;
    for (const auto& d : node_multiplicities(tree)) s += (d - 1) * (d - 3);
    return {s, reduced_everywhere(tree)};
}

inline BoundedValue codim_ac_report(const MultiplicityTree& tree) {
    BigInt s = 0;
    for (const auto& d : node_multiplicities(tree)) s += d - 3;
    return {s, reduced_everywhere(tree)};
}

/// Obstruction to a good maximal deformation of the general singularity with
/// this graph: sum_P (d(P)-1) >= sum_i (b_i-1).
inline GmdCheck gmd_check(const ResolutionGraph& g, const MultiplicityTree& tree) {
    GmdCheck out;
    for (const auto& d : node_multiplicities(tree)) out.sum_d_minus_1 += d - 1;
    for (const auto& v : g.vertices()) out.sum_b_minus_1 += v.b - 1;
    out.obstructed = out.sum_d_minus_1 >= out.sum_b_minus_1;
    return out;
}

enum class AnalysisStatus { ok, not_rational, not_applicable };

inline constexpr std::size_t default_max_index = 6;

struct AnalysisReport {
    bool rational = false;
    BigInt mult;  // -Z.Z; the multiplicity only when rational
    Cycle cycle;
    bool reduced_everywhere = false;
    std::optional<MultiplicityTree> tree;
    std::map<std::size_t, BigInt> tdims;  // i = 3..imax
    BoundedValue t2;
    BoundedValue codim_ac;
    BigInt sum_b_minus_1;
    BigInt sum_d_minus_1;
    bool gmd_obstructed = false;
};

struct AnalysisResult {
    AnalysisStatus status = AnalysisStatus::ok;
    std::string message;
    AnalysisReport report;  // rational, mult, cycle always set; the rest only when ok
};

inline AnalysisResult analyze(const ResolutionGraph& g, std::size_t imax = default_max_index) {
    AnalysisResult out;
    auto& r = out.report;
    r.cycle = fundamental_cycle(g);
    r.rational = pa_cycle(g, r.cycle) == 0;
    r.mult = -self_intersection(g, r.cycle);
    if (!r.rational) {
        out.status = AnalysisStatus::not_rational;
        out.message = "not rational: p_a(Z) = " + pa_cycle(g, r.cycle).str();
        return out;
    }
    if (r.mult <= 2) {
        out.status = AnalysisStatus::not_applicable;
        out.message = "multiplicity " + r.mult.str() +
                      " (rational double point): formulas need multiplicity >= 3";
        return out;
    }
    r.tree = multiplicity_tree(g);
    r.reduced_everywhere = reduced_everywhere(*r.tree);
    for (std::size_t i = 3; i <= imax; ++i) r.tdims[i] = tdim(*r.tree, i);
    r.t2 = t2_report(*r.tree);
    r.codim_ac = codim_ac_report(*r.tree);
    const auto gmd = gmd_check(g, *r.tree);
    r.sum_b_minus_1 = gmd.sum_b_minus_1;
    r.sum_d_minus_1 = gmd.sum_d_minus_1;
    r.gmd_obstructed = gmd.obstructed;
    return out;
}

}  // namespace cotangent
