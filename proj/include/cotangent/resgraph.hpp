#pragma once

// Resolution dual graphs of surface singularities: validation, intersection
// form, Laufer's fundamental cycle, Artin's rationality criterion.

#include "cotangent/errors.hpp"
#include "cotangent/exact.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cotangent {

/// Exceptional curve E_i: a smooth rational curve with E_i^2 = -b.
struct Vertex {
    std::string id;
    std::int64_t b;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<std::string, std::string>;

/// Weighted dual graph of a minimal resolution. Immutable and always valid:
/// connected, every b >= 2, no self-loops, negative definite intersection form.
class ResolutionGraph {
public:
    static ResolutionGraph create(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    std::int64_t b(std::size_t i) const { return vertices_.at(i).b; }

    /// Number of edges between E_i and E_j (i != j).
    int edge_multiplicity(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }

    std::size_t index_of(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end()) throw std::out_of_range("no vertex '" + std::string(id) + "'");
        return it->second;
    }

    /// Edge list, each unordered pair once per multiplicity, in index order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                for (int e = 0; e < adjacency_[i][j]; ++e)
                    out.emplace_back(vertices_[i].id, vertices_[j].id);
        return out;
    }

    /// Full subgraph on `indices`, in the given order.
    ResolutionGraph induced_subgraph(const std::vector<std::size_t>& indices) const {
        std::vector<Vertex> vs;
        for (auto i : indices) vs.push_back(vertices_.at(i));
        std::vector<Edge> es;
        for (std::size_t x = 0; x < indices.size(); ++x)
            for (std::size_t y = x + 1; y < indices.size(); ++y)
                for (int e = 0; e < adjacency_[indices[x]][indices[y]]; ++e)
                    es.emplace_back(vertices_[indices[x]].id, vertices_[indices[y]].id);
        return create(std::move(vs), es);
    }

private:
    ResolutionGraph() = default;

    std::vector<Vertex> vertices_;
    std::vector<std::vector<int>> adjacency_;
    std::map<std::string, std::size_t> index_;
};

/// E_i . E_j: -b_i on the diagonal, edge multiplicities elsewhere.
inline QMatrix intersection_matrix(const ResolutionGraph& g) {
    QMatrix m(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            m(i, j) = i == j ? BigRational(-g.b(i)) : BigRational(g.edge_multiplicity(i, j));
    return m;
}

/// Sylvester's criterion: (-1)^k times the k-th leading principal minor is positive.
inline bool is_negative_definite(const QMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_negative_definite: matrix not symmetric");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        BigRational minor = mat_determinant(leading_minor(m, k));
        if (k % 2 == 1) minor = -minor;
        if (minor <= 0) return false;
    }
    return true;
}

inline ResolutionGraph ResolutionGraph::create(std::vector<Vertex> vertices,
                                               const std::vector<Edge>& edges) {
    ResolutionGraph g;
    if (vertices.empty()) throw GraphError(GraphErrc::empty_graph, "graph has no vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        if (v.id.empty()) throw GraphError(GraphErrc::syntax, "vertex id must be nonempty");
        if (!g.index_.emplace(v.id, i).second)
            throw GraphError(GraphErrc::duplicate_id, "vertex id '" + v.id + "' repeated");
    }
    for (const auto& v : vertices)
        if (v.b < 2)
            throw GraphError(GraphErrc::non_minimal, "vertex '" + v.id + "' has b = " +
                                                         std::to_string(v.b) + " < 2");

    const std::size_t n = vertices.size();
    g.adjacency_.assign(n, std::vector<int>(n, 0));
    for (const auto& [u, w] : edges) {
        auto iu = g.index_.find(u);
        auto iw = g.index_.find(w);
        if (iu == g.index_.end() || iw == g.index_.end())
            throw GraphError(GraphErrc::unknown_vertex,
                             "edge [" + u + ", " + w + "] references an unknown vertex");
        if (iu->second == iw->second) throw GraphError(GraphErrc::self_loop, "self-loop at '" + u + "'");
        ++g.adjacency_[iu->second][iw->second];
        ++g.adjacency_[iw->second][iu->second];
    }
    g.vertices_ = std::move(vertices);

    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacency_[i][j] > 0 && !seen[j]) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    if (reached != n) throw GraphError(GraphErrc::disconnected, "graph is not connected");

    if (!is_negative_definite(intersection_matrix(g)))
        throw GraphError(GraphErrc::not_negative_definite,
                         "intersection form is not negative definite");
    return g;
}

/// Parses the JSON graph document
///   {"vertices": [{"id": "E1", "b": 3}, ...], "edges": [["E1", "E2"], ...]}
/// Unknown keys are rejected.
inline ResolutionGraph parse_graph(std::string_view document) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw GraphError(GraphErrc::syntax, e.what());
    }
    if (!doc.is_object()) throw GraphError(GraphErrc::syntax, "top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "vertices" && key != "edges")
            throw GraphError(GraphErrc::unknown_field, "unknown top-level field '" + key + "'");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw GraphError(GraphErrc::syntax, "'vertices' must be an array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw GraphError(GraphErrc::syntax, "'edges' must be an array");

    std::vector<Vertex> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object()) throw GraphError(GraphErrc::syntax, "vertex must be an object");
        for (const auto& [key, _] : v.items())
            if (key != "id" && key != "b")
                throw GraphError(GraphErrc::unknown_field, "unknown vertex field '" + key + "'");
        if (!v.contains("id") || !v["id"].is_string())
            throw GraphError(GraphErrc::syntax, "vertex 'id' must be a string");
        if (!v.contains("b") || !v["b"].is_number_integer())
            throw GraphError(GraphErrc::syntax, "vertex 'b' must be an integer");
        const auto id = v["id"].get<std::string>();
        if (v["b"].is_number_unsigned() && v["b"].get<std::uint64_t>() > INT64_MAX)
            throw GraphError(GraphErrc::syntax, "vertex '" + id + "': b out of range");
        const auto b = v["b"].get<std::int64_t>();
        if (b < 1) throw GraphError(GraphErrc::syntax, "vertex '" + id + "': b must be positive");
        vertices.push_back({id, b});
    }

    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw GraphError(GraphErrc::syntax, "edge must be a pair of vertex ids");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return ResolutionGraph::create(std::move(vertices), edges);
}

inline nlohmann::json to_json(const ResolutionGraph& g) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"b", v.b}});
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [u, w] : g.edges()) es.push_back({u, w});
    return {{"vertices", vs}, {"edges", es}};
}

/// Z = sum a_i E_i on a fixed graph; coefficients follow the graph's vertex order.
class Cycle {
public:
    Cycle() = default;
    Cycle(const ResolutionGraph& g, std::vector<BigInt> coefficients)
        : coefficients_(std::move(coefficients)) {
        if (coefficients_.size() != g.size())
            throw std::invalid_argument("Cycle: one coefficient per vertex required");
        for (const auto& v : g.vertices()) ids_.push_back(v.id);
    }

    std::size_t size() const { return coefficients_.size(); }
    const BigInt& operator[](std::size_t i) const { return coefficients_.at(i); }
    const BigInt& at(std::string_view id) const {
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (ids_[i] == id) return coefficients_[i];
        throw std::out_of_range("Cycle: no vertex '" + std::string(id) + "'");
    }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    const std::vector<std::string>& ids() const { return ids_; }

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<BigInt> coefficients_;
};

/// Z . E_i.
inline BigInt pairing(const ResolutionGraph& g, const std::vector<BigInt>& z, std::size_t i) {
    BigInt s = -g.b(i) * z[i];
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i && g.edge_multiplicity(i, j) != 0) s += g.edge_multiplicity(i, j) * z[j];
    return s;
}

inline BigInt pairing(const ResolutionGraph& g, const Cycle& z, std::size_t i) {
    return pairing(g, z.coefficients(), i);
}

/// Z . Z.
inline BigInt self_intersection(const ResolutionGraph& g, const Cycle& z) {
    BigInt s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += z[i] * pairing(g, z, i);
    return s;
}

/// Z . K for genus-0 curves: sum a_i (b_i - 2).
inline BigInt canonical_pairing(const ResolutionGraph& g, const Cycle& z) {
    BigInt s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += z[i] * (g.b(i) - 2);
    return s;
}

/// Laufer's computation sequence: start from sum E_i and raise the first
/// coefficient with Z . E_i > 0 until none is left.
inline Cycle fundamental_cycle(const ResolutionGraph& g) {
    std::vector<BigInt> z(g.size(), BigInt(1));
    for (;;) {
        std::size_t i = 0;
        while (i < g.size() && pairing(g, z, i) <= 0) ++i;
        if (i == g.size()) break;
        z[i] += 1;
    }
    return Cycle(g, std::move(z));
}

/// Arithmetic genus p_a(Z) = 1 + (Z.Z + Z.K)/2.
inline BigInt pa_cycle(const ResolutionGraph& g, const Cycle& z) {
    if (z.size() != g.size()) throw std::invalid_argument("pa_cycle: cycle does not match graph");
    const BigInt twice = self_intersection(g, z) + canonical_pairing(g, z);
    if (twice % 2 != 0) throw std::logic_error("pa_cycle: Z.Z + Z.K is odd (" + twice.str() + ")");
    return 1 + twice / 2;
}

inline bool is_rational(const ResolutionGraph& g) { return pa_cycle(g, fundamental_cycle(g)) == 0; }

/// -Z.Z for the fundamental cycle; equals the multiplicity only for rational singularities.
inline BigInt multiplicity(const ResolutionGraph& g) {
    const Cycle z = fundamental_cycle(g);
    if (pa_cycle(g, z) != 0) throw NotRational("multiplicity: graph is not rational");
    return -self_intersection(g, z);
}

inline bool is_reduced(const Cycle& z) {
    return std::all_of(z.coefficients().begin(), z.coefficients().end(),
                       [](const BigInt& a) { return a == 1; });
}

}  // namespace cotangent
