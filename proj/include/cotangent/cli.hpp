#pragma once

// Command implementations behind the `cotangent` executable. Every command
// builds one JSON document (schema "1") and renders the human-readable text
// from that same document, so both outputs carry identical numbers.
// Integers that may exceed 64 bits are decimal strings.

#include "cotangent/acceptance.hpp"
#include "cotangent/blowup.hpp"
#include "cotangent/errors.hpp"
#include "cotangent/formulas.hpp"
#include "cotangent/harrison.hpp"
#include "cotangent/resgraph.hpp"
#include "cotangent/series.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace cotangent::cli {

using nlohmann::json;

enum class Status { ok, invalid_input, not_rational, not_applicable, budget_exceeded, check_failed };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::invalid_input: return "invalid-input";
        case Status::not_rational: return "not-rational";
        case Status::not_applicable: return "not-applicable";
        case Status::budget_exceeded: return "budget-exceeded";
        case Status::check_failed: return "check-failed";
    }
    return "unknown";
}

inline int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::check_failed: return 1;
        case Status::invalid_input: return 2;
        case Status::not_rational: return 3;
        case Status::not_applicable: return 4;
        case Status::budget_exceeded: return 5;
    }
    return 1;
}

struct CommandResult {
    Status status = Status::ok;
    json document;

    int exit_code() const { return cli::exit_code(status); }
    std::string text() const;
    std::string json_text() const { return document.dump(2); }
};

namespace detail {

inline json envelope(const std::string& command, Status status) {
    return {{"schema", "1"}, {"command", command}, {"status", to_string(status)}};
}

inline CommandResult error(const std::string& command, Status status, const std::string& message,
                           const std::optional<std::string>& code = std::nullopt) {
    json doc = envelope(command, status);
    doc["error"] = {{"message", message}};
    if (code) doc["error"]["code"] = *code;
    return {status, doc};
}

inline json series_array(const TruncatedSeries& s, std::size_t from) {
    json a = json::array();
    for (std::size_t j = from; j <= s.order(); ++j) a.push_back(to_integer(s[j]).str());
    return a;
}

inline json tree_json(const MultiplicityTree& t) {
    json ids = json::array();
    for (const auto& v : t.graph.vertices()) ids.push_back(v.id);
    json children = json::array();
    for (const auto& c : t.children) children.push_back(tree_json(c));
    return {{"vertices", ids},
            {"multiplicity", t.mult.str()},
            {"reduced", t.reduced},
            {"dropped_rdp_count", t.dropped_rdp_count},
            {"children", children}};
}

inline void render_tree(std::ostringstream& os, const json& t, int depth) {
    os << std::string(2 * depth + 2, ' ') << "d=" << t["multiplicity"].get<std::string>()
       << (t["reduced"].get<bool>() ? " reduced" : " non-reduced") << " on {";
    bool first = true;
    for (const auto& id : t["vertices"]) {
        os << (first ? "" : ", ") << id.get<std::string>();
        first = false;
    }
    os << "}";
    if (t["dropped_rdp_count"].get<std::size_t>() > 0)
        os << ", dropped RDPs: " << t["dropped_rdp_count"].get<std::size_t>();
    os << "\n";
    for (const auto& c : t["children"]) render_tree(os, c, depth + 1);
}

inline std::string exactness(const json& v) {
    return v["value"].get<std::string>() + (v["exact"].get<bool>() ? " (exact)" : " (lower bound)");
}

}  // namespace detail

inline std::string CommandResult::text() const {
    const json& d = document;
    std::ostringstream os;
    const std::string command = d["command"];
    if (d.contains("error")) {
        os << command << ": " << d["status"].get<std::string>() << ": "
           << d["error"]["message"].get<std::string>() << "\n";
        return os.str();
    }
    if (command == "analyze") {
        os << "rational: " << (d["rational"].get<bool>() ? "yes" : "no") << "\n";
        os << "fundamental cycle:";
        for (const auto& e : d["fundamental_cycle"])
            os << " " << e["id"].get<std::string>() << "=" << e["a"].get<std::string>();
        os << "\n";
        os << (d["rational"].get<bool>() ? "multiplicity: " : "-Z.Z: ")
           << d["multiplicity"].get<std::string>() << "\n";
        if (d.contains("message")) os << "status: " << d["message"].get<std::string>() << "\n";
        if (d["status"] != "ok") return os.str();
        os << "reduced everywhere: " << (d["reduced_everywhere"].get<bool>() ? "yes" : "no") << "\n";
        os << "multiplicity tree:\n";
        detail::render_tree(os, d["tree"], 0);
        for (const auto& [i, v] : d["tdims"].items()) os << "dim T^" << i << ": " << v.get<std::string>() << "\n";
        os << "dim T^2: " << detail::exactness(d["t2"]) << "\n";
        os << "cod_AC: " << detail::exactness(d["codim_ac"]) << "\n";
        os << "sum (d(P)-1): " << d["gmd"]["sum_d_minus_1"].get<std::string>() << "\n";
        os << "sum (b_i-1): " << d["gmd"]["sum_b_minus_1"].get<std::string>() << "\n";
        os << "good maximal deformation obstructed: "
           << (d["gmd"]["obstructed"].get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "series") {
        const auto row = [&](const char* label, const json& a, std::size_t from) {
            os << label;
            for (std::size_t j = 0; j < a.size(); ++j)
                os << (j ? ", " : " ") << "[" << j + from << "] " << a[j].get<std::string>();
            os << "\n";
        };
        os << "d = " << d["d"].get<std::string>() << ", m = d-1 = " << d["m"].get<std::string>()
           << ", order " << d["order"].get<std::size_t>() << "\n";
        row("c_{m,k}:", d["c"], 1);
        row("Q_d:", d["q"], 0);
        row("P_d:", d["p"], 0);
    } else if (command == "oracle") {
        os << d["complex"].get<std::string>() << " cohomology of Z_" << d["m"].get<std::size_t>()
           << " in degree " << d["k"].get<std::size_t>() << ", " << d["coeffs"].get<std::string>()
           << " coefficients: " << d["brute_force"].get<std::string>() << "\n";
        if (d.contains("formula"))
            os << "formula (" << d["formula_name"].get<std::string>() << "): "
               << d["formula"].get<std::string>() << "\n"
               << "verdict: " << d["verdict"].get<std::string>() << "\n";
    } else if (command == "selftest") {
        for (const auto& c : d["criteria"]) os << c["line"].get<std::string>() << "\n";
        os << d["passed"].get<std::size_t>() << "/" << d["criteria"].size() << " criteria passed\n";
    }
    return os.str();
}

inline CommandResult cmd_analyze_document(const std::string& content, std::size_t max_i = default_max_index) {
    const std::string command = "analyze";
    std::optional<ResolutionGraph> g;
    try {
        g = parse_graph(content);
    } catch (const GraphError& e) {
        return detail::error(command, Status::invalid_input, e.what(), to_string(e.code()));
    }
    const AnalysisResult res = analyze(*g, max_i);
    const auto& r = res.report;
    const Status status = res.status == AnalysisStatus::ok             ? Status::ok
                          : res.status == AnalysisStatus::not_rational ? Status::not_rational
                                                                       : Status::not_applicable;
    json doc = detail::envelope(command, status);
    doc["rational"] = r.rational;
    doc["multiplicity"] = r.mult.str();
    json cycle = json::array();
    for (std::size_t i = 0; i < r.cycle.size(); ++i)
        cycle.push_back({{"id", r.cycle.ids()[i]}, {"a", r.cycle[i].str()}});
    doc["fundamental_cycle"] = cycle;
    if (!res.message.empty()) doc["message"] = res.message;
    if (status == Status::ok) {
        doc["reduced_everywhere"] = r.reduced_everywhere;
        doc["tree"] = detail::tree_json(*r.tree);
        json t = json::object();
        for (const auto& [i, v] : r.tdims) t[std::to_string(i)] = v.str();
        doc["tdims"] = t;
        doc["t2"] = {{"value", r.t2.value.str()}, {"exact", r.t2.exact}};
        doc["codim_ac"] = {{"value", r.codim_ac.value.str()}, {"exact", r.codim_ac.exact}};
        doc["gmd"] = {{"sum_d_minus_1", r.sum_d_minus_1.str()},
                      {"sum_b_minus_1", r.sum_b_minus_1.str()},
                      {"obstructed", r.gmd_obstructed}};
    }
    return {status, doc};
}

inline CommandResult cmd_analyze(const std::string& path, std::size_t max_i = default_max_index) {
    std::ifstream in(path);
    if (!in) return detail::error("analyze", Status::invalid_input, "cannot read '" + path + "'", "io");
    std::ostringstream buf;
    buf << in.rdbuf();
    return cmd_analyze_document(buf.str(), max_i);
}

inline CommandResult cmd_series(long long d, std::size_t order) {
    const std::string command = "series";
    if (d < 3)
        return detail::error(command, Status::invalid_input,
                             "d must be at least 3, got " + std::to_string(d));
    if (order < 1) return detail::error(command, Status::invalid_input, "order must be at least 1");
    const BigInt dd = d;
    json doc = detail::envelope(command, Status::ok);
    doc["d"] = dd.str();
    doc["m"] = BigInt(dd - 1).str();
    doc["order"] = order;
    json c = json::array();
    for (std::size_t k = 1; k <= order; ++k) c.push_back(c_mk(dd - 1, static_cast<unsigned>(k)).str());
    doc["c"] = c;
    doc["q"] = detail::series_array(q_series(dd, order), 0);
    doc["p"] = detail::series_array(p_series(dd, order), 0);
    return {Status::ok, doc};
}

enum class Coefficients { trivial, regular };

inline CommandResult cmd_oracle(std::size_t m, std::size_t k, Coefficients coeffs, bool hochschild,
                                std::size_t budget = default_tensor_budget) {
    const std::string command = "oracle";
    if (m < 1 || k < 1) return detail::error(command, Status::invalid_input, "m and k must be positive");
    const auto module = coeffs == Coefficients::trivial ? CoefficientModule::trivial : CoefficientModule::regular;
    std::size_t brute = 0;
    try {
        const auto a = make_fat_point(m);
        brute = hochschild ? hochschild_dim(a, module, k, budget) : harrison_dim(a, module, k, budget);
    } catch (const BudgetExceeded& e) {
        return detail::error(command, Status::budget_exceeded, e.what());
    }
    json doc = detail::envelope(command, Status::ok);
    doc["m"] = m;
    doc["k"] = k;
    doc["coeffs"] = coeffs == Coefficients::trivial ? "trivial" : "regular";
    doc["complex"] = hochschild ? "Hochschild" : "Harrison";
    doc["brute_force"] = std::to_string(brute);
    if (!hochschild) {
        std::optional<BigInt> formula;
        if (coeffs == Coefficients::trivial) {
            formula = c_mk(m, static_cast<unsigned>(k));
            doc["formula_name"] = "c_{m,k}";
        } else if (k >= 2 && m >= 2) {
            formula = fatpoint_tdim(m, static_cast<unsigned>(k - 1));
            doc["formula_name"] = "m c_{m,k} - c_{m,k-1}";
        }
        if (formula) {
            const bool match = *formula == brute;
            doc["formula"] = formula->str();
            doc["verdict"] = match ? "MATCH" : "MISMATCH";
            if (!match) {
                doc["status"] = to_string(Status::check_failed);
                return {Status::check_failed, doc};
            }
        }
    }
    return {Status::ok, doc};
}

inline CommandResult cmd_selftest(const AcceptanceOptions& options = {}) {
    const auto results = run_acceptance(options);
    std::size_t passed = 0;
    json criteria = json::array();
    for (const auto& r : results) {
        passed += r.passed;
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                            {"detail", r.detail}, {"line", format_result(r)}});
    }
    const Status status = passed == results.size() ? Status::ok : Status::check_failed;
    json doc = detail::envelope("selftest", status);
    doc["criteria"] = criteria;
    doc["passed"] = passed;
    return {status, doc};
}

}  // namespace cotangent::cli
