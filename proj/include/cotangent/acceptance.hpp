#pragma once

// End-to-end acceptance checks. Each criterion is exact; the ones with a
// stated time limit fail if they overrun it. Output is deterministic (no
// timings in the detail text).

#include "cotangent/blowup.hpp"
#include "cotangent/fixtures.hpp"
#include "cotangent/formulas.hpp"
#include "cotangent/harrison.hpp"
#include "cotangent/resgraph.hpp"
#include "cotangent/series.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cotangent {

using Polynomial = std::function<BigRational(const BigInt&)>;

/// Closed forms: f_1..f_6 in d and c_{m,1}..c_{m,6} in m.
struct ClosedForms {
    std::array<Polynomial, 6> f;
    std::array<Polynomial, 6> c;
};

inline ClosedForms closed_forms() {
    using Q = BigRational;
    ClosedForms cf;
    cf.f[0] = [](const BigInt& d) { return Q(2 * d - 4); };
    cf.f[1] = [](const BigInt& d) { return Q((d - 1) * (d - 3)); };
    cf.f[2] = [](const BigInt& d) { return Q((d - 1) * (d - 2) * (d - 3)) / 2; };
    cf.f[3] = [](const BigInt& d) { return Q((d - 1) * (d - 2) * (2 * d * d - 8 * d + 9)) / 6; };
    cf.f[4] = [](const BigInt& d) {
        return Q((d - 1) * (d - 2) * (d - 2) * (3 * d * d - 8 * d + 9)) / 12;
    };
    cf.f[5] = [](const BigInt& d) {
        const BigInt d2 = d * d;
        return Q((d - 1) * (d - 2) * (12 * d2 * d2 - 66 * d2 * d + 153 * d2 - 179 * d + 90)) / 60;
    };
    cf.c[0] = [](const BigInt& m) { return Q(m); };
    cf.c[1] = [](const BigInt& m) { return Q(m * m + m) / 2; };
    cf.c[2] = [](const BigInt& m) { return Q(m * m * m - m) / 3; };
    cf.c[3] = [](const BigInt& m) { return Q(m * m * m * m - m * m) / 4; };
    cf.c[4] = [](const BigInt& m) { return Q(m * m * m * m * m - m) / 5; };
    cf.c[5] = [](const BigInt& m) {
        const BigInt m3 = m * m * m;
        return Q(m3 * m3 + m3 - m * m - m) / 6;
    };
    return cf;
}

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceOptions {
    ClosedForms forms = closed_forms();
    std::size_t budget = default_tensor_budget;
};

namespace detail {

// Collects mismatches; the first few are kept for the report.
class Checker {
public:
    template <typename A, typename B>
    void expect_eq(const A& actual, const B& expected, const std::string& what) {
        ++checks_;
        if (actual == expected) return;
        ++failures_;
        if (notes_.size() < 4) {
            std::ostringstream os;
            os << what << ": got " << actual << ", expected " << expected;
            notes_.push_back(os.str());
        }
    }

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 4) notes_.push_back(what);
    }

    bool ok() const { return failures_ == 0; }

    std::string summary() const {
        std::ostringstream os;
        os << checks_ - failures_ << "/" << checks_ << " checks";
        for (const auto& n : notes_) os << "; " << n;
        return os.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> notes_;
};

inline std::string str(const BigInt& x) { return x.str(); }

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
    using Clock = std::chrono::steady_clock;
    using detail::Checker;
    std::vector<CriterionResult> results;

    // Runs one criterion, mapping exceptions to failure and enforcing the time limit.
    const auto run = [&](int id, std::string name, std::optional<double> limit_seconds,
                         const std::function<void(Checker&)>& body) {
        CriterionResult r{id, std::move(name), false, {}};
        Checker ck;
        const auto start = Clock::now();
        try {
            body(ck);
            r.passed = ck.ok();
            r.detail = ck.summary();
        } catch (const std::exception& e) {
            r.detail = ck.summary() + "; error: " + e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit_seconds && elapsed >= *limit_seconds) {
            r.passed = false;
            r.detail += "; exceeded time limit of " + std::to_string(static_cast<int>(*limit_seconds)) + " s";
        }
        results.push_back(std::move(r));
    };

    const auto& forms = opt.forms;

    run(1, "f-table reproduction", 1.0, [&](Checker& ck) {
        for (int d = 3; d <= 12; ++d) {
            const auto p = p_series(d, 6);
            for (std::size_t i = 1; i <= 6; ++i)
                ck.expect_eq(p[i], forms.f[i - 1](d),
                             "f_" + std::to_string(i) + "(" + std::to_string(d) + ")");
        }
    });

    run(2, "c closed forms", 1.0, [&](Checker& ck) {
        for (int m = 1; m <= 20; ++m)
            for (unsigned k = 1; k <= 6; ++k)
                ck.expect_eq(BigRational(c_mk(m, k)), forms.c[k - 1](m),
                             "c_{" + std::to_string(m) + "," + std::to_string(k) + "}");
    });

    std::vector<std::pair<std::size_t, std::size_t>> oracle_configs;
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t k = 1; k <= 4; ++k) oracle_configs.emplace_back(m, k);
    oracle_configs.insert(oracle_configs.end(), {{2, 5}, {2, 6}, {3, 5}});

    run(3, "brute-force Harrison oracle vs c_{m,k}", 60.0, [&](Checker& ck) {
        for (auto [m, k] : oracle_configs)
            ck.expect_eq(BigInt(harrison_dim(make_fat_point(m), CoefficientModule::trivial, k, opt.budget)),
                         c_mk(m, static_cast<unsigned>(k)),
                         "Harr^" + std::to_string(k) + "(Z_" + std::to_string(m) + "; Q)");
    });

    run(4, "fat-point T^i dimensions", 120.0, [&](Checker& ck) {
        for (auto [m, imax] : {std::pair<std::size_t, unsigned>{2, 3}, {3, 2}})
            for (unsigned i = 1; i <= imax; ++i)
                ck.expect_eq(
                    BigInt(harrison_dim(make_fat_point(m), CoefficientModule::regular, i + 1, opt.budget)),
                    fatpoint_tdim(m, i), "T^" + std::to_string(i) + "(Z_" + std::to_string(m) + ")");
    });

    run(5, "zero-map lemma on fat points", std::nullopt, [&](Checker& ck) {
        for (auto [m, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
            ck.expect(zero_map_check(m, k, opt.budget),
                      "Harr^" + std::to_string(k) + "(Z_" + std::to_string(m) +
                          "; A) -> Harr^" + std::to_string(k) + "(Z_" + std::to_string(m) +
                          "; Q) is nonzero");
    });

    run(6, "Hochschild >= Harrison", std::nullopt, [&](Checker& ck) {
        for (auto [m, k] : oracle_configs) {
            if (m > 3 || k > 4) continue;
            const auto a = make_fat_point(m);
            const auto hh = hochschild_dim(a, CoefficientModule::trivial, k, opt.budget);
            const auto harr = harrison_dim(a, CoefficientModule::trivial, k, opt.budget);
            ck.expect(hh >= harr, "HH^" + std::to_string(k) + "(Z_" + std::to_string(m) + ") = " +
                                      std::to_string(hh) + " < Harr = " + std::to_string(harr));
        }
    });

    run(7, "cone graphs", 1.0, [&](Checker& ck) {
        for (int d = 3; d <= 8; ++d) {
            const auto g = fixtures::cone(d).build();
            const auto res = analyze(g, 6);
            const std::string tag = "cone d=" + std::to_string(d);
            ck.expect(res.status == AnalysisStatus::ok, tag + ": status not ok");
            if (res.status != AnalysisStatus::ok) continue;
            const auto& r = res.report;
            ck.expect_eq(r.mult, BigInt(d), tag + " multiplicity");
            ck.expect(r.tree->children.empty() && r.tree->dropped_rdp_count == 0,
                      tag + ": tree has more than one node");
            for (std::size_t i = 3; i <= 6; ++i)
                ck.expect_eq(BigRational(r.tdims.at(i)), forms.f[i - 1](d),
                             tag + " T^" + std::to_string(i));
            ck.expect_eq(BigRational(r.t2.value), forms.f[1](d), tag + " T^2");
            ck.expect(r.t2.exact, tag + ": T^2 not exact");
            ck.expect_eq(r.codim_ac.value, BigInt(d - 3), tag + " cod_AC");
            ck.expect(r.codim_ac.exact, tag + ": cod_AC not exact");
        }
    });

    run(8, "hand-derived recursion fixtures", 1.0, [&](Checker& ck) {
        {
            const auto g = fixtures::star(3, {3, 3, 3}).build();
            const auto res = analyze(g, 6);
            ck.expect(res.status == AnalysisStatus::ok, "star: status not ok");
            const auto& r = res.report;
            ck.expect_eq(r.mult, BigInt(6), "star multiplicity");
            ck.expect(r.tree && r.tree->children.size() == 1 && r.tree->children[0].mult == 3 &&
                          r.tree->children[0].children.empty(),
                      "star: tree is not (6 -> 3)");
            ck.expect_eq(r.tdims.at(3), BigInt(30), "star T^3");
            ck.expect_eq(r.t2, BoundedValue{15, true}, "star T^2");
            ck.expect_eq(r.codim_ac, BoundedValue{3, true}, "star cod_AC");
        }
        {
            const auto g = fixtures::chain({3, 2, 3}).build();
            const auto res = analyze(g, 6);
            ck.expect(res.status == AnalysisStatus::ok, "chain: status not ok");
            const auto& r = res.report;
            ck.expect_eq(r.mult, BigInt(4), "chain multiplicity");
            ck.expect(r.tree && r.tree->children.empty() && r.tree->dropped_rdp_count == 1,
                      "chain: expected one dropped RDP and no children");
            for (std::size_t i = 3; i <= 6; ++i)
                ck.expect_eq(BigRational(r.tdims.at(i)), forms.f[i - 1](4),
                             "chain T^" + std::to_string(i));
            ck.expect_eq(r.t2, BoundedValue{3, true}, "chain T^2");
        }
    });

    run(9, "D_4 generalization family", 1.0, [&](Checker& ck) {
        for (int k = 3; k <= 4; ++k) {
            const std::string tag = "k=" + std::to_string(k);
            const auto g = fixtures::d4_generalization(k).build();
            const auto tree = multiplicity_tree(g);
            ck.expect_eq(tree.mult, BigInt(3 * k - 4), tag + " multiplicity");
            ck.expect_eq(tree.children.size(), std::size_t{3}, tag + " first-level children");
            for (const auto& c : tree.children) ck.expect_eq(c.mult, BigInt(k), tag + " child multiplicity");
            const auto gmd = gmd_check(g, tree);
            ck.expect_eq(gmd.sum_d_minus_1, BigInt(6 * k - 8), tag + " sum (d(P)-1)");
            ck.expect_eq(gmd.sum_b_minus_1, BigInt(6 * k - 8), tag + " sum (b_i-1)");
            ck.expect(gmd.obstructed, tag + ": not reported obstructed");
        }
    });

    run(10, "rejection paths", 1.0, [&](Checker& ck) {
        try {
            (void)fixtures::star(2, {2, 2, 2, 2}).build();
            ck.expect(false, "four-leaf (-2)-star accepted");
        } catch (const GraphError& e) {
            ck.expect(e.code() == GraphErrc::not_negative_definite,
                      std::string("four-leaf (-2)-star rejected for the wrong reason: ") + e.what());
        }
        const auto nonrational = analyze(fixtures::star(2, {3, 3, 3, 3}).build(), 6);
        ck.expect(nonrational.status == AnalysisStatus::not_rational,
                  "four-leaf (-3)-star not reported as non-rational");
        ck.expect_eq(pa_cycle(fixtures::star(2, {3, 3, 3, 3}).build(), nonrational.report.cycle),
                     BigInt(1), "four-leaf (-3)-star p_a(Z)");
        const auto d4 = analyze(fixtures::d4().build(), 6);
        ck.expect(d4.report.rational, "D_4 not rational");
        ck.expect(d4.status == AnalysisStatus::not_applicable, "D_4 not reported as not applicable");
        ck.expect_eq(d4.report.mult, BigInt(2), "D_4 multiplicity");
    });

    run(11, "recursion / flat-sum agreement", std::nullopt, [&](Checker& ck) {
        std::vector<std::pair<std::string, fixtures::GraphData>> all;
        for (int d = 3; d <= 8; ++d) all.emplace_back("cone d=" + std::to_string(d), fixtures::cone(d));
        all.emplace_back("star", fixtures::star(3, {3, 3, 3}));
        all.emplace_back("chain", fixtures::chain({3, 2, 3}));
        for (int k = 3; k <= 4; ++k)
            all.emplace_back("family k=" + std::to_string(k), fixtures::d4_generalization(k));
        for (const auto& [name, data] : all) {
            const auto tree = multiplicity_tree(data.build());
            for (std::size_t i = 3; i <= 6; ++i)
                ck.expect_eq(tdim(tree, i), tdim_recursive(tree, i), name + " i=" + std::to_string(i));
        }
    });

    return results;
}

inline std::string format_result(const CriterionResult& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name +
           " (" + r.detail + ")";
}

}  // namespace cotangent
