#pragma once

// Brute-force Hochschild and Harrison cohomology of finite-dimensional
// commutative local algebras over Q, on the reduced cochain complex.
//
// A degree-k reduced cochain with values in M is stored densely by its values
// on tuples (e_{a_1}, ..., e_{a_k}) of maximal-ideal basis elements: the
// coordinate of (tuple, v) sits at tuple_index * dim(M) + v, with
// tuple_index = sum_j a_j n^(k-j) (first argument most significant).

#include "cotangent/errors.hpp"
#include "cotangent/exact.hpp"
#include "cotangent/series.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cotangent {

inline constexpr std::size_t default_tensor_budget = 1500;

/// Coordinates (scalar, e_1, ..., e_n) of an element of A.
using AlgebraElement = std::vector<BigRational>;

/// Commutative algebra A = Q·1 ⊕ span(e_1..e_n) given by the products e_i e_j.
class FiniteLocalAlgebra {
public:
    /// `products[i * n + j]` is e_i e_j as an AlgebraElement of length n + 1.
    FiniteLocalAlgebra(std::size_t n, std::vector<AlgebraElement> products)
        : n_(n), products_(std::move(products)) {
        if (products_.size() != n_ * n_)
            throw std::invalid_argument("FiniteLocalAlgebra: need n*n structure products");
        for (const auto& p : products_)
            if (p.size() != n_ + 1)
                throw std::invalid_argument("FiniteLocalAlgebra: product of wrong length");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (product(i, j) != product(j, i))
                    throw std::invalid_argument("FiniteLocalAlgebra: not commutative at (" +
                                                std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ")");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (multiply(product(i, j), basis(k)) != multiply(basis(i), product(j, k)))
                        throw std::invalid_argument(
                            "FiniteLocalAlgebra: not associative at (" + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
    }

    /// Dimension of the maximal ideal.
    std::size_t n() const { return n_; }

    const AlgebraElement& product(std::size_t i, std::size_t j) const {
        return products_[i * n_ + j];
    }

    /// e_i as an element (i is 0-based).
    AlgebraElement basis(std::size_t i) const {
        AlgebraElement e(n_ + 1);
        e[i + 1] = 1;
        return e;
    }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
        AlgebraElement out(n_ + 1);
        for (std::size_t x = 0; x <= n_; ++x) {
            if (a[x].is_zero()) continue;
            for (std::size_t y = 0; y <= n_; ++y) {
                if (b[y].is_zero()) continue;
                const BigRational c = a[x] * b[y];
                if (x == 0 || y == 0) {
                    out[x + y] += c;  // one factor is the unit
                } else {
                    const auto& p = product(x - 1, y - 1);
                    for (std::size_t z = 0; z <= n_; ++z)
                        if (!p[z].is_zero()) out[z] += c * p[z];
                }
            }
        }
        return out;
    }

    /// True when every product lands in the maximal ideal and the ideal is nilpotent.
    bool is_local() const {
        for (const auto& p : products_)
            if (!p[0].is_zero()) return false;
        // m^(n+1) = 0 for a nilpotent ideal of dimension n.
        std::vector<AlgebraElement> power;
        for (std::size_t i = 0; i < n_; ++i) power.push_back(basis(i));
        for (std::size_t step = 0; step < n_; ++step) {
            std::vector<AlgebraElement> next;
            for (const auto& x : power)
                for (std::size_t i = 0; i < n_; ++i) {
                    auto y = multiply(x, basis(i));
                    if (std::any_of(y.begin(), y.end(), [](const auto& c) { return !c.is_zero(); }))
                        next.push_back(std::move(y));
                }
            if (next.empty()) return true;
            power = std::move(next);
        }
        return false;
    }

private:
    std::size_t n_;
    std::vector<AlgebraElement> products_;
};

/// Fat point Z_m: basis {1, z_1..z_m}, all z_i z_j = 0.
inline FiniteLocalAlgebra make_fat_point(std::size_t m) {
    if (m < 1) throw std::invalid_argument("make_fat_point: m must be positive");
    return FiniteLocalAlgebra(m, std::vector<AlgebraElement>(m * m, AlgebraElement(m + 1)));
}

/// Q[x]/(x^(r+1)) with e_i = x^i.
inline FiniteLocalAlgebra make_truncated_polynomial(std::size_t r) {
    if (r < 1) throw std::invalid_argument("make_truncated_polynomial: r must be positive");
    std::vector<AlgebraElement> products(r * r, AlgebraElement(r + 1));
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = 1; j <= r; ++j)
            if (i + j <= r) products[(i - 1) * r + (j - 1)][i + j] = 1;
    return FiniteLocalAlgebra(r, std::move(products));
}

enum class CoefficientModule {
    trivial,  // residue field, maximal ideal acts as zero
    regular,  // A acting on itself, basis (1, e_1..e_n)
};

inline std::size_t value_dim(const FiniteLocalAlgebra& a, CoefficientModule m) {
    return m == CoefficientModule::trivial ? 1 : a.n() + 1;
}

/// A (p,q)-shuffle as a 0-based permutation (perm[j] = sigma(j+1) - 1) and its sign.
struct ShuffleTerm {
    std::vector<std::size_t> perm;
    int sign;
};

/// All (p,q)-shuffles with signs: the terms of sh_{p,q} in Z[S_{p+q}].
inline std::vector<ShuffleTerm> shuffle_element(std::size_t p, std::size_t q) {
    if (p < 1 || q < 1) throw std::invalid_argument("shuffle_element: p and q must be positive");
    const std::size_t k = p + q;
    std::vector<ShuffleTerm> terms;
    // Choose which values sigma(1) < ... < sigma(p) take; the rest go to the tail.
    std::vector<bool> head(k, false);
    std::fill(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(p), true);
    do {
        ShuffleTerm t;
        for (std::size_t v = 0; v < k; ++v)
            if (head[v]) t.perm.push_back(v);
        for (std::size_t v = 0; v < k; ++v)
            if (!head[v]) t.perm.push_back(v);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (t.perm[i] > t.perm[j]) ++inversions;
        t.sign = inversions % 2 == 0 ? 1 : -1;
        terms.push_back(std::move(t));
    } while (std::prev_permutation(head.begin(), head.end()));
    return terms;
}

namespace detail {

inline std::size_t checked_power(std::size_t n, std::size_t k, std::size_t budget) {
    std::size_t v = 1;
    for (std::size_t j = 0; j < k; ++j) {
        if (n != 0 && v > budget / n)
            throw BudgetExceeded("tensor power " + std::to_string(n) + "^" + std::to_string(k) +
                                 " exceeds budget " + std::to_string(budget));
        v *= n;
    }
    if (v > budget)
        throw BudgetExceeded("tensor power " + std::to_string(n) + "^" + std::to_string(k) +
                             " exceeds budget " + std::to_string(budget));
    return v;
}

inline std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t n, std::size_t k) {
    std::vector<std::size_t> digits(k);
    for (std::size_t j = k; j-- > 0;) {
        digits[j] = index % n;
        index /= n;
    }
    return digits;
}

inline std::size_t encode_tuple(std::span<const std::size_t> digits, std::size_t n) {
    std::size_t index = 0;
    for (auto d : digits) index = index * n + d;
    return index;
}

// Shuffle relations for one tuple a: for each 0 < p < k, f evaluated on the
// signed shuffle product of (a_1..a_p) and (a_{p+1}..a_k), i.e.
// sum sgn(sigma) f(b) with b_sigma(i) = a_i, as (tuple index, sign) pairs.
// The literal f(a_sigma(1), ..., a_sigma(k)) agrees in degree 2 but sums over
// deshuffles from degree 3 on, where the invariant space collapses.
struct ShuffleRelations {
    ShuffleRelations(std::size_t n, std::size_t k) : n(n), k(k) {
        for (std::size_t p = 1; p < k; ++p) elements.push_back(shuffle_element(p, k - p));
    }

    template <typename Fn>
    void for_each_relation(std::size_t tuple, Fn&& fn) const {
        const auto a = decode_tuple(tuple, n, k);
        std::vector<std::size_t> permuted(k);
        std::vector<std::pair<std::size_t, int>> terms;
        for (const auto& element : elements) {
            terms.clear();
            for (const auto& t : element) {
                for (std::size_t j = 0; j < k; ++j) permuted[t.perm[j]] = a[j];
                terms.emplace_back(encode_tuple(permuted, n), t.sign);
            }
            fn(std::as_const(terms));
        }
    }

    std::size_t n, k;
    std::vector<std::vector<ShuffleTerm>> elements;
};

}  // namespace detail

/// Sparse vector over the tuple space: (tuple index, coefficient) pairs.
using SparseVector = std::vector<std::pair<std::size_t, BigRational>>;

/// Reduced degree-k cochains (tuple part only; tensor with the value space is
/// implicit). Either the full space or its shuffle-invariant subspace.
class CochainSpace {
public:
    /// All functionals on tuples of maximal-ideal basis elements.
    static CochainSpace full(std::size_t n, std::size_t k, std::size_t budget = default_tensor_budget) {
        CochainSpace s(n, k, false, budget);
        for (std::size_t t = 0; t < s.tuple_count_; ++t) {
            s.basis_.push_back({{t, BigRational(1)}});
            s.pivot_tuple_.push_back(t);
        }
        return s;
    }

    /// {f : f o sh_{p,k-p} = 0 for all 0 < p < k}.
    static CochainSpace shuffle_invariant(std::size_t n, std::size_t k,
                                          std::size_t budget = default_tensor_budget) {
        CochainSpace s(n, k, true, budget);
        // Shuffles permute arguments, so relations stay inside one content
        // class (multiset of letters). Solve each class separately.
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> blocks;
        for (std::size_t t = 0; t < s.tuple_count_; ++t) {
            auto content = detail::decode_tuple(t, n, k);
            std::sort(content.begin(), content.end());
            blocks[content].push_back(t);
        }
        const detail::ShuffleRelations relations(n, k);
        std::vector<std::size_t> position(s.tuple_count_);
        for (const auto& [content, tuples] : blocks) {
            for (std::size_t i = 0; i < tuples.size(); ++i) position[tuples[i]] = i;
            std::vector<std::vector<BigRational>> rows;
            for (auto t : tuples)
                relations.for_each_relation(t, [&](const auto& terms) {
                    std::vector<BigRational> row(tuples.size());
                    for (const auto& [idx, sign] : terms) row[position[idx]] += sign;
                    if (std::any_of(row.begin(), row.end(), [](const auto& c) { return !c.is_zero(); }))
                        rows.push_back(std::move(row));
                });
            QMatrix local(rows.size(), tuples.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < tuples.size(); ++c) local(r, c) = rows[r][c];
            const auto ns = null_space(local);
            for (std::size_t i = 0; i < ns.basis.size(); ++i) {
                SparseVector sv;
                for (std::size_t c = 0; c < tuples.size(); ++c)
                    if (!ns.basis[i][c].is_zero()) sv.emplace_back(tuples[c], ns.basis[i][c]);
                s.basis_.push_back(std::move(sv));
                s.pivot_tuple_.push_back(tuples[ns.free_columns[i]]);
            }
        }
        return s;
    }

    std::size_t n() const { return n_; }
    std::size_t degree() const { return k_; }
    std::size_t tuple_count() const { return tuple_count_; }
    bool shuffle_restricted() const { return shuffle_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<SparseVector>& basis() const { return basis_; }

    /// Tuple at which basis vector s is 1 and every other basis vector is 0;
    /// reading an element of the space there gives its coordinates.
    const std::vector<std::size_t>& coordinate_tuples() const { return pivot_tuple_; }

    /// Checks f o sh_{p,k-p} = 0 on a dense cochain with `value_dim` values per tuple.
    bool is_shuffle_invariant(const std::vector<BigRational>& cochain, std::size_t value_dim) const {
        if (cochain.size() != tuple_count_ * value_dim)
            throw std::invalid_argument("is_shuffle_invariant: cochain has wrong size");
        if (k_ < 2) return true;
        const detail::ShuffleRelations relations(n_, k_);
        bool ok = true;
        for (std::size_t t = 0; t < tuple_count_ && ok; ++t)
            relations.for_each_relation(t, [&](const auto& terms) {
                for (std::size_t v = 0; v < value_dim && ok; ++v) {
                    BigRational acc = 0;
                    for (const auto& [idx, sign] : terms) {
                        const auto& x = cochain[idx * value_dim + v];
                        if (!x.is_zero()) acc += sign * x;
                    }
                    ok = acc.is_zero();
                }
            });
        return ok;
    }

private:
    CochainSpace(std::size_t n, std::size_t k, bool shuffle, std::size_t budget)
        : n_(n), k_(k), shuffle_(shuffle), tuple_count_(detail::checked_power(n, k, budget)) {}

    std::size_t n_, k_;
    bool shuffle_;
    std::size_t tuple_count_;
    std::vector<SparseVector> basis_;
    std::vector<std::size_t> pivot_tuple_;
};

enum class ComplexKind { harrison, hochschild };

/// The reduced Hochschild complex of A with coefficients in M, or its
/// shuffle-invariant (Harrison) subcomplex. Cochain spaces are built lazily
/// and cached per degree.
class CochainComplex {
public:
    CochainComplex(FiniteLocalAlgebra algebra, CoefficientModule module, ComplexKind kind,
                   std::size_t budget = default_tensor_budget)
        : algebra_(std::move(algebra)), module_(module), kind_(kind), budget_(budget),
          value_dim_(cotangent::value_dim(algebra_, module)) {
        build_action();
    }

    const FiniteLocalAlgebra& algebra() const { return algebra_; }
    CoefficientModule module() const { return module_; }
    std::size_t value_dim() const { return value_dim_; }

    const CochainSpace& space(std::size_t k) {
        if (k < 1) throw std::invalid_argument("cochain degree must be at least 1");
        auto it = spaces_.find(k);
        if (it == spaces_.end()) {
            auto s = kind_ == ComplexKind::harrison
                         ? CochainSpace::shuffle_invariant(algebra_.n(), k, budget_)
                         : CochainSpace::full(algebra_.n(), k, budget_);
            it = spaces_.emplace(k, std::make_unique<CochainSpace>(std::move(s))).first;
        }
        return *it->second;
    }

    /// Dimension of the degree-k cochain space, values included.
    std::size_t cochain_dim(std::size_t k) { return space(k).dimension() * value_dim_; }

    /// Dense cochain of basis element (s, v): basis vector s of the tuple space times e_v.
    std::vector<BigRational> basis_cochain(std::size_t k, std::size_t s, std::size_t v) {
        const auto& sp = space(k);
        std::vector<BigRational> f(sp.tuple_count() * value_dim_);
        for (const auto& [t, c] : sp.basis()[s]) f[t * value_dim_ + v] = c;
        return f;
    }

    /// The Hochschild differential on a dense degree-k cochain:
    /// (df)(a_0..a_k) = a_0 f(a_1..a_k) + sum_{j=1..k} (-1)^j f(.., a_{j-1}a_j, ..)
    ///                  + (-1)^(k+1) f(a_0..a_{k-1}) a_k.
    /// Scalar parts of products drop out because reduced cochains vanish on 1.
    std::vector<BigRational> apply_differential(std::size_t k, const std::vector<BigRational>& f) const {
        const std::size_t n = algebra_.n();
        const std::size_t in_tuples = detail::checked_power(n, k, budget_);
        const std::size_t out_tuples = detail::checked_power(n, k + 1, budget_);
        if (f.size() != in_tuples * value_dim_)
            throw std::invalid_argument("apply_differential: cochain has wrong size");
        std::vector<BigRational> out(out_tuples * value_dim_);
        if (std::all_of(f.begin(), f.end(), [](const auto& x) { return x.is_zero(); })) return out;

        std::vector<std::size_t> shorter(k);
        for (std::size_t t = 0; t < out_tuples; ++t) {
            const auto a = detail::decode_tuple(t, n, k + 1);
            BigRational* dst = out.data() + t * value_dim_;

            if (has_action_) {
                act(a.front(), f.data() + (t % in_tuples) * value_dim_, dst, BigRational(1));
                act(a.back(), f.data() + (t / n) * value_dim_, dst,
                    BigRational((k + 1) % 2 == 0 ? 1 : -1));
            }
            for (std::size_t j = 1; j <= k; ++j) {
                const auto& prod = algebra_.product(a[j - 1], a[j]);
                const int sign = j % 2 == 0 ? 1 : -1;
                for (std::size_t l = 0; l < n; ++l) {
                    if (prod[l + 1].is_zero()) continue;
                    std::size_t w = 0;
                    for (std::size_t x = 0; x < j - 1; ++x) shorter[w++] = a[x];
                    shorter[w++] = l;
                    for (std::size_t x = j + 1; x <= k; ++x) shorter[w++] = a[x];
                    const BigRational* src = f.data() + detail::encode_tuple(shorter, n) * value_dim_;
                    for (std::size_t v = 0; v < value_dim_; ++v)
                        if (!src[v].is_zero()) dst[v] += sign * prod[l + 1] * src[v];
                }
            }
        }
        return out;
    }

    /// Matrix of d: C^k -> C^{k+1} in the chosen bases (columns index degree k).
    /// Throws std::logic_error if an image leaves the subcomplex.
    QMatrix coboundary(std::size_t k) {
        const auto& target = space(k + 1);
        const std::size_t cols = cochain_dim(k);
        QMatrix d(target.dimension() * value_dim_, cols);
        const auto& coords = target.coordinate_tuples();
        const std::size_t src_dim = space(k).dimension();
        for (std::size_t s = 0; s < src_dim; ++s)
            for (std::size_t v = 0; v < value_dim_; ++v) {
                const auto image = apply_differential(k, basis_cochain(k, s, v));
                if (target.shuffle_restricted() && !target.is_shuffle_invariant(image, value_dim_))
                    throw std::logic_error("coboundary: image leaves the shuffle-invariant subcomplex");
                const std::size_t col = s * value_dim_ + v;
                for (std::size_t r = 0; r < coords.size(); ++r)
                    for (std::size_t w = 0; w < value_dim_; ++w)
                        d(r * value_dim_ + w, col) = image[coords[r] * value_dim_ + w];
            }
        return d;
    }

    std::size_t coboundary_rank(std::size_t k) {
        auto it = ranks_.find(k);
        if (it == ranks_.end()) it = ranks_.emplace(k, mat_rank(coboundary(k))).first;
        return it->second;
    }

    /// dim ker d_k - rank d_{k-1}; the map into degree 1 is taken to be zero.
    std::size_t cohomology_dim(std::size_t k) {
        const std::size_t incoming = k >= 2 ? coboundary_rank(k - 1) : 0;
        return cochain_dim(k) - coboundary_rank(k) - incoming;
    }

private:
    void build_action() {
        const std::size_t n = algebra_.n();
        has_action_ = module_ == CoefficientModule::regular;
        if (!has_action_) return;
        // action_[i] is the (value_dim x value_dim) matrix of multiplication by e_i.
        action_.assign(n, QMatrix(value_dim_, value_dim_));
        for (std::size_t i = 0; i < n; ++i) {
            action_[i](i + 1, 0) = 1;
            for (std::size_t j = 0; j < n; ++j) {
                const auto& p = algebra_.product(i, j);
                for (std::size_t w = 0; w <= n; ++w) action_[i](w, j + 1) = p[w];
            }
        }
    }

    void act(std::size_t i, const BigRational* src, BigRational* dst, const BigRational& sign) const {
        const auto& m = action_[i];
        for (std::size_t v = 0; v < value_dim_; ++v) {
            if (src[v].is_zero()) continue;
            for (std::size_t w = 0; w < value_dim_; ++w)
                if (!m(w, v).is_zero()) dst[w] += sign * m(w, v) * src[v];
        }
    }

    FiniteLocalAlgebra algebra_;
    CoefficientModule module_;
    ComplexKind kind_;
    std::size_t budget_;
    std::size_t value_dim_;
    bool has_action_ = false;
    std::vector<QMatrix> action_;
    std::map<std::size_t, std::unique_ptr<CochainSpace>> spaces_;
    std::map<std::size_t, std::size_t> ranks_;
};

/// value_dim * (n^k - rank of the stacked shuffle relations).
inline std::size_t shuffle_invariant_dim(const FiniteLocalAlgebra& algebra, CoefficientModule module,
                                         std::size_t k, std::size_t budget = default_tensor_budget) {
    if (k < 1) throw std::invalid_argument("shuffle_invariant_dim: k must be at least 1");
    return CochainSpace::shuffle_invariant(algebra.n(), k, budget).dimension() *
           value_dim(algebra, module);
}

inline QMatrix coboundary_matrix(const FiniteLocalAlgebra& algebra, CoefficientModule module,
                                 std::size_t k, std::size_t budget = default_tensor_budget) {
    return CochainComplex(algebra, module, ComplexKind::harrison, budget).coboundary(k);
}

inline std::size_t harrison_dim(const FiniteLocalAlgebra& algebra, CoefficientModule module,
                                std::size_t k, std::size_t budget = default_tensor_budget) {
    return CochainComplex(algebra, module, ComplexKind::harrison, budget).cohomology_dim(k);
}

inline std::size_t hochschild_dim(const FiniteLocalAlgebra& algebra, CoefficientModule module,
                                  std::size_t k, std::size_t budget = default_tensor_budget) {
    return CochainComplex(algebra, module, ComplexKind::hochschild, budget).cohomology_dim(k);
}

/// Whether Harr^k(A; A) -> Harr^k(A; Q), induced by the residue map A -> Q,
/// is zero: every regular cocycle must project to a trivial coboundary.
inline bool residue_map_is_zero(const FiniteLocalAlgebra& algebra, std::size_t k,
                                std::size_t budget = default_tensor_budget) {
    CochainComplex regular(algebra, CoefficientModule::regular, ComplexKind::harrison, budget);
    CochainComplex trivial(algebra, CoefficientModule::trivial, ComplexKind::harrison, budget);
    const std::size_t vdim = regular.value_dim();
    const std::size_t tdim = trivial.cochain_dim(k);

    std::vector<std::vector<BigRational>> rows;
    if (k >= 2) {
        const QMatrix image = trivial.coboundary(k - 1);
        for (std::size_t c = 0; c < image.cols(); ++c) {
            std::vector<BigRational> col(tdim);
            for (std::size_t r = 0; r < tdim; ++r) col[r] = image(r, c);
            rows.push_back(std::move(col));
        }
    }
    const auto to_matrix = [&](const std::vector<std::vector<BigRational>>& vs) {
        QMatrix m(vs.size(), tdim);
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t c = 0; c < tdim; ++c) m(r, c) = vs[r][c];
        return m;
    };
    const std::size_t boundary_rank = mat_rank(to_matrix(rows));

    for (const auto& z : nullspace_basis(regular.coboundary(k))) {
        std::vector<BigRational> residue(tdim);
        for (std::size_t s = 0; s < tdim; ++s) residue[s] = z[s * vdim];  // coefficient of 1
        rows.push_back(std::move(residue));
    }
    return mat_rank(to_matrix(rows)) == boundary_rank;
}

/// The residue-map check on the fat point Z_m (needs m >= 2).
inline bool zero_map_check(std::size_t m, std::size_t k, std::size_t budget = default_tensor_budget) {
    if (m < 2) throw std::invalid_argument("zero_map_check: m must be at least 2");
    if (k < 1) throw std::invalid_argument("zero_map_check: k must be at least 1");
    return residue_map_is_zero(make_fat_point(m), k, budget);
}

}  // namespace cotangent
