#pragma once

// Fat-point counting numbers c_{m,k}, truncated power series over Q, and the
// generating series for dim T^i of the cone over the rational normal curve.

#include "cotangent/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotangent {

inline int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be positive");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// c_{m,k} = (1/k) sum_{q|k} (-1)^(k + k/q) mu(q) m^(k/q).
/// The sum is always divisible by k; a remainder is a bug and throws.
inline BigInt c_mk(const BigInt& m, unsigned k) {
    if (m < 1) throw std::invalid_argument("c_mk: m must be positive");
    if (k < 1) throw std::invalid_argument("c_mk: k must be positive");
    BigInt sum = 0;
    for (unsigned q = 1; q <= k; ++q) {
        if (k % q != 0) continue;
        const int mu = moebius(q);
        if (mu == 0) continue;
        const unsigned e = k / q;
        BigInt term = boost::multiprecision::pow(m, e);
        if ((k + e) % 2 == 1) term = -term;
        sum += mu * term;
    }
    if (sum % k != 0)
        throw std::logic_error("c_mk: sum " + sum.str() + " not divisible by " + std::to_string(k));
    return sum / k;
}

/// Power series truncated after t^order, exact rational coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    TruncatedSeries(std::size_t order, const std::vector<BigRational>& coeffs)
        : coeffs_(order + 1) {
        for (std::size_t j = 0; j < coeffs.size() && j <= order; ++j) coeffs_[j] = coeffs[j];
    }

    static TruncatedSeries constant(std::size_t order, const BigRational& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static TruncatedSeries monomial(std::size_t order, const BigRational& c, std::size_t degree) {
        TruncatedSeries s(order);
        if (degree <= order) s.coeffs_[degree] = c;
        return s;
    }

    /// 1/(1+t) = 1 - t + t^2 - ...
    static TruncatedSeries inverse_one_plus_t(std::size_t order) {
        TruncatedSeries s(order);
        for (std::size_t j = 0; j <= order; ++j) s.coeffs_[j] = (j % 2 == 0) ? 1 : -1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigRational& operator[](std::size_t j) const { return coeffs_.at(j); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order())
            throw std::invalid_argument("TruncatedSeries: cannot extend truncation order");
        return TruncatedSeries(order, coeffs_);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    /// Division by a series with nonzero constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        if (b.coeffs_[0].is_zero())
            throw std::domain_error("TruncatedSeries: divisor has zero constant term");
        TruncatedSeries q(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) {
            BigRational acc = a.coeffs_[n];
            for (std::size_t j = 1; j <= n; ++j)
                if (!b.coeffs_[j].is_zero()) acc -= b.coeffs_[j] * q.coeffs_[n - j];
            q.coeffs_[n] = acc / b.coeffs_[0];
        }
        return q;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.order() != order())
            throw std::invalid_argument("TruncatedSeries: truncation orders differ");
    }

    std::vector<BigRational> coeffs_;
};

inline void require_multiplicity(const BigInt& d) {
    if (d < 3)
        throw std::invalid_argument("multiplicity must be at least 3, got " + d.str());
}

/// Q_d(t) = sum_{i>=1} c_{d-1,i} t^i.
inline TruncatedSeries q_series(const BigInt& d, std::size_t order) {
    require_multiplicity(d);
    if (order < 1) throw std::invalid_argument("q_series: order must be at least 1");
    std::vector<BigRational> c(order + 1);
    for (std::size_t i = 1; i <= order; ++i) c[i] = c_mk(d - 1, static_cast<unsigned>(i));
    return TruncatedSeries(order, c);
}

/// P_d(t) = (Q_d(t) + 2t + 2) ((d-1)t - t^2) / (t+1)^2 - 2t/(t+1), truncated
/// after t^order. Every coefficient of t^i, i >= 1, is dim T^i of the cone
/// of degree d, so anything but a nonnegative integer throws.
inline TruncatedSeries p_series(const BigInt& d, std::size_t order) {
    require_multiplicity(d);
    // Two extra terms so the division by (t+1)^2 loses nothing in range.
    const std::size_t work = order + 2;
    const auto t = [&](const BigRational& c, std::size_t deg) {
        return TruncatedSeries::monomial(work, c, deg);
    };
    const TruncatedSeries inv = TruncatedSeries::inverse_one_plus_t(work);
    const TruncatedSeries numer = q_series(d, work) + t(2, 1) + t(2, 0);
    const TruncatedSeries factor = t(BigRational(d - 1), 1) - t(1, 2);
    const TruncatedSeries full = numer * factor * inv * inv - t(2, 1) * inv;

    const TruncatedSeries p = full.truncated(order);
    for (std::size_t i = 1; i <= order; ++i) {
        if (!is_integer(p[i]) || p[i] < 0)
            throw std::logic_error("p_series: coefficient of t^" + std::to_string(i) +
                                   " for d=" + d.str() + " is " + p[i].str());
    }
    return p;
}

/// Memoized f_i(d) lookups; safe to share across threads.
class PoincareTable {
public:
    BigInt value(std::size_t i, const BigInt& d) {
        if (i < 1) throw std::invalid_argument("f_val: index must be at least 1");
        require_multiplicity(d);
        std::lock_guard lock(mutex_);
        auto& row = cache_[d];
        if (row.size() <= i) {
            const std::size_t order = std::max<std::size_t>(i, 2 * row.size());
            const TruncatedSeries p = p_series(d, order);
            row.clear();
            for (std::size_t j = 0; j <= order; ++j) row.push_back(to_integer(p[j]));
        }
        return row[i];
    }

private:
    std::mutex mutex_;
    std::map<BigInt, std::vector<BigInt>> cache_;
};

inline PoincareTable& shared_poincare_table() {
    static PoincareTable table;
    return table;
}

/// f_i(d) = dim T^i of the cone over the rational normal curve of degree d.
inline BigInt f_val(std::size_t i, const BigInt& d) { return shared_poincare_table().value(i, d); }

/// dim T^i of the fat point Z_m: m c_{m,i+1} - c_{m,i}.
inline BigInt fatpoint_tdim(const BigInt& m, unsigned i) {
    if (m < 2) throw std::invalid_argument("fatpoint_tdim: needs m >= 2 (Z_1 is a hypersurface)");
    if (i < 1) throw std::invalid_argument("fatpoint_tdim: index must be at least 1");
    BigInt v = m * c_mk(m, i + 1) - c_mk(m, i);
    if (v < 0) throw std::logic_error("fatpoint_tdim: negative dimension " + v.str());
    return v;
}

}  // namespace cotangent
