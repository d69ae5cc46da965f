// Truncated exact power series in q.  A QSeries is q^v * sum c_j q^j with
// c_0 != 0; coefficients are exact integers.  Truncation order T counts the
// retained coefficients of the unit part.
#pragma once

#include <vector>

#include "cuspidal/integers.hpp"

namespace cuspidal {

class QSeries {
public:
    QSeries() = default;

    QSeries(long long v, std::vector<Int> coeffs) : v_(v), c_(std::move(coeffs))
    {
        if (c_.empty() || c_[0] == 0)
            throw error("QSeries: leading coefficient must be nonzero");
    }

    long long valuation() const { return v_; }
    const std::vector<Int>& coeffs() const { return c_; }
    size_t truncation() const { return c_.size(); }
    Int coeff_at(long long exponent) const
    {
        long long j = exponent - v_;
        if (j < 0 || j >= static_cast<long long>(c_.size())) return 0;
        return c_[static_cast<size_t>(j)];
    }

    QSeries mul(const QSeries& o) const
    {
        size_t T = std::min(c_.size(), o.c_.size());
        std::vector<Int> r(T, 0);
        for (size_t i = 0; i < T; ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; i + j < T && j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        }
        return QSeries(v_ + o.v_, std::move(r));
    }

    // Substitution q -> q^m; valuation scales, coefficient gaps widen.
    QSeries dilate(unsigned long m) const
    {
        if (m == 0) throw error("QSeries: dilation by zero");
        std::vector<Int> r((c_.size() - 1) * m + 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) r[i * m] = c_[i];
        return QSeries(v_ * static_cast<long long>(m), std::move(r));
    }

    // Multiplicative inverse of the unit part; needs c_0 = +-1 to stay
    // integral (all series here are monic products of (1 - q^n) factors).
    QSeries inverse() const
    {
        if (c_[0] != 1 && c_[0] != -1)
            throw error("QSeries: inverse requires unit leading coefficient");
        std::vector<Int> r(c_.size(), 0);
        r[0] = c_[0]; // == 1/c_0
        for (size_t n = 1; n < c_.size(); ++n) {
            Int acc = 0;
            for (size_t k = 1; k <= n && k < c_.size(); ++k) acc += c_[k] * r[n - k];
            r[n] = -c_[0] * acc;
        }
        return QSeries(-v_, std::move(r));
    }

    QSeries pow(long long e) const
    {
        if (e == 0) {
            std::vector<Int> one(c_.size(), 0);
            one[0] = 1;
            return QSeries(0, std::move(one));
        }
        QSeries base = e > 0 ? *this : inverse();
        unsigned long long n = e > 0 ? static_cast<unsigned long long>(e)
                                     : static_cast<unsigned long long>(-e);
        QSeries acc = base;
        --n;
        QSeries sq = base;
        while (n) {
            if (n & 1) acc = acc.mul(sq);
            sq = sq.mul(sq);
            n >>= 1;
        }
        return acc;
    }

    bool operator==(const QSeries& o) const { return v_ == o.v_ && c_ == o.c_; }

private:
    long long v_ = 0;
    std::vector<Int> c_{1};
};

// prod_{n=1..T} (1 - q^n) truncated after q^T.
inline QSeries euler_product(size_t T)
{
    std::vector<Int> c(T + 1, 0);
    c[0] = 1;
    for (size_t n = 1; n <= T; ++n)
        for (size_t j = T; j >= n; --j) c[j] -= c[j - n];
    return QSeries(0, std::move(c));
}

// Delta = q * prod (1 - q^n)^24, coefficients through q^{T} of the unit part.
inline QSeries delta_qexp(size_t T)
{
    if (T < 1) throw error("delta_qexp: T >= 1 required");
    QSeries e = euler_product(T);
    QSeries u = e.pow(24);
    return QSeries(1, u.coeffs());
}

// ---------------------------------------------------------------------------
// Raw truncated polynomials (coefficients of q^0..q^T, leading zeros kept).
// Used where a leading exponent must be *witnessed* rather than tracked.

using RawSeries = std::vector<Int>;

inline RawSeries raw_mul(const RawSeries& a, const RawSeries& b)
{
    size_t T = std::min(a.size(), b.size());
    RawSeries r(T, 0);
    for (size_t i = 0; i < T; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < T && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Index of the first nonzero coefficient; throws when the truncation window
// shows only zeros.
inline long long raw_leading_exponent(const RawSeries& a)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<long long>(i);
    throw error("raw_leading_exponent: truncation insufficient (series vanishes to shown order)");
}

// Delta(q^m) as a raw polynomial through q^T.
inline RawSeries raw_delta_dilated(size_t T, unsigned long m)
{
    QSeries d = delta_qexp(T);
    RawSeries r(T + 1, 0);
    const auto& c = d.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        unsigned long long e = (1 + j) * m;
        if (e > T) break;
        r[static_cast<size_t>(e)] = c[j];
    }
    return r;
}

} // namespace cuspidal
