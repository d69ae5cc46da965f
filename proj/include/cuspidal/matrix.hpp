// Exact integer matrices, Smith normal form with unimodular transforms,
// determinants and lattice quotients.  Matrices here stay tiny (<= 2^s
// columns at desk scale), so plain row/column reduction is enough.
#pragma once

#include <optional>
#include <vector>

#include "cuspidal/integers.hpp"

namespace cuspidal {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows, std::vector<Int>(cols, 0)) {}

    static IntMatrix identity(size_t n)
    {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Int& operator()(size_t i, size_t j) { return a_[i][j]; }
    const Int& operator()(size_t i, size_t j) const { return a_[i][j]; }

    bool operator==(const IntMatrix& o) const { return a_ == o.a_; }

    IntMatrix operator*(const IntMatrix& o) const
    {
        if (c_ != o.r_) throw error("IntMatrix: dimension mismatch in product");
        IntMatrix out(r_, o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k) {
                if (a_[i][k] == 0) continue;
                for (size_t j = 0; j < o.c_; ++j) out(i, j) += a_[i][k] * o(k, j);
            }
        return out;
    }

    void swap_rows(size_t i, size_t j) { std::swap(a_[i], a_[j]); }
    void swap_cols(size_t i, size_t j)
    {
        for (size_t r = 0; r < r_; ++r) std::swap(a_[r][i], a_[r][j]);
    }
    // row i += f * row j
    void add_row(size_t i, size_t j, const Int& f)
    {
        for (size_t k = 0; k < c_; ++k) a_[i][k] += f * a_[j][k];
    }
    void add_col(size_t i, size_t j, const Int& f)
    {
        for (size_t r = 0; r < r_; ++r) a_[r][i] += f * a_[r][j];
    }
    void negate_row(size_t i)
    {
        for (auto& x : a_[i]) x = -x;
    }
    void negate_col(size_t j)
    {
        for (size_t r = 0; r < r_; ++r) a_[r][j] = -a_[r][j];
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<std::vector<Int>> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m)
{
    if (m.rows() != m.cols()) throw error("determinant: matrix not square");
    size_t n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                if (num % prev != 0) throw error("determinant: Bareiss divisibility violated");
                m(i, j) = num / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SnfResult {
    IntMatrix U, D, V;          // U * M * V = D
    std::vector<Int> factors;   // nonzero diagonal, d1 | d2 | ...
    size_t rank() const { return factors.size(); }
};

// Smith normal form via row/column reduction, pivoting on the minimal
// nonzero absolute value.  U and V are products of elementary operations,
// hence unimodular.
inline SnfResult smith_normal_form(const IntMatrix& m0, bool verify = true)
{
    SnfResult res;
    res.D = m0;
    res.U = IntMatrix::identity(m0.rows());
    res.V = IntMatrix::identity(m0.cols());
    IntMatrix& D = res.D;
    size_t n = std::min(m0.rows(), m0.cols());

    for (size_t t = 0; t < n; ++t) {
        // locate minimal nonzero pivot in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < D.rows(); ++i)
            for (size_t j = t; j < D.cols(); ++j)
                if (D(i, j) != 0 && (!found || abs(D(i, j)) < abs(D(pi, pj)))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) {
            D.swap_rows(t, pi);
            res.U.swap_rows(t, pi);
        }
        if (pj != t) {
            D.swap_cols(t, pj);
            res.V.swap_cols(t, pj);
        }

        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < D.rows(); ++i) {
                if (D(i, t) == 0) continue;
                Int f = -(D(i, t) / D(t, t));
                D.add_row(i, t, f);
                res.U.add_row(i, t, f);
                if (D(i, t) != 0) { // remainder smaller than pivot: swap up
                    D.swap_rows(t, i);
                    res.U.swap_rows(t, i);
                    again = true;
                }
            }
            for (size_t j = t + 1; j < D.cols(); ++j) {
                if (D(t, j) == 0) continue;
                Int f = -(D(t, j) / D(t, t));
                D.add_col(j, t, f);
                res.V.add_col(j, t, f);
                if (D(t, j) != 0) {
                    D.swap_cols(t, j);
                    res.V.swap_cols(t, j);
                    again = true;
                }
            }
            if (again) continue;
            // divisibility fixup: fold a bad entry into column t
            for (size_t i = t + 1; i < D.rows() && !again; ++i)
                for (size_t j = t + 1; j < D.cols() && !again; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row(t, i, 1);
                        res.U.add_row(t, i, 1);
                        again = true;
                    }
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            res.U.negate_row(t);
        }
    }
    for (size_t t = 0; t < n; ++t)
        if (D(t, t) != 0) res.factors.push_back(D(t, t));

    if (verify) {
        IntMatrix check = res.U * m0 * res.V;
        if (!(check == D)) throw error("SNF: transform verification failed");
        for (size_t t = 0; t + 1 < res.factors.size(); ++t)
            if (res.factors[t + 1] % res.factors[t] != 0)
                throw error("SNF: invariant factor chain violated");
        if (abs(determinant(res.U)) != 1 || abs(determinant(res.V)) != 1)
            throw error("SNF: transform not unimodular");
    }
    return res;
}

// Solve A x = b exactly over Q; nullopt if inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& A, const std::vector<Int>& b)
{
    size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw error("solve_rational: size mismatch");
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = Rat(A(i, j));
        w[i][n] = Rat(b[i]);
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[row], w[piv]);
        Rat d = w[row][col];
        for (size_t j = col; j <= n; ++j) w[row][j] /= d;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = w[r][n];
    return x;
}

inline std::optional<std::vector<Int>> solve_integral(const IntMatrix& A, const std::vector<Int>& b)
{
    auto x = solve_rational(A, b);
    if (!x) return std::nullopt;
    std::vector<Int> out(x->size());
    for (size_t i = 0; i < x->size(); ++i) {
        if (denominator_of((*x)[i]) != 1) return std::nullopt;
        out[i] = boost::multiprecision::numerator((*x)[i]);
    }
    return out;
}

// Invariant factors (> 1) of Z^r / L where the columns of G generate the
// sublattice L.  Throws if L does not have full rank r.
inline std::vector<Int> quotient_invariants(const IntMatrix& G)
{
    auto snf = smith_normal_form(G);
    if (snf.rank() != G.rows())
        throw error("quotient_invariants: sublattice not of finite index");
    std::vector<Int> out;
    for (auto& d : snf.factors)
        if (d > 1) out.push_back(d);
    return out;
}

// Invariant factors of L2 / L1 for full-rank lattices L1 <= L2 in Z^r,
// given generator matrices (columns).  Coordinates of L1's generators in
// a basis of L2 are computed through the SNF of G2.
inline std::vector<Int> lattice_quotient_invariants(const IntMatrix& G2, const IntMatrix& G1)
{
    if (G1.rows() != G2.rows()) throw error("lattice_quotient_invariants: row mismatch");
    size_t r = G2.rows();
    auto snf2 = smith_normal_form(G2);
    if (snf2.rank() != r) throw error("lattice_quotient_invariants: L2 not full rank");
    // basis of L2 is U^{-1} * diag(d); coordinates of v are D^{-1} U v
    IntMatrix UG = snf2.U * G1;
    IntMatrix X(r, G1.cols());
    for (size_t i = 0; i < r; ++i) {
        const Int& d = snf2.D(i, i);
        for (size_t j = 0; j < G1.cols(); ++j) {
            if (UG(i, j) % d != 0)
                throw error("lattice_quotient_invariants: L1 not contained in L2");
            X(i, j) = UG(i, j) / d;
        }
    }
    return quotient_invariants(X);
}

} // namespace cuspidal
