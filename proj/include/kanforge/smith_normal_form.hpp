#pragma once

#include <optional>
#include <vector>

#include "kanforge/integer_matrix.hpp"

namespace kanforge {

/// D = U · M · V with U, V unimodular and D diagonal, d_1 | d_2 | ... > 0.
/// The inverses of U and V are tracked alongside.
struct SmithDecomposition {
    IntMatrix U, U_inv, D, V, V_inv;
    int rank = 0;

    std::vector<Integer> invariant_factors() const
    {
        std::vector<Integer> out;
        for (int i = 0; i < rank; ++i)
            out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

struct SmithWork {
    IntMatrix& D;
    IntMatrix* U;
    IntMatrix* U_inv;
    IntMatrix* V;
    IntMatrix* V_inv;

    void swap_rows(int a, int b)
    {
        D.swap_rows(a, b);
        if (U) {
            U->swap_rows(a, b);
            U_inv->swap_cols(a, b);
        }
    }
    void swap_cols(int a, int b)
    {
        D.swap_cols(a, b);
        if (V) {
            V->swap_cols(a, b);
            V_inv->swap_rows(a, b);
        }
    }
    // row[i] += q * row[t]
    void add_row(int i, int t, const Integer& q)
    {
        D.add_row(i, t, q);
        if (U) {
            U->add_row(i, t, q);
            U_inv->add_col(t, i, -q);
        }
    }
    // col[j] += q * col[t]
    void add_col(int j, int t, const Integer& q)
    {
        D.add_col(j, t, q);
        if (V) {
            V->add_col(j, t, q);
            V_inv->add_row(t, j, -q);
        }
    }
    void negate_row(int r)
    {
        D.negate_row(r);
        if (U) {
            U->negate_row(r);
            U_inv->negate_col(r);
        }
    }
};

} // namespace detail

/// Smith normal form by unimodular row and column operations.
///
/// Pivot rule: the entry of smallest absolute value in the active
/// submatrix, ties broken by lowest row, then lowest column. Arithmetic is
/// exact. With `track = false` only D and the rank are meaningful.
inline SmithDecomposition smith_normal_form(const IntMatrix& M, bool track = true)
{
    const int m = M.rows(), n = M.cols();
    SmithDecomposition out;
    out.D = M;
    if (track) {
        out.U = IntMatrix::identity(m);
        out.U_inv = IntMatrix::identity(m);
        out.V = IntMatrix::identity(n);
        out.V_inv = IntMatrix::identity(n);
    }
    detail::SmithWork w{out.D, track ? &out.U : nullptr, track ? &out.U_inv : nullptr,
                        track ? &out.V : nullptr, track ? &out.V_inv : nullptr};
    IntMatrix& D = out.D;

    auto find_pivot = [&](int t) -> std::optional<std::pair<int, int>> {
        std::optional<std::pair<int, int>> best;
        Integer best_abs;
        for (int r = t; r < m; ++r)
            for (int c = t; c < n; ++c) {
                const Integer& v = D(r, c);
                if (v == 0)
                    continue;
                Integer a = abs(v);
                if (!best || a < best_abs) {
                    best = {r, c};
                    best_abs = a;
                }
            }
        return best;
    };

    int t = 0;
    for (; t < std::min(m, n); ++t) {
        auto pivot = find_pivot(t);
        if (!pivot)
            break;
        while (true) {
            w.swap_rows(t, pivot->first);
            w.swap_cols(t, pivot->second);
            bool clean = true;
            for (int r = t + 1; r < m; ++r) {
                if (D(r, t) == 0)
                    continue;
                Integer q = D(r, t) / D(t, t);
                w.add_row(r, t, -q);
                if (D(r, t) != 0)
                    clean = false;
            }
            for (int c = t + 1; c < n; ++c) {
                if (D(t, c) == 0)
                    continue;
                Integer q = D(t, c) / D(t, t);
                w.add_col(c, t, -q);
                if (D(t, c) != 0)
                    clean = false;
            }
            if (clean) {
                // divisibility: fold an offending row into row t and retry
                int bad_row = -1;
                for (int r = t + 1; r < m && bad_row < 0; ++r)
                    for (int c = t + 1; c < n; ++c)
                        if (D(r, c) % D(t, t) != 0) {
                            bad_row = r;
                            break;
                        }
                if (bad_row < 0)
                    break;
                w.add_row(t, bad_row, 1);
            }
            // re-select the smallest entry in row t / column t
            std::pair<int, int> best = {t, t};
            Integer best_abs = abs(D(t, t));
            for (int r = t + 1; r < m; ++r)
                if (D(r, t) != 0 && abs(D(r, t)) < best_abs) {
                    best = {r, t};
                    best_abs = abs(D(r, t));
                }
            for (int c = t + 1; c < n; ++c)
                if (D(t, c) != 0 && abs(D(t, c)) < best_abs) {
                    best = {t, c};
                    best_abs = abs(D(t, c));
                }
            pivot = best;
        }
        if (D(t, t) < 0)
            w.negate_row(t);
    }
    out.rank = t;
    return out;
}

/// Integer solution of M x = b, if one exists (any solution).
inline std::optional<IntVector> solve_integer(const SmithDecomposition& snf, const IntVector& b)
{
    const IntVector Ub = snf.U * b;
    IntVector y(snf.V.rows());
    for (int i = 0; i < static_cast<int>(Ub.size()); ++i) {
        if (i < snf.rank) {
            if (Ub[i] % snf.D(i, i) != 0)
                return std::nullopt;
            y[i] = Ub[i] / snf.D(i, i);
        } else if (Ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

/// Basis of the integer kernel {x : M x = 0}, as the columns of the result.
inline IntMatrix kernel_basis(const SmithDecomposition& snf)
{
    const int n = snf.V.cols();
    return snf.V.columns(snf.rank, n - snf.rank);
}

} // namespace kanforge
