#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/config.hpp"
#include "kanforge/integer_matrix.hpp"
#include "kanforge/presentation.hpp"

namespace kanforge {

/// Free chain complex of finite rank over ℤ.
///
/// `boundaries[n]` is ∂_n : C_n → C_{n-1} (rows index C_{n-1}) for
/// 0 <= n <= top_degree() + 1. `boundaries[0]` is the augmentation
/// (1 × |C_0|, all ones for a presentation) when `augmented`, else 0 × |C_0|.
/// The last entry has |C_top| rows and one column per (top+1)-cell, so that
/// homology in the top degree is exact whenever it is known.
struct ChainComplex {
    std::vector<std::vector<std::string>> bases;
    std::vector<IntMatrix> boundaries;
    bool augmented = false;
    /// First degree whose boundary into it is not known (cells above were
    /// never generated); homology there and above is unreliable.
    std::optional<int> unreliable_from;

    int top_degree() const noexcept { return static_cast<int>(bases.size()) - 1; }

    int rank(int n) const
    {
        if (n == -1)
            return augmented ? 1 : 0;
        if (n < -1)
            return 0;
        if (n <= top_degree())
            return static_cast<int>(bases[n].size());
        if (n == top_degree() + 1 && !boundaries.empty())
            return boundaries.back().cols();
        return 0;
    }

    /// ∂_n, with zero matrices of the right shape outside the stored range.
    IntMatrix boundary(int n) const
    {
        if (n >= 0 && n < static_cast<int>(boundaries.size()))
            return boundaries[n];
        return IntMatrix(rank(n - 1), rank(n));
    }

    bool reliable(int n) const { return !unreliable_from || n < *unreliable_from; }
};

namespace detail {

inline IntMatrix presentation_boundary(const Presentation& K, int n)
{
    const int rows = n == 0 ? 0 : (n - 1 <= K.dimension() ? K.cell_count(n - 1) : 0);
    const int cols = n <= K.dimension() ? K.cell_count(n) : 0;
    IntMatrix d(rows, cols);
    if (n == 0)
        return d;
    for (int x = 0; x < cols; ++x) {
        const SimplexWord w(CellRef{n, x});
        for (int i = 0; i <= n; ++i) {
            const auto f = K.face(w, i);
            if (!f.is_degenerate())
                d(f.base().index, x) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

} // namespace detail

/// Normalized chain complex of K in degrees 0..max_dim, ∂ = Σ (-1)^i d_i.
/// Faces that are degenerate contribute zero.
inline ChainComplex chain_complex(const Presentation& K, std::optional<int> max_dim = std::nullopt,
                                  bool augmented = false)
{
    const int top = max_dim ? *max_dim : std::max(K.dimension(), 0);
    check_dimension_cap(top, "chain complex");
    ChainComplex C;
    C.augmented = augmented;
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> names;
        if (n <= K.dimension())
            for (int i = 0; i < K.cell_count(n); ++i)
                names.push_back(K.cell_name(CellRef{n, i}));
        C.bases.push_back(std::move(names));
    }
    for (int n = 0; n <= top + 1; ++n) {
        if (n == 0 && augmented) {
            IntMatrix eps(1, C.rank(0));
            for (int i = 0; i < C.rank(0); ++i)
                eps(0, i) = 1;
            C.boundaries.push_back(std::move(eps));
        } else {
            C.boundaries.push_back(detail::presentation_boundary(K, n));
        }
    }
    if (K.truncated_at() && *K.truncated_at() <= top)
        C.unreliable_from = *K.truncated_at();
    return C;
}

/// ∂_{n-1} ∘ ∂_n = 0 in every stored degree.
inline bool boundary_squares_to_zero(const ChainComplex& C)
{
    for (int n = 1; n <= C.top_degree() + 1; ++n)
        if (!(C.boundary(n - 1) * C.boundary(n)).is_zero())
            return false;
    return true;
}

} // namespace kanforge
