#pragma once

#include <string>
#include <vector>

#include "kanforge/homology.hpp"
#include "kanforge/simplicial_map.hpp"
#include "kanforge/standard.hpp"

namespace kanforge {

/// Chain map as one integer matrix per degree (rows: target basis).
struct ChainMap {
    std::vector<IntMatrix> degrees;

    int top_degree() const noexcept { return static_cast<int>(degrees.size()) - 1; }
    const IntMatrix& operator[](int n) const { return degrees.at(n); }

    /// this ∘ first
    ChainMap after(const ChainMap& first) const
    {
        ChainMap out;
        for (int n = 0; n <= std::min(top_degree(), first.top_degree()); ++n)
            out.degrees.push_back(degrees[n] * first.degrees[n]);
        return out;
    }

    bool operator==(const ChainMap&) const = default;
};

/// ℤ(f) on normalized chains through degree `max_dim`: a nondegenerate
/// simplex goes to its image when that is nondegenerate, to 0 otherwise.
/// Throws InternalConsistencyError if the result does not commute with ∂.
inline ChainMap induced_chain_map(const SimplicialMap& f, std::optional<int> max_dim = std::nullopt)
{
    const auto& S = *f.source();
    const auto& T = *f.target();
    const int top = max_dim ? *max_dim : std::max(S.dimension(), 0);
    ChainMap out;
    for (int n = 0; n <= top; ++n) {
        const int rows = n <= T.dimension() ? T.cell_count(n) : 0;
        const int cols = n <= S.dimension() ? S.cell_count(n) : 0;
        IntMatrix m(rows, cols);
        for (int x = 0; x < cols; ++x) {
            const auto& img = f.image(CellRef{n, x});
            if (!img.is_degenerate())
                m(img.base().index, x) = 1;
        }
        out.degrees.push_back(std::move(m));
    }
    for (int n = 1; n <= top; ++n) {
        const auto lhs = detail::presentation_boundary(T, n) * out.degrees[n];
        const auto rhs = out.degrees[n - 1] * detail::presentation_boundary(S, n);
        if (!(lhs == rhs))
            throw InternalConsistencyError("induced chain map does not commute with the boundary in degree " +
                                           std::to_string(n));
    }
    return out;
}

/// Matrix of H_n(f): column j holds the coordinates of the image of the
/// j-th summand generator of the source.
inline IntMatrix induced_homology_map(const HomologyGroup& source, const HomologyGroup& target, const ChainMap& f)
{
    const auto gens = source.lattice.generators();
    IntMatrix out(target.group().summands(), static_cast<int>(gens.size()));
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        auto coords = target.lattice.coordinates(target.coeff.reduce(f[source.degree] * gens[j]));
        if (!coords)
            throw InternalConsistencyError("image of a cycle is not a cycle");
        for (int i = 0; i < out.rows(); ++i)
            out(i, j) = (*coords)[i];
    }
    return out;
}

/// f^* on cochains: c ↦ c ∘ f_n.
inline IntVector pullback_cochain(const ChainMap& f, int n, const IntVector& cochain)
{
    return f[n].transpose() * cochain;
}

/// ∂h + h∂ = g − f in degrees 0..min(top f, top g). `h[n]` maps source
/// degree n to target degree n+1; missing entries count as zero.
/// Throws DimensionMismatch on incompatible shapes.
inline bool chain_homotopy_check(const ChainComplex& source, const ChainComplex& target, const ChainMap& f,
                                 const ChainMap& g, const std::vector<IntMatrix>& h)
{
    auto h_at = [&](int n) {
        if (n >= 0 && n < static_cast<int>(h.size()))
            return h[n];
        return IntMatrix(target.rank(n + 1), source.rank(n));
    };
    const int top = std::min(f.top_degree(), g.top_degree());
    for (int n = 0; n <= top; ++n) {
        const IntMatrix lhs = target.boundary(n + 1) * h_at(n) +
                              (n > 0 ? h_at(n - 1) * source.boundary(n) : IntMatrix(target.rank(n), source.rank(n)));
        if (!(lhs == g[n] - f[n]))
            return false;
    }
    return true;
}

/// The map cycle(n) → cycle(m), m | n, wrapping n/m times around.
inline SimplicialMap cycle_wrap(int n, int m)
{
    if (m < 1 || n % m != 0)
        throw InvalidParameters("cycle_wrap needs m dividing n");
    auto S = std::make_shared<const Presentation>(cycle(n));
    auto T = std::make_shared<const Presentation>(cycle(m));
    return SimplicialMap::from_lookup(S, T, [&](CellRef c) { return SimplexWord(CellRef{c.dim, c.index % m}); });
}

/// The map C_n → S¹ sending every edge to the loop.
inline SimplicialMap wrap_map(int n)
{
    auto S = std::make_shared<const Presentation>(cycle(n));
    auto T = std::make_shared<const Presentation>(circle());
    return SimplicialMap::from_lookup(S, T, [](CellRef c) { return SimplexWord(CellRef{c.dim, 0}); });
}

/// Multipliers of the directed system ℤ → ℤ → ... whose colimit is ℚ,
/// realized on H_1 by wraps C_{N/(j-1)!} → C_{N/j!} with N = (stages+1)!.
/// Entry j-2 is the multiplier of stage j; the colimit itself is not formed.
inline std::vector<Integer> rational_circle_system(int stages)
{
    if (stages < 1 || stages > 5)
        throw InvalidParameters("rational_circle_system supports 1..5 stages");
    int N = 1;
    for (int j = 2; j <= stages + 1; ++j)
        N *= j;
    std::vector<Integer> out;
    int prev = N;
    for (int j = 2; j <= stages + 1; ++j) {
        const int cur = prev / j;
        const auto f = cycle_wrap(prev, cur);
        const auto F = induced_chain_map(f);
        const auto Hs = homology_in_degree(chain_complex(*f.source()), 1);
        const auto Ht = homology_in_degree(chain_complex(*f.target()), 1);
        out.push_back(induced_homology_map(Hs, Ht, F)(0, 0));
        prev = cur;
    }
    return out;
}

} // namespace kanforge
