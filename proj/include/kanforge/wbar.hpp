#pragma once

#include <string>
#include <vector>

#include "kanforge/config.hpp"
#include "kanforge/discrete_group.hpp"
#include "kanforge/presentation.hpp"

namespace kanforge {

namespace detail {

/// Index of a tuple of non-identity elements among the nondegenerate
/// simplices of its dimension (lexicographic order).
inline int nerve_index(const FiniteGroup& G, const std::vector<int>& tuple)
{
    int idx = 0;
    for (int g : tuple)
        idx = idx * (G.order() - 1) + (g - 1);
    return idx;
}

} // namespace detail

/// Normal form of an arbitrary element tuple of the nerve: identities at
/// 1-based positions m_1 < ... < m_t give s_{m_t - 1} ... s_{m_1 - 1} of the
/// reduced tuple.
inline SimplexWord nerve_word(const FiniteGroup& G, const std::vector<int>& tuple)
{
    std::vector<int> reduced, degens;
    for (int pos = static_cast<int>(tuple.size()); pos >= 1; --pos) {
        if (G.is_identity(tuple[pos - 1]))
            degens.push_back(pos - 1);
    }
    for (int g : tuple)
        if (!G.is_identity(g))
            reduced.push_back(g);
    return SimplexWord(CellRef{static_cast<int>(reduced.size()), detail::nerve_index(G, reduced)}, std::move(degens));
}

/// The nerve W̄Γ of a finite group through dimension max_dim: nondegenerate
/// n-simplices are n-tuples of non-identity elements, d_0 drops g_1, d_n
/// drops g_n and d_i multiplies g_i g_{i+1}. Marked as truncated.
inline Presentation wbar_truncated(const FiniteGroup& G, int max_dim)
{
    check_dimension_cap(max_dim, "classifying complex");
    if (max_dim < 0)
        throw InvalidParameters("negative truncation dimension");
    PresentationBuilder b("Wbar(" + G.label() + ")");
    const Budget budget;
    b.add_vertex("()");
    std::vector<int> tuple;
    for (int n = 1; n <= max_dim; ++n) {
        if (G.order() == 1)
            break;
        std::size_t count = 1;
        for (int t = 0; t < n; ++t)
            count *= static_cast<std::size_t>(G.order() - 1);
        if (b.current().total_cells() + count > budget.max_simplices)
            throw BudgetExceeded("classifying complex cells", b.current().total_cells() + count);
        tuple.assign(n, 1);
        while (true) {
            std::string name = "(";
            for (int t = 0; t < n; ++t)
                name += (t ? "," : "") + G.name(tuple[t]);
            name += ")";
            std::vector<SimplexWord> faces;
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                for (int t = 0; t < n; ++t) {
                    if ((i == 0 && t == 0) || (i == n && t == n - 1))
                        continue;
                    if (i > 0 && i < n && t == i) // merged into position i - 1
                        continue;
                    if (i > 0 && i < n && t == i - 1)
                        f.push_back(G.multiply(tuple[t], tuple[t + 1]));
                    else
                        f.push_back(tuple[t]);
                }
                faces.push_back(nerve_word(G, f));
            }
            b.add_simplex(name, std::move(faces));
            int t = n - 1;
            while (t >= 0 && tuple[t] == G.order() - 1)
                tuple[t--] = 1;
            if (t < 0)
                break;
            ++tuple[t];
        }
    }
    b.set_truncated_at(max_dim);
    return b.build();
}

/// Presented infinite groups have infinitely many simplices per dimension.
inline Presentation wbar_truncated(const PresentedGroup& G, int)
{
    throw Unsupported("the nerve of " + G.label() + " has infinitely many simplices in each positive dimension");
}

} // namespace kanforge
