#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kanforge/config.hpp"
#include "kanforge/simplicial_map.hpp"

namespace kanforge {

/// Split a pair of equal-dimensional words (u, w), viewed as a simplex of
/// K × L, into s_I (u', w') with (u', w') nondegenerate.
/// Returns the canonical degeneracy list and the reduced pair.
inline std::pair<std::vector<int>, std::pair<SimplexWord, SimplexWord>>
split_product_degeneracy(SimplexWord u, SimplexWord w)
{
    std::vector<int> pulled; // in order of removal (largest common index first)
    while (true) {
        int common = -1;
        for (int a : u.degeneracies())
            for (int b : w.degeneracies())
                if (a == b)
                    common = std::max(common, a);
        if (common < 0)
            break;
        auto strip = [common](const SimplexWord& x) {
            // d_common s_common = id; the face needs no base lookups
            return face(x, common, [](CellRef, int) -> SimplexWord {
                throw MalformedWord("unexpected base face while stripping a degeneracy");
            });
        };
        u = strip(u);
        w = strip(w);
        pulled.push_back(common);
    }
    // (u,w)_orig = s_{c1} s_{c2} ... (u', w'), c1 removed first
    SimplexWord marker(CellRef{u.dim(), 0});
    for (auto it = pulled.rbegin(); it != pulled.rend(); ++it)
        marker = degeneracy(marker, *it);
    return {marker.degeneracies(), {std::move(u), std::move(w)}};
}

struct ProductResult {
    PresentationPtr product;
    SimplicialMap first_projection;
    SimplicialMap second_projection;
    /// Component words of every nondegenerate simplex, indexed like the cells.
    std::vector<std::vector<std::pair<SimplexWord, SimplexWord>>> components;
};

namespace detail {

/// Sub-presentation of K × L on the pairs accepted by `accept(u, w)`,
/// which must be closed under faces and degeneracies.
template <class Accept>
ProductResult product_impl(const PresentationPtr& K, const PresentationPtr& L, const std::string& name,
                           const Accept& accept)
{
    const int top = K->dimension() + L->dimension();
    check_dimension_cap(top, "product");
    PresentationBuilder b(name);
    std::map<std::pair<SimplexWord, SimplexWord>, CellRef> index;
    std::vector<std::vector<std::pair<SimplexWord, SimplexWord>>> components(top + 1);

    for (int n = 0; n <= top; ++n) {
        for (int p = 0; p <= std::min(n, K->dimension()); ++p) {
            for (int xi = 0; xi < K->cell_count(p); ++xi) {
                for (int q = 0; q <= std::min(n, L->dimension()); ++q) {
                    if (p + q < n)
                        continue;
                    const auto Is = degeneracy_patterns(p, n);
                    const auto Js = degeneracy_patterns(q, n);
                    for (int yi = 0; yi < L->cell_count(q); ++yi) {
                        for (const auto& I : Is) {
                            for (const auto& J : Js) {
                                bool disjoint = true;
                                for (int a : I)
                                    for (int c : J)
                                        disjoint = disjoint && a != c;
                                if (!disjoint)
                                    continue;
                                SimplexWord u(CellRef{p, xi}, I);
                                SimplexWord w(CellRef{q, yi}, J);
                                if (!accept(u, w))
                                    continue;
                                const std::string name =
                                    "(" + K->word_name(u) + ";" + L->word_name(w) + ")";
                                CellRef ref;
                                if (n == 0) {
                                    ref = b.add_vertex(name);
                                } else {
                                    std::vector<SimplexWord> faces;
                                    for (int i = 0; i <= n; ++i) {
                                        auto [ds, pr] =
                                            split_product_degeneracy(K->face(u, i), L->face(w, i));
                                        faces.emplace_back(index.at(pr), ds);
                                    }
                                    ref = b.add_simplex(name, std::move(faces));
                                }
                                index.emplace(std::make_pair(u, w), ref);
                                components[n].emplace_back(u, w);
                            }
                        }
                    }
                }
            }
        }
    }
    auto P = b.build_shared();
    auto first = SimplicialMap::from_lookup(P, K, [&](CellRef c) { return components[c.dim][c.index].first; });
    auto second =
        SimplicialMap::from_lookup(P, L, [&](CellRef c) { return components[c.dim][c.index].second; });
    return {P, std::move(first), std::move(second), std::move(components)};
}

} // namespace detail

/// Categorical product K × L. Nondegenerate n-simplices are pairs
/// (s_I x, s_J y) with dim x + |I| = dim y + |J| = n and I ∩ J = ∅,
/// enumerated by n, then x, then y, then I, then J.
inline ProductResult product_with_projections(const PresentationPtr& K, const PresentationPtr& L)
{
    return detail::product_impl(K, L, K->name() + "x" + L->name(),
                                [](const SimplexWord&, const SimplexWord&) { return true; });
}

/// Fiber product K ×_B L of f : K → B and g : L → B, with its two projections.
inline ProductResult fiber_product(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!(*f.target() == *g.target()))
        throw DimensionMismatch("fiber product of maps with different targets");
    return detail::product_impl(f.source(), g.source(), f.source()->name() + "x_B" + g.source()->name(),
                                [&](const SimplexWord& u, const SimplexWord& w) { return f.apply(u) == g.apply(w); });
}

inline Presentation product(const Presentation& K, const Presentation& L)
{
    return *product_with_projections(std::make_shared<const Presentation>(K),
                                     std::make_shared<const Presentation>(L))
                .product;
}

} // namespace kanforge
