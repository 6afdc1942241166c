#pragma once

#include <map>
#include <optional>

#include "kanforge/principal.hpp"
#include "kanforge/product.hpp"

namespace kanforge {

/// φ_τ : base → W̄Γ, sending an n-simplex to the tuple of labels of its
/// consecutive edges (0,1), (1,2), ..., (n-1,n).
inline SimplicialMap classifying_map(const TwistingFunction<FiniteGroup>& tau, std::optional<int> max_dim = std::nullopt)
{
    const auto& B = *tau.base();
    const int top = max_dim.value_or(std::max(B.dimension(), 0));
    if (B.dimension() > top)
        throw DimensionMismatch("base dimension exceeds the classifying truncation");
    auto W = std::make_shared<const Presentation>(wbar_truncated(tau.group(), top));
    return SimplicialMap::from_lookup(tau.base(), W, [&](CellRef c) {
        const SimplexWord x(c);
        std::vector<int> tuple;
        for (int i = 1; i <= c.dim; ++i)
            tuple.push_back(tau.label(x, i - 1, i));
        return nerve_word(tau.group(), tuple);
    });
}

/// Checks that tcp(τ) is isomorphic, as a bundle over the base, to the
/// pullback of W Γ → W̄Γ along φ_τ: the map (x, g) ↦ (x, (φ_τ x, g)) into
/// the fiber product must be a simplicial isomorphism commuting with the
/// actions and projections.
inline CheckReport classifying_pullback_check(const TwistingFunction<FiniteGroup>& tau)
{
    CheckReport report;
    const int top = std::max(tau.base()->dimension(), 0);
    const auto phi = classifying_map(tau, top);
    const auto W = w_truncated(tau.group(), top);
    const auto pulled = fiber_product(phi, W.projection);
    const auto bundle = tcp_build(tau);
    const int order = tau.group().order();

    std::map<std::pair<SimplexWord, SimplexWord>, CellRef> cell_of;
    const auto& P = *pulled.product;
    for (int n = 0; n <= P.dimension(); ++n)
        for (int i = 0; i < P.cell_count(n); ++i)
            cell_of.emplace(pulled.components[n][i], CellRef{n, i});

    auto image = [&](CellRef c) -> std::optional<CellRef> {
        const SimplexWord x(CellRef{c.dim, c.index / order});
        const auto y = phi.apply(x);
        const SimplexWord e(CellRef{y.base().dim, y.base().index * order + c.index % order}, y.degeneracies());
        auto it = cell_of.find({x, e});
        if (it == cell_of.end())
            return std::nullopt;
        return it->second;
    };
    try {
        const auto iso = SimplicialMap::from_lookup(bundle.total, pulled.product, [&](CellRef c) {
            auto r = image(c);
            if (!r)
                throw ValidationError("'" + bundle.total->cell_name(c) + "' has no partner in the pullback");
            return SimplexWord(*r);
        });
        if (!is_isomorphism(iso))
            report.fail("tcp total is not isomorphic to the pullback of the universal bundle");
        // equivariance: the action on the pullback is through the W factor
        for (int h = 0; h < order && report.ok; ++h)
            for (int n = 0; n <= bundle.total->dimension(); ++n)
                for (int i = 0; i < bundle.total->cell_count(n); ++i) {
                    const CellRef c{n, i};
                    const auto moved = iso.image({n, bundle.action.act(c, h)}).base();
                    const auto& [x, e] = pulled.components[n][iso.image(c).base().index];
                    const SimplexWord eh(CellRef{e.base().dim, W.action.act(e.base(), h)}, e.degeneracies());
                    if (cell_of.at({x, eh}) != moved) {
                        report.fail("comparison map is not equivariant");
                        break;
                    }
                }
    } catch (const ValidationError& e) {
        report.fail(e.what());
    }
    return report;
}

} // namespace kanforge
