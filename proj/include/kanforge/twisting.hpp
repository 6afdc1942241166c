#pragma once

#include <string>
#include <vector>

#include "kanforge/discrete_group.hpp"
#include "kanforge/presentation.hpp"
#include "kanforge/simplicial_map.hpp"

namespace kanforge {

/// Edge labelling of a simplicial set by a discrete group, normalized
/// (degenerate edges carry the identity) and satisfying
/// label(d_1 σ) = label(d_2 σ) · label(d_0 σ) on every triangle σ.
template <DiscreteGroup G>
class TwistingFunction {
public:
    using element_type = typename G::element_type;

    /// Throws CocycleViolation naming the first offending triangle.
    TwistingFunction(PresentationPtr base, G group, std::vector<element_type> labels)
        : base_(std::move(base)), group_(std::move(group)), labels_(std::move(labels))
    {
        const int edges = base_->dimension() >= 1 ? base_->cell_count(1) : 0;
        if (static_cast<int>(labels_.size()) != edges)
            throw ValidationError("twisting function needs one label per nondegenerate edge (" +
                                  std::to_string(edges) + ")");
        if (auto bad = first_violation())
            throw CocycleViolation("cocycle condition fails on '" + base_->cell_name(*bad) + "'");
    }

    /// The trivial twisting.
    static TwistingFunction trivial(PresentationPtr base, G group)
    {
        const int edges = base->dimension() >= 1 ? base->cell_count(1) : 0;
        std::vector<element_type> labels(edges, group.identity());
        return TwistingFunction(std::move(base), std::move(group), std::move(labels));
    }

    const PresentationPtr& base() const noexcept { return base_; }
    const G& group() const noexcept { return group_; }
    const std::vector<element_type>& labels() const noexcept { return labels_; }

    element_type label(const SimplexWord& edge) const
    {
        if (edge.dim() != 1)
            throw DimensionMismatch("twisting labels are defined on 1-simplices");
        if (edge.is_degenerate())
            return group_.identity();
        return labels_.at(edge.base().index);
    }

    /// Label of the edge from vertex a to vertex b of a simplex.
    element_type label(const SimplexWord& simplex, int a, int b) const { return label(base_->edge(simplex, a, b)); }

    std::optional<CellRef> first_violation() const
    {
        if (base_->dimension() < 2)
            return std::nullopt;
        for (int t = 0; t < base_->cell_count(2); ++t) {
            const SimplexWord s(CellRef{2, t});
            const auto lhs = label(base_->face(s, 1));
            const auto rhs = group_.multiply(label(base_->face(s, 2)), label(base_->face(s, 0)));
            if (!group_.equal(lhs, rhs))
                return CellRef{2, t};
        }
        return std::nullopt;
    }

private:
    PresentationPtr base_;
    G group_;
    std::vector<element_type> labels_;
};

/// f^*τ: each edge of the source gets the label of its image.
template <DiscreteGroup G>
TwistingFunction<G> pullback_twisting(const SimplicialMap& f, const TwistingFunction<G>& tau)
{
    if (!(*f.target() == *tau.base()))
        throw DimensionMismatch("pullback along a map into a different base");
    const auto& S = *f.source();
    std::vector<typename G::element_type> labels;
    if (S.dimension() >= 1)
        for (int e = 0; e < S.cell_count(1); ++e)
            labels.push_back(tau.label(f.image(CellRef{1, e})));
    return TwistingFunction<G>(f.source(), tau.group(), std::move(labels));
}

} // namespace kanforge
