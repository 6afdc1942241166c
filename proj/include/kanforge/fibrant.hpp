#pragma once

#include <string>
#include <vector>

#include "kanforge/horns.hpp"
#include "kanforge/simplicial_map.hpp"

namespace kanforge {

struct FibrantStage {
    int stage = 0;
    /// Horns filled by a newly attached simplex in this stage, per p.
    std::vector<std::size_t> attached;
};

struct FibrantResult {
    PresentationPtr extended;
    SimplicialMap inclusion;
    std::vector<FibrantStage> stages;
    /// Horns (1 < p <= max_dim) still unfilled in the final complex.
    KanReport residual;
};

namespace detail {

inline std::string fresh_name(const PresentationBuilder& b, std::string name)
{
    while (b.has(name))
        name += "'";
    return name;
}

} // namespace detail

/// Stage-bounded horn filling. Each stage collects the horns Λ_k[p] → K
/// (1 < p <= max_dim, ordered by p, then k, then faces) that have no
/// filler at the start of the stage, and attaches to each a new p-simplex
/// whose k-th face is a new (p-1)-simplex. Horns that already have a
/// filler get nothing. Vertices are never added or removed.
inline FibrantResult fibrant_approx_bounded(const PresentationPtr& K, int max_dim, int stages,
                                            const Budget& budget = {},
                                            int degenerate_up_to = degenerate_horn_default_max_p)
{
    check_dimension_cap(max_dim, "fibrant approximation");
    if (stages < 1)
        throw InvalidParameters("fibrant approximation needs at least one stage");
    if (max_dim < 2)
        throw InvalidParameters("fibrant approximation needs max_dim >= 2");

    Presentation current = *K;
    FibrantResult result;
    for (int stage = 1; stage <= stages; ++stage) {
        FibrantStage info{stage, std::vector<std::size_t>(max_dim + 1, 0)};
        std::vector<HornInstance> todo;
        std::size_t checked = 0;
        for (int p = 2; p <= max_dim; ++p) {
            const FillerIndex index(current, p, budget);
            for (int k = 0; k <= p; ++k)
                for_each_horn(current, p, k, p <= degenerate_up_to, budget, [&](HornInstance h) {
                    if (++checked > budget.max_horns)
                        throw BudgetExceeded("horn instances", checked);
                    if (!index.find(h))
                        todo.push_back(std::move(h));
                    return true;
                });
        }
        if (todo.empty()) {
            result.stages.push_back(std::move(info));
            break;
        }
        PresentationBuilder b(current);
        std::size_t serial = 0;
        for (const auto& h : todo) {
            const int p = h.p, k = h.k;
            std::vector<SimplexWord> y_faces;
            for (int i = 0; i < p; ++i)
                y_faces.push_back(i < k ? current.face(*h.faces[i], k - 1) : current.face(*h.faces[i + 1], k));
            const std::string tag = std::to_string(stage) + "." + std::to_string(serial++);
            const auto y = b.add_simplex(detail::fresh_name(b, "y" + tag), std::move(y_faces));
            std::vector<SimplexWord> z_faces;
            for (int i = 0; i <= p; ++i)
                z_faces.push_back(i == k ? SimplexWord(y) : *h.faces[i]);
            b.add_simplex(detail::fresh_name(b, "z" + tag), std::move(z_faces));
            ++info.attached[p];
        }
        if (b.current().total_cells() > budget.max_simplices)
            throw BudgetExceeded("fibrant approximation cells", b.current().total_cells());
        current = b.build();
        result.stages.push_back(std::move(info));
    }

    result.extended = std::make_shared<const Presentation>(current);
    result.inclusion = SimplicialMap::from_lookup(K, result.extended, [](CellRef c) { return SimplexWord(c); });
    result.residual = kan_report(current, max_dim, budget, degenerate_up_to);
    // p = 1 horns always have degenerate fillers; the residual concerns p > 1
    std::erase_if(result.residual.unfilled, [](const HornInstance& h) { return h.p < 2; });
    return result;
}

} // namespace kanforge
