#pragma once

#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kanforge/group_presentation.hpp"
#include "kanforge/presentation.hpp"

namespace kanforge {

/// Path components: vertices joined by a zigzag of edges share a label.
struct Components {
    /// Component label of each vertex (labels are 0.. in order of the
    /// first vertex of each component).
    std::vector<int> of_vertex;
    int count = 0;
    /// First vertex of each component.
    std::vector<CellRef> representatives;
};

inline Components pi0(const Presentation& K)
{
    const int n = K.dimension() >= 0 ? K.cell_count(0) : 0;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    if (K.dimension() >= 1)
        for (int e = 0; e < K.cell_count(1); ++e) {
            const auto a = find(K.base_face({1, e}, 0).base().index);
            const auto b = find(K.base_face({1, e}, 1).base().index);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    Components out;
    out.of_vertex.assign(n, -1);
    std::vector<int> label_of_root(n, -1);
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (label_of_root[r] < 0) {
            label_of_root[r] = out.count++;
            out.representatives.push_back({0, v});
        }
        out.of_vertex[v] = label_of_root[r];
    }
    return out;
}

/// Edge-path presentation of π₁(K, basepoint).
///
/// Generators are the nondegenerate edges of the basepoint's component;
/// edges of a breadth-first spanning tree (declaration order breaks ties)
/// are killed, and each nondegenerate triangle σ contributes
/// (d_2 σ)(d_0 σ)(d_1 σ)^-1, degenerate edges counting as 1. Without
/// `restrict_to_component` a disconnected K is rejected.
inline GroupPresentation pi1_presentation(const Presentation& K, std::optional<CellRef> basepoint = std::nullopt,
                                          bool restrict_to_component = false)
{
    if (K.dimension() < 0)
        throw InvalidParameters("fundamental group of the empty simplicial set");
    const CellRef base = basepoint.value_or(CellRef{0, 0});
    if (base.dim != 0 || !K.contains(base))
        throw InvalidParameters("basepoint must be a vertex");
    const auto comps = pi0(K);
    if (comps.count > 1 && !restrict_to_component)
        throw InvalidParameters("simplicial set has " + std::to_string(comps.count) +
                                " components; restrict to the basepoint's component");
    const int component = comps.of_vertex[base.index];
    auto in_component = [&](const SimplexWord& w) { return comps.of_vertex[K.vertex(w, 0).index] == component; };

    const int edge_count = K.dimension() >= 1 ? K.cell_count(1) : 0;
    std::vector<int> generator_of(edge_count, -1);
    std::vector<std::string> names;
    for (int e = 0; e < edge_count; ++e)
        if (in_component(SimplexWord(CellRef{1, e}))) {
            generator_of[e] = static_cast<int>(names.size());
            names.push_back(K.cell_name({1, e}));
        }

    std::vector<Word> relators;
    // breadth-first spanning tree
    std::vector<std::vector<int>> incident(K.cell_count(0));
    for (int e = 0; e < edge_count; ++e) {
        const int s = K.base_face({1, e}, 1).base().index;
        const int t = K.base_face({1, e}, 0).base().index;
        incident[s].push_back(e);
        if (t != s)
            incident[t].push_back(e);
    }
    std::vector<bool> seen(K.cell_count(0), false);
    std::deque<int> queue = {base.index};
    seen[base.index] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int e : incident[v]) {
            const int s = K.base_face({1, e}, 1).base().index;
            const int t = K.base_face({1, e}, 0).base().index;
            const int other = s == v ? t : s;
            if (seen[other])
                continue;
            seen[other] = true;
            queue.push_back(other);
            relators.push_back({Letter{generator_of[e], 1}});
        }
    }

    auto letter = [&](const SimplexWord& edge, int exponent) -> Word {
        if (edge.is_degenerate())
            return {};
        return {Letter{generator_of[edge.base().index], exponent}};
    };
    if (K.dimension() >= 2)
        for (int t = 0; t < K.cell_count(2); ++t) {
            const SimplexWord sigma(CellRef{2, t});
            if (!in_component(sigma))
                continue;
            Word r = letter(K.face(sigma, 2), 1);
            for (const auto& l : letter(K.face(sigma, 0), 1))
                r.push_back(l);
            for (const auto& l : letter(K.face(sigma, 1), -1))
                r.push_back(l);
            relators.push_back(std::move(r));
        }
    return GroupPresentation(std::move(names), std::move(relators));
}

/// Abelianization of π₁ via the Smith form of the exponent-sum matrix.
inline FGAbelianGroup abelianized_pi1(const Presentation& K, std::optional<CellRef> basepoint = std::nullopt,
                                      bool restrict_to_component = false)
{
    return pi1_presentation(K, basepoint, restrict_to_component).simplified().abelianization();
}

} // namespace kanforge
