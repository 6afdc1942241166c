#pragma once

#include <set>
#include <string>
#include <vector>

#include "kanforge/finite_group.hpp"
#include "kanforge/simplicial_map.hpp"

namespace kanforge {

struct QuotientResult {
    PresentationPtr quotient;
    SimplicialMap projection;
};

/// Subcomplex selection: a set of nondegenerate simplices closed under faces.
using CellSelection = std::set<CellRef>;

inline bool is_face_closed(const Presentation& K, const CellSelection& A)
{
    for (const auto& c : A) {
        if (!K.contains(c))
            return false;
        for (const auto& f : K.cell(c).faces)
            if (!A.count(f.base()))
                return false;
    }
    return true;
}

/// K/A: every simplex of A is identified with one new vertex "*", which is
/// declared first among the vertices. Faces landing in A become iterated
/// degeneracies of "*". K/∅ is K.
inline QuotientResult quotient_by_subcomplex(const PresentationPtr& K, const CellSelection& A)
{
    if (!is_face_closed(*K, A))
        throw ValidationError("collapsed subcomplex is not closed under faces");
    if (A.empty())
        return {K, SimplicialMap::identity(K)};

    PresentationBuilder b(K->name() + "/A");
    std::string star = "*";
    while (K->find(star))
        star += "*";
    const CellRef star_ref = b.add_vertex(star);
    std::vector<std::vector<CellRef>> remap(K->dimension() + 1);

    auto collapse_word = [&](const SimplexWord& w) -> SimplexWord {
        const CellRef base = w.base();
        if (!A.count(base))
            return SimplexWord(remap[base.dim][base.index], w.degeneracies());
        // base ↦ s_{m-1} ... s_0 *, then the word's own degeneracies
        SimplexWord out(star_ref);
        for (int j = 0; j < base.dim; ++j)
            out = degeneracy(out, j);
        const auto& ds = w.degeneracies();
        for (auto it = ds.rbegin(); it != ds.rend(); ++it)
            out = degeneracy(out, *it);
        return out;
    };

    for (int d = 0; d <= K->dimension(); ++d) {
        remap[d].assign(K->cell_count(d), CellRef{-1, -1});
        for (int i = 0; i < K->cell_count(d); ++i) {
            if (A.count({d, i}))
                continue;
            const auto& c = K->cell({d, i});
            if (d == 0) {
                remap[d][i] = b.add_vertex(c.name);
            } else {
                std::vector<SimplexWord> faces;
                for (const auto& f : c.faces)
                    faces.push_back(collapse_word(f));
                remap[d][i] = b.add_simplex(c.name, std::move(faces));
            }
        }
    }
    auto Q = b.build_shared();
    auto proj = SimplicialMap::from_lookup(K, Q, [&](CellRef c) { return collapse_word(SimplexWord(c)); });
    return {Q, std::move(proj)};
}

/// A right action of a finite group on the nondegenerate simplices of a
/// presentation: `images[g][d][i]` is the index of (d, i)·g.
struct GroupAction {
    FiniteGroup group;
    std::vector<std::vector<std::vector<int>>> images;

    int act(CellRef c, int g) const { return images.at(g).at(c.dim).at(c.index); }

    SimplexWord act(const SimplexWord& w, int g) const
    {
        return SimplexWord(CellRef{w.base().dim, act(w.base(), g)}, w.degeneracies());
    }
};

/// Checks that every group element acts by a simplicial automorphism and
/// that the assignment is a right action. Throws ValidationError.
inline void check_action(const Presentation& K, const GroupAction& action)
{
    const auto& G = action.group;
    if (static_cast<int>(action.images.size()) != G.order())
        throw ValidationError("action must list every group element");
    for (int g = 0; g < G.order(); ++g) {
        if (static_cast<int>(action.images[g].size()) != K.dimension() + 1)
            throw ValidationError("action must cover every dimension");
        for (int d = 0; d <= K.dimension(); ++d) {
            const auto& perm = action.images[g][d];
            if (static_cast<int>(perm.size()) != K.cell_count(d))
                throw ValidationError("action must permute every simplex");
            std::vector<bool> hit(perm.size(), false);
            for (int img : perm) {
                if (img < 0 || img >= K.cell_count(d) || hit[img])
                    throw ValidationError("group element '" + G.name(g) + "' does not permute dimension " +
                                          std::to_string(d));
                hit[img] = true;
            }
        }
    }
    for (int d = 0; d <= K.dimension(); ++d)
        for (int i = 0; i < K.cell_count(d); ++i) {
            const CellRef c{d, i};
            if (action.act(c, G.identity()) != i)
                throw ValidationError("identity must act trivially");
            for (int g = 0; g < G.order(); ++g) {
                for (int h = 0; h < G.order(); ++h) {
                    // (x·g)·h = x·(gh)
                    if (action.act(CellRef{d, action.act(c, g)}, h) != action.act(c, G.multiply(g, h)))
                        throw ValidationError("assignment is not a right action");
                }
                for (int k = 0; d > 0 && k <= d; ++k) {
                    const SimplexWord x(c);
                    if (K.face(action.act(x, g), k) != action.act(K.face(x, k), g))
                        throw ValidationError("group element '" + G.name(g) +
                                              "' does not commute with d_" + std::to_string(k) + " on '" +
                                              K.cell_name(c) + "'");
                }
            }
        }
}

/// First nondegenerate simplex fixed by a non-identity element, if any.
inline std::optional<std::pair<CellRef, int>> find_fixed_simplex(const Presentation& K,
                                                                  const GroupAction& action)
{
    for (int d = 0; d <= K.dimension(); ++d)
        for (int i = 0; i < K.cell_count(d); ++i)
            for (int g = 1; g < action.group.order(); ++g)
                if (action.act(CellRef{d, i}, g) == i)
                    return std::make_pair(CellRef{d, i}, g);
    return std::nullopt;
}

/// Orbit presentation K/Γ of a free action. Each orbit is named after its
/// first member in declaration order.
inline QuotientResult quotient_by_free_action(const PresentationPtr& K, const GroupAction& action)
{
    check_action(*K, action);
    if (auto fixed = find_fixed_simplex(*K, action))
        throw FreenessViolation("simplex '" + K->cell_name(fixed->first) + "' is fixed by '" +
                                action.group.name(fixed->second) + "'");

    PresentationBuilder b(K->name() + "/" + action.group.label());
    std::vector<std::vector<CellRef>> orbit(K->dimension() + 1);
    for (int d = 0; d <= K->dimension(); ++d) {
        orbit[d].assign(K->cell_count(d), CellRef{-1, -1});
        for (int i = 0; i < K->cell_count(d); ++i) {
            if (orbit[d][i].dim >= 0)
                continue;
            const auto& c = K->cell({d, i});
            CellRef ref;
            if (d == 0) {
                ref = b.add_vertex(c.name);
            } else {
                std::vector<SimplexWord> faces;
                for (const auto& f : c.faces)
                    faces.emplace_back(orbit[f.base().dim][f.base().index], f.degeneracies());
                ref = b.add_simplex(c.name, std::move(faces));
            }
            for (int g = 0; g < action.group.order(); ++g)
                orbit[d][action.act(CellRef{d, i}, g)] = ref;
        }
    }
    auto Q = b.build_shared();
    auto proj = SimplicialMap::from_lookup(K, Q, [&](CellRef c) { return SimplexWord(orbit[c.dim][c.index]); });
    return {Q, std::move(proj)};
}

} // namespace kanforge
