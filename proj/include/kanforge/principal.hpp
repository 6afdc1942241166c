#pragma once

#include <map>
#include <string>
#include <vector>

#include "kanforge/chain_complex.hpp"
#include "kanforge/homology.hpp"
#include "kanforge/horns.hpp"
#include "kanforge/quotient.hpp"
#include "kanforge/twisting.hpp"
#include "kanforge/wbar.hpp"

namespace kanforge {

/// A discrete principal bundle: total → base with a right action of the
/// fibre group on the total complex.
struct PrincipalBundle {
    PresentationPtr total;
    PresentationPtr base;
    SimplicialMap projection;
    GroupAction action;

    const FiniteGroup& group() const noexcept { return action.group; }
};

/// Twisted cartesian product of a twisting function over a finite group.
///
/// Nondegenerate n-simplices are pairs (x, g), listed by x then g. For
/// i < n, d_i(x, g) = (d_i x, g); the last face is twisted:
/// d_n(x, g) = (d_n x, τ(e) g) with e the edge from vertex n-1 to n.
/// The group acts on the right by (x, g)·h = (x, g h).
inline PrincipalBundle tcp_build(const TwistingFunction<FiniteGroup>& tau)
{
    const auto& B = *tau.base();
    const auto& G = tau.group();
    const int order = G.order();
    PresentationBuilder b("tcp(" + B.name() + "," + G.label() + ")");
    auto cell = [&](const SimplexWord& w, int g) {
        return SimplexWord(CellRef{w.base().dim, w.base().index * order + g}, w.degeneracies());
    };
    for (int n = 0; n <= B.dimension(); ++n)
        for (int x = 0; x < B.cell_count(n); ++x)
            for (int g = 0; g < order; ++g) {
                const std::string name = "(" + B.cell_name({n, x}) + "," + G.name(g) + ")";
                if (n == 0) {
                    b.add_vertex(name);
                    continue;
                }
                const SimplexWord xs(CellRef{n, x});
                std::vector<SimplexWord> faces;
                for (int i = 0; i < n; ++i)
                    faces.push_back(cell(B.face(xs, i), g));
                const int twisted = G.multiply(tau.label(xs, n - 1, n), g);
                faces.push_back(cell(B.face(xs, n), twisted));
                b.add_simplex(name, std::move(faces));
            }
    b.set_truncated_at(B.truncated_at());
    auto E = b.build_shared();
    auto projection = SimplicialMap::from_lookup(
        E, tau.base(), [&](CellRef c) { return SimplexWord(CellRef{c.dim, c.index / order}); });
    GroupAction action{G, {}};
    action.images.resize(order);
    for (int h = 0; h < order; ++h) {
        action.images[h].resize(E->dimension() + 1);
        for (int n = 0; n <= E->dimension(); ++n)
            for (int i = 0; i < E->cell_count(n); ++i)
                action.images[h][n].push_back((i / order) * order + G.multiply(i % order, h));
    }
    return {E, tau.base(), std::move(projection), std::move(action)};
}

/// The universal twisting on the nerve: the edge (g) is labelled g.
inline TwistingFunction<FiniteGroup> universal_twisting(const FiniteGroup& G, int max_dim)
{
    auto W = std::make_shared<const Presentation>(wbar_truncated(G, max_dim));
    std::vector<int> labels;
    if (W->dimension() >= 1)
        for (int e = 0; e < W->cell_count(1); ++e)
            labels.push_back(e + 1);
    return TwistingFunction<FiniteGroup>(W, G, std::move(labels));
}

/// W Γ → W̄Γ through dimension max_dim.
inline PrincipalBundle w_truncated(const FiniteGroup& G, int max_dim)
{
    return tcp_build(universal_twisting(G, max_dim));
}

inline PrincipalBundle w_truncated(const PresentedGroup& G, int max_dim)
{
    wbar_truncated(G, max_dim);
    throw Unsupported("W construction of an infinite group");
}

struct CheckReport {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(std::string message)
    {
        ok = false;
        diagnostics.push_back(std::move(message));
    }
};

/// Free action, equivariant projection, and total/Γ ≅ base via the
/// projection.
inline CheckReport principal_check(const PrincipalBundle& B)
{
    CheckReport report;
    try {
        check_action(*B.total, B.action);
        B.projection.check();
    } catch (const ValidationError& e) {
        report.fail(e.what());
        return report;
    }
    if (auto fixed = find_fixed_simplex(*B.total, B.action)) {
        report.fail("freeness violation: '" + B.total->cell_name(fixed->first) + "' is fixed by '" +
                    B.group().name(fixed->second) + "'");
        return report;
    }
    const auto& E = *B.total;
    for (int h = 0; h < B.group().order(); ++h)
        for (int n = 0; n <= E.dimension(); ++n)
            for (int i = 0; i < E.cell_count(n); ++i)
                if (B.projection.image({n, i}) != B.projection.image({n, B.action.act(CellRef{n, i}, h)})) {
                    report.fail("projection is not invariant under '" + B.group().name(h) + "' on '" +
                                E.cell_name({n, i}) + "'");
                    return report;
                }
    const auto q = quotient_by_free_action(B.total, B.action);
    // the map total/Γ → base induced by the projection
    std::map<CellRef, CellRef> representative;
    for (int n = 0; n <= E.dimension(); ++n)
        for (int i = 0; i < E.cell_count(n); ++i)
            representative.emplace(q.projection.image({n, i}).base(), CellRef{n, i});
    try {
        const auto induced = SimplicialMap::from_lookup(q.quotient, B.base, [&](CellRef c) {
            return B.projection.image(representative.at(c));
        });
        if (!is_isomorphism(induced))
            report.fail("orbit complex is not isomorphic to the base");
    } catch (const ValidationError& e) {
        report.fail(std::string("induced orbit map is invalid: ") + e.what());
    }
    return report;
}

/// f : X → Y is an m-sheeted covering: every nondegenerate simplex of Y
/// has exactly m nondegenerate preimages, no simplex is sent to a
/// degenerate one, and over each simplex the sheets restrict bijectively
/// onto the sheets over each face and each vertex.
inline CheckReport covering_check(const SimplicialMap& f, int sheets)
{
    CheckReport report;
    const auto& X = *f.source();
    const auto& Y = *f.target();
    std::map<CellRef, std::vector<CellRef>> over;
    for (int n = 0; n <= X.dimension(); ++n)
        for (int i = 0; i < X.cell_count(n); ++i) {
            const auto& img = f.image({n, i});
            if (img.is_degenerate()) {
                report.fail("'" + X.cell_name({n, i}) + "' is sent to the degenerate simplex " + Y.word_name(img));
                return report;
            }
            over[img.base()].push_back({n, i});
        }
    for (int n = 0; n <= Y.dimension(); ++n)
        for (int j = 0; j < Y.cell_count(n); ++j) {
            const CellRef y{n, j};
            const auto& sheets_over = over[y];
            if (static_cast<int>(sheets_over.size()) != sheets) {
                report.fail("'" + Y.cell_name(y) + "' has " + std::to_string(sheets_over.size()) +
                            " preimages, expected " + std::to_string(sheets));
                continue;
            }
            if (n == 0)
                continue;
            for (int i = 0; i <= n; ++i) {
                std::set<SimplexWord> faces;
                for (const auto& x : sheets_over)
                    faces.insert(X.face(SimplexWord(x), i));
                if (static_cast<int>(faces.size()) != sheets)
                    report.fail("sheets over '" + Y.cell_name(y) + "' collide on face " + std::to_string(i));
            }
            for (int v = 0; v <= n; ++v) {
                std::set<CellRef> verts;
                for (const auto& x : sheets_over)
                    verts.insert(X.vertex(SimplexWord(x), v));
                if (static_cast<int>(verts.size()) != sheets)
                    report.fail("sheets over '" + Y.cell_name(y) + "' collide on vertex " + std::to_string(v));
            }
        }
    return report;
}

struct UniversalReport {
    /// Reduced integral homology of the total complex in degrees 0..max_dim-1.
    std::vector<HomologyGroup> reduced_homology;
    KanReport kan;
    bool evidence = false;
    int max_dim = 0;
};

/// Evidence that a bundle is universal up to max_dim: the total complex
/// has vanishing reduced homology below max_dim and no unfilled horns up
/// to max_dim.
inline UniversalReport universal_check(const PrincipalBundle& B, int max_dim, const Budget& budget = {})
{
    UniversalReport report;
    report.max_dim = max_dim;
    const auto C = chain_complex(*B.total, max_dim, true);
    bool acyclic = true;
    for (int n = 0; n < max_dim; ++n) {
        report.reduced_homology.push_back(homology_in_degree(C, n));
        acyclic = acyclic && report.reduced_homology.back().group().is_trivial();
    }
    report.kan = kan_report(*B.total, max_dim, budget);
    report.evidence = acyclic && report.kan.empty();
    return report;
}

} // namespace kanforge
