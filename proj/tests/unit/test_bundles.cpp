#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kanforge/chain_maps.hpp"
#include "kanforge/classifying.hpp"
#include "kanforge/fundamental_group.hpp"
#include "kanforge/principal.hpp"
#include "kanforge/product.hpp"
#include "kanforge/standard.hpp"
#include "support/isomorphism.hpp"
#include "support/random_bundles.hpp"
#include "support/random_complexes.hpp"

using namespace kanforge;

namespace {

PresentationPtr shared(Presentation P) { return std::make_shared<const Presentation>(std::move(P)); }

const FiniteGroup Z2 = FiniteGroup::cyclic(2);

TwistingFunction<FiniteGroup> circle_double_cover()
{
    return TwistingFunction<FiniteGroup>(shared(circle()), Z2, {1});
}

std::vector<std::string> group_strings(const std::vector<HomologyGroup>& hs)
{
    std::vector<std::string> out;
    for (const auto& h : hs)
        out.push_back(h.group().to_string());
    return out;
}

// Oracle for the number of components of a twisted product over a
// connected base: |Γ| / |H| where H is generated by the holonomies of the
// non-tree edges relative to a spanning-tree potential.
int expected_components(const TwistingFunction<FiniteGroup>& tau)
{
    const auto& K = *tau.base();
    const auto& G = tau.group();
    const int nv = K.cell_count(0);
    std::vector<int> psi(nv, -1);
    psi[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < (K.dimension() >= 1 ? K.cell_count(1) : 0); ++e) {
            const int s = K.base_face({1, e}, 1).base().index; // d_1
            const int t = K.base_face({1, e}, 0).base().index; // d_0
            const int l = tau.labels()[e];
            // ψ(d_1 e) = τ(e) ψ(d_0 e)
            if (psi[t] >= 0 && psi[s] < 0) {
                psi[s] = G.multiply(l, psi[t]);
                changed = true;
            } else if (psi[s] >= 0 && psi[t] < 0) {
                psi[t] = G.multiply(G.inverse(l), psi[s]);
                changed = true;
            }
        }
    }
    std::vector<int> hol;
    for (int e = 0; e < (K.dimension() >= 1 ? K.cell_count(1) : 0); ++e) {
        const int s = K.base_face({1, e}, 1).base().index;
        const int t = K.base_face({1, e}, 0).base().index;
        hol.push_back(G.multiply(G.inverse(psi[s]), G.multiply(tau.labels()[e], psi[t])));
    }
    return G.order() / static_cast<int>(G.generated_subgroup(hol).size());
}

} // namespace

TEST(Wbar, CellCounts)
{
    const auto W2 = wbar_truncated(Z2, 5);
    EXPECT_EQ(W2.counts(), (std::vector<int>{1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(W2.cell_name(CellRef{3, 0}), "(t,t,t)");
    const auto W3 = wbar_truncated(FiniteGroup::cyclic(3), 4);
    EXPECT_EQ(W3.counts(), (std::vector<int>{1, 2, 4, 8, 16}));
    EXPECT_EQ(wbar_truncated(FiniteGroup(), 3).counts(), (std::vector<int>{1}));
    EXPECT_TRUE(validate(wbar_truncated(FiniteGroup::symmetric3(), 3)).ok());
    EXPECT_THROW(wbar_truncated(PresentedGroup::free_abelian(2), 2), Unsupported);
}

TEST(Wbar, Z2BoundariesAlternate)
{
    // Oracle: the single n-cell has outer faces equal to the (n-1)-cell and
    // degenerate inner faces, so ∂_n = 1 + (-1)^n.
    const auto C = chain_complex(wbar_truncated(Z2, 4));
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(C.boundary(n), (IntMatrix{{n % 2 == 0 ? 2 : 0}})) << n;
    const auto H = homology(C);
    EXPECT_EQ(group_strings(H), (std::vector<std::string>{"Z", "Z/2", "0", "Z/2", "0"}));
    EXPECT_TRUE(H[3].reliable);
    EXPECT_FALSE(H[4].reliable);
    const auto H2 = cohomology(C, Coefficients::mod(2));
    for (int k = 0; k <= 3; ++k)
        EXPECT_EQ(H2[k].group().to_string(), "Z/2");
}

TEST(Wbar, KanBelowTruncation)
{
    for (const auto& G : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)})
        EXPECT_TRUE(kan_report(wbar_truncated(G, 3), 2).empty());
}

TEST(Tcp, TrivialTwistingOverCircle)
{
    const auto B = tcp_build(TwistingFunction<FiniteGroup>::trivial(shared(circle()), Z2));
    EXPECT_EQ(pi0(*B.total).count, 2);
    EXPECT_TRUE(fixtures::brute_force_isomorphic(*B.total, disjoint_union(circle(), circle())));
    EXPECT_TRUE(principal_check(B).ok);
}

TEST(Tcp, DoubleCoverOfCircle)
{
    const auto B = tcp_build(circle_double_cover());
    EXPECT_EQ(B.total->counts(), (std::vector<int>{2, 2}));
    EXPECT_EQ(pi0(*B.total).count, 1);
    EXPECT_TRUE(fixtures::brute_force_isomorphic(*B.total, cycle(2)));
    EXPECT_TRUE(principal_check(B).ok);
    EXPECT_TRUE(covering_check(B.projection, 2).ok);
}

TEST(Tcp, TorusDoubleCover)
{
    auto I = shared(circle());
    const auto P = product_with_projections(I, I);
    const auto& T = *P.product;
    std::vector<int> labels;
    for (int e = 0; e < T.cell_count(1); ++e) {
        const auto& [u, w] = P.components[1][e];
        labels.push_back(!u.is_degenerate() ? 1 : 0); // a ↦ t, b ↦ e, diagonal ↦ t
    }
    const TwistingFunction<FiniteGroup> tau(P.product, Z2, labels);
    const auto B = tcp_build(tau);
    EXPECT_EQ(B.total->counts(), (std::vector<int>{2, 6, 4}));
    EXPECT_EQ(group_strings(homology(chain_complex(*B.total))), (std::vector<std::string>{"Z", "Z^2", "Z"}));
    EXPECT_TRUE(principal_check(B).ok);
    EXPECT_TRUE(covering_check(B.projection, 2).ok);
}

TEST(Tcp, CocycleViolationNamed)
{
    auto T = shared(standard_simplex(2));
    try {
        TwistingFunction<FiniteGroup>(T, Z2, {1, 0, 0});
        FAIL() << "expected a cocycle violation";
    } catch (const CocycleViolation& e) {
        EXPECT_NE(std::string(e.what()).find("012"), std::string::npos);
    }
}

TEST(Tcp, RandomTwistingsArePrincipalCoverings)
{
    std::mt19937 rng(31);
    const auto groups = fixtures::small_groups();
    for (int t = 0; t < 25; ++t) {
        auto K = shared(fixtures::random_presentation(rng));
        if (K->dimension() > 3)
            continue;
        const auto& G = groups[rng() % groups.size()];
        const auto tau = fixtures::random_twisting(rng, K, G);
        const auto B = tcp_build(tau);
        ASSERT_TRUE(validate(*B.total).ok());
        const auto pc = principal_check(B);
        EXPECT_TRUE(pc.ok) << (pc.diagnostics.empty() ? "" : pc.diagnostics.front());
        EXPECT_TRUE(covering_check(B.projection, G.order()).ok);
        if (pi0(*K).count == 1)
            EXPECT_EQ(pi0(*B.total).count, expected_components(tau)) << K->name() << " " << G.label();
        EXPECT_TRUE(classifying_pullback_check(tau).ok);
    }
}

TEST(Tcp, NonabelianTwistingStillPrincipal)
{
    // S3 labels around a hexagon: the right action must commute with the
    // twisted last face.
    const auto S3 = FiniteGroup::symmetric3();
    auto C = shared(cycle(3));
    const TwistingFunction<FiniteGroup> tau(C, S3, {1, 3, 4});
    const auto B = tcp_build(tau);
    EXPECT_TRUE(principal_check(B).ok);
    EXPECT_TRUE(classifying_pullback_check(tau).ok);
}

TEST(Principal, NegativeAndFoldExamples)
{
    auto K = shared(circle());
    // total = base, trivial action: not free
    GroupAction trivial{Z2, {{{0}, {0}}, {{0}, {0}}}};
    const PrincipalBundle bad{K, K, SimplicialMap::identity(K), trivial};
    const auto r = principal_check(bad);
    EXPECT_FALSE(r.ok);
    ASSERT_FALSE(r.diagnostics.empty());
    EXPECT_NE(r.diagnostics.front().find("freeness"), std::string::npos);

    auto two = shared(disjoint_union(circle(), circle()));
    const auto fold = SimplicialMap::from_lookup(two, K, [](CellRef c) { return SimplexWord(CellRef{c.dim, 0}); });
    GroupAction swap{Z2, {{{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}}};
    EXPECT_TRUE(principal_check(PrincipalBundle{two, K, fold, swap}).ok);
    EXPECT_TRUE(covering_check(fold, 2).ok);
}

TEST(Covering, WrapAndCollapse)
{
    EXPECT_TRUE(covering_check(wrap_map(2), 2).ok);
    EXPECT_FALSE(covering_check(wrap_map(2), 3).ok);
    auto I = shared(standard_simplex(1));
    auto P = shared(standard_simplex(0));
    const auto collapse = SimplicialMap::from_lookup(I, P, [](CellRef c) {
        return c.dim == 0 ? SimplexWord(CellRef{0, 0}) : SimplexWord(CellRef{0, 0}, {0});
    });
    EXPECT_FALSE(covering_check(collapse, 2).ok);
}

TEST(Universal, WConstructionEvidence)
{
    for (const auto& G : {Z2, FiniteGroup::cyclic(3)}) {
        const auto W = w_truncated(G, 4);
        EXPECT_TRUE(principal_check(W).ok);
        const auto r = universal_check(W, 4);
        EXPECT_TRUE(r.evidence) << G.label();
        for (const auto& h : r.reduced_homology)
            EXPECT_TRUE(h.group().is_trivial());
    }
    const auto W3 = w_truncated(FiniteGroup::cyclic(3), 3);
    const auto H = homology(chain_complex(*W3.total, 3));
    EXPECT_TRUE(H[1].group().is_trivial());
    EXPECT_TRUE(H[2].group().is_trivial());
    const auto trivial = w_truncated(FiniteGroup(), 3);
    EXPECT_EQ(trivial.total->counts(), (std::vector<int>{1}));
}

TEST(Universal, NonUniversalBundlesFail)
{
    EXPECT_FALSE(universal_check(tcp_build(TwistingFunction<FiniteGroup>::trivial(shared(circle()), Z2)), 2).evidence);
    EXPECT_FALSE(universal_check(tcp_build(circle_double_cover()), 2).evidence);
}

TEST(Classifying, ExamplesAndNaturality)
{
    const auto triv = classifying_map(TwistingFunction<FiniteGroup>::trivial(shared(circle()), Z2), 2);
    EXPECT_EQ(triv.image(CellRef{1, 0}), SimplexWord(CellRef{0, 0}, {0}));
    const auto phi = classifying_map(circle_double_cover(), 2);
    EXPECT_EQ(phi.target()->cell_name(phi.image(CellRef{1, 0}).base()), "(t)");

    std::mt19937 rng(32);
    const auto groups = fixtures::small_groups();
    int checked = 0;
    for (int t = 0; t < 15; ++t) {
        const auto A = fixtures::random_ordered_complex(rng, 4, 2);
        const auto Bc = fixtures::random_ordered_complex(rng, 4, 2);
        auto f = fixtures::random_ordered_map(rng, A, Bc);
        if (!f)
            continue;
        const auto& G = groups[rng() % groups.size()];
        const auto tau = fixtures::random_twisting(rng, Bc.presentation, G);
        const auto lhs = classifying_map(pullback_twisting(*f, tau), 2);
        const auto rhs = classifying_map(tau, 2).after(*f);
        EXPECT_EQ(lhs, rhs);
        ++checked;
    }
    EXPECT_GT(checked, 5);
}

TEST(Pullback, AlongWrapAndConstant)
{
    const auto tau = circle_double_cover();
    const auto pulled = pullback_twisting(wrap_map(2), tau);
    EXPECT_EQ(pulled.labels(), (std::vector<int>{1, 1}));
    const auto B = tcp_build(pulled);
    EXPECT_EQ(B.total->counts(), (std::vector<int>{4, 4}));
    EXPECT_TRUE(principal_check(B).ok);
    // holonomy t·t is trivial, so the pulled-back cover is two copies of C_2
    EXPECT_EQ(pi0(*B.total).count, 2);

    auto P = shared(standard_simplex(0));
    auto S = shared(circle());
    auto constant = SimplicialMap::from_lookup(S, S, [](CellRef c) {
        return c.dim == 0 ? SimplexWord(CellRef{0, 0}) : SimplexWord(CellRef{0, 0}, {0});
    });
    EXPECT_EQ(pullback_twisting(constant, tau).labels(), (std::vector<int>{0}));
    auto id = SimplicialMap::identity(S);
    EXPECT_EQ(pullback_twisting(id, tau).labels(), tau.labels());
}
