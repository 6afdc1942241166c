#include <gtest/gtest.h>

#include <random>

#include "kanforge/charclass.hpp"
#include "kanforge/product.hpp"
#include "kanforge/standard.hpp"
#include "support/random_bundles.hpp"
#include "support/random_complexes.hpp"

using namespace kanforge;

namespace {

PresentationPtr shared(Presentation P) { return std::make_shared<const Presentation>(std::move(P)); }

const FiniteGroup Z2 = FiniteGroup::cyclic(2);
const Coefficients F2 = Coefficients::mod(2);

GroupCochain z2_identity() { return GroupCochain::from_rule(Z2, 1, F2, [](const std::vector<int>& t) { return Integer(t[0]); }); }

GroupCochain z2_square()
{
    return GroupCochain::from_rule(Z2, 2, F2, [](const std::vector<int>& t) { return Integer(t[0] * t[1]); });
}

TwistingFunction<FiniteGroup> klein_orientation_cover()
{
    return TwistingFunction<FiniteGroup>(shared(klein_bottle()), Z2, {1, 1, 0}); // x ↦ t, y ↦ t, c ↦ e
}

// Oracle for the pulled-back representative: the classifying map sends a
// k-simplex to the tuple of labels of its consecutive edges.
IntVector direct_representative(const TwistingFunction<FiniteGroup>& tau, const GroupCochain& c)
{
    const auto& B = *tau.base();
    const int k = c.degree();
    IntVector out(k <= B.dimension() ? B.cell_count(k) : 0);
    for (int i = 0; i < static_cast<int>(out.size()); ++i) {
        std::vector<int> args;
        for (int j = 0; j < k; ++j)
            args.push_back(tau.label(SimplexWord(CellRef{k, i}), j, j + 1));
        out[i] = c.coeff().reduce(c(args));
    }
    return out;
}

} // namespace

TEST(GroupCochain, CocycleExamples)
{
    EXPECT_TRUE(group_cocycle_check(z2_identity()));
    EXPECT_TRUE(group_cocycle_check(z2_square()));
    const auto Z3 = FiniteGroup::cyclic(3);
    const auto bad = GroupCochain::from_rule(Z3, 1, F2, [](const std::vector<int>& t) { return Integer(t[0] != 0 ? 1 : 0); });
    EXPECT_TRUE(bad.is_normalized());
    EXPECT_FALSE(group_cocycle_check(bad));
    // δδ = 0 on random cochains
    std::mt19937 rng(41);
    for (const auto& G : fixtures::small_groups())
        for (int k = 0; k <= 2; ++k) {
            const auto c = GroupCochain::from_rule(G, k, Coefficients::integers(), [&](const std::vector<int>& t) {
                for (int x : t)
                    if (x == 0)
                        return Integer(0);
                return Integer(static_cast<int>(rng() % 7) - 3);
            });
            const auto dd = c.coboundary().coboundary();
            for (const auto& v : dd.values())
                EXPECT_EQ(v, 0);
        }
}

TEST(GroupCochain, WbarClasses)
{
    const auto a = to_wbar_cochain(z2_identity(), 3);
    EXPECT_EQ(a.cohomology.group().to_string(), "Z/2");
    EXPECT_FALSE(a.cls.is_zero());
    EXPECT_TRUE(to_wbar_cochain(GroupCochain::zero(Z2, 1, F2), 3).cls.is_zero());
    const auto b = to_wbar_cochain(z2_square(), 3);
    EXPECT_FALSE(b.cls.is_zero());
    EXPECT_THROW(to_wbar_cochain(z2_square(), 2), RangeError);
    // a homomorphism Z/4 → Z/2 is a generator, its double is zero
    const auto Z4 = FiniteGroup::cyclic(4);
    const auto hom = GroupCochain::from_rule(Z4, 1, F2, [](const std::vector<int>& t) { return Integer(t[0] % 2); });
    EXPECT_FALSE(to_wbar_cochain(hom, 2).cls.is_zero());
    EXPECT_TRUE(to_wbar_cochain(hom + hom, 2).cls.is_zero());
}

TEST(CharacteristicClass, CircleAndKlein)
{
    auto S = shared(circle());
    EXPECT_TRUE(characteristic_class(TwistingFunction<FiniteGroup>::trivial(S, Z2), z2_identity()).is_zero());
    EXPECT_FALSE(characteristic_class(TwistingFunction<FiniteGroup>(S, Z2, {1}), z2_identity()).is_zero());

    const auto tau = klein_orientation_cover();
    const auto w1 = characteristic_class(tau, z2_identity());
    EXPECT_FALSE(w1.is_zero());
    EXPECT_EQ(w1.representative, direct_representative(tau, z2_identity()));
    // the orientation cover of the Klein bottle is a torus
    const auto B = tcp_build(tau);
    std::vector<std::string> h;
    for (const auto& g : homology(chain_complex(*B.total)))
        h.push_back(g.group().to_string());
    EXPECT_EQ(h, (std::vector<std::string>{"Z", "Z^2", "Z"}));
    // degree 2 on a degree-2 base: w1² of the orientation cover
    const auto sq = characteristic_class(tau, z2_square());
    EXPECT_EQ(sq.representative, direct_representative(tau, z2_square()));
}

TEST(CharacteristicClass, RejectsNonCocycles)
{
    const auto Z3 = FiniteGroup::cyclic(3);
    const auto bad = GroupCochain::from_rule(Z3, 1, F2, [](const std::vector<int>& t) { return Integer(t[0] != 0 ? 1 : 0); });
    EXPECT_THROW(characteristic_class(TwistingFunction<FiniteGroup>::trivial(shared(circle()), Z3), bad), CocycleViolation);
}

TEST(CharacteristicClass, RandomAgreesWithDirectPullback)
{
    std::mt19937 rng(42);
    const auto groups = fixtures::small_groups();
    for (int t = 0; t < 30; ++t) {
        auto K = shared(fixtures::random_presentation(rng));
        if (K->dimension() > 3)
            continue;
        const auto& G = groups[rng() % groups.size()];
        const int k = 1 + static_cast<int>(rng() % 2);
        const auto coeff = rng() % 2 ? Coefficients::integers() : Coefficients::mod(static_cast<int>(2 + rng() % 3));
        const auto tau = fixtures::random_twisting(rng, K, G);
        const auto c = fixtures::random_cocycle(rng, G, k, coeff);
        ASSERT_TRUE(group_cocycle_check(c));
        const auto cls = characteristic_class(tau, c);
        EXPECT_EQ(cls.representative, direct_representative(tau, c));

        // adding a coboundary leaves the class unchanged
        const auto lower = GroupCochain::from_rule(G, k - 1, coeff, [&](const std::vector<int>& a) {
            for (int x : a)
                if (x == 0)
                    return Integer(0);
            return Integer(static_cast<int>(rng() % 5));
        });
        EXPECT_EQ(characteristic_class(tau, c + lower.coboundary()).coordinates, cls.coordinates);
    }
}

TEST(CharacteristicClass, Naturality)
{
    std::mt19937 rng(43);
    const auto groups = fixtures::small_groups();
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
        const auto A = fixtures::random_ordered_complex(rng, 5, 2);
        const auto Bc = fixtures::random_ordered_complex(rng, 5, 3);
        const auto f = fixtures::random_ordered_map(rng, A, Bc);
        if (!f)
            continue;
        const auto& G = groups[rng() % groups.size()];
        const int k = 1 + static_cast<int>(rng() % 2);
        const auto tau = fixtures::random_twisting(rng, Bc.presentation, G);
        const auto c = fixtures::random_cocycle(rng, G, k, Coefficients::mod(2 + static_cast<int>(rng() % 3)));
        EXPECT_TRUE(naturality_check(*f, tau, c));
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(CharacteristicClass, DegreeOneMatchesHolonomy)
{
    // A homomorphism Γ → A evaluated on the holonomy of each loop: on the
    // circle the single edge is the loop, so the coordinate is χ(τ(a)).
    auto S = shared(circle());
    const auto Z6 = FiniteGroup::cyclic(6);
    const auto chi = GroupCochain::from_rule(Z6, 1, Coefficients::mod(3), [](const std::vector<int>& t) { return Integer(t[0] % 3); });
    for (int g = 0; g < 6; ++g) {
        const auto cls = characteristic_class(TwistingFunction<FiniteGroup>(S, Z6, {g}), chi);
        ASSERT_EQ(cls.coordinates.size(), 1u);
        const Integer expected = g % 3;
        EXPECT_TRUE(cls.coordinates[0] == expected || cls.coordinates[0] == (3 - expected) % 3) << g;
        EXPECT_EQ(cls.is_zero(), g % 3 == 0);
    }
}

TEST(PresentedGroups, FreeAbelianOnTorus)
{
    const auto Z2free = PresentedGroup::free_abelian(2);
    auto I = shared(circle());
    const auto P = product_with_projections(I, I);
    std::vector<PresentedGroup::element_type> labels;
    for (int e = 0; e < P.product->cell_count(1); ++e) {
        const auto& [u, w] = P.components[1][e];
        labels.push_back({u.is_degenerate() ? 0 : 1, w.is_degenerate() ? 0 : 1});
    }
    const TwistingFunction<PresentedGroup> tau(P.product, Z2free, labels);
    const PresentedHomomorphism first(Z2free, {1, 0}, Coefficients::integers());
    const auto cls = characteristic_class(tau, first);
    EXPECT_FALSE(cls.is_zero());
    const PresentedHomomorphism zero(Z2free, {0, 0}, Coefficients::integers());
    EXPECT_TRUE(characteristic_class(tau, zero).is_zero());
    EXPECT_THROW(wbar_truncated(Z2free, 2), Unsupported);
}

TEST(PresentedGroups, Heisenberg)
{
    const auto H = PresentedGroup::heisenberg();
    EXPECT_TRUE(H.model_satisfies_relators());
    const auto z = H.evaluate("x y x^-1 y^-1");
    EXPECT_TRUE(H.equal(z, H.generator(2)));
    EXPECT_NO_THROW(PresentedHomomorphism(H, {1, 0, 0}, Coefficients::integers()));
    EXPECT_THROW(PresentedHomomorphism(H, {0, 0, 1}, Coefficients::integers()), CocycleViolation);
    // the mod-2 reduction does not rescue a nonzero value on a commutator
    EXPECT_THROW(PresentedHomomorphism(H, {0, 0, 1}, Coefficients::mod(2)), CocycleViolation);

    auto S = shared(circle());
    const TwistingFunction<PresentedGroup> tau(S, H, {H.generator(0)});
    EXPECT_FALSE(characteristic_class(tau, PresentedHomomorphism(H, {1, 0, 0}, Coefficients::integers())).is_zero());
    EXPECT_TRUE(characteristic_class(tau, PresentedHomomorphism(H, {0, 1, 0}, Coefficients::integers())).is_zero());
}
