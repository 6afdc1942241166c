#include <gtest/gtest.h>

#include <random>

#include "kanforge/presentation.hpp"
#include "kanforge/product.hpp"
#include "kanforge/quotient.hpp"
#include "kanforge/simplicial_map.hpp"
#include "kanforge/standard.hpp"

using namespace kanforge;

namespace {

// Oracle: an n-simplex pair is degenerate in K × L iff both components are
// s_j of their own j-th face for a common j.
std::size_t brute_force_product_count(const Presentation& K, const Presentation& L, int n)
{
    std::size_t count = 0;
    for (const auto& u : all_simplices(K, n))
        for (const auto& w : all_simplices(L, n)) {
            bool degenerate = false;
            for (int j = 0; j < n && !degenerate; ++j)
                degenerate = degeneracy(K.face(u, j), j) == u && degeneracy(L.face(w, j), j) == w;
            if (!degenerate)
                ++count;
        }
    return count;
}

long long euler_characteristic(const Presentation& K)
{
    long long chi = 0;
    for (int d = 0; d <= K.dimension(); ++d)
        chi += (d % 2 ? -1 : 1) * K.cell_count(d);
    return chi;
}

} // namespace

TEST(SimplexWord, RejectsNonCanonicalDegeneracies)
{
    EXPECT_THROW(SimplexWord(CellRef{0, 0}, {0, 1}), MalformedWord);
    EXPECT_THROW(SimplexWord(CellRef{0, 0}, {2}), MalformedWord);
    EXPECT_NO_THROW(SimplexWord(CellRef{0, 0}, {1, 0}));
}

TEST(SimplexWord, DegeneracyReordersIntoNormalForm)
{
    const SimplexWord x(CellRef{1, 0});
    // s_0 s_0 x = s_1 s_0 x
    EXPECT_EQ(degeneracy(degeneracy(x, 0), 0).degeneracies(), (std::vector<int>{1, 0}));
    // s_2 s_0 x stays as written
    EXPECT_EQ(degeneracy(degeneracy(x, 0), 2).degeneracies(), (std::vector<int>{2, 0}));
}

TEST(SimplexWord, SimplicialIdentitiesHoldOnDegenerateWords)
{
    const auto D = standard_simplex(2);
    const SimplexWord top(CellRef{2, 0});
    for (int j = 0; j <= 2; ++j) {
        const auto sj = degeneracy(top, j);
        for (int i = 0; i <= 3; ++i) {
            const auto got = D.face(sj, i);
            if (i == j || i == j + 1)
                EXPECT_EQ(got, top);
            else if (i < j)
                EXPECT_EQ(got, degeneracy(D.face(top, i), j - 1));
            else
                EXPECT_EQ(got, degeneracy(D.face(top, i - 1), j));
        }
    }
}

TEST(Presentation, StandardModelsValidate)
{
    for (int p = 0; p <= 4; ++p)
        EXPECT_TRUE(validate(standard_simplex(p)).ok()) << p;
    for (int p = 1; p <= 4; ++p) {
        EXPECT_TRUE(validate(simplex_boundary(p)).ok()) << p;
        for (int k = 0; k <= p; ++k)
            EXPECT_TRUE(validate(horn(p, k)).ok()) << p << "," << k;
    }
    EXPECT_TRUE(validate(circle()).ok());
    EXPECT_TRUE(validate(cycle(5)).ok());
    EXPECT_TRUE(validate(klein_bottle()).ok());
}

TEST(Presentation, StandardSimplexCounts)
{
    const auto D = standard_simplex(3);
    EXPECT_EQ(D.counts(), (std::vector<int>{4, 6, 4, 1}));
    EXPECT_EQ(simplex_boundary(3).counts(), (std::vector<int>{4, 6, 4}));
    EXPECT_EQ(horn(3, 1).counts(), (std::vector<int>{4, 6, 3}));
    EXPECT_EQ(standard_simplex(2).cell_name(CellRef{1, 0}), "01");
}

TEST(Presentation, DetectsIdentityViolation)
{
    PresentationBuilder b("bad");
    b.add_vertex("a");
    b.add_vertex("b");
    b.add_vertex("c");
    b.add_simplex_by_names("ab", {"b", "a"});
    b.add_simplex_by_names("bc", {"c", "b"});
    b.add_simplex_by_names("ac", {"c", "a"});
    // wrong order of faces for the triangle
    b.add_simplex_by_names("abc", {"ab", "ac", "bc"});
    EXPECT_THROW(b.build(), ValidationError);
    const auto report = validate(b.build_unchecked());
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.issues.front().kind, ValidationIssue::Kind::identity_violation);
}

TEST(Presentation, DetectsDanglingFace)
{
    PresentationBuilder b("dangling");
    b.add_vertex("a");
    b.add_simplex("e", {SimplexWord(CellRef{0, 0}), SimplexWord(CellRef{0, 3})});
    const auto report = validate(b.build_unchecked());
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.issues.front().kind, ValidationIssue::Kind::dangling_face);
}

TEST(Presentation, SimplexCountsIncludeDegenerates)
{
    const auto S = circle();
    EXPECT_EQ(simplex_count(S, 0), 1u);
    EXPECT_EQ(simplex_count(S, 1), 2u);
    EXPECT_EQ(simplex_count(S, 2), 3u);
    EXPECT_EQ(simplex_count(S, 3), 4u);
}

TEST(Product, IntervalSquaredCounts)
{
    const auto I = standard_simplex(1);
    const auto P = product(I, I);
    EXPECT_EQ(P.counts(), (std::vector<int>{4, 5, 2}));
    EXPECT_TRUE(validate(P).ok());
    EXPECT_EQ(euler_characteristic(P), 1);
}

TEST(Product, MatchesBruteForceEnumeration)
{
    const std::vector<Presentation> spaces = {standard_simplex(1), standard_simplex(2), circle(),
                                              simplex_boundary(2), horn(2, 0), klein_bottle()};
    for (std::size_t a = 0; a < spaces.size(); ++a)
        for (std::size_t b = 0; b < spaces.size(); ++b) {
            const auto& K = spaces[a];
            const auto& L = spaces[b];
            if (K.dimension() + L.dimension() > 4)
                continue;
            const auto P = product(K, L);
            ASSERT_TRUE(validate(P).ok()) << K.name() << " x " << L.name();
            for (int n = 0; n <= K.dimension() + L.dimension(); ++n)
                EXPECT_EQ(static_cast<std::size_t>(n <= P.dimension() ? P.cell_count(n) : 0),
                          brute_force_product_count(K, L, n))
                    << K.name() << " x " << L.name() << " n=" << n;
            EXPECT_EQ(euler_characteristic(P), euler_characteristic(K) * euler_characteristic(L));
        }
}

TEST(Product, PrismCountsMatchBinomial)
{
    // Δ[p] × Δ[q] has C(p+q, p) top simplices.
    const auto P = product(standard_simplex(2), standard_simplex(2));
    EXPECT_EQ(P.cell_count(4), 6);
    EXPECT_EQ(product(standard_simplex(1), standard_simplex(3)).cell_count(4), 4);
}

TEST(Product, ProjectionsAreSimplicial)
{
    auto K = std::make_shared<const Presentation>(circle());
    auto L = std::make_shared<const Presentation>(standard_simplex(2));
    const auto r = product_with_projections(K, L);
    EXPECT_NO_THROW(r.first_projection.check());
    EXPECT_NO_THROW(r.second_projection.check());
}

TEST(Quotient, CollapsingBoundaryOfIntervalGivesCircleShape)
{
    auto I = std::make_shared<const Presentation>(standard_simplex(1));
    const CellSelection ends = {CellRef{0, 0}, CellRef{0, 1}};
    const auto q = quotient_by_subcomplex(I, ends);
    EXPECT_EQ(q.quotient->counts(), (std::vector<int>{1, 1}));
    EXPECT_TRUE(validate(*q.quotient).ok());
    EXPECT_NO_THROW(q.projection.check());
}

TEST(Quotient, RejectsNonSubcomplex)
{
    auto I = std::make_shared<const Presentation>(standard_simplex(1));
    EXPECT_THROW(quotient_by_subcomplex(I, CellSelection{CellRef{1, 0}}), ValidationError);
}

TEST(Quotient, FreeAntipodalActionOnHexagon)
{
    auto C = std::make_shared<const Presentation>(cycle(6));
    GroupAction act{FiniteGroup::cyclic(2), {}};
    std::vector<int> id(6), shift(6);
    for (int i = 0; i < 6; ++i) {
        id[i] = i;
        shift[i] = (i + 3) % 6;
    }
    act.images = {{id, id}, {shift, shift}};
    const auto q = quotient_by_free_action(C, act);
    EXPECT_EQ(q.quotient->counts(), (std::vector<int>{3, 3}));
    EXPECT_NO_THROW(q.projection.check());
}

TEST(Quotient, ReflectionIsNotFree)
{
    auto I = std::make_shared<const Presentation>(standard_simplex(2));
    GroupAction act{FiniteGroup::cyclic(2), {}};
    act.images = {{{0, 1, 2}, {0, 1, 2}, {0}}, {{0, 1, 2}, {0, 1, 2}, {0}}};
    EXPECT_THROW(quotient_by_free_action(I, act), FreenessViolation);
}

TEST(SimplicialMap, CompositionAndIdentity)
{
    auto K = std::make_shared<const Presentation>(klein_bottle());
    const auto id = SimplicialMap::identity(K);
    EXPECT_EQ(id.after(id), id);
    EXPECT_TRUE(is_isomorphism(id));
}
