#pragma once

// Randomized small simplicial sets and maps for property tests.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kanforge/presentation.hpp"
#include "kanforge/product.hpp"
#include "kanforge/quotient.hpp"
#include "kanforge/simplicial_map.hpp"
#include "kanforge/standard.hpp"

namespace kanforge::fixtures {

/// An ordered simplicial complex together with its presentation.
struct OrderedComplex {
    int vertices = 0;
    std::set<std::vector<int>> simplices;
    PresentationPtr presentation;
    std::map<std::vector<int>, CellRef> cell_of;
};

inline OrderedComplex make_ordered_complex(const std::string& name, int vertices,
                                           const std::vector<std::vector<int>>& maximal)
{
    OrderedComplex out;
    out.vertices = vertices;
    for (int v = 0; v < vertices; ++v)
        out.simplices.insert({v});
    for (const auto& m : maximal) {
        const int k = static_cast<int>(m.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> s;
            for (int t = 0; t < k; ++t)
                if (mask & (1 << t))
                    s.push_back(m[t]);
            out.simplices.insert(s);
        }
    }
    auto P = detail::simplex_subcomplex(name, vertices - 1, [&](const std::vector<int>& s) {
        return out.simplices.count(s) > 0;
    });
    for (const auto& s : out.simplices)
        out.cell_of.emplace(s, P.at(detail::vertex_list_name(s, vertices - 1)));
    out.presentation = std::make_shared<const Presentation>(std::move(P));
    return out;
}

inline OrderedComplex random_ordered_complex(std::mt19937& rng, int max_vertices = 6, int max_dim = 3)
{
    std::uniform_int_distribution<int> nv(2, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nmax(1, 4);
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::vector<std::vector<int>> maximal;
    const int count = nmax(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v)
            all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        const int k = std::min(n, dim(rng) + 1);
        std::vector<int> s(all.begin(), all.begin() + k);
        std::sort(s.begin(), s.end());
        maximal.push_back(s);
    }
    return make_ordered_complex("rand", n, maximal);
}

/// Word of the (possibly degenerate) simplex with weakly increasing
/// vertex sequence `seq` in an ordered complex.
inline SimplexWord ordered_word(const OrderedComplex& C, const std::vector<int>& seq)
{
    std::vector<int> distinct;
    std::vector<int> degens;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i + 1 < seq.size() && seq[i] == seq[i + 1])
            degens.push_back(static_cast<int>(i));
        if (distinct.empty() || distinct.back() != seq[i])
            distinct.push_back(seq[i]);
    }
    std::reverse(degens.begin(), degens.end());
    return SimplexWord(C.cell_of.at(distinct), std::move(degens));
}

/// A random simplicial map between ordered complexes (vertex maps that are
/// weakly monotone on simplices and carry simplices to simplices), found by
/// backtracking over vertex images in random order.
inline std::optional<SimplicialMap> random_ordered_map(std::mt19937& rng, const OrderedComplex& S,
                                                       const OrderedComplex& T)
{
    std::vector<int> image(S.vertices, -1);
    auto consistent = [&](int upto) {
        for (const auto& s : S.simplices) {
            if (s.back() > upto)
                continue;
            std::vector<int> seq;
            for (int v : s)
                seq.push_back(image[v]);
            if (!std::is_sorted(seq.begin(), seq.end()))
                return false;
            seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
            if (!T.simplices.count(seq))
                return false;
        }
        return true;
    };
    std::function<bool(int)> assign = [&](int v) {
        if (v == S.vertices)
            return true;
        std::vector<int> choices(T.vertices);
        for (int t = 0; t < T.vertices; ++t)
            choices[t] = t;
        std::shuffle(choices.begin(), choices.end(), rng);
        for (int c : choices) {
            image[v] = c;
            if (consistent(v) && assign(v + 1))
                return true;
        }
        image[v] = -1;
        return false;
    };
    if (!assign(0))
        return std::nullopt;
    std::map<CellRef, std::vector<int>> verts;
    for (const auto& [s, ref] : S.cell_of)
        verts.emplace(ref, s);
    return SimplicialMap::from_lookup(S.presentation, T.presentation, [&](CellRef c) {
        std::vector<int> seq;
        for (int v : verts.at(c))
            seq.push_back(image[v]);
        return ordered_word(T, seq);
    });
}

/// A random small presentation, mixing ordered complexes, quotients by a
/// subcomplex (which produce degenerate faces), products and the standard
/// one-vertex models.
inline Presentation random_presentation(std::mt19937& rng)
{
    std::uniform_int_distribution<int> kind(0, 4);
    switch (kind(rng)) {
    case 0:
        return *random_ordered_complex(rng).presentation;
    case 1: {
        auto C = random_ordered_complex(rng);
        // collapse the closure of a random simplex
        std::vector<std::vector<int>> all(C.simplices.begin(), C.simplices.end());
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const auto& chosen = all[pick(rng)];
        CellSelection A;
        for (const auto& s : all)
            if (std::includes(chosen.begin(), chosen.end(), s.begin(), s.end()))
                A.insert(C.cell_of.at(s));
        return *quotient_by_subcomplex(C.presentation, A).quotient;
    }
    case 2: {
        auto a = random_ordered_complex(rng, 3, 1);
        auto b = random_ordered_complex(rng, 3, 2);
        return product(*a.presentation, *b.presentation);
    }
    case 3: {
        const std::vector<Presentation> models = {circle(), klein_bottle(), simplex_boundary(3),
                                                  product(circle(), circle())};
        std::uniform_int_distribution<std::size_t> pick(0, models.size() - 1);
        return models[pick(rng)];
    }
    default: {
        auto a = random_ordered_complex(rng, 4, 2);
        return disjoint_union(*a.presentation, circle());
    }
    }
}

} // namespace kanforge::fixtures
