#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kanforge/config.hpp"
#include "kanforge/presentation.hpp"

namespace kanforge {

namespace detail {

inline std::string vertex_list_name(const std::vector<int>& vs, int p)
{
    std::string out;
    for (std::size_t t = 0; t < vs.size(); ++t) {
        if (p >= 10 && t > 0)
            out += ".";
        out += std::to_string(vs[t]);
    }
    return out;
}

/// Subcomplex of Δ[p] spanned by the vertex subsets accepted by `keep`
/// (which must be closed under taking nonempty subsets).
template <class Keep>
Presentation simplex_subcomplex(const std::string& name, int p, const Keep& keep)
{
    PresentationBuilder b(name);
    std::map<std::vector<int>, CellRef> refs;
    for (int dim = 0; dim <= p; ++dim) {
        // subsets of size dim + 1 in lexicographic order
        std::vector<int> sel(dim + 1);
        for (int t = 0; t <= dim; ++t)
            sel[t] = t;
        while (true) {
            if (keep(sel)) {
                const auto cell_name = vertex_list_name(sel, p);
                CellRef ref;
                if (dim == 0) {
                    ref = b.add_vertex(cell_name);
                } else {
                    std::vector<SimplexWord> faces;
                    for (int i = 0; i <= dim; ++i) {
                        std::vector<int> f = sel;
                        f.erase(f.begin() + i);
                        faces.emplace_back(refs.at(f));
                    }
                    ref = b.add_simplex(cell_name, std::move(faces));
                }
                refs.emplace(sel, ref);
            }
            int t = dim;
            while (t >= 0 && sel[t] == p - dim + t)
                --t;
            if (t < 0)
                break;
            ++sel[t];
            for (int u = t + 1; u <= dim; ++u)
                sel[u] = sel[u - 1] + 1;
        }
    }
    return b.build();
}

} // namespace detail

/// Δ[p]: nondegenerate simplices are the increasing vertex lists of {0..p}.
inline Presentation standard_simplex(int p)
{
    if (p < 0)
        throw InvalidParameters("Δ[p] needs p >= 0");
    check_dimension_cap(p, "standard simplex");
    return detail::simplex_subcomplex("delta" + std::to_string(p), p,
                                      [](const std::vector<int>&) { return true; });
}

/// ∂Δ[p]: all proper faces of Δ[p].
inline Presentation simplex_boundary(int p)
{
    if (p < 1)
        throw InvalidParameters("∂Δ[p] needs p >= 1");
    check_dimension_cap(p, "simplex boundary");
    return detail::simplex_subcomplex("boundary" + std::to_string(p), p,
                                      [p](const std::vector<int>& s) { return static_cast<int>(s.size()) <= p; });
}

/// Λ_k[p]: Δ[p] without its interior and without its k-th face.
inline Presentation horn(int p, int k)
{
    if (p < 1 || k < 0 || k > p)
        throw InvalidParameters("Λ_k[p] needs p >= 1 and 0 <= k <= p");
    check_dimension_cap(p, "horn");
    return detail::simplex_subcomplex(
        "horn" + std::to_string(p) + "_" + std::to_string(k), p, [p, k](const std::vector<int>& s) {
            if (static_cast<int>(s.size()) == p + 1)
                return false;
            if (static_cast<int>(s.size()) == p)
                return std::find(s.begin(), s.end(), k) != s.end();
            return true;
        });
}

/// S¹ = Δ[1]/∂Δ[1]: vertex v, edge a with d_0 a = d_1 a = v.
inline Presentation circle()
{
    PresentationBuilder b("circle");
    auto v = b.add_vertex("v");
    b.add_simplex("a", {SimplexWord(v), SimplexWord(v)});
    return b.build();
}

/// C_n: vertices v0..v{n-1}, edges e_i from v_i to v_{i+1 mod n}
/// (d_1 e_i = v_i, d_0 e_i = v_{i+1}).
inline Presentation cycle(int n)
{
    if (n < 1)
        throw InvalidParameters("C_n needs n >= 1");
    PresentationBuilder b("cycle" + std::to_string(n));
    std::vector<CellRef> vs;
    for (int i = 0; i < n; ++i)
        vs.push_back(b.add_vertex("v" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
        b.add_simplex("e" + std::to_string(i), {SimplexWord(vs[(i + 1) % n]), SimplexWord(vs[i])});
    return b.build();
}

inline Presentation point(const std::string& name = "pt")
{
    PresentationBuilder b("point");
    b.add_vertex(name);
    return b.build();
}

/// Disjoint union; identifiers of the second summand get `suffix` appended
/// when they collide with the first.
inline Presentation disjoint_union(const Presentation& K, const Presentation& L,
                                   const std::string& suffix = "'")
{
    PresentationBuilder b(K);
    b.set_truncated_at(std::nullopt);
    std::vector<std::vector<CellRef>> remap(L.dimension() + 1);
    auto shifted = [&](const SimplexWord& w) {
        return SimplexWord(remap[w.base().dim][w.base().index], w.degeneracies());
    };
    for (int d = 0; d <= L.dimension(); ++d) {
        for (int i = 0; i < L.cell_count(d); ++i) {
            std::string name = L.cell_name({d, i});
            while (b.has(name))
                name += suffix;
            if (d == 0) {
                remap[d].push_back(b.add_vertex(name));
            } else {
                std::vector<SimplexWord> faces;
                for (const auto& f : L.cell({d, i}).faces)
                    faces.push_back(shifted(f));
                remap[d].push_back(b.add_simplex(name, std::move(faces)));
            }
        }
    }
    auto out = b.build();
    out.set_name(K.name() + "+" + L.name());
    return out;
}

/// One-vertex Δ-complex model of the Klein bottle: edges x, y, c and
/// triangles U = (x, c, x), L = (y, c, y) in face order (d_0, d_1, d_2),
/// so that π₁ = ⟨x, y | x² = y²⟩.
inline Presentation klein_bottle()
{
    PresentationBuilder b("klein");
    b.add_vertex("v");
    b.add_simplex_by_names("x", {"v", "v"});
    b.add_simplex_by_names("y", {"v", "v"});
    b.add_simplex_by_names("c", {"v", "v"});
    b.add_simplex_by_names("U", {"x", "c", "x"});
    b.add_simplex_by_names("L", {"y", "c", "y"});
    return b.build();
}

enum class StandardKind { delta, boundary, horn, circle, cycle };

/// Dispatcher over the standard spaces.
inline Presentation standard(StandardKind kind, int p = 0, std::optional<int> k = std::nullopt,
                             std::optional<int> n = std::nullopt)
{
    switch (kind) {
    case StandardKind::delta:
        return standard_simplex(p);
    case StandardKind::boundary:
        return simplex_boundary(p);
    case StandardKind::horn:
        if (!k)
            throw InvalidParameters("horn needs an index k");
        return horn(p, *k);
    case StandardKind::circle:
        return circle();
    case StandardKind::cycle:
        if (!n)
            throw InvalidParameters("cycle needs a length n");
        return cycle(*n);
    }
    throw InvalidParameters("unknown standard kind");
}

} // namespace kanforge
