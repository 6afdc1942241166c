#pragma once

#include <concepts>
#include <optional>
#include <vector>

#include "kanforge/finite_group.hpp"

namespace kanforge {

/// A simplicial group: a group G_n in every dimension with face and
/// degeneracy homomorphisms. `face(n, i, g)` maps G_n → G_{n-1};
/// `degeneracy(n, j, g)` maps G_n → G_{n+1}.
template <class G>
concept SimplicialGroup = requires(const G& grp, const typename G::element_type& a, int n, int i) {
    typename G::element_type;
    { grp.identity(n) } -> std::convertible_to<typename G::element_type>;
    { grp.multiply(n, a, a) } -> std::convertible_to<typename G::element_type>;
    { grp.inverse(n, a) } -> std::convertible_to<typename G::element_type>;
    { grp.face(n, i, a) } -> std::convertible_to<typename G::element_type>;
    { grp.degeneracy(n, i, a) } -> std::convertible_to<typename G::element_type>;
    { grp.equal(a, a) } -> std::convertible_to<bool>;
};

/// The constant simplicial group on a finite group: every G_n is the
/// group and all faces and degeneracies are identities.
class ConstantSimplicialGroup {
public:
    using element_type = int;

    explicit ConstantSimplicialGroup(FiniteGroup group) : group_(std::move(group)) {}

    int identity(int) const { return group_.identity(); }
    int multiply(int, int a, int b) const { return group_.multiply(a, b); }
    int inverse(int, int a) const { return group_.inverse(a); }
    int face(int, int, int a) const { return a; }
    int degeneracy(int, int, int a) const { return a; }
    bool equal(int a, int b) const { return a == b; }

    const FiniteGroup& group() const noexcept { return group_; }

private:
    FiniteGroup group_;
};

/// Horn data in a simplicial group: elements faces[i] ∈ G_{p-1}, i ≠ k.
template <class E>
struct GroupHorn {
    int p = 0;
    int k = 0;
    std::vector<std::optional<E>> faces;
};

template <SimplicialGroup G>
bool is_valid_group_horn(const G& grp, const GroupHorn<typename G::element_type>& h)
{
    if (h.p < 1 || h.k < 0 || h.k > h.p || static_cast<int>(h.faces.size()) != h.p + 1 || h.faces[h.k])
        return false;
    for (int i = 0; i <= h.p; ++i)
        if (i != h.k && !h.faces[i])
            return false;
    if (h.p == 1)
        return true;
    for (int j = 0; j <= h.p; ++j)
        for (int i = 0; i < j; ++i)
            if (i != h.k && j != h.k &&
                !grp.equal(grp.face(h.p - 1, i, *h.faces[j]), grp.face(h.p - 1, j - 1, *h.faces[i])))
                return false;
    return true;
}

/// Filler of a horn in a simplicial group by the classical correction
/// recursion: faces below k are matched from the identity upward with
/// s_i-corrections, then faces above k from the top down with
/// s_{i-1}-corrections. Throws InvalidParameters on invalid horn data.
template <SimplicialGroup G>
typename G::element_type moore_filler(const G& grp, const GroupHorn<typename G::element_type>& h)
{
    if (!is_valid_group_horn(grp, h))
        throw InvalidParameters("invalid horn data in a simplicial group");
    const int n = h.p;
    const int k = h.k;
    auto mul = [&](const auto& a, const auto& b) { return grp.multiply(n, a, b); };
    auto x = [&](int i) { return *h.faces[i]; };

    auto g = grp.identity(n);
    for (int i = 0; i < k; ++i) {
        const auto correction =
            grp.multiply(n - 1, grp.inverse(n - 1, grp.face(n, i, g)), x(i));
        g = mul(g, grp.degeneracy(n - 1, i, correction));
    }
    for (int i = n; i > k; --i) {
        const auto correction =
            grp.multiply(n - 1, grp.inverse(n - 1, grp.face(n, i, g)), x(i));
        g = mul(g, grp.degeneracy(n - 1, i - 1, correction));
    }
    return g;
}

} // namespace kanforge
