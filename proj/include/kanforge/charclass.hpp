#pragma once

#include <string>
#include <vector>

#include "kanforge/chain_maps.hpp"
#include "kanforge/classifying.hpp"
#include "kanforge/homology.hpp"

namespace kanforge {

/// A normalized k-cochain of a finite group with values in ℤ or ℤ/n,
/// stored on all k-tuples in lexicographic order of element indices.
class GroupCochain {
public:
    GroupCochain(FiniteGroup group, int degree, Coefficients coeff, std::vector<Integer> values)
        : group_(std::move(group)), degree_(degree), coeff_(std::move(coeff)), values_(std::move(values))
    {
        if (degree_ < 0)
            throw InvalidParameters("negative cochain degree");
        if (values_.size() != tuple_count())
            throw DimensionMismatch("a group cochain of degree " + std::to_string(degree_) + " on a group of order " +
                                    std::to_string(group_.order()) + " needs " + std::to_string(tuple_count()) +
                                    " values");
        for (auto& v : values_)
            v = coeff_.reduce(v);
    }

    static GroupCochain zero(FiniteGroup group, int degree, Coefficients coeff)
    {
        std::size_t n = 1;
        for (int t = 0; t < degree; ++t)
            n *= static_cast<std::size_t>(group.order());
        return GroupCochain(std::move(group), degree, std::move(coeff), std::vector<Integer>(n, 0));
    }

    /// Build from a rule on tuples.
    template <class Rule>
    static GroupCochain from_rule(FiniteGroup group, int degree, Coefficients coeff, const Rule& rule)
    {
        auto out = zero(std::move(group), degree, std::move(coeff));
        for (std::size_t idx = 0; idx < out.values_.size(); ++idx)
            out.values_[idx] = out.coeff_.reduce(Integer(rule(out.tuple(idx))));
        return out;
    }

    const FiniteGroup& group() const noexcept { return group_; }
    int degree() const noexcept { return degree_; }
    const Coefficients& coeff() const noexcept { return coeff_; }
    const std::vector<Integer>& values() const noexcept { return values_; }

    std::size_t tuple_count() const
    {
        std::size_t n = 1;
        for (int t = 0; t < degree_; ++t)
            n *= static_cast<std::size_t>(group_.order());
        return n;
    }

    std::vector<int> tuple(std::size_t idx) const
    {
        std::vector<int> out(degree_);
        for (int t = degree_ - 1; t >= 0; --t) {
            out[t] = static_cast<int>(idx % group_.order());
            idx /= group_.order();
        }
        return out;
    }

    const Integer& operator()(const std::vector<int>& args) const
    {
        std::size_t idx = 0;
        for (int g : args)
            idx = idx * group_.order() + static_cast<std::size_t>(g);
        return values_.at(idx);
    }

    /// Zero whenever some argument is the identity.
    bool is_normalized() const
    {
        for (std::size_t idx = 0; idx < values_.size(); ++idx) {
            const auto t = tuple(idx);
            if (values_[idx] != 0 && std::find(t.begin(), t.end(), group_.identity()) != t.end())
                return false;
        }
        return true;
    }

    /// Bar coboundary: (δc)(g_1..g_{k+1}) = c(g_2..) + Σ (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{k+1} c(g_1..g_k).
    GroupCochain coboundary() const
    {
        const int k = degree_;
        return from_rule(group_, k + 1, coeff_, [&](const std::vector<int>& g) {
            Integer acc = (*this)(std::vector<int>(g.begin() + 1, g.end()));
            for (int i = 1; i <= k; ++i) {
                std::vector<int> merged;
                for (int t = 0; t <= k; ++t) {
                    if (t == i)
                        continue;
                    merged.push_back(t == i - 1 ? group_.multiply(g[t], g[t + 1]) : g[t]);
                }
                acc += (i % 2 ? -1 : 1) * (*this)(merged);
            }
            acc += ((k + 1) % 2 ? -1 : 1) * (*this)(std::vector<int>(g.begin(), g.end() - 1));
            return acc;
        });
    }

    GroupCochain operator+(const GroupCochain& other) const
    {
        if (degree_ != other.degree_ || !(coeff_ == other.coeff_) || group_.order() != other.group_.order())
            throw DimensionMismatch("sum of incompatible group cochains");
        auto out = *this;
        for (std::size_t i = 0; i < values_.size(); ++i)
            out.values_[i] = coeff_.reduce(values_[i] + other.values_[i]);
        return out;
    }

private:
    FiniteGroup group_;
    int degree_;
    Coefficients coeff_;
    std::vector<Integer> values_;
};

/// δc = 0 by exhaustive evaluation over all (k+1)-tuples.
inline bool group_cocycle_check(const GroupCochain& c)
{
    const auto d = c.coboundary();
    for (const auto& v : d.values())
        if (v != 0)
            return false;
    return true;
}

/// The normalized cochain on W̄Γ's nondegenerate k-simplices carrying c.
inline IntVector wbar_cochain_values(const GroupCochain& c, const Presentation& Wbar)
{
    const int k = c.degree();
    IntVector out(k <= Wbar.dimension() ? Wbar.cell_count(k) : 0);
    const int o = c.group().order();
    for (int idx = 0; idx < static_cast<int>(out.size()); ++idx) {
        std::vector<int> tuple(k);
        int rest = idx;
        for (int t = k - 1; t >= 0; --t) {
            tuple[t] = rest % (o - 1) + 1;
            rest /= o - 1;
        }
        out[idx] = c(tuple);
    }
    return out;
}

/// Inverse of wbar_cochain_values: the normalized group cochain with the
/// given values on the nondegenerate simplices.
inline GroupCochain group_cochain_from_wbar(const FiniteGroup& G, int degree, const Coefficients& coeff,
                                            const IntVector& values)
{
    return GroupCochain::from_rule(G, degree, coeff, [&](const std::vector<int>& t) -> Integer {
        for (int g : t)
            if (G.is_identity(g))
                return 0;
        if (degree == 0)
            return values.at(0);
        return values.at(detail::nerve_index(G, t));
    });
}

struct WbarClass {
    PresentationPtr wbar;
    HomologyGroup cohomology;
    CochainClass cls;
};

/// The class of c on W̄Γ truncated at max_dim (k <= max_dim - 1, so that
/// the cocycle condition is seen by the truncation).
inline WbarClass to_wbar_cochain(const GroupCochain& c, int max_dim)
{
    if (c.degree() > max_dim - 1)
        throw RangeError("cochain degree " + std::to_string(c.degree()) + " too close to the truncation " +
                         std::to_string(max_dim));
    if (!c.is_normalized())
        throw CocycleViolation("group cochain is not normalized");
    auto W = std::make_shared<const Presentation>(wbar_truncated(c.group(), max_dim));
    const auto C = chain_complex(*W, max_dim);
    auto H = cohomology_in_degree(C, c.degree(), c.coeff());
    auto cls = cohomology_class(H, wbar_cochain_values(c, *W));
    return {W, std::move(H), std::move(cls)};
}

/// α(P) = φ_τ^* c as a class in H^k(base; A).
inline CochainClass characteristic_class(const TwistingFunction<FiniteGroup>& tau, const GroupCochain& c)
{
    if (!c.is_normalized() || !group_cocycle_check(c))
        throw CocycleViolation("group cochain is not a normalized cocycle");
    const auto& B = *tau.base();
    const int k = c.degree();
    const int top = std::max({B.dimension(), k + 1, 0});
    const auto phi = classifying_map(tau, top);
    const auto F = induced_chain_map(phi, k);
    const auto pulled = pullback_cochain(F, k, wbar_cochain_values(c, *phi.target()));
    const auto H = cohomology_in_degree(chain_complex(B, std::max(B.dimension(), k)), k, c.coeff());
    return cohomology_class(H, pulled);
}

/// α(f^*P) = f^*α(P), comparing coordinates in H^k(source; A).
inline bool naturality_check(const SimplicialMap& f, const TwistingFunction<FiniteGroup>& tau, const GroupCochain& c)
{
    const auto lhs = characteristic_class(pullback_twisting(f, tau), c);
    const auto rhs_base = characteristic_class(tau, c);
    const int k = c.degree();
    const auto& S = *f.source();
    const auto F = induced_chain_map(f, k);
    const auto H = cohomology_in_degree(chain_complex(S, std::max(S.dimension(), k)), k, c.coeff());
    const auto rhs = cohomology_class(H, pullback_cochain(F, k, rhs_base.representative));
    return lhs.coordinates == rhs.coordinates;
}

/// A homomorphism from a presented group to ℤ or ℤ/n, given on the
/// generators and checked on every relator.
class PresentedHomomorphism {
public:
    PresentedHomomorphism(PresentedGroup group, std::vector<Integer> generator_values, Coefficients coeff)
        : group_(std::move(group)), values_(std::move(generator_values)), coeff_(std::move(coeff))
    {
        const auto& P = group_.presentation();
        if (values_.size() != P.generators().size())
            throw DimensionMismatch("one value per generator");
        for (auto& v : values_)
            v = coeff_.reduce(v);
        for (const auto& r : P.relators()) {
            Integer acc = 0;
            for (const auto& l : r)
                acc += l.exponent * values_[l.generator];
            if (coeff_.reduce(acc) != 0)
                throw CocycleViolation("homomorphism does not vanish on relator " + P.format_word(r));
        }
    }

    /// Value on a normal-form element. Every homomorphism to an abelian
    /// group factors through the abelianization, whose coordinates are the
    /// leading entries of the normal form in both supported models.
    Integer operator()(const PresentedGroup::element_type& g) const
    {
        Integer acc = 0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            acc += Integer(g.at(i)) * values_[i];
        return coeff_.reduce(acc);
    }

    const Coefficients& coeff() const noexcept { return coeff_; }

private:
    PresentedGroup group_;
    std::vector<Integer> values_;
    Coefficients coeff_;
};

/// Degree-1 characteristic class of a bundle with presented structure
/// group: the class of the 1-cocycle e ↦ φ(τ(e)).
inline CochainClass characteristic_class(const TwistingFunction<PresentedGroup>& tau, const PresentedHomomorphism& phi)
{
    const auto& B = *tau.base();
    IntVector cochain;
    if (B.dimension() >= 1)
        for (int e = 0; e < B.cell_count(1); ++e)
            cochain.push_back(phi(tau.labels()[e]));
    const auto H = cohomology_in_degree(chain_complex(B, std::max(B.dimension(), 1)), 1, phi.coeff());
    if (cochain.empty())
        cochain.assign(H.lattice.ambient_dimension(), 0);
    return cohomology_class(H, cochain);
}

} // namespace kanforge
