#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "kanforge/finite_group.hpp"
#include "kanforge/group_presentation.hpp"

namespace kanforge {

/// A discrete group with computable products and equality.
template <class G>
concept DiscreteGroup = requires(const G& g, const typename G::element_type& a) {
    typename G::element_type;
    { g.identity() } -> std::convertible_to<typename G::element_type>;
    { g.multiply(a, a) } -> std::convertible_to<typename G::element_type>;
    { g.inverse(a) } -> std::convertible_to<typename G::element_type>;
    { g.equal(a, a) } -> std::convertible_to<bool>;
    { g.format(a) } -> std::convertible_to<std::string>;
};

/// A discrete group whose elements are 0..order()-1.
template <class G>
concept FiniteDiscreteGroup = DiscreteGroup<G> && requires(const G& g) {
    { g.order() } -> std::convertible_to<int>;
};

/// An infinite group given by a presentation together with a normal-form
/// model in which the word problem is solved. Elements are integer tuples.
class PresentedGroup {
public:
    using element_type = std::vector<long long>;

    enum class Model { free_abelian, heisenberg };

    /// ℤ^m with generators e_1..e_m named x1..xm (or the given names).
    static PresentedGroup free_abelian(int m, std::vector<std::string> names = {})
    {
        if (m < 1)
            throw InvalidParameters("free abelian group needs rank >= 1");
        if (names.empty())
            for (int i = 1; i <= m; ++i)
                names.push_back("x" + std::to_string(i));
        if (static_cast<int>(names.size()) != m)
            throw InvalidParameters("one name per generator");
        std::vector<std::string> rels;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                rels.push_back(names[i] + " " + names[j] + " " + names[i] + "^-1 " + names[j] + "^-1");
        PresentedGroup G(Model::free_abelian, m, GroupPresentation::parse(names, rels),
                         "Z^" + std::to_string(m));
        return G;
    }

    /// Upper unitriangular integer 3×3 matrices, stored as (a, b, c) for
    /// [[1, a, c], [0, 1, b], [0, 0, 1]]; generators x = (1,0,0),
    /// y = (0,1,0), z = (0,0,1) = [x, y].
    static PresentedGroup heisenberg()
    {
        return PresentedGroup(Model::heisenberg, 3, heisenberg_presentation(), "U3(Z)");
    }

    element_type identity() const { return element_type(width_, 0); }

    element_type multiply(const element_type& u, const element_type& v) const
    {
        element_type out(width_);
        for (int i = 0; i < width_; ++i)
            out[i] = u[i] + v[i];
        if (model_ == Model::heisenberg)
            out[2] += u[0] * v[1];
        return out;
    }

    element_type inverse(const element_type& u) const
    {
        element_type out(width_);
        for (int i = 0; i < width_; ++i)
            out[i] = -u[i];
        if (model_ == Model::heisenberg)
            out[2] = u[0] * u[1] - u[2];
        return out;
    }

    bool equal(const element_type& u, const element_type& v) const { return u == v; }
    bool is_identity(const element_type& u) const { return u == identity(); }

    std::string format(const element_type& u) const
    {
        std::string out = "(";
        for (int i = 0; i < width_; ++i)
            out += (i ? "," : "") + std::to_string(u[i]);
        return out + ")";
    }

    /// Image of the i-th generator of the presentation.
    element_type generator(int i) const
    {
        element_type out(width_, 0);
        out.at(i) = 1;
        return out;
    }

    element_type evaluate(const Word& w) const
    {
        element_type acc = identity();
        for (const auto& l : w)
            acc = multiply(acc, l.exponent > 0 ? generator(l.generator) : inverse(generator(l.generator)));
        return acc;
    }

    /// Parse a word such as "x y^-1" in the presentation's generators.
    element_type evaluate(const std::string& text) const
    {
        return evaluate(GroupPresentation::parse_word(presentation_.generators(), text));
    }

    const GroupPresentation& presentation() const noexcept { return presentation_; }
    const std::string& label() const noexcept { return label_; }
    Model model() const noexcept { return model_; }

    /// Every relator evaluates to the identity in the model.
    bool model_satisfies_relators() const
    {
        for (const auto& r : presentation_.relators())
            if (!is_identity(evaluate(r)))
                return false;
        return true;
    }

private:
    PresentedGroup(Model model, int width, GroupPresentation presentation, std::string label)
        : model_(model), width_(width), presentation_(std::move(presentation)), label_(std::move(label))
    {
    }

    Model model_;
    int width_;
    GroupPresentation presentation_;
    std::string label_;
};

static_assert(FiniteDiscreteGroup<FiniteGroup>);
static_assert(DiscreteGroup<PresentedGroup>);

} // namespace kanforge
