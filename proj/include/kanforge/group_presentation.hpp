#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kanforge/abelian_group.hpp"
#include "kanforge/errors.hpp"

namespace kanforge {

struct Letter {
    int generator = 0;
    int exponent = 1; // +1 or -1

    Letter inverse() const { return {generator, -exponent}; }
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w)
{
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(it->inverse());
    return out;
}

/// Cancel adjacent x x^-1 pairs.
inline Word free_reduce(const Word& w)
{
    Word out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

/// Free reduction followed by cancellation between the two ends.
inline Word cyclic_reduce(const Word& w)
{
    Word r = free_reduce(w);
    std::size_t a = 0, b = r.size();
    while (b - a >= 2 && r[a].generator == r[b - 1].generator && r[a].exponent == -r[b - 1].exponent) {
        ++a;
        --b;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

/// A finitely presented group ⟨generators | relators⟩.
class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
        : generators_(std::move(generators)), relators_(std::move(relators))
    {
        for (const auto& r : relators_)
            for (const auto& l : r)
                if (l.generator < 0 || l.generator >= static_cast<int>(generators_.size()) ||
                    (l.exponent != 1 && l.exponent != -1))
                    throw ValidationError("relator refers to an undeclared generator");
    }

    /// Parse relators written as "x y x^-1 y^-1" over the given generators.
    static GroupPresentation parse(std::vector<std::string> generators, const std::vector<std::string>& relators)
    {
        std::vector<Word> words;
        for (const auto& text : relators)
            words.push_back(parse_word(generators, text));
        return GroupPresentation(std::move(generators), std::move(words));
    }

    static Word parse_word(const std::vector<std::string>& generators, const std::string& text)
    {
        Word w;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            int exponent = 1;
            std::string name = tok;
            if (auto pos = tok.find('^'); pos != std::string::npos) {
                name = tok.substr(0, pos);
                const std::string e = tok.substr(pos + 1);
                int value = 0;
                try {
                    value = std::stoi(e);
                } catch (const std::exception&) {
                    throw ParseError("bad exponent in '" + tok + "'");
                }
                exponent = value;
            }
            auto it = std::find(generators.begin(), generators.end(), name);
            if (it == generators.end())
                throw ParseError("unknown generator '" + name + "'");
            const int g = static_cast<int>(it - generators.begin());
            for (int t = 0; t < std::abs(exponent); ++t)
                w.push_back({g, exponent < 0 ? -1 : 1});
        }
        return w;
    }

    const std::vector<std::string>& generators() const noexcept { return generators_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }

    std::string format_word(const Word& w) const
    {
        if (w.empty())
            return "1";
        std::string out;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i])
                ++j;
            const int power = static_cast<int>(j - i) * w[i].exponent;
            if (!out.empty())
                out += " ";
            out += generators_[w[i].generator];
            if (power != 1)
                out += "^" + std::to_string(power);
            i = j;
        }
        return out;
    }

    std::string to_string() const
    {
        std::string out = "<";
        for (std::size_t i = 0; i < generators_.size(); ++i)
            out += (i ? ", " : " ") + generators_[i];
        out += " |";
        for (std::size_t i = 0; i < relators_.size(); ++i)
            out += (i ? ", " : " ") + format_word(relators_[i]);
        out += " >";
        return out;
    }

    /// Elementary Tietze simplification: cyclically reduce, drop trivial
    /// and repeated relators, and delete generators killed by a relator of
    /// length one, until nothing changes.
    GroupPresentation simplified() const
    {
        std::vector<std::string> gens = generators_;
        std::vector<Word> rels = relators_;
        while (true) {
            std::vector<Word> kept;
            for (const auto& r : rels) {
                auto c = cyclic_reduce(r);
                if (c.empty())
                    continue;
                if (std::find(kept.begin(), kept.end(), c) == kept.end())
                    kept.push_back(std::move(c));
            }
            rels = std::move(kept);
            auto killer = std::find_if(rels.begin(), rels.end(), [](const Word& r) { return r.size() == 1; });
            if (killer == rels.end())
                break;
            const int dead = killer->front().generator;
            gens.erase(gens.begin() + dead);
            for (auto& r : rels) {
                Word next;
                for (const auto& l : r)
                    if (l.generator != dead)
                        next.push_back({l.generator > dead ? l.generator - 1 : l.generator, l.exponent});
                r = std::move(next);
            }
        }
        return GroupPresentation(std::move(gens), std::move(rels));
    }

    /// Exponent-sum relation matrix (rows: relators, columns: generators).
    IntMatrix relation_matrix() const
    {
        IntMatrix m(static_cast<int>(relators_.size()), static_cast<int>(generators_.size()));
        for (std::size_t r = 0; r < relators_.size(); ++r)
            for (const auto& l : relators_[r])
                m(static_cast<int>(r), l.generator) += l.exponent;
        return m;
    }

    FGAbelianGroup abelianization() const { return FGAbelianGroup::from_relations(relation_matrix()); }

    /// Isomorphism type when it can be read off the presentation: trivial,
    /// free, or one-generator (hence cyclic). Empty otherwise.
    std::optional<std::string> recognize() const
    {
        const auto s = simplified();
        if (s.generators().empty())
            return "1";
        if (s.relators().empty())
            return s.generators().size() == 1 ? std::string("Z") : "F" + std::to_string(s.generators().size());
        if (s.generators().size() == 1) {
            const auto ab = s.abelianization();
            return ab.is_trivial() ? std::string("1") : ab.to_string();
        }
        return std::nullopt;
    }

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

/// ⟨x, y, z | [x, y] z^-1, [x, z], [y, z]⟩, the integral Heisenberg group.
inline GroupPresentation heisenberg_presentation()
{
    return GroupPresentation::parse({"x", "y", "z"},
                                    {"x y x^-1 y^-1 z^-1", "x z x^-1 z^-1", "y z y^-1 z^-1"});
}

} // namespace kanforge
