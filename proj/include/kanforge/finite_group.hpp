#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kanforge/errors.hpp"

namespace kanforge {

/// A finite group given by its multiplication table. Element 0 is the
/// identity; elements are referred to by index.
class FiniteGroup {
public:
    using element_type = int;

    FiniteGroup() : FiniteGroup(std::vector<std::string>{"e"}, {{0}}) {}

    /// Validates closure, identity at index 0, inverses and associativity.
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table, std::string label = {})
        : names_(std::move(names)), table_(std::move(table)), label_(std::move(label))
    {
        const int n = order();
        if (n == 0 || static_cast<int>(table_.size()) != n)
            throw ValidationError("multiplication table must be square and non-empty");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n)
                throw ValidationError("multiplication table must be square");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw ValidationError("multiplication table entry out of range");
        }
        for (int a = 0; a < n; ++a)
            if (table_[0][a] != a || table_[a][0] != a)
                throw ValidationError("element 0 must be the identity");
        inverse_.assign(n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (table_[a][b] == 0)
                    inverse_[a] = b;
        for (int a = 0; a < n; ++a)
            if (inverse_[a] < 0 || table_[inverse_[a]][a] != 0)
                throw ValidationError("element '" + names_[a] + "' has no inverse");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw ValidationError("multiplication is not associative");
        if (label_.empty())
            label_ = "G" + std::to_string(n);
    }

    static FiniteGroup cyclic(int n)
    {
        if (n < 1)
            throw InvalidParameters("cyclic group needs order >= 1");
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
            if (i == 0)
                names.push_back("e");
            else if (n == 2)
                names.push_back("t");
            else if (i == 1)
                names.push_back("g");
            else
                names.push_back("g^" + std::to_string(i));
        }
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                table[a][b] = (a + b) % n;
        return FiniteGroup(std::move(names), std::move(table), "Z/" + std::to_string(n));
    }

    /// Symmetric group on three letters, elements as permutations in
    /// lexicographic order of their one-line notation.
    static FiniteGroup symmetric3()
    {
        std::vector<std::vector<int>> perms;
        std::vector<int> p = {0, 1, 2};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::string> names;
        for (const auto& q : perms)
            names.push_back(q == std::vector<int>{0, 1, 2}
                                ? "e"
                                : "p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
        auto idx = [&](const std::vector<int>& q) {
            return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
        };
        std::vector<std::vector<int>> table(6, std::vector<int>(6));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                // (a*b)(i) = a(b(i))
                std::vector<int> c(3);
                for (int i = 0; i < 3; ++i)
                    c[i] = perms[a][perms[b][i]];
                table[a][b] = idx(c);
            }
        return FiniteGroup(std::move(names), std::move(table), "S3");
    }

    static FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H)
    {
        const int n = G.order(), m = H.order();
        std::vector<std::string> names;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < m; ++b)
                names.push_back(a == 0 && b == 0 ? "e" : "(" + G.name(a) + "," + H.name(b) + ")");
        std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
        for (int a = 0; a < n * m; ++a)
            for (int b = 0; b < n * m; ++b)
                table[a][b] = G.multiply(a / m, b / m) * m + H.multiply(a % m, b % m);
        return FiniteGroup(std::move(names), std::move(table), G.label() + "x" + H.label());
    }

    int order() const noexcept { return static_cast<int>(names_.size()); }
    int identity() const noexcept { return 0; }
    int multiply(int a, int b) const { return table_.at(a).at(b); }
    int inverse(int a) const { return inverse_.at(a); }
    bool equal(int a, int b) const noexcept { return a == b; }
    bool is_identity(int a) const noexcept { return a == 0; }
    const std::string& name(int a) const { return names_.at(a); }
    std::string format(int a) const { return name(a); }
    const std::string& label() const noexcept { return label_; }
    const std::vector<std::vector<int>>& table() const noexcept { return table_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool is_abelian() const
    {
        for (int a = 0; a < order(); ++a)
            for (int b = 0; b < order(); ++b)
                if (table_[a][b] != table_[b][a])
                    return false;
        return true;
    }

    int element(std::string_view name) const
    {
        for (int a = 0; a < order(); ++a)
            if (names_[a] == name)
                return a;
        throw ParseError("unknown group element '" + std::string(name) + "' in " + label_);
    }

    /// Product of whitespace-separated element names ("t t", "g g^2").
    /// An empty word is the identity.
    int evaluate(std::string_view word) const
    {
        std::istringstream in{std::string(word)};
        std::string tok;
        int acc = identity();
        while (in >> tok)
            acc = multiply(acc, element(tok));
        return acc;
    }

    /// Subgroup generated by `gens`, as a sorted list of elements.
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const
    {
        std::vector<bool> in(order(), false);
        std::vector<int> queue = {identity()};
        in[identity()] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int g : gens) {
                int h = multiply(queue[head], g);
                if (!in[h]) {
                    in[h] = true;
                    queue.push_back(h);
                }
            }
        std::sort(queue.begin(), queue.end());
        return queue;
    }

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::string label_;
};

} // namespace kanforge
