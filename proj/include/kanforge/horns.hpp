#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kanforge/config.hpp"
#include "kanforge/presentation.hpp"

namespace kanforge {

/// A map Λ_k[p] → K: the faces i ≠ k of a would-be p-simplex.
/// `faces[k]` is empty.
struct HornInstance {
    int p = 0;
    int k = 0;
    std::vector<std::optional<SimplexWord>> faces;

    bool operator==(const HornInstance&) const = default;
};

/// Checks d_i(face_j) = d_{j-1}(face_i) for i < j, both ≠ k, plus shape.
inline bool is_valid_horn(const Presentation& K, const HornInstance& h)
{
    if (h.p < 1 || h.k < 0 || h.k > h.p || static_cast<int>(h.faces.size()) != h.p + 1 || h.faces[h.k])
        return false;
    for (int i = 0; i <= h.p; ++i) {
        if (i == h.k)
            continue;
        if (!h.faces[i] || h.faces[i]->dim() != h.p - 1 || !K.contains(h.faces[i]->base()))
            return false;
    }
    if (h.p == 1)
        return true;
    for (int j = 0; j <= h.p; ++j)
        for (int i = 0; i < j; ++i) {
            if (i == h.k || j == h.k)
                continue;
            if (K.face(*h.faces[j], i) != K.face(*h.faces[i], j - 1))
                return false;
        }
    return true;
}

inline std::string format_horn(const Presentation& K, const HornInstance& h)
{
    std::string out = "p=" + std::to_string(h.p) + " k=" + std::to_string(h.k) + " faces (";
    bool first = true;
    for (int i = 0; i <= h.p; ++i) {
        if (i == h.k)
            continue;
        if (!first)
            out += ", ";
        first = false;
        out += K.word_name(*h.faces[i]);
    }
    return out + ")";
}

namespace detail {

/// All simplices of one dimension with integer ids and face tables.
struct SimplexTable {
    std::vector<SimplexWord> words;
    std::map<SimplexWord, int> id;

    SimplexTable(const Presentation& K, int n, bool include_degenerate, const Budget& budget)
    {
        if (include_degenerate) {
            const auto count = simplex_count(K, n);
            if (count > budget.max_simplices)
                throw BudgetExceeded("simplices of dimension " + std::to_string(n), count);
            words = all_simplices(K, n);
        } else if (n <= K.dimension()) {
            for (int i = 0; i < K.cell_count(n); ++i)
                words.emplace_back(CellRef{n, i});
        }
        for (int i = 0; i < static_cast<int>(words.size()); ++i)
            id.emplace(words[i], i);
    }
};

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = v.size();
        for (int x : v)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace detail

/// Lookup of fillers by the tuple of faces i ≠ k, over every p-simplex of
/// K (degenerate ones included), so absence answers are exhaustive.
class FillerIndex {
public:
    FillerIndex(const Presentation& K, int p, const Budget& budget = {})
        : K_(&K), p_(p), faces_(K, p - 1, true, budget)
    {
        const auto count = simplex_count(K, p);
        if (count > budget.max_simplices)
            throw BudgetExceeded("simplices of dimension " + std::to_string(p), count);
        simplices_ = all_simplices(K, p);
        by_k_.resize(p + 1);
        std::vector<int> f(p + 1);
        for (int s = 0; s < static_cast<int>(simplices_.size()); ++s) {
            for (int i = 0; i <= p; ++i)
                f[i] = faces_.id.at(K.face(simplices_[s], i));
            for (int k = 0; k <= p; ++k) {
                std::vector<int> key;
                for (int i = 0; i <= p; ++i)
                    if (i != k)
                        key.push_back(f[i]);
                by_k_[k].emplace(std::move(key), s); // keeps the first filler
            }
        }
    }

    std::optional<SimplexWord> find(const HornInstance& h) const
    {
        if (h.p != p_)
            throw DimensionMismatch("filler index built for another dimension");
        std::vector<int> key;
        for (int i = 0; i <= p_; ++i) {
            if (i == h.k)
                continue;
            auto it = faces_.id.find(*h.faces[i]);
            if (it == faces_.id.end())
                return std::nullopt;
            key.push_back(it->second);
        }
        auto it = by_k_[h.k].find(key);
        if (it == by_k_[h.k].end())
            return std::nullopt;
        return simplices_[it->second];
    }

private:
    const Presentation* K_;
    int p_;
    detail::SimplexTable faces_;
    std::vector<SimplexWord> simplices_;
    std::vector<std::unordered_map<std::vector<int>, int, detail::VectorHash>> by_k_;
};

/// A p-simplex z with d_i z = faces[i] for i ≠ k, or empty when no
/// simplex of K (degenerate ones included) fills the horn.
inline std::optional<SimplexWord> find_filler(const Presentation& K, const HornInstance& h, const Budget& budget = {})
{
    if (!is_valid_horn(K, h))
        throw InvalidParameters("invalid horn data");
    return FillerIndex(K, h.p, budget).find(h);
}

/// Every horn Λ_k[p] → K, with faces drawn from the nondegenerate
/// (p-1)-simplices and, when flagged, the degenerate ones too. Order:
/// lexicographic in the face ids (faces listed as in all_simplices).
/// `visit(horn)` returns false to stop early.
template <class Visit>
void for_each_horn(const Presentation& K, int p, int k, bool include_degenerate, const Budget& budget,
                   Visit&& visit)
{
    if (p < 1 || k < 0 || k > p)
        throw InvalidParameters("horn indices out of range");
    check_dimension_cap(p, "horn enumeration");
    const detail::SimplexTable faces(K, p - 1, include_degenerate, budget);
    const int m = static_cast<int>(faces.words.size());
    // face ids of the (p-1)-simplices among all (p-2)-simplices
    std::vector<std::vector<int>> sub(m);
    if (p >= 2) {
        const detail::SimplexTable lower(K, p - 2, true, budget);
        for (int s = 0; s < m; ++s)
            for (int i = 0; i < p; ++i)
                sub[s].push_back(lower.id.at(K.face(faces.words[s], i)));
    }

    std::vector<int> chosen(p + 1, -1);
    std::size_t produced = 0;
    bool stop = false;
    auto compatible = [&](int j) {
        // new face j against earlier faces i < j
        for (int i = 0; i < j; ++i) {
            if (i == k)
                continue;
            if (sub[chosen[j]][i] != sub[chosen[i]][j - 1])
                return false;
        }
        return true;
    };
    auto recurse = [&](auto& self, int j) -> void {
        if (stop)
            return;
        if (j > p) {
            if (++produced > budget.max_horns)
                throw BudgetExceeded("horn instances", produced);
            HornInstance h{p, k, std::vector<std::optional<SimplexWord>>(p + 1)};
            for (int i = 0; i <= p; ++i)
                if (i != k)
                    h.faces[i] = faces.words[chosen[i]];
            if (!visit(std::move(h)))
                stop = true;
            return;
        }
        if (j == k) {
            self(self, j + 1);
            return;
        }
        for (int s = 0; s < m && !stop; ++s) {
            chosen[j] = s;
            if (p == 1 || compatible(j))
                self(self, j + 1);
        }
        chosen[j] = -1;
    };
    recurse(recurse, 0);
}

inline std::vector<HornInstance> enumerate_horns(const Presentation& K, int p, int k, bool include_degenerate,
                                                 const Budget& budget = {})
{
    std::vector<HornInstance> out;
    for_each_horn(K, p, k, include_degenerate, budget, [&](HornInstance h) {
        out.push_back(std::move(h));
        return true;
    });
    return out;
}

/// Degenerate faces are enumerated by default up to this dimension.
inline constexpr int degenerate_horn_default_max_p = 3;

struct KanReport {
    int max_dim = 0;
    std::vector<HornInstance> unfilled;
    std::size_t horns_checked = 0;

    bool empty() const noexcept { return unfilled.empty(); }
};

/// All unfilled horns with 1 <= p <= max_dim. Degenerate faces are used
/// for p <= `degenerate_up_to`.
inline KanReport kan_report(const Presentation& K, int max_dim, const Budget& budget = {},
                            int degenerate_up_to = degenerate_horn_default_max_p)
{
    check_dimension_cap(max_dim, "Kan check");
    KanReport report;
    report.max_dim = max_dim;
    for (int p = 1; p <= max_dim; ++p) {
        const FillerIndex index(K, p, budget);
        for (int k = 0; k <= p; ++k)
            for_each_horn(K, p, k, p <= degenerate_up_to, budget, [&](HornInstance h) {
                if (++report.horns_checked > budget.max_horns)
                    throw BudgetExceeded("horn instances", report.horns_checked);
                if (!index.find(h))
                    report.unfilled.push_back(std::move(h));
                return true;
            });
    }
    return report;
}

} // namespace kanforge
