#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kanforge/errors.hpp"

namespace kanforge {

/// Reference to a nondegenerate simplex of a presentation: its dimension and
/// its position in declaration order within that dimension.
struct CellRef {
    int dim = 0;
    int index = 0;

    auto operator<=>(const CellRef&) const = default;
};

/// A simplex written as s_{j_t} ... s_{j_1} x over a nondegenerate base x,
/// with j_t > ... > j_1 (the Eilenberg-Zilber normal form).
///
/// `degeneracies()` lists the indices left to right, i.e. the last applied
/// degeneracy comes first.
class SimplexWord {
public:
    SimplexWord() = default;

    explicit SimplexWord(CellRef base, std::vector<int> degeneracies = {})
        : base_(base), degens_(std::move(degeneracies))
    {
        if (base_.dim < 0 || base_.index < 0)
            throw MalformedWord("negative cell reference");
        for (std::size_t t = 0; t < degens_.size(); ++t) {
            if (t + 1 < degens_.size() && degens_[t] <= degens_[t + 1])
                throw MalformedWord("degeneracy indices must be strictly decreasing");
        }
        // the t-th applied (from the right) acts on dimension base.dim + t
        int level = base_.dim;
        for (auto it = degens_.rbegin(); it != degens_.rend(); ++it, ++level) {
            if (*it < 0 || *it > level)
                throw MalformedWord("degeneracy s_" + std::to_string(*it) + " out of range on a " +
                                    std::to_string(level) + "-simplex");
        }
    }

    const CellRef& base() const noexcept { return base_; }
    const std::vector<int>& degeneracies() const noexcept { return degens_; }
    int dim() const noexcept { return base_.dim + static_cast<int>(degens_.size()); }
    bool is_degenerate() const noexcept { return !degens_.empty(); }

    auto operator<=>(const SimplexWord&) const = default;

private:
    CellRef base_{};
    std::vector<int> degens_;
};

/// s_j applied to w, renormalized with s_i s_j = s_{j+1} s_i (i <= j).
inline SimplexWord degeneracy(const SimplexWord& w, int j)
{
    if (j < 0 || j > w.dim())
        throw MalformedWord("s_" + std::to_string(j) + " applied to a " + std::to_string(w.dim()) +
                            "-simplex");
    std::vector<int> out;
    out.reserve(w.degeneracies().size() + 1);
    bool placed = false;
    for (int d : w.degeneracies()) {
        if (!placed && j <= d) {
            out.push_back(d + 1);
        } else {
            if (!placed) {
                out.push_back(j);
                placed = true;
            }
            out.push_back(d);
        }
    }
    if (!placed)
        out.push_back(j);
    return SimplexWord(w.base(), std::move(out));
}

/// Apply a sequence of degeneracies (in order of application).
inline SimplexWord degeneracies(SimplexWord w, std::span<const int> in_application_order)
{
    for (int j : in_application_order)
        w = degeneracy(w, j);
    return w;
}

/// d_i applied to w. Degeneracies are commuted past the face with the
/// simplicial identities; a face of the nondegenerate base is looked up
/// through `base_face(CellRef, i)`, which must return a SimplexWord.
template <class BaseFace>
SimplexWord face(const SimplexWord& w, int i, const BaseFace& base_face)
{
    if (i < 0 || i > w.dim() || w.dim() == 0)
        throw MalformedWord("d_" + std::to_string(i) + " applied to a " + std::to_string(w.dim()) +
                            "-simplex");
    if (!w.is_degenerate())
        return base_face(w.base(), i);

    const int j = w.degeneracies().front();
    SimplexWord rest(w.base(),
                     std::vector<int>(w.degeneracies().begin() + 1, w.degeneracies().end()));
    if (i < j)
        return degeneracy(face(rest, i, base_face), j - 1);
    if (i == j || i == j + 1)
        return rest;
    return degeneracy(face(rest, i - 1, base_face), j);
}

/// One step of a raw face/degeneracy sequence.
struct SimplicialOp {
    enum class Kind { face, degeneracy };
    Kind kind;
    int index;

    static SimplicialOp d(int i) { return {Kind::face, i}; }
    static SimplicialOp s(int j) { return {Kind::degeneracy, j}; }
};

/// Normal form of the operators `ops` (listed in order of application)
/// applied to the word `start`.
template <class BaseFace>
SimplexWord normalize(SimplexWord start, std::span<const SimplicialOp> ops, const BaseFace& base_face)
{
    for (const auto& op : ops) {
        if (op.kind == SimplicialOp::Kind::face)
            start = face(start, op.index, base_face);
        else
            start = degeneracy(start, op.index);
    }
    return start;
}

/// All canonical degeneracy index lists taking dimension `from` to `to`
/// (strictly decreasing subsets of {0..to-1} of size to-from), in
/// lexicographic order of the lists.
inline std::vector<std::vector<int>> degeneracy_patterns(int from, int to)
{
    std::vector<std::vector<int>> out;
    const int count = to - from;
    if (count < 0)
        return out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int upper) {
        if (static_cast<int>(current.size()) == count) {
            out.push_back(current);
            return;
        }
        const int remaining = count - static_cast<int>(current.size());
        for (int v = upper; v >= remaining - 1; --v) {
            current.push_back(v);
            rec(v - 1);
            current.pop_back();
        }
    };
    rec(to - 1);
    std::sort(out.begin(), out.end());
    return out;
}

struct CellRefHash {
    std::size_t operator()(const CellRef& c) const noexcept
    {
        return std::hash<long long>()((static_cast<long long>(c.dim) << 32) ^ c.index);
    }
};

struct SimplexWordHash {
    std::size_t operator()(const SimplexWord& w) const noexcept
    {
        std::size_t h = CellRefHash()(w.base());
        for (int d : w.degeneracies())
            h = h * 1000003u ^ static_cast<std::size_t>(d + 1);
        return h;
    }
};

} // namespace kanforge
