#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kanforge/errors.hpp"
#include "kanforge/simplex_word.hpp"

namespace kanforge {

/// One problem found by `validate`.
struct ValidationIssue {
    enum class Kind { dangling_face, dimension_mismatch, identity_violation };
    Kind kind;
    std::string cell;
    int i = -1;
    int j = -1;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
};

/// A finite simplicial set: nondegenerate simplices per dimension together
/// with the faces of each nondegenerate simplex as normalized words.
/// Degenerate simplices are adjoined formally.
///
/// Identifiers are unique across all dimensions. Declaration order within a
/// dimension fixes every matrix basis built from the presentation.
class Presentation {
public:
    struct Cell {
        std::string name;
        std::vector<SimplexWord> faces; // empty for vertices
    };

    Presentation() = default;

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Highest dimension with at least one nondegenerate simplex (-1 if empty).
    int dimension() const noexcept
    {
        for (int d = static_cast<int>(cells_.size()) - 1; d >= 0; --d)
            if (!cells_[d].empty())
                return d;
        return -1;
    }

    int cell_count(int dim) const noexcept
    {
        return dim >= 0 && dim < static_cast<int>(cells_.size()) ? static_cast<int>(cells_[dim].size())
                                                                  : 0;
    }

    std::size_t total_cells() const noexcept
    {
        std::size_t n = 0;
        for (const auto& level : cells_)
            n += level.size();
        return n;
    }

    std::vector<int> counts() const
    {
        std::vector<int> out;
        for (int d = 0; d <= dimension(); ++d)
            out.push_back(cell_count(d));
        return out;
    }

    const Cell& cell(CellRef c) const
    {
        if (!contains(c))
            throw RangeError("no cell (" + std::to_string(c.dim) + "," + std::to_string(c.index) + ")");
        return cells_[c.dim][c.index];
    }

    const std::string& cell_name(CellRef c) const { return cell(c).name; }

    bool contains(CellRef c) const noexcept
    {
        return c.dim >= 0 && c.dim < static_cast<int>(cells_.size()) && c.index >= 0 &&
               c.index < static_cast<int>(cells_[c.dim].size());
    }

    std::optional<CellRef> find(std::string_view name) const
    {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end())
            return std::nullopt;
        return it->second;
    }

    CellRef at(std::string_view name) const
    {
        auto c = find(name);
        if (!c)
            throw RangeError("unknown simplex '" + std::string(name) + "'");
        return *c;
    }

    /// Cells of one dimension in declaration order.
    std::vector<CellRef> cells(int dim) const
    {
        std::vector<CellRef> out;
        for (int i = 0; i < cell_count(dim); ++i)
            out.push_back({dim, i});
        return out;
    }

    /// Stored face d_i of a nondegenerate simplex.
    const SimplexWord& base_face(CellRef c, int i) const
    {
        const auto& faces = cell(c).faces;
        if (i < 0 || i >= static_cast<int>(faces.size()))
            throw MalformedWord("d_" + std::to_string(i) + " of '" + cell(c).name + "'");
        return faces[i];
    }

    /// d_i of an arbitrary simplex word.
    SimplexWord face(const SimplexWord& w, int i) const
    {
        return kanforge::face(w, i, [this](CellRef c, int k) { return base_face(c, k); });
    }

    /// Vertex `v` (0 <= v <= dim) of a simplex, as a vertex cell.
    CellRef vertex(const SimplexWord& w, int v) const
    {
        SimplexWord cur = w;
        // drop every vertex above v, then every vertex below it
        for (int top = cur.dim(); top > v; --top)
            cur = face(cur, top);
        for (int k = 0; k < v; ++k)
            cur = face(cur, 0);
        return cur.base();
    }

    /// The 1-dimensional face spanned by vertices a < b of w.
    SimplexWord edge(const SimplexWord& w, int a, int b) const
    {
        SimplexWord cur = w;
        for (int idx = w.dim(); idx >= 0; --idx) {
            if (idx == a || idx == b)
                continue;
            cur = face(cur, idx);
        }
        return cur;
    }

    /// Name for display: base name with its degeneracy prefix.
    std::string word_name(const SimplexWord& w) const
    {
        std::string prefix;
        for (int d : w.degeneracies())
            prefix += "s" + std::to_string(d);
        const std::string& base = cell_name(w.base());
        return prefix.empty() ? base : prefix + "(" + base + ")";
    }

    /// If set, the presentation is the truncation of an infinite simplicial
    /// set at this dimension.
    const std::optional<int>& truncated_at() const noexcept { return truncated_at_; }
    void set_truncated_at(std::optional<int> t) { truncated_at_ = t; }

    bool operator==(const Presentation& other) const
    {
        if (name_ != other.name_ || truncated_at_ != other.truncated_at_ ||
            dimension() != other.dimension())
            return false;
        for (int d = 0; d <= dimension(); ++d) {
            if (cell_count(d) != other.cell_count(d))
                return false;
            for (int i = 0; i < cell_count(d); ++i) {
                const auto& a = cells_[d][i];
                const auto& b = other.cells_[d][i];
                if (a.name != b.name || a.faces != b.faces)
                    return false;
            }
        }
        return true;
    }

private:
    friend class PresentationBuilder;

    std::string name_;
    std::vector<std::vector<Cell>> cells_;
    std::unordered_map<std::string, CellRef> by_name_;
    std::optional<int> truncated_at_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

ValidationReport validate(const Presentation& K);

/// Incremental construction of a Presentation.
class PresentationBuilder {
public:
    explicit PresentationBuilder(std::string name = {}) { result_.name_ = std::move(name); }

    explicit PresentationBuilder(const Presentation& start) : result_(start) {}

    CellRef add_vertex(const std::string& name) { return add_cell(name, 0, {}); }

    /// Add a nondegenerate simplex of dimension faces.size() - 1 (>= 1).
    CellRef add_simplex(const std::string& name, std::vector<SimplexWord> faces)
    {
        if (faces.size() < 2)
            throw InvalidParameters("a simplex of positive dimension needs at least two faces");
        const int dim = static_cast<int>(faces.size()) - 1;
        return add_cell(name, dim, std::move(faces));
    }

    CellRef add_simplex_by_names(const std::string& name, const std::vector<std::string>& face_names)
    {
        std::vector<SimplexWord> faces;
        for (const auto& f : face_names)
            faces.emplace_back(result_.at(f));
        return add_simplex(name, std::move(faces));
    }

    bool has(std::string_view name) const { return result_.find(name).has_value(); }
    const Presentation& current() const noexcept { return result_; }

    void set_truncated_at(std::optional<int> t) { result_.truncated_at_ = t; }

    /// Finish; throws ValidationError listing the issues when invalid.
    Presentation build() const
    {
        auto report = validate(result_);
        if (!report.ok()) {
            std::string msg = "invalid presentation '" + result_.name_ + "':";
            for (const auto& issue : report.issues)
                msg += " " + issue.message + ";";
            throw ValidationError(msg);
        }
        return result_;
    }

    PresentationPtr build_shared() const { return std::make_shared<const Presentation>(build()); }

    /// Finish without validation (used to construct deliberately broken data).
    Presentation build_unchecked() const { return result_; }

private:
    CellRef add_cell(const std::string& name, int dim, std::vector<SimplexWord> faces)
    {
        if (name.empty())
            throw InvalidParameters("simplex identifiers must be non-empty");
        if (result_.by_name_.count(name))
            throw InvalidParameters("duplicate simplex identifier '" + name + "'");
        if (static_cast<int>(result_.cells_.size()) <= dim)
            result_.cells_.resize(dim + 1);
        CellRef ref{dim, static_cast<int>(result_.cells_[dim].size())};
        result_.cells_[dim].push_back({name, std::move(faces)});
        result_.by_name_.emplace(name, ref);
        return ref;
    }

    Presentation result_;
};

/// Exhaustive check of the face data: every face is a well-formed word on a
/// declared simplex of the right dimension, and d_i d_j = d_{j-1} d_i holds
/// for every nondegenerate simplex and all i < j.
inline ValidationReport validate(const Presentation& K)
{
    ValidationReport report;
    bool references_ok = true;
    for (int d = 1; d <= K.dimension(); ++d) {
        for (int idx = 0; idx < K.cell_count(d); ++idx) {
            const auto& c = K.cell({d, idx});
            if (static_cast<int>(c.faces.size()) != d + 1) {
                report.issues.push_back({ValidationIssue::Kind::dimension_mismatch, c.name, -1, -1,
                                         "'" + c.name + "' has " + std::to_string(c.faces.size()) +
                                             " faces, expected " + std::to_string(d + 1)});
                references_ok = false;
                continue;
            }
            for (int i = 0; i <= d; ++i) {
                const auto& w = c.faces[i];
                if (!K.contains(w.base())) {
                    report.issues.push_back({ValidationIssue::Kind::dangling_face, c.name, i, -1,
                                             "face d_" + std::to_string(i) + " of '" + c.name +
                                                 "' references an undeclared simplex"});
                    references_ok = false;
                } else if (w.dim() != d - 1) {
                    report.issues.push_back({ValidationIssue::Kind::dimension_mismatch, c.name, i, -1,
                                             "face d_" + std::to_string(i) + " of '" + c.name +
                                                 "' has dimension " + std::to_string(w.dim())});
                    references_ok = false;
                }
            }
        }
    }
    if (!references_ok)
        return report;

    for (int d = 2; d <= K.dimension(); ++d) {
        for (int idx = 0; idx < K.cell_count(d); ++idx) {
            const SimplexWord x(CellRef{d, idx});
            const auto& name = K.cell_name(x.base());
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    SimplexWord lhs = K.face(K.face(x, j), i);
                    SimplexWord rhs = K.face(K.face(x, i), j - 1);
                    if (lhs != rhs) {
                        report.issues.push_back(
                            {ValidationIssue::Kind::identity_violation, name, i, j,
                             "d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                                 std::to_string(j - 1) + " d_" + std::to_string(i) + " on '" + name +
                                 "' (" + K.word_name(lhs) + " vs " + K.word_name(rhs) + ")"});
                    }
                }
            }
        }
    }
    return report;
}

/// Every simplex (degenerate or not) of dimension n, ordered by base
/// dimension descending, then base declaration order, then degeneracy list.
inline std::vector<SimplexWord> all_simplices(const Presentation& K, int n)
{
    std::vector<SimplexWord> out;
    if (n < 0)
        return out;
    for (int m = std::min(n, K.dimension()); m >= 0; --m) {
        const auto patterns = degeneracy_patterns(m, n);
        for (int idx = 0; idx < K.cell_count(m); ++idx)
            for (const auto& p : patterns)
                out.emplace_back(CellRef{m, idx}, p);
    }
    return out;
}

/// Number of simplices of dimension n (degenerate ones included).
inline std::size_t simplex_count(const Presentation& K, int n)
{
    std::size_t total = 0;
    for (int m = std::min(n, K.dimension()); m >= 0; --m) {
        // binomial(n, n - m)
        std::size_t b = 1;
        for (int t = 1; t <= n - m; ++t)
            b = b * static_cast<std::size_t>(m + t) / static_cast<std::size_t>(t);
        total += b * static_cast<std::size_t>(K.cell_count(m));
    }
    return total;
}

} // namespace kanforge
