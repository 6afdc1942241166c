#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/smith_normal_form.hpp"

namespace kanforge {

/// Finitely generated abelian group ℤ^rank ⊕ ℤ/d_1 ⊕ ... with d_1 | d_2 | ...
struct FGAbelianGroup {
    int rank = 0;
    std::vector<Integer> torsion;

    static FGAbelianGroup free(int r) { return {r, {}}; }
    static FGAbelianGroup cyclic(long long d)
    {
        if (d == 0)
            return free(1);
        if (d == 1 || d == -1)
            return {};
        return {0, {Integer(d < 0 ? -d : d)}};
    }

    /// Cokernel of a relation matrix (rows: relations, columns: generators).
    static FGAbelianGroup from_relations(const IntMatrix& relations)
    {
        const auto snf = smith_normal_form(relations, false);
        FGAbelianGroup g;
        g.rank = relations.cols() - snf.rank;
        for (const auto& d : snf.invariant_factors())
            if (d != 1)
                g.torsion.push_back(d);
        return g;
    }

    bool is_trivial() const noexcept { return rank == 0 && torsion.empty(); }

    /// Number of cyclic summands.
    int summands() const noexcept { return rank + static_cast<int>(torsion.size()); }

    std::string to_string() const
    {
        std::vector<std::string> parts;
        if (rank == 1)
            parts.push_back("Z");
        else if (rank > 1)
            parts.push_back("Z^" + std::to_string(rank));
        for (const auto& d : torsion)
            parts.push_back("Z/" + d.str());
        if (parts.empty())
            return "0";
        std::string out = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i)
            out += " + " + parts[i];
        return out;
    }

    bool operator==(const FGAbelianGroup&) const = default;
};

/// The group Z / B for lattices B ⊆ Z ⊆ ℤ^n, with explicit generators and
/// a coordinate map. Summands are listed torsion first (in divisibility
/// order), then the free part.
class Subquotient {
public:
    Subquotient() = default;

    /// `cycle_basis`: n × k matrix whose columns are a basis of Z.
    /// `boundary_generators`: n × b matrix whose columns generate B.
    Subquotient(IntMatrix cycle_basis, const IntMatrix& boundary_generators)
        : basis_(std::move(cycle_basis)), basis_snf_(smith_normal_form(basis_))
    {
        const int k = basis_.cols();
        IntMatrix rel(k, boundary_generators.cols());
        for (int c = 0; c < boundary_generators.cols(); ++c) {
            auto z = solve_integer(basis_snf_, boundary_generators.column(c));
            if (!z)
                throw InternalConsistencyError("boundary lattice is not contained in the cycle lattice");
            for (int r = 0; r < k; ++r)
                rel(r, c) = (*z)[r];
        }
        rel_snf_ = smith_normal_form(rel);
        for (int i = 0; i < k; ++i) {
            Integer d = i < rel_snf_.rank ? rel_snf_.D(i, i) : Integer(0);
            if (d == 1)
                continue;
            summand_index_.push_back(i);
            summand_order_.push_back(d);
            summand_sign_.push_back(1);
            if (d == 0)
                ++group_.rank;
            else
                group_.torsion.push_back(d);
        }
        // orient each generator so that its first nonzero entry is positive
        const auto gens = generators();
        for (std::size_t s = 0; s < gens.size(); ++s)
            for (const auto& x : gens[s])
                if (x != 0) {
                    summand_sign_[s] = x < 0 ? -1 : 1;
                    break;
                }
    }

    const FGAbelianGroup& group() const noexcept { return group_; }

    /// Order of each summand (0 for ℤ).
    const std::vector<Integer>& summand_orders() const noexcept { return summand_order_; }

    /// Representative in ℤ^n of the generator of each summand.
    std::vector<IntVector> generators() const
    {
        const IntMatrix lifted = basis_ * rel_snf_.U_inv;
        std::vector<IntVector> out;
        for (std::size_t s = 0; s < summand_index_.size(); ++s) {
            auto g = lifted.column(summand_index_[s]);
            if (s < summand_sign_.size() && summand_sign_[s] < 0)
                for (auto& x : g)
                    x = -x;
            out.push_back(std::move(g));
        }
        return out;
    }

    /// Coordinates of v in the summands (torsion ones reduced into
    /// [0, d)); nullopt when v is not in Z.
    std::optional<IntVector> coordinates(const IntVector& v) const
    {
        auto z = solve_integer(basis_snf_, v);
        if (!z)
            return std::nullopt;
        const IntVector y = rel_snf_.U * *z;
        IntVector out;
        for (std::size_t s = 0; s < summand_index_.size(); ++s) {
            const Integer& d = summand_order_[s];
            const Integer value = summand_sign_[s] * y[summand_index_[s]];
            out.push_back(d == 0 ? value : mod_floor(value, d));
        }
        return out;
    }

    bool contains(const IntVector& v) const { return solve_integer(basis_snf_, v).has_value(); }

    /// v ∈ B?
    bool is_boundary(const IntVector& v) const
    {
        auto c = coordinates(v);
        if (!c)
            return false;
        for (const auto& x : *c)
            if (x != 0)
                return false;
        return true;
    }

    int ambient_dimension() const noexcept { return basis_.rows(); }

private:
    IntMatrix basis_;
    SmithDecomposition basis_snf_;
    SmithDecomposition rel_snf_;
    std::vector<int> summand_index_;
    std::vector<Integer> summand_order_;
    std::vector<int> summand_sign_;
    FGAbelianGroup group_;
};

} // namespace kanforge
