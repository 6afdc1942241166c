#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/abelian_group.hpp"
#include "kanforge/chain_complex.hpp"

namespace kanforge {

/// Coefficient ring: ℤ (modulus 0) or ℤ/n.
struct Coefficients {
    Integer modulus = 0;

    static Coefficients integers() { return {}; }
    static Coefficients mod(long long n)
    {
        if (n < 2)
            throw InvalidParameters("coefficient modulus must be at least 2");
        return {Integer(n)};
    }

    bool is_integral() const noexcept { return modulus == 0; }
    std::string to_string() const { return is_integral() ? "Z" : "Z/" + modulus.str(); }

    Integer reduce(const Integer& v) const { return is_integral() ? v : mod_floor(v, modulus); }
    IntVector reduce(IntVector v) const
    {
        for (auto& x : v)
            x = reduce(x);
        return v;
    }

    bool operator==(const Coefficients&) const = default;
};

/// Basis of the lattice spanned by the columns of G.
inline IntMatrix lattice_basis(const IntMatrix& G)
{
    const auto s = smith_normal_form(G);
    IntMatrix out(G.rows(), s.rank);
    for (int i = 0; i < s.rank; ++i)
        for (int r = 0; r < G.rows(); ++r)
            out(r, i) = s.U_inv(r, i) * s.D(i, i);
    return out;
}

/// Subquotient {x : A x ≡ 0} / (im B [+ N ℤ^k]) for the coefficient ring.
inline Subquotient coefficient_subquotient(const IntMatrix& A, const IntMatrix& B, const Coefficients& coeff)
{
    const int k = A.cols();
    if (coeff.is_integral())
        return Subquotient(kernel_basis(smith_normal_form(A)), B);
    IntMatrix scaled(k, k);
    for (int i = 0; i < k; ++i)
        scaled(i, i) = coeff.modulus;
    IntMatrix mod_rows(A.rows(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        mod_rows(i, i) = coeff.modulus;
    // x with A x ∈ N ℤ^m: project the kernel of [A | N I] to its first k coordinates
    const IntMatrix K = kernel_basis(smith_normal_form(A.hconcat(mod_rows)));
    const IntMatrix cycles = lattice_basis(K.top_rows(k));
    return Subquotient(cycles, B.hconcat(scaled));
}

/// One degree of (co)homology with its lattice data.
struct HomologyGroup {
    int degree = 0;
    Coefficients coeff;
    bool reliable = true;
    Subquotient lattice;

    const FGAbelianGroup& group() const { return lattice.group(); }
};

inline void check_degree(const ChainComplex& C, int n)
{
    if (n < 0 || n > C.top_degree())
        throw RangeError("degree " + std::to_string(n) + " outside the complex (top degree " +
                         std::to_string(C.top_degree()) + ")");
}

inline HomologyGroup homology_in_degree(const ChainComplex& C, int n, const Coefficients& coeff = {})
{
    check_degree(C, n);
    return {n, coeff, C.reliable(n), coefficient_subquotient(C.boundary(n), C.boundary(n + 1), coeff)};
}

/// H_n for n = 0..C.top_degree().
inline std::vector<HomologyGroup> homology(const ChainComplex& C, const Coefficients& coeff = {})
{
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= C.top_degree(); ++n)
        out.push_back(homology_in_degree(C, n, coeff));
    return out;
}

/// H^n = ker δ^n / im δ^{n-1} with δ^n = ∂_{n+1}^T.
inline HomologyGroup cohomology_in_degree(const ChainComplex& C, int n, const Coefficients& coeff = {})
{
    check_degree(C, n);
    return {n, coeff, C.reliable(n),
            coefficient_subquotient(C.boundary(n + 1).transpose(), C.boundary(n).transpose(), coeff)};
}

inline std::vector<HomologyGroup> cohomology(const ChainComplex& C, const Coefficients& coeff = {})
{
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= C.top_degree(); ++n)
        out.push_back(cohomology_in_degree(C, n, coeff));
    return out;
}

/// A cohomology class: a cocycle on the degree basis and its coordinates
/// in the summands of the computed group.
struct CochainClass {
    int degree = 0;
    Coefficients coeff;
    IntVector representative;
    IntVector coordinates;

    bool is_zero() const
    {
        for (const auto& c : coordinates)
            if (c != 0)
                return false;
        return true;
    }
};

/// Class of a cochain in H; throws CocycleViolation if it is not a cocycle.
inline CochainClass cohomology_class(const HomologyGroup& H, IntVector cochain)
{
    cochain = H.coeff.reduce(std::move(cochain));
    auto coords = H.lattice.coordinates(cochain);
    if (!coords)
        throw CocycleViolation("cochain in degree " + std::to_string(H.degree) + " is not a cocycle over " +
                               H.coeff.to_string());
    return {H.degree, H.coeff, std::move(cochain), std::move(*coords)};
}

/// Representative cocycles of the summand generators of H.
inline std::vector<CochainClass> generator_classes(const HomologyGroup& H)
{
    std::vector<CochainClass> out;
    for (auto& g : H.lattice.generators())
        out.push_back(cohomology_class(H, std::move(g)));
    return out;
}

/// "H0=Z" style summary lines.
inline std::string format_groups(const std::vector<HomologyGroup>& groups, const std::string& prefix)
{
    std::string out;
    for (const auto& h : groups) {
        out += prefix + std::to_string(h.degree) + "=" + h.group().to_string();
        if (!h.reliable)
            out += " (truncated)";
        out += "\n";
    }
    return out;
}

} // namespace kanforge
