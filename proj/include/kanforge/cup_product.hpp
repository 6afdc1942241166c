#pragma once

#include "kanforge/homology.hpp"
#include "kanforge/presentation.hpp"

namespace kanforge {

/// Front p-face (vertices 0..p) of an n-simplex.
inline SimplexWord front_face(const Presentation& K, SimplexWord w, int p)
{
    for (int i = w.dim(); i > p; --i)
        w = K.face(w, i);
    return w;
}

/// Back q-face (vertices n-q..n) of an n-simplex.
inline SimplexWord back_face(const Presentation& K, SimplexWord w, int q)
{
    while (w.dim() > q)
        w = K.face(w, 0);
    return w;
}

/// Alexander-Whitney cup product of normalized cochains given on the
/// nondegenerate p- and q-cells: (a ∪ b)(x) = a(front_p x) · b(back_q x).
inline IntVector cup_cochains(const Presentation& K, int p, const IntVector& a, int q, const IntVector& b,
                              const Coefficients& coeff = {})
{
    const int n = p + q;
    check_dimension_cap(n, "cup product");
    auto value = [&](const IntVector& c, const SimplexWord& w) -> Integer {
        return w.is_degenerate() ? Integer(0) : c.at(w.base().index);
    };
    IntVector out(n <= K.dimension() ? K.cell_count(n) : 0);
    for (int x = 0; x < static_cast<int>(out.size()); ++x) {
        const SimplexWord w(CellRef{n, x});
        out[x] = coeff.reduce(value(a, front_face(K, w, p)) * value(b, back_face(K, w, q)));
    }
    return out;
}

/// [a] ∪ [b] as a class of `target`, which must be H^{p+q} over the same
/// coefficients.
inline CochainClass cup_product(const Presentation& K, const CochainClass& a, const CochainClass& b,
                                const HomologyGroup& target)
{
    if (!(a.coeff == b.coeff) || !(a.coeff == target.coeff))
        throw InvalidParameters("cup product of classes with different coefficients");
    if (target.degree != a.degree + b.degree)
        throw DimensionMismatch("cup product target has the wrong degree");
    return cohomology_class(target, cup_cochains(K, a.degree, a.representative, b.degree, b.representative, a.coeff));
}

/// The unit 0-cocycle (1 on every vertex).
inline IntVector unit_cochain(const Presentation& K)
{
    return IntVector(K.dimension() >= 0 ? K.cell_count(0) : 0, Integer(1));
}

} // namespace kanforge
