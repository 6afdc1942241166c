#pragma once

// Explicit self-maps of Δ² and 𝔸² used to straighten and glue smooth simplices.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "kanforge/smooth/affine.hpp"
#include "kanforge/smooth/bump.hpp"

namespace kanforge::smooth {

using Value = std::vector<double>;
/// A sampled map Δ¹ → ℝ^d, parametrized by t with (0) at t = 0.
using Path = std::function<Value(double)>;
using PlanarMap = std::function<Value(const AffinePoint&)>;

inline double value_distance(const Value& a, const Value& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("values of different dimensions");
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct FParams {
    Window mu = default_mu_window;
    Window phi = default_phi_window;
};

inline void require_in_simplex(const AffinePoint& x, int p)
{
    if (x.dim() != p)
        throw DimensionMismatch("expected a point of 𝔸^" + std::to_string(p));
    if (!x.inside())
        throw InvalidParameters("point " + x.to_string() + " lies outside the simplex");
}

inline void require_epsilon(double eps)
{
    if (!(eps > 0 && eps < 0.5))
        throw InvalidParameters("epsilon must lie in (0, 1/2)");
}

namespace detail {

// f(x, y) = (φ(y)μ(x) + (1 - φ(y))x, y) in the chart (x_2/(1 - x_1), x_1).
inline AffinePoint straighten(const AffinePoint& p, double phi_y, Window mu)
{
    const double y = p[1];
    const double x = p[2] / (1.0 - y);
    const double fx = phi_y * bump_mu(x, mu) + (1.0 - phi_y) * x;
    if (fx == x)
        return p;
    return AffinePoint{1.0 - y - fx * (1.0 - y), y, fx * (1.0 - y)};
}

} // namespace detail

/// The map F: identity where x_1 >= 1/2, the chart map f below. Its face
/// restrictions are id, μ, id.
inline AffinePoint map_F(const AffinePoint& p, const FParams& params = {})
{
    require_in_simplex(p, 2);
    if (p[1] >= 0.5)
        return p;
    return detail::straighten(p, bump_phi(p[1], params.phi), params.mu);
}

/// The variant on all of 𝔸², with U = {-1/2 < x_1 < 1/2} and a symmetric φ.
inline AffinePoint map_F_affine(const AffinePoint& p, const FParams& params = {})
{
    if (p.dim() != 2)
        throw DimensionMismatch("expected a point of 𝔸^2");
    if (p[1] <= -0.5 || p[1] >= 0.5)
        return p;
    return detail::straighten(p, bump_phi_affine(p[1], params.phi), params.mu);
}

/// s¹(x_0, x_1, x_2) = (x_0, x_1 + x_2).
inline AffinePoint degeneracy_s1(const AffinePoint& p) { return AffinePoint{p[0], p[1] + p[2]}; }

/// s(x_0, x_1, x_2) = (x_0 + x_2, x_1), which reverses the 0-th face.
inline AffinePoint degeneracy_s(const AffinePoint& p) { return AffinePoint{p[0] + p[2], p[1]}; }

/// The Δ¹ parameter of a point (1 - t, t).
inline double interval_parameter(const AffinePoint& p) { return p[1]; }

/// σ ∘ s¹ ∘ F: a 2-simplex with d_0 constant, d_2 = σ and d_1 = σ ∘ μ.
inline PlanarMap tame_composite(Path sigma, FParams params = {})
{
    return [sigma = std::move(sigma), params](const AffinePoint& p) {
        return sigma(interval_parameter(degeneracy_s1(map_F(p, params))));
    };
}

/// The affine analogue of tame_composite, defined on all of 𝔸².
inline PlanarMap tame_composite_affine(Path sigma, FParams params = {})
{
    return [sigma = std::move(sigma), params](const AffinePoint& p) {
        return sigma(interval_parameter(degeneracy_s1(map_F_affine(p, params))));
    };
}

/// σ ∘ s.
inline PlanarMap reversing_composite(Path sigma)
{
    return [sigma = std::move(sigma)](const AffinePoint& p) { return sigma(interval_parameter(degeneracy_s(p))); };
}

/// Retraction of Δ² onto the horn Λ²₁ = {x_0 = 0} ∪ {x_2 = 0}, sliding
/// along (1, -2, 1) until one of the outer coordinates vanishes.
inline AffinePoint retraction_r(const AffinePoint& p)
{
    require_in_simplex(p, 2);
    const double m = std::min(p[0], p[2]);
    if (m <= 0)
        return p;
    const double x0 = p[0] - m;
    const double x2 = p[2] - m;
    return AffinePoint{x0, 1.0 - x0 - x2, x2};
}

inline bool on_horn_21(const AffinePoint& p, double tol = sum_tolerance)
{
    return p.inside(tol) && (std::abs(p[0]) <= tol || std::abs(p[2]) <= tol);
}

/// (σ_2 + σ_1) ∘ r, with σ_1 on the face {x_2 = 0} and σ_2 on {x_0 = 0}.
/// The paths must agree at the vertex (1).
inline PlanarMap horn_composite(Path sigma1, Path sigma2)
{
    if (value_distance(sigma1(1.0), sigma2(0.0)) > 1e-12)
        throw InvalidParameters("horn paths do not meet at the vertex (1)");
    return [s1 = std::move(sigma1), s2 = std::move(sigma2)](const AffinePoint& p) {
        const auto q = retraction_r(p);
        return q[2] == 0 ? s1(q[1]) : s2(q[2]);
    };
}

/// The i-th face of a planar map, as a path.
inline Path face_path(PlanarMap f, int i)
{
    return [f = std::move(f), i](double t) { return f(coface(interval_point(t), i)); };
}

/// V_i(ε) = {x ∈ Δ² | x_i > 1 - ε}.
inline bool in_V(const AffinePoint& p, int i, double eps) { return p[i] > 1.0 - eps; }

/// Vertex collapse: V_i(ε/2) goes to (i), the identity off ∪V_i(ε), and a
/// radial ramp from (i) in between.
inline AffinePoint psi2_0(const AffinePoint& p, double eps)
{
    require_epsilon(eps);
    require_in_simplex(p, 2);
    for (int i = 0; i < 3; ++i) {
        if (!in_V(p, i, eps))
            continue;
        const double u = 1.0 - p[i];
        if (u < eps / 2)
            return AffinePoint::vertex(2, i);
        const double scale = ramp(u, eps / 2, eps);
        if (scale == 1.0)
            return p;
        std::vector<double> out(3);
        for (int j = 0; j < 3; ++j)
            out[j] = j == i ? 0.0 : p[j] * scale;
        out[i] = 1.0 - out[(i + 1) % 3] - out[(i + 2) % 3];
        return AffinePoint(std::move(out));
    }
    return p;
}

/// Geometry of the edge push: within δ = ε/8 of the edge opposite (i) and
/// at least 3ε/8 from both of its ends the push is a projection from (i).
struct EdgeZones {
    double eps;
    double delta() const { return eps / 8; }
    double inner_end() const { return eps / 4; }
    double outer_end() const { return 3 * eps / 8; }
};

inline double edge_min(const AffinePoint& p, int i) { return std::min(p[(i + 1) % 3], p[(i + 2) % 3]); }

/// Where the edge push moves points onto the edge opposite (i).
inline bool in_edge_zone(const AffinePoint& p, int i, double eps)
{
    const EdgeZones z{eps};
    return p[i] < z.delta() && edge_min(p, i) > z.outer_end();
}

/// The intersection of the face opposite (i) with the line through (i) and p.
inline AffinePoint project_from_vertex(const AffinePoint& p, int i)
{
    std::vector<double> out(3);
    const double denom = 1.0 - p[i];
    for (int j = 0; j < 3; ++j)
        out[j] = j == i ? 0.0 : p[j] / denom;
    out[(i + 1) % 3] = 1.0 - out[(i + 2) % 3];
    return AffinePoint(std::move(out));
}

/// Edge push: near each edge and away from the vertices, slide points along
/// rays from the opposite vertex onto the edge. Identity on sk_1.
inline AffinePoint psi2_1(const AffinePoint& p, double eps)
{
    require_epsilon(eps);
    require_in_simplex(p, 2);
    const EdgeZones z{eps};
    for (int i = 0; i < 3; ++i) {
        const double a = p[i];
        const double m = edge_min(p, i);
        if (!(a > 0 && a < 2 * z.delta() && m > z.inner_end()))
            continue;
        const double strength = ramp(m, z.inner_end(), z.outer_end()) * (1.0 - ramp(a, z.delta(), 2 * z.delta()));
        if (strength == 0.0)
            return p;
        if (strength == 1.0)
            return project_from_vertex(p, i);
        const double rho = a * (1.0 - strength);
        std::vector<double> out(3);
        for (int j = 0; j < 3; ++j)
            out[j] = j == i ? rho : p[j] * (1.0 - rho) / (1.0 - a);
        return AffinePoint(std::move(out));
    }
    return p;
}

/// ψ² = ψ²₀ ∘ ψ²₁.
inline AffinePoint psi2(const AffinePoint& p, double eps) { return psi2_0(psi2_1(p, eps), eps); }

/// Inside the union of the regions where ψ²₀ or ψ²₁ may move points.
inline bool in_psi2_support(const AffinePoint& p, double eps)
{
    const EdgeZones z{eps};
    for (int i = 0; i < 3; ++i) {
        if (in_V(p, i, eps))
            return true;
        if (p[i] < 2 * z.delta() && edge_min(p, i) > z.inner_end())
            return true;
    }
    return false;
}

/// Σ ∘ ψ².
inline PlanarMap psi2_modify(PlanarMap sigma, double eps)
{
    require_epsilon(eps);
    return [sigma = std::move(sigma), eps](const AffinePoint& p) { return sigma(psi2(p, eps)); };
}

} // namespace kanforge::smooth
