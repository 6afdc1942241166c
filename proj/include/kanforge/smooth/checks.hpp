#pragma once

// Grid property checks for the smooth constructions, as line-oriented reports.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kanforge/smooth/extension.hpp"

namespace kanforge::smooth {

struct PropertyLine {
    std::string name;
    double value;     // measured error or violation count
    double tolerance; // value must not exceed this
    bool ok() const { return value <= tolerance; }
};

struct PropertyReport {
    std::vector<PropertyLine> lines;

    bool ok() const
    {
        for (const auto& l : lines)
            if (!l.ok())
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string out;
        char buf[64];
        for (const auto& l : lines) {
            std::snprintf(buf, sizeof buf, "%.3e", l.value);
            out += l.name + ": " + buf + (l.ok() ? "" : " (exceeds tolerance)") + "\n";
        }
        return out;
    }
};

/// The sample target used by the composite checks: a smooth path and a
/// smooth surface in ℝ², neither constant anywhere.
inline Value sample_path_value(double t) { return {std::cos(5 * t), t * t * t - t}; }
inline Value sample_surface_value(const AffinePoint& p)
{
    return {std::sin(3 * p[1]) + p[2] * p[2], std::cos(2 * p[0]) * p[2]};
}

inline PropertyReport check_mu(int n, Window w = default_mu_window)
{
    double plateau = 0, decreases = 0;
    double prev = 0;
    for (int k = 0; k <= n; ++k) {
        const double t = -0.5 + 2.0 * k / n;
        const double v = bump_mu(t, w);
        if (t <= w.a)
            plateau = std::max(plateau, std::abs(v));
        if (t >= w.b)
            plateau = std::max(plateau, std::abs(v - 1));
        if (k > 0 && v < prev)
            ++decreases;
        prev = v;
    }
    return {{{"plateau error", plateau, 0.0}, {"monotonicity violations", decreases, 0.0}}};
}

inline PropertyReport check_F(int n, const FParams& params = {})
{
    double face[3] = {0, 0, 0}, outside = 0, escaped = 0;
    for (int k = 0; k <= 5 * n; ++k) {
        const auto x = interval_point(static_cast<double>(k) / (5 * n));
        face[0] = std::max(face[0], max_distance(map_F(coface(x, 0), params), coface(x, 0)));
        face[1] = std::max(face[1], max_distance(map_F(coface(x, 1), params),
                                                 coface(interval_point(bump_mu(x[1], params.mu)), 1)));
        face[2] = std::max(face[2], max_distance(map_F(coface(x, 2), params), coface(x, 2)));
    }
    for (const auto& p : simplex_grid(n)) {
        const auto q = map_F(p, params);
        if (!q.inside())
            ++escaped;
        if (p[1] >= 0.5)
            outside = std::max(outside, max_distance(q, p));
    }
    return {{{"face 0 vs id", face[0], 1e-12},
             {"face 1 vs mu", face[1], 1e-12},
             {"face 2 vs id", face[2], 1e-12},
             {"identity where x1 >= 1/2", outside, 0.0},
             {"points leaving the simplex", escaped, 0.0}}};
}

inline PropertyReport check_r(int n)
{
    double outside = 0, idem = 0, moved = 0;
    for (const auto& p : simplex_grid(n)) {
        const auto q = retraction_r(p);
        if (!on_horn_21(q))
            ++outside;
        idem = std::max(idem, max_distance(retraction_r(q), q));
        if (on_horn_21(p, 0.0))
            moved = std::max(moved, max_distance(q, p));
    }
    return {{{"points off the horn", outside, 0.0}, {"idempotence error", idem, 1e-10}, {"motion on the horn", moved, 0.0}}};
}

inline PropertyReport check_psi2(double eps, int n)
{
    double collapse = 0, outside = 0, faces = 0;
    for (const auto& p : simplex_grid(n)) {
        const auto q = psi2(p, eps);
        for (int i = 0; i < 3; ++i)
            if (in_V(p, i, eps / 2))
                collapse = std::max(collapse, max_distance(q, AffinePoint::vertex(2, i)));
        if (!in_psi2_support(p, eps))
            outside = std::max(outside, max_distance(q, p));
        for (unsigned f = 1; f < 8; ++f)
            if (p.in_closed_face(f, 0.0) && !q.in_closed_face(f, 1e-15))
                ++faces;
    }
    return {{{"vertex collapse error", collapse, 0.0},
             {"identity error off the supports", outside, 1e-12},
             {"closed-simplex violations", faces, 0.0}}};
}

/// σ ∘ s¹ ∘ F: d_0 constant, d_2 = σ, d_1 tame.
inline PropertyReport check_tame_composite(int n, const FParams& params = {})
{
    const auto Sigma = tame_composite(sample_path_value, params);
    const auto d0 = sample_path(face_path(Sigma, 0), 5 * n);
    const auto d2 = sample_path(face_path(Sigma, 2), 5 * n);
    double e0 = 0, e2 = 0;
    for (std::size_t k = 0; k < d0.values.size(); ++k) {
        e0 = std::max(e0, value_distance(d0.values[k], sample_path_value(1.0)));
        e2 = std::max(e2, value_distance(d2.values[k], sample_path_value(d2.parameter(k))));
    }
    const double delta = std::min(params.mu.a, 1.0 - params.mu.b) * 0.9;
    const bool tame = tameness_check(sample_path(face_path(Sigma, 1), 5 * n), delta);
    return {{{"d0 constant error", e0, 1e-12}, {"d2 vs sigma error", e2, 1e-12}, {"d1 not tame", tame ? 0.0 : 1.0, 0.0}}};
}

/// Σ' = Σ ∘ ψ² extended to 𝔸²: constant on the corners, ray-constant on the
/// strips, continuous across the seams.
inline PropertyReport check_extension(double eps, int n)
{
    const auto modified = psi2_modify(sample_surface_value, eps);
    const SigmaExtension ext(modified, eps, n);
    double corner = 0, ray = 0, seam = 0;
    const double h = 1e-9;
    for (int k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / n;
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, l = (i + 2) % 3;
            // corner A_i: x_j, x_l < 0
            std::vector<double> a(3);
            a[j] = -t;
            a[l] = -0.5 * t - 1e-3;
            a[i] = 1 - a[j] - a[l];
            corner = std::max(corner, value_distance(ext(AffinePoint(a)), modified(AffinePoint::vertex(2, i))));
            // strip B_i: a point on edge {x_i = 0} pushed out along the ray from (i)
            std::vector<double> e(3);
            e[j] = t;
            e[l] = 1 - t;
            std::vector<double> out(3);
            for (int m = 0; m < 3; ++m)
                out[m] = (m == i ? 1.0 : 0.0) + 1.7 * (e[m] - (m == i ? 1.0 : 0.0));
            ray = std::max(ray, value_distance(ext(AffinePoint(out)), ext(AffinePoint(e))));
            std::vector<double> off = e;
            off[i] -= h;
            off[l] += h;
            seam = std::max(seam, value_distance(ext(AffinePoint(e)), ext(AffinePoint(off))));
        }
    }
    return {{{"corner constancy error", corner, 1e-12}, {"ray constancy error", ray, 1e-12}, {"seam jump", seam, 1e-6}}};
}

} // namespace kanforge::smooth
