#pragma once

// Smooth transition functions built from exp(-1/t).

#include <cmath>

#include "kanforge/errors.hpp"

namespace kanforge::smooth {

/// exp(-1/t) for t > 0, zero otherwise.
inline double flat_exp(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }

/// Smooth ramp: 0 for t <= a, 1 for t >= b, strictly increasing between.
inline double ramp(double t, double a, double b)
{
    if (!(a < b))
        throw InvalidParameters("ramp window needs a < b");
    if (t <= a)
        return 0.0;
    if (t >= b)
        return 1.0;
    const double u = flat_exp(t - a);
    const double v = flat_exp(b - t);
    return u / (u + v);
}

struct Window {
    double a;
    double b;
};

/// Default transition windows for μ on [0, 1] and φ on [0, 1/2].
inline constexpr Window default_mu_window{0.25, 0.75};
inline constexpr Window default_phi_window{0.1, 0.4};

/// Non-decreasing μ with μ ≡ 0 left of the window and μ ≡ 1 right of it.
inline double bump_mu(double t, Window w = default_mu_window) { return ramp(t, w.a, w.b); }

/// Non-increasing φ: 1 near 0, 0 near 1/2. The window must sit inside (0, 1/2).
inline double bump_phi(double y, Window w = default_phi_window)
{
    if (!(0 < w.a && w.b < 0.5))
        throw InvalidParameters("phi window must lie inside (0, 1/2)");
    return 1.0 - ramp(y, w.a, w.b);
}

/// The symmetric affine variant on [-1/2, 1/2]: 1 near 0, 0 near ±1/2.
inline double bump_phi_affine(double y, Window w = default_phi_window) { return bump_phi(std::abs(y), w); }

} // namespace kanforge::smooth
