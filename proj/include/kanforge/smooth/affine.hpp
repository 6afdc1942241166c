#pragma once

// Points of the affine spaces {Σ x_i = 1} and the standard simplices inside them.

#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

#include "kanforge/errors.hpp"

namespace kanforge::smooth {

inline constexpr double sum_tolerance = 1e-12;

/// Barycentric coordinates (x_0, ..., x_p) of a point of 𝔸^p.
class AffinePoint {
public:
    AffinePoint() = default;

    explicit AffinePoint(std::vector<double> coords) : x_(std::move(coords))
    {
        if (x_.empty())
            throw InvalidParameters("an affine point needs at least one coordinate");
        double s = 0;
        for (double v : x_)
            s += v;
        if (std::abs(s - 1.0) > sum_tolerance)
            throw InvalidParameters("barycentric coordinates sum to " + std::to_string(s) + ", not 1");
    }

    AffinePoint(std::initializer_list<double> coords) : AffinePoint(std::vector<double>(coords)) {}

    /// The vertex (i) of 𝔸^p.
    static AffinePoint vertex(int p, int i)
    {
        std::vector<double> x(p + 1, 0.0);
        x.at(i) = 1.0;
        return AffinePoint(std::move(x));
    }

    static AffinePoint barycenter(int p) { return AffinePoint(std::vector<double>(p + 1, 1.0 / (p + 1))); }

    /// Build from the last p coordinates; x_0 absorbs the rounding.
    static AffinePoint from_tail(std::vector<double> tail)
    {
        double s = 0;
        for (double v : tail)
            s += v;
        tail.insert(tail.begin(), 1.0 - s);
        return AffinePoint(std::move(tail));
    }

    int dim() const noexcept { return static_cast<int>(x_.size()) - 1; }
    double operator[](int i) const { return x_.at(i); }
    const std::vector<double>& coords() const noexcept { return x_; }

    bool inside(double tol = sum_tolerance) const
    {
        for (double v : x_)
            if (v < -tol)
                return false;
        return true;
    }

    /// On the closed face spanned by the vertices in `face` (as a bit mask).
    bool in_closed_face(unsigned face, double tol = sum_tolerance) const
    {
        for (int i = 0; i <= dim(); ++i)
            if (!(face & (1u << i)) && std::abs(x_[i]) > tol)
                return false;
        return inside(tol);
    }

    std::string to_string() const
    {
        std::string out = "(";
        for (int i = 0; i <= dim(); ++i) {
            if (i)
                out += ", ";
            out += std::to_string(x_[i]);
        }
        return out + ")";
    }

private:
    std::vector<double> x_;
};

inline double max_distance(const AffinePoint& a, const AffinePoint& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("points of different affine spaces");
    double m = 0;
    for (int i = 0; i <= a.dim(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// The coface inclusion d^i: 𝔸^{p-1} → 𝔸^p inserting a zero at position i.
inline AffinePoint coface(const AffinePoint& x, int i)
{
    std::vector<double> out = x.coords();
    out.insert(out.begin() + i, 0.0);
    return AffinePoint(std::move(out));
}

/// The point (1 - t, t) of Δ¹, so that t is the parameter from (0) to (1).
inline AffinePoint interval_point(double t) { return AffinePoint{1.0 - t, t}; }

/// Uniform barycentric grid on Δ²: all (i, j, k)/n with i + j + k = n.
inline std::vector<AffinePoint> simplex_grid(int n)
{
    if (n < 1)
        throw InvalidParameters("grid resolution must be positive");
    std::vector<AffinePoint> out;
    out.reserve(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; j + k <= n; ++k) {
            const double x0 = static_cast<double>(n - j - k) / n;
            out.push_back(AffinePoint{x0, static_cast<double>(j) / n, static_cast<double>(k) / n});
        }
    return out;
}

} // namespace kanforge::smooth
