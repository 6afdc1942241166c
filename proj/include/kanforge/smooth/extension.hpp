#pragma once

// Tameness of sampled paths and the extension of modified 2-simplices to 𝔸².

#include <string>
#include <vector>

#include "kanforge/smooth/maps.hpp"

namespace kanforge::smooth {

inline constexpr double plateau_tolerance = 1e-12;

/// Values of a path on the uniform grid of n + 1 points over [lo, hi].
struct SampledPath {
    double lo = 0;
    double hi = 1;
    std::vector<Value> values;

    double parameter(std::size_t k) const { return lo + (hi - lo) * static_cast<double>(k) / (values.size() - 1); }
};

inline SampledPath sample_path(const Path& f, int n, double lo = 0.0, double hi = 1.0)
{
    if (n < 1 || !(lo < hi))
        throw InvalidParameters("sampling needs n >= 1 and lo < hi");
    SampledPath s{lo, hi, {}};
    s.values.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        s.values.push_back(f(lo + (hi - lo) * k / n));
    return s;
}

/// Constant on [lo, δ] and on [1 - δ, hi]. With lo = 0 and hi = 1 this is
/// tameness on Δ¹; wider ranges test the tails on 𝔸¹.
inline bool tameness_check(const SampledPath& s, double delta)
{
    if (s.values.size() < 2)
        throw InvalidParameters("need at least two samples");
    const double step = (s.hi - s.lo) / (s.values.size() - 1);
    if (!(delta > 0) || step > delta / 4)
        throw InvalidParameters("grid too coarse for delta " + std::to_string(delta));
    const Value& left = s.values.front();
    const Value& right = s.values.back();
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        const double t = s.parameter(k);
        if (t <= delta && value_distance(s.values[k], left) > plateau_tolerance)
            return false;
        if (t >= 1.0 - delta && value_distance(s.values[k], right) > plateau_tolerance)
            return false;
    }
    return true;
}

/// Where a point of 𝔸² sits relative to Δ²: inside, in the corner region
/// A_i beyond (i), or in the strip B_i beyond the edge opposite (i).
struct PlaneRegion {
    enum class Kind { simplex, corner, strip } kind;
    int index = -1;
};

inline PlaneRegion plane_region(const AffinePoint& p)
{
    if (p.dim() != 2)
        throw DimensionMismatch("expected a point of 𝔸^2");
    std::vector<int> negative;
    for (int i = 0; i < 3; ++i)
        if (p[i] < 0)
            negative.push_back(i);
    if (negative.empty())
        return {PlaneRegion::Kind::simplex, -1};
    if (negative.size() == 1)
        return {PlaneRegion::Kind::strip, negative[0]};
    return {PlaneRegion::Kind::corner, 3 - negative[0] - negative[1]};
}

/// Extension of a ψ²-modified 2-simplex Σ' from Δ² to 𝔸²: constant on each
/// corner A_i, constant along rays from (i) on each strip B_i.
class SigmaExtension {
public:
    /// Checks on a grid of resolution n that Σ' is constant on each
    /// V_i(ε/2) and ray-constant on each edge zone; throws ValidationError
    /// naming the first violating sample.
    SigmaExtension(PlanarMap sigma_prime, double eps, int n = 200) : f_(std::move(sigma_prime)), eps_(eps)
    {
        require_epsilon(eps);
        for (int i = 0; i < 3; ++i)
            corner_[i] = f_(AffinePoint::vertex(2, i));
        for (const auto& p : simplex_grid(n))
            for (int i = 0; i < 3; ++i) {
                if (in_V(p, i, eps / 2) && value_distance(f_(p), corner_[i]) > plateau_tolerance)
                    throw ValidationError("not constant near vertex (" + std::to_string(i) + ") at " + p.to_string());
                if (in_edge_zone(p, i, eps) &&
                    value_distance(f_(p), f_(project_from_vertex(p, i))) > plateau_tolerance)
                    throw ValidationError("not constant along the ray from (" + std::to_string(i) + ") at " +
                                          p.to_string());
            }
    }

    Value operator()(const AffinePoint& p) const
    {
        const auto r = plane_region(p);
        switch (r.kind) {
        case PlaneRegion::Kind::simplex:
            return f_(p);
        case PlaneRegion::Kind::corner:
            return corner_[r.index];
        case PlaneRegion::Kind::strip:
            return f_(project_from_vertex(p, r.index));
        }
        return {};
    }

    double epsilon() const noexcept { return eps_; }

private:
    PlanarMap f_;
    double eps_;
    Value corner_[3];
};

} // namespace kanforge::smooth
