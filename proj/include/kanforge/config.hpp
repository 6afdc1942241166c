#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "kanforge/errors.hpp"

namespace kanforge {

inline constexpr int default_max_dim = 6;

/// Global dimension cap. KANFORGE_MAX_DIM overrides the default of 6.
inline int max_dimension()
{
    if (const char* env = std::getenv("KANFORGE_MAX_DIM")) {
        try {
            int value = std::stoi(env);
            if (value >= 0)
                return value;
        } catch (const std::exception&) {
        }
        throw InvalidParameters("KANFORGE_MAX_DIM must be a non-negative integer");
    }
    return default_max_dim;
}

struct Budget {
    std::size_t max_simplices = 50000;
    std::size_t max_horns = 2000000;
};

inline void check_dimension_cap(int dim, const char* what)
{
    if (dim > max_dimension())
        throw InvalidParameters(std::string(what) + ": dimension " + std::to_string(dim) +
                                " exceeds the global cap " + std::to_string(max_dimension()));
}

} // namespace kanforge
