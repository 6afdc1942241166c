#pragma once

// Brute-force isomorphism search between tiny presentations (test oracle).

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "kanforge/presentation.hpp"

namespace kanforge::fixtures {

/// True iff some bijection on nondegenerate simplices, dimension by
/// dimension, carries the face words of A onto those of B.
inline bool brute_force_isomorphic(const Presentation& A, const Presentation& B)
{
    if (A.counts() != B.counts())
        return false;
    const int top = A.dimension();
    std::vector<std::vector<int>> perm(top + 1);
    auto map_word = [&](const SimplexWord& w) {
        return SimplexWord(CellRef{w.base().dim, perm[w.base().dim][w.base().index]}, w.degeneracies());
    };
    std::function<bool(int)> search = [&](int d) {
        if (d > top)
            return true;
        std::vector<int> p(A.cell_count(d));
        std::iota(p.begin(), p.end(), 0);
        do {
            perm[d] = p;
            bool ok = true;
            for (int i = 0; i < A.cell_count(d) && ok && d > 0; ++i)
                for (int k = 0; k <= d && ok; ++k)
                    ok = map_word(A.base_face({d, i}, k)) == B.base_face({d, p[i]}, k);
            if (ok && search(d + 1))
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    return search(0);
}

} // namespace kanforge::fixtures
