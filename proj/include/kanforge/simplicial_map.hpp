#pragma once

#include <string>
#include <vector>

#include "kanforge/presentation.hpp"

namespace kanforge {

/// A simplicial map given on nondegenerate simplices. The image of a
/// degenerate simplex s_I x is s_I f(x).
class SimplicialMap {
public:
    SimplicialMap() = default;

    /// `images[d][i]` is the image of cell (d, i) of the source. Throws
    /// ValidationError if dimensions do not match or faces do not commute.
    SimplicialMap(PresentationPtr source, PresentationPtr target,
                  std::vector<std::vector<SimplexWord>> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
    {
        check();
    }

    static SimplicialMap identity(const PresentationPtr& K)
    {
        std::vector<std::vector<SimplexWord>> images(K->dimension() + 1);
        for (int d = 0; d <= K->dimension(); ++d)
            for (int i = 0; i < K->cell_count(d); ++i)
                images[d].emplace_back(CellRef{d, i});
        return SimplicialMap(K, K, std::move(images));
    }

    /// Map specified by names: source cell name -> target word.
    template <class Lookup>
    static SimplicialMap from_lookup(PresentationPtr source, PresentationPtr target, Lookup&& image_of)
    {
        std::vector<std::vector<SimplexWord>> images(source->dimension() + 1);
        for (int d = 0; d <= source->dimension(); ++d)
            for (int i = 0; i < source->cell_count(d); ++i)
                images[d].push_back(image_of(CellRef{d, i}));
        return SimplicialMap(std::move(source), std::move(target), std::move(images));
    }

    const PresentationPtr& source() const noexcept { return source_; }
    const PresentationPtr& target() const noexcept { return target_; }

    const SimplexWord& image(CellRef c) const { return images_.at(c.dim).at(c.index); }

    SimplexWord apply(const SimplexWord& w) const
    {
        SimplexWord out = image(w.base());
        const auto& ds = w.degeneracies();
        for (auto it = ds.rbegin(); it != ds.rend(); ++it)
            out = degeneracy(out, *it);
        return out;
    }

    /// this ∘ first
    SimplicialMap after(const SimplicialMap& first) const
    {
        if (first.target_.get() != source_.get() && !(*first.target_ == *source_))
            throw DimensionMismatch("maps are not composable");
        return from_lookup(first.source_, target_,
                           [&](CellRef c) { return apply(first.image(c)); });
    }

    bool operator==(const SimplicialMap& other) const
    {
        return *source_ == *other.source_ && *target_ == *other.target_ && images_ == other.images_;
    }

    const std::vector<std::vector<SimplexWord>>& images() const noexcept { return images_; }

    /// Re-run the dimension and face-commutation checks (throws ValidationError).
    void check() const
    {
        if (!source_ || !target_)
            throw ValidationError("simplicial map without source or target");
        if (static_cast<int>(images_.size()) != source_->dimension() + 1)
            throw ValidationError("map must assign every dimension of the source");
        for (int d = 0; d <= source_->dimension(); ++d) {
            if (static_cast<int>(images_[d].size()) != source_->cell_count(d))
                throw ValidationError("map must assign every simplex in dimension " + std::to_string(d));
            for (int i = 0; i < source_->cell_count(d); ++i) {
                const auto& img = images_[d][i];
                const auto& name = source_->cell_name({d, i});
                if (!target_->contains(img.base()) || img.dim() != d)
                    throw ValidationError("image of '" + name + "' is not a " + std::to_string(d) +
                                          "-simplex of the target");
            }
        }
        for (int d = 1; d <= source_->dimension(); ++d)
            for (int i = 0; i < source_->cell_count(d); ++i) {
                const SimplexWord x(CellRef{d, i});
                for (int k = 0; k <= d; ++k) {
                    if (target_->face(image(x.base()), k) != apply(source_->face(x, k)))
                        throw ValidationError("map does not commute with d_" + std::to_string(k) +
                                              " on '" + source_->cell_name(x.base()) + "'");
                }
            }
    }

private:
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<std::vector<SimplexWord>> images_;
};

/// True iff f is bijective on nondegenerate simplices in every dimension
/// and sends nondegenerate simplices to nondegenerate ones.
inline bool is_isomorphism(const SimplicialMap& f)
{
    const auto& S = *f.source();
    const auto& T = *f.target();
    if (S.dimension() != T.dimension())
        return false;
    for (int d = 0; d <= S.dimension(); ++d) {
        if (S.cell_count(d) != T.cell_count(d))
            return false;
        std::vector<bool> hit(T.cell_count(d), false);
        for (int i = 0; i < S.cell_count(d); ++i) {
            const auto& img = f.image({d, i});
            if (img.is_degenerate() || hit[img.base().index])
                return false;
            hit[img.base().index] = true;
        }
    }
    return true;
}

} // namespace kanforge
