#pragma once

#include "sgpa/algebra.hpp"

#include <vector>

namespace sgpa {

// A graded subspace, stored blockwise: one subspace of each homogeneous
// block, in block-local coordinates. The represented space is the direct
// sum of the blocks, so gradedness holds by construction.
class GradedSubspace {
public:
    GradedSubspace() = default;

    static GradedSubspace zero(const GradedAlgebra& a);
    static GradedSubspace full_blocks(const GradedAlgebra& a, const std::vector<LabelId>& blocks);
    // Spans homogeneous generators given in global coordinates; every
    // generator must touch at most one block.
    static GradedSubspace span_homogeneous(const GradedAlgebra& a, const std::vector<Vec>& gens);

    const Subspace& block(LabelId l) const { return blocks_.at(l); }
    void set_block(LabelId l, Subspace s) { blocks_.at(l) = std::move(s); }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    std::size_t dim() const;
    bool contains(const GradedAlgebra& a, const Vec& global) const;
    // Block basis rows embedded into global coordinates, in block order.
    std::vector<Vec> global_basis(const GradedAlgebra& a) const;
    Subspace global_subspace(const GradedAlgebra& a) const;

    friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;

private:
    std::vector<Subspace> blocks_;
};

}  // namespace sgpa
