#include "sgpa/graded_subspace.hpp"

#include <stdexcept>

namespace sgpa {

GradedSubspace GradedSubspace::zero(const GradedAlgebra& a) {
    GradedSubspace s;
    for (LabelId l = 0; l < a.label_count(); ++l)
        s.blocks_.emplace_back(static_cast<std::size_t>(a.dim_of(l)));
    return s;
}

GradedSubspace GradedSubspace::full_blocks(const GradedAlgebra& a,
                                           const std::vector<LabelId>& blocks) {
    GradedSubspace s = zero(a);
    for (LabelId l : blocks) s.blocks_.at(l) = Subspace::full(a.dim_of(l));
    return s;
}

GradedSubspace GradedSubspace::span_homogeneous(const GradedAlgebra& a,
                                                const std::vector<Vec>& gens) {
    std::vector<EchelonBuilder> builders;
    for (LabelId l = 0; l < a.label_count(); ++l)
        builders.emplace_back(static_cast<std::size_t>(a.dim_of(l)));
    for (const Vec& g : gens) {
        const auto touched = a.blocks_touched(g);
        if (touched.empty()) continue;
        if (touched.size() > 1)
            throw std::invalid_argument("generator is not homogeneous");
        builders[touched.front()].insert(a.block_slice(g, touched.front()));
    }
    GradedSubspace s;
    for (auto& b : builders) s.blocks_.push_back(std::move(b).take());
    return s;
}

std::size_t GradedSubspace::dim() const {
    std::size_t d = 0;
    for (const auto& b : blocks_) d += b.dim();
    return d;
}

bool GradedSubspace::contains(const GradedAlgebra& a, const Vec& global) const {
    for (LabelId l = 0; l < a.label_count(); ++l)
        if (!blocks_.at(l).contains(a.block_slice(global, l))) return false;
    return true;
}

std::vector<Vec> GradedSubspace::global_basis(const GradedAlgebra& a) const {
    std::vector<Vec> out;
    for (LabelId l = 0; l < a.label_count(); ++l)
        for (const Vec& row : blocks_.at(l).basis()) out.push_back(a.embed_block(l, row));
    return out;
}

Subspace GradedSubspace::global_subspace(const GradedAlgebra& a) const {
    return Subspace::span(static_cast<std::size_t>(a.total_dim()), global_basis(a));
}

}  // namespace sgpa
