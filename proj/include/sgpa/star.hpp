#pragma once

#include "sgpa/algebra.hpp"
#include "sgpa/axiom_checks.hpp"

#include <optional>
#include <set>
#include <vector>

namespace sgpa {

// Memoized ⋆ table over the support. plain(a, b) records where the products
// of blocks a and b land: empty, or exactly one receiving label. Lookups
// with tilde arguments are derived from the plain table.
class StarTable {
public:
    static StarTable build(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);

    int label_count() const { return label_count_; }
    std::optional<LabelId> zero_label() const { return zero_; }

    std::optional<LabelId> plain(LabelId a, LabelId b) const;

    // ⋆ on the extended support; the result is always a set of plain labels.
    //   plain  ⋆ plain  -> {} or the single target
    //   plain a ⋆ tilde b (either order) -> every c with plain(c, b) == a
    //   tilde  ⋆ tilde  -> {}
    std::vector<LabelId> star(ExtLabel a, ExtLabel b) const;

private:
    int label_count_ = 0;
    std::optional<LabelId> zero_;
    std::vector<std::optional<LabelId>> table_;  // label_count_ x label_count_
};

// One propagation step of the connection relation: the union of star(x, a)
// over x in omega, with the zero label removed, closed under tilde. omega
// must not contain the zero label or its tilde twin.
std::set<ExtLabel> propagate(const StarTable& table, const std::set<ExtLabel>& omega, ExtLabel a);

}  // namespace sgpa
