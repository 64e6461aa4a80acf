#pragma once

#include "sgpa/connections.hpp"
#include "sgpa/graded_subspace.hpp"

#include <string>
#include <vector>

namespace sgpa {

// A product of two vectors that escaped the subspace under test.
struct ProductViolation {
    enum class Op { bracket, aprod_lr, aprod_rl };
    int left = -1;   // index into the tested basis enumeration
    int right = -1;  // second operand (basis enumeration or global index)
    Op op = Op::bracket;

    friend auto operator<=>(const ProductViolation&, const ProductViolation&) = default;
};

struct ContainmentReport {
    std::string name;
    std::vector<ProductViolation> violations;

    bool pass() const { return violations.empty(); }
};

// The degree-zero span of all in-class products that land in the zero block:
// over ordered pairs (mu, eta) from the class with star(mu, eta) = {0}, the
// values [x, y] and x y for block basis vectors x of mu and y of eta.
// Zero when no zero label is distinguished.
GradedSubspace i0_of_class(const GradedAlgebra& a, const StarTable& table,
                           const ConnectionPartition& partition,
                           const std::vector<LabelId>& cls);

// The sum of the full blocks of the class.
GradedSubspace v_of_class(const GradedAlgebra& a, const ConnectionPartition& partition,
                          const std::vector<LabelId>& cls);

// Direct sum of the two spaces above.
GradedSubspace ideal_of_class(const GradedAlgebra& a, const StarTable& table,
                              const ConnectionPartition& partition,
                              const std::vector<LabelId>& cls);

// [S, S] + S S inside S.
ContainmentReport is_graded_subalgebra(const GradedAlgebra& a, const GradedSubspace& s);
// [S, P] + S P + P S inside S.
ContainmentReport is_graded_ideal(const GradedAlgebra& a, const GradedSubspace& s);
// All brackets and both-order products between the two spaces vanish.
ContainmentReport pairwise_orthogonal(const GradedAlgebra& a, const GradedSubspace& s1,
                                      const GradedSubspace& s2);

// Least graded ideal containing the generators: adjoin [v, e], v e, e v for
// current basis vectors v and all basis vectors e until dimensions stop
// growing.
GradedSubspace ideal_closure(const GradedAlgebra& a, const GradedSubspace& generators);

}  // namespace sgpa
