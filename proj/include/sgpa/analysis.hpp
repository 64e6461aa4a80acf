#pragma once

#include "sgpa/ideals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgpa {

// Null space of x -> ([x, e_j], x e_j, e_j x for all j), i.e. everything
// annihilating the whole algebra under both products.
Subspace center(const GradedAlgebra& a);

// The zero block is absent, or spanned by the products of nonzero-labelled
// block pairs that land in it.
bool is_tight_zero(const GradedAlgebra& a, const StarTable& table);

// Every nonzero-labelled block is one-dimensional.
bool is_maximal_length(const GradedAlgebra& a);

// Whenever lambda lies in star(mu, s) for nonzero labels lambda, mu, the
// full block of lambda must be covered by the products of the blocks of mu
// and of the plain label underlying s.
struct MultiplicativityFailure {
    LabelId lambda = -1;
    LabelId mu = -1;
    ExtLabel s;

    friend auto operator<=>(const MultiplicativityFailure&,
                            const MultiplicativityFailure&) = default;
};
struct MultiplicativityReport {
    std::vector<MultiplicativityFailure> failures;
    bool pass() const { return failures.empty(); }
};
MultiplicativityReport is_multiplicative(const GradedAlgebra& a, const StarTable& table);

struct StructureFlags {
    bool centerless = false;
    bool tight_zero = false;
    bool maximal_length = false;
    bool multiplicative = false;
    Subspace center;  // global coordinates
};
StructureFlags structure_flags(const GradedAlgebra& a, const StarTable& table);

// The whole algebra as a complement of the degree-zero product span plus
// one graded ideal per connection class.
struct DecompositionReport {
    Subspace u;  // inside the zero block, block-local coordinates
    std::vector<std::pair<std::vector<LabelId>, GradedSubspace>> summands;
    bool covers = false;
    bool direct = false;
};
DecompositionReport decompose(const GradedAlgebra& a, const StarTable& table,
                              const ConnectionPartition& partition);

// When the algebra is centerless with a tight zero block, the decomposition
// must be a plain direct sum with U = 0.
struct TheoremCheck {
    enum class Status { asserted_pass, asserted_fail, hypotheses_not_met };
    Status status = Status::hypotheses_not_met;
    std::string detail;
};
TheoremCheck check_direct_sum_theorem(const GradedAlgebra& a, const StarTable& table,
                                      const ConnectionPartition& partition);

enum class Verdict { simple, not_simple, inapplicable };

struct SimplicityResult {
    Verdict verdict = Verdict::inapplicable;
    std::optional<GradedSubspace> witness;  // a proper nonzero graded ideal
    std::vector<std::string> notes;
};

// Decision by exhaustive ideal-closure probes of the nonzero-labelled
// blocks. Requires maximal length, a trivial center and a tight zero block;
// under those hypotheses every proper nonzero graded ideal contains a full
// nonzero-labelled block, so the probes are a complete search.
SimplicityResult gr_simple_direct(const GradedAlgebra& a, const StarTable& table,
                                  const StructureFlags& flags);

// Decision by counting connection classes; additionally requires
// multiplicativity.
SimplicityResult gr_simple_criterion(const GradedAlgebra& a, const StarTable& table,
                                     const ConnectionPartition& partition,
                                     const StructureFlags& flags);

// A connection-class summand re-packaged as a standalone algebra: the class
// labels keep their blocks, and the class's slice of the zero block becomes
// the new distinguished zero (dropped when that slice is trivial).
struct RestrictedAlgebra {
    GradedAlgebra algebra;
    std::vector<Vec> basis;  // restricted basis vectors in ambient coordinates
};
RestrictedAlgebra restrict_to_summand(const GradedAlgebra& a, const StarTable& table,
                                      const ConnectionPartition& partition,
                                      const std::vector<LabelId>& cls);

// Re-validates every summand as an algebra of its own and decides its
// simplicity by the direct route. Throws when the flags do not hold.
struct FineDecompositionReport {
    struct Entry {
        std::vector<LabelId> cls;
        bool valid = false;
        Verdict verdict = Verdict::inapplicable;
    };
    std::vector<Entry> entries;
    bool pass() const;
};
FineDecompositionReport fine_decomposition_check(const GradedAlgebra& a, const StarTable& table,
                                                 const ConnectionPartition& partition,
                                                 const StructureFlags& flags);

}  // namespace sgpa
