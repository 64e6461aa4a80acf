#pragma once

#include "sgpa/algebra.hpp"

#include <string>
#include <vector>

namespace sgpa {

enum class ExecMode { serial, parallel };

// One failing tuple of a check. For basis-tuple checks i, j, k are global
// basis indices (k = -1 for pair checks); for grading coherence i, j are
// label ids; for the zero-label check i is the offending label id.
struct Violation {
    int i = -1;
    int j = -1;
    int k = -1;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckReport {
    std::string name;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
};

// [e_i, e_j] + [e_j, e_i] = 0 for all i <= j (including i = j).
CheckReport check_antisymmetry(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);
// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for i <= j <= k.
CheckReport check_jacobi(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);
// (e_i e_j) e_k = e_i (e_j e_k) for all triples.
CheckReport check_associativity(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);
// [e_i, e_j e_k] = [e_i, e_j] e_k + e_j [e_i, e_k] for all triples.
CheckReport check_leibniz(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);

// Where the products of two homogeneous blocks land.
struct ComponentTarget {
    enum class Kind { zero, target, incoherent };
    Kind kind = Kind::zero;
    LabelId target = -1;               // set when kind == target
    std::vector<LabelId> touched;      // set when kind == incoherent
};
ComponentTarget component_product_target(const GradedAlgebra& a, LabelId s, LabelId t);

// Every label pair must land in no block or exactly one.
CheckReport check_grading_coherence(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);

// When a zero label is distinguished, products of its block with any other
// block must not land back in it. Vacuous when no zero label is chosen.
CheckReport check_zero_label(const GradedAlgebra& a);

struct ValidationReport {
    CheckReport antisymmetry;
    CheckReport jacobi;
    CheckReport associativity;
    CheckReport leibniz;
    CheckReport grading_coherence;
    CheckReport zero_label;

    bool all_pass() const;
    std::vector<const CheckReport*> reports() const;
};

ValidationReport validate(const GradedAlgebra& a, ExecMode mode = ExecMode::parallel);

namespace detail {
// Serial reference kernels, kept separate so tests and the benchmark can
// compare them against the OpenMP versions.
CheckReport check_antisymmetry_serial(const GradedAlgebra& a);
CheckReport check_jacobi_serial(const GradedAlgebra& a);
CheckReport check_associativity_serial(const GradedAlgebra& a);
CheckReport check_leibniz_serial(const GradedAlgebra& a);
CheckReport check_grading_coherence_serial(const GradedAlgebra& a);

CheckReport check_antisymmetry_parallel(const GradedAlgebra& a);
CheckReport check_jacobi_parallel(const GradedAlgebra& a);
CheckReport check_associativity_parallel(const GradedAlgebra& a);
CheckReport check_leibniz_parallel(const GradedAlgebra& a);
CheckReport check_grading_coherence_parallel(const GradedAlgebra& a);
}  // namespace detail

}  // namespace sgpa
