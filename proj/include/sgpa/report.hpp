#pragma once

#include "sgpa/analysis.hpp"
#include "sgpa/axiom_checks.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>

namespace sgpa {

enum class ReportScope { validate, classes, decompose, simple, full };

struct ReportOptions {
    ReportScope scope = ReportScope::full;
    bool witnesses = false;
    ExecMode mode = ExecMode::parallel;
};

// Everything the CLI can say about one algebra. Sections past the axioms
// are only filled when the axioms pass and the scope asks for them.
struct FullReport {
    ValidationReport axioms;
    std::optional<StarTable> star;
    std::optional<ConnectionPartition> partition;
    std::optional<StructureFlags> flags;
    std::optional<DecompositionReport> decomposition;
    std::optional<TheoremCheck> direct_sum;
    std::optional<SimplicityResult> simple_direct;
    std::optional<SimplicityResult> simple_criterion;
    std::optional<bool> verdicts_agree;  // set when both routes apply
    std::optional<FineDecompositionReport> fine;
    bool ideal_theorems_pass = true;     // subalgebra/ideal/orthogonality per class

    // 0 when everything asserted holds, 1 on any mathematical failure.
    int exit_code() const;
};

FullReport analyze(const GradedAlgebra& a, const ReportOptions& options = {});

nlohmann::ordered_json report_to_json(const GradedAlgebra& a, const FullReport& report,
                                      const ReportOptions& options);
void print_report(std::ostream& out, const GradedAlgebra& a, const FullReport& report,
                  const ReportOptions& options);

std::string ext_label_name(const GradedAlgebra& a, ExtLabel l);
const char* verdict_name(Verdict v);

}  // namespace sgpa
