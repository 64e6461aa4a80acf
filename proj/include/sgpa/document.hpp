#pragma once

#include "sgpa/algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sgpa {

// Raised on malformed input files; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// On-disk description of a graded algebra. Bracket entries are given for
// i <= j only and antisymmetrized by the loader; the associative product
// lists every nonzero pair.
struct AlgebraDocument {
    struct LabelSpec {
        std::string name;
        int dim = 0;
    };
    struct SparseEntry {
        int index = 0;
        BigInt num;
        BigInt den;
    };
    struct ProductEntry {
        int i = 0;
        int j = 0;
        std::vector<SparseEntry> value;
    };

    std::string name;
    std::vector<LabelSpec> labels;
    std::optional<std::string> zero_label;
    std::vector<ProductEntry> bracket;
    std::vector<ProductEntry> aprod;
};

AlgebraDocument parse_document(const nlohmann::json& j);
AlgebraDocument load_document_file(const std::filesystem::path& path);

// Sorted entries, reduced rationals, zero values dropped.
AlgebraDocument canonicalize(AlgebraDocument doc);

nlohmann::ordered_json document_to_json(const AlgebraDocument& doc);

// Installs the structure constants; no axioms are checked here.
GradedAlgebra load_spec(const AlgebraDocument& doc);

GradedAlgebra load_algebra_file(const std::filesystem::path& path);

// Re-emits a loaded algebra as a canonical document (bracket upper
// triangle only).
AlgebraDocument document_from_algebra(const GradedAlgebra& a);

}  // namespace sgpa
