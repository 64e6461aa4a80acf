#pragma once

#include "sgpa/subspace.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgpa {

// A label of the grading set, identified by its position in the algebra's
// ordered label list.
using LabelId = int;

// Element of the extended support: a plain label or its tilde twin.
// Flipping twice gives back the plain label.
struct ExtLabel {
    LabelId base = 0;
    bool tilded = false;

    friend auto operator<=>(const ExtLabel&, const ExtLabel&) = default;
};

inline ExtLabel plain(LabelId l) { return {l, false}; }
inline ExtLabel tilde(LabelId l) { return {l, true}; }
inline ExtLabel flip(ExtLabel a) { return {a.base, !a.tilded}; }

// Sparse structure constants: (i, j) -> value of the product of basis
// vectors e_i and e_j, as a global coordinate vector.
using ProductTable = std::map<std::pair<int, int>, Vec>;

// A finite-dimensional algebra carrying a bracket and an associative
// product, with the global basis partitioned into homogeneous blocks,
// one per label. Immutable after construction.
class GradedAlgebra {
public:
    GradedAlgebra(std::string name,
                  std::vector<std::string> labels,
                  std::vector<int> dims,
                  std::optional<LabelId> zero_label,
                  ProductTable bracket,
                  ProductTable aprod);

    const std::string& name() const { return name_; }
    int label_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label_name(LabelId l) const { return labels_.at(l); }
    std::optional<LabelId> label_id(const std::string& name) const;
    int dim_of(LabelId l) const { return dims_.at(l); }
    int offset_of(LabelId l) const { return offsets_.at(l); }
    int total_dim() const { return total_dim_; }
    std::optional<LabelId> zero_label() const { return zero_; }
    LabelId block_of(int basis_index) const { return block_of_.at(basis_index); }

    const ProductTable& bracket_table() const { return bracket_; }
    const ProductTable& aprod_table() const { return aprod_; }

    // Structure-constant lookup; nullptr when the product of e_i, e_j is zero.
    const Vec* bracket_entry(int i, int j) const;
    const Vec* aprod_entry(int i, int j) const;

    // Bilinear extension of the structure constants.
    Vec bracket_vec(const Vec& x, const Vec& y) const;
    Vec aprod_vec(const Vec& x, const Vec& y) const;

    // Products with one basis-vector argument (hot paths of the checkers).
    Vec bracket_vec_basis(const Vec& x, int j) const;
    Vec bracket_basis_vec(int i, const Vec& y) const;
    Vec aprod_vec_basis(const Vec& x, int j) const;
    Vec aprod_basis_vec(int i, const Vec& y) const;

    // Labels of the blocks where v has a nonzero coordinate, ascending.
    std::vector<LabelId> blocks_touched(const Vec& v) const;
    // Block-local coordinates of v.
    Vec block_slice(const Vec& v, LabelId l) const;
    // Global vector carrying `local` in block l and zero elsewhere.
    Vec embed_block(LabelId l, const Vec& local) const;

    bool has_nonzero_product() const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> dims_;
    std::vector<int> offsets_;
    int total_dim_ = 0;
    std::optional<LabelId> zero_;
    ProductTable bracket_;
    ProductTable aprod_;
    std::vector<LabelId> block_of_;

    Vec table_vec(const ProductTable& t, const Vec& x, const Vec& y) const;
    Vec table_vec_basis(const ProductTable& t, const Vec& x, int j) const;
    Vec table_basis_vec(const ProductTable& t, int i, const Vec& y) const;
};

}  // namespace sgpa
