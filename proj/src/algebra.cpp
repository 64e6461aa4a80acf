#include "sgpa/algebra.hpp"

#include <set>
#include <stdexcept>

namespace sgpa {

GradedAlgebra::GradedAlgebra(std::string name,
                             std::vector<std::string> labels,
                             std::vector<int> dims,
                             std::optional<LabelId> zero_label,
                             ProductTable bracket,
                             ProductTable aprod)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      dims_(std::move(dims)),
      zero_(zero_label),
      bracket_(std::move(bracket)),
      aprod_(std::move(aprod)) {
    if (labels_.empty()) throw std::invalid_argument("algebra needs at least one label");
    if (labels_.size() != dims_.size())
        throw std::invalid_argument("labels and dims differ in length");

    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("empty label name");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label: " + l);
    }

    offsets_.resize(labels_.size());
    for (std::size_t l = 0; l < labels_.size(); ++l) {
        if (dims_[l] <= 0)
            throw std::invalid_argument("label " + labels_[l] + " has non-positive dimension");
        offsets_[l] = total_dim_;
        total_dim_ += dims_[l];
    }
    block_of_.resize(total_dim_);
    for (std::size_t l = 0; l < labels_.size(); ++l)
        for (int k = 0; k < dims_[l]; ++k) block_of_[offsets_[l] + k] = static_cast<LabelId>(l);

    if (zero_ && (*zero_ < 0 || *zero_ >= label_count()))
        throw std::invalid_argument("zero label id out of range");

    for (const auto* table : {&bracket_, &aprod_}) {
        for (const auto& [key, value] : *table) {
            if (key.first < 0 || key.first >= total_dim_ || key.second < 0 ||
                key.second >= total_dim_)
                throw std::invalid_argument("structure constant index out of range");
            if (static_cast<int>(value.size()) != total_dim_)
                throw std::invalid_argument("structure constant vector has wrong dimension");
        }
    }
}

std::optional<LabelId> GradedAlgebra::label_id(const std::string& name) const {
    for (std::size_t l = 0; l < labels_.size(); ++l)
        if (labels_[l] == name) return static_cast<LabelId>(l);
    return std::nullopt;
}

const Vec* GradedAlgebra::bracket_entry(int i, int j) const {
    auto it = bracket_.find({i, j});
    return it == bracket_.end() ? nullptr : &it->second;
}

const Vec* GradedAlgebra::aprod_entry(int i, int j) const {
    auto it = aprod_.find({i, j});
    return it == aprod_.end() ? nullptr : &it->second;
}

Vec GradedAlgebra::table_vec(const ProductTable& t, const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != total_dim_ || static_cast<int>(y.size()) != total_dim_)
        throw std::invalid_argument("vector dimension mismatch");
    Vec out = zero_vec(total_dim_);
    for (int i = 0; i < total_dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < total_dim_; ++j) {
            if (y[j] == 0) continue;
            auto it = t.find({i, j});
            if (it != t.end()) add_scaled(out, x[i] * y[j], it->second);
        }
    }
    return out;
}

Vec GradedAlgebra::table_vec_basis(const ProductTable& t, const Vec& x, int j) const {
    Vec out = zero_vec(total_dim_);
    for (int i = 0; i < total_dim_; ++i) {
        if (x[i] == 0) continue;
        auto it = t.find({i, j});
        if (it != t.end()) add_scaled(out, x[i], it->second);
    }
    return out;
}

Vec GradedAlgebra::table_basis_vec(const ProductTable& t, int i, const Vec& y) const {
    Vec out = zero_vec(total_dim_);
    for (int j = 0; j < total_dim_; ++j) {
        if (y[j] == 0) continue;
        auto it = t.find({i, j});
        if (it != t.end()) add_scaled(out, y[j], it->second);
    }
    return out;
}

Vec GradedAlgebra::bracket_vec(const Vec& x, const Vec& y) const {
    return table_vec(bracket_, x, y);
}
Vec GradedAlgebra::aprod_vec(const Vec& x, const Vec& y) const { return table_vec(aprod_, x, y); }
Vec GradedAlgebra::bracket_vec_basis(const Vec& x, int j) const {
    return table_vec_basis(bracket_, x, j);
}
Vec GradedAlgebra::bracket_basis_vec(int i, const Vec& y) const {
    return table_basis_vec(bracket_, i, y);
}
Vec GradedAlgebra::aprod_vec_basis(const Vec& x, int j) const {
    return table_vec_basis(aprod_, x, j);
}
Vec GradedAlgebra::aprod_basis_vec(int i, const Vec& y) const {
    return table_basis_vec(aprod_, i, y);
}

std::vector<LabelId> GradedAlgebra::blocks_touched(const Vec& v) const {
    std::vector<LabelId> out;
    for (int i = 0; i < total_dim_; ++i) {
        if (v[i] == 0) continue;
        const LabelId l = block_of_[i];
        if (out.empty() || out.back() != l) out.push_back(l);
    }
    return out;
}

Vec GradedAlgebra::block_slice(const Vec& v, LabelId l) const {
    return slice(v, offset_of(l), dim_of(l));
}

Vec GradedAlgebra::embed_block(LabelId l, const Vec& local) const {
    if (static_cast<int>(local.size()) != dim_of(l))
        throw std::invalid_argument("block-local vector has wrong dimension");
    Vec out = zero_vec(total_dim_);
    std::copy(local.begin(), local.end(), out.begin() + offset_of(l));
    return out;
}

bool GradedAlgebra::has_nonzero_product() const {
    for (const auto* table : {&bracket_, &aprod_})
        for (const auto& [key, value] : *table)
            if (!is_zero(value)) return true;
    return false;
}

}  // namespace sgpa
