#include "sgpa/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgpa {

namespace {

void require_class(const ConnectionPartition& partition, const std::vector<LabelId>& cls) {
    if (cls.empty()) throw std::invalid_argument("empty label set is not a connection class");
    const int index = partition.class_of(cls.front());
    if (index < 0) throw std::invalid_argument("label set is not a class of the partition");
    std::vector<LabelId> sorted_cls = cls;
    std::sort(sorted_cls.begin(), sorted_cls.end());
    if (sorted_cls != partition.classes.at(index))
        throw std::invalid_argument("label set is not a class of the partition");
}

}  // namespace

GradedSubspace i0_of_class(const GradedAlgebra& a, const StarTable& table,
                           const ConnectionPartition& partition,
                           const std::vector<LabelId>& cls) {
    require_class(partition, cls);
    GradedSubspace out = GradedSubspace::zero(a);
    if (!a.zero_label()) return out;
    const LabelId zero = *a.zero_label();

    EchelonBuilder block0(static_cast<std::size_t>(a.dim_of(zero)));
    for (LabelId mu : cls) {
        for (LabelId eta : cls) {
            if (table.plain(mu, eta) != zero) continue;
            const int mi = a.offset_of(mu), mn = a.dim_of(mu);
            const int ei = a.offset_of(eta), en = a.dim_of(eta);
            for (int i = mi; i < mi + mn; ++i) {
                for (int j = ei; j < ei + en; ++j) {
                    if (const Vec* v = a.bracket_entry(i, j))
                        block0.insert(a.block_slice(*v, zero));
                    if (const Vec* v = a.aprod_entry(i, j)) block0.insert(a.block_slice(*v, zero));
                }
            }
        }
    }
    out.set_block(zero, std::move(block0).take());
    return out;
}

GradedSubspace v_of_class(const GradedAlgebra& a, const ConnectionPartition& partition,
                          const std::vector<LabelId>& cls) {
    require_class(partition, cls);
    return GradedSubspace::full_blocks(a, cls);
}

GradedSubspace ideal_of_class(const GradedAlgebra& a, const StarTable& table,
                              const ConnectionPartition& partition,
                              const std::vector<LabelId>& cls) {
    GradedSubspace out = i0_of_class(a, table, partition, cls);
    for (LabelId l : cls) out.set_block(l, Subspace::full(a.dim_of(l)));
    return out;
}

ContainmentReport is_graded_subalgebra(const GradedAlgebra& a, const GradedSubspace& s) {
    ContainmentReport report{"graded_subalgebra", {}};
    const std::vector<Vec> basis = s.global_basis(a);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) {
            if (!s.contains(a, a.bracket_vec(basis[r], basis[c])))
                report.violations.push_back(
                    {static_cast<int>(r), static_cast<int>(c), ProductViolation::Op::bracket});
            if (!s.contains(a, a.aprod_vec(basis[r], basis[c])))
                report.violations.push_back(
                    {static_cast<int>(r), static_cast<int>(c), ProductViolation::Op::aprod_lr});
        }
    }
    return report;
}

ContainmentReport is_graded_ideal(const GradedAlgebra& a, const GradedSubspace& s) {
    ContainmentReport report{"graded_ideal", {}};
    const std::vector<Vec> basis = s.global_basis(a);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (int e = 0; e < a.total_dim(); ++e) {
            if (!s.contains(a, a.bracket_vec_basis(basis[r], e)))
                report.violations.push_back({static_cast<int>(r), e, ProductViolation::Op::bracket});
            if (!s.contains(a, a.aprod_vec_basis(basis[r], e)))
                report.violations.push_back(
                    {static_cast<int>(r), e, ProductViolation::Op::aprod_lr});
            if (!s.contains(a, a.aprod_basis_vec(e, basis[r])))
                report.violations.push_back(
                    {static_cast<int>(r), e, ProductViolation::Op::aprod_rl});
        }
    }
    return report;
}

ContainmentReport pairwise_orthogonal(const GradedAlgebra& a, const GradedSubspace& s1,
                                      const GradedSubspace& s2) {
    ContainmentReport report{"pairwise_orthogonal", {}};
    const std::vector<Vec> left = s1.global_basis(a);
    const std::vector<Vec> right = s2.global_basis(a);
    for (std::size_t r = 0; r < left.size(); ++r) {
        for (std::size_t c = 0; c < right.size(); ++c) {
            if (!is_zero(a.bracket_vec(left[r], right[c])))
                report.violations.push_back(
                    {static_cast<int>(r), static_cast<int>(c), ProductViolation::Op::bracket});
            if (!is_zero(a.aprod_vec(left[r], right[c])))
                report.violations.push_back(
                    {static_cast<int>(r), static_cast<int>(c), ProductViolation::Op::aprod_lr});
            if (!is_zero(a.aprod_vec(right[c], left[r])))
                report.violations.push_back(
                    {static_cast<int>(r), static_cast<int>(c), ProductViolation::Op::aprod_rl});
        }
    }
    return report;
}

GradedSubspace ideal_closure(const GradedAlgebra& a, const GradedSubspace& generators) {
    std::vector<Vec> accumulated = generators.global_basis(a);
    GradedSubspace current = GradedSubspace::span_homogeneous(a, accumulated);

    // Each sweep strictly grows the dimension or stops, so at most
    // total_dim sweeps run.
    for (;;) {
        const std::size_t before = current.dim();
        std::vector<Vec> products;
        for (const Vec& v : current.global_basis(a)) {
            for (int e = 0; e < a.total_dim(); ++e) {
                products.push_back(a.bracket_vec_basis(v, e));
                products.push_back(a.aprod_vec_basis(v, e));
                products.push_back(a.aprod_basis_vec(e, v));
            }
        }
        accumulated = current.global_basis(a);
        accumulated.insert(accumulated.end(), products.begin(), products.end());
        current = GradedSubspace::span_homogeneous(a, accumulated);
        if (current.dim() == before) return current;
    }
}

}  // namespace sgpa
