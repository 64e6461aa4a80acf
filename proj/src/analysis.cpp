#include "sgpa/analysis.hpp"

#include "sgpa/axiom_checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgpa {

namespace {

// Canonical null-space basis of the constraint rows: one vector per free
// column of the RREF.
Subspace null_space(const Subspace& constraints, std::size_t unknowns) {
    const auto& pivots = constraints.pivots();
    std::vector<Vec> kernel;
    for (std::size_t f = 0; f < unknowns; ++f) {
        if (std::binary_search(pivots.begin(), pivots.end(), f)) continue;
        Vec v = zero_vec(unknowns);
        v[f] = 1;
        for (std::size_t r = 0; r < constraints.dim(); ++r)
            v[pivots[r]] = -constraints.basis()[r][f];
        kernel.push_back(std::move(v));
    }
    return Subspace::span(unknowns, kernel);
}

bool block_covered(const GradedAlgebra& a, LabelId lambda, LabelId mu, LabelId t) {
    EchelonBuilder span(static_cast<std::size_t>(a.total_dim()));
    const int mi = a.offset_of(mu), mn = a.dim_of(mu);
    const int ti = a.offset_of(t), tn = a.dim_of(t);
    for (int i = mi; i < mi + mn; ++i) {
        for (int j = ti; j < ti + tn; ++j) {
            if (const Vec* v = a.bracket_entry(i, j)) span.insert(*v);
            if (const Vec* v = a.aprod_entry(i, j)) span.insert(*v);
        }
    }
    const Subspace covered = std::move(span).take();
    const int li = a.offset_of(lambda);
    for (int k = li; k < li + a.dim_of(lambda); ++k)
        if (!covered.contains(unit_vec(a.total_dim(), k))) return false;
    return true;
}

bool direct_route_applicable(const StructureFlags& flags, std::vector<std::string>& notes) {
    bool ok = true;
    if (!flags.maximal_length) {
        notes.push_back("not of maximal length");
        ok = false;
    }
    if (!flags.centerless) {
        notes.push_back("center is nonzero");
        ok = false;
    }
    if (!flags.tight_zero) {
        notes.push_back("zero block is not tight");
        ok = false;
    }
    return ok;
}

std::vector<LabelId> nonzero_labels(const GradedAlgebra& a) {
    std::vector<LabelId> out;
    for (LabelId l = 0; l < a.label_count(); ++l)
        if (!a.zero_label() || l != *a.zero_label()) out.push_back(l);
    return out;
}

// Closure probe used by both the decision procedure and the informal note
// attached to inapplicable verdicts.
std::optional<GradedSubspace> proper_closure_witness(const GradedAlgebra& a,
                                                     std::vector<std::string>& notes) {
    for (LabelId l : nonzero_labels(a)) {
        const GradedSubspace closure =
            ideal_closure(a, GradedSubspace::full_blocks(a, {l}));
        if (closure.dim() < static_cast<std::size_t>(a.total_dim())) {
            notes.push_back("closure of block " + a.label_name(l) + " is a proper ideal (dim " +
                            std::to_string(closure.dim()) + ")");
            return closure;
        }
    }
    return std::nullopt;
}

}  // namespace

Subspace center(const GradedAlgebra& a) {
    const std::size_t n = static_cast<std::size_t>(a.total_dim());
    EchelonBuilder constraints(n);
    // Row (j, c): coefficient of x_i in coordinate c of the j-th map.
    for (int j = 0; j < a.total_dim(); ++j) {
        for (int c = 0; c < a.total_dim(); ++c) {
            Vec bracket_row = zero_vec(n), left_row = zero_vec(n), right_row = zero_vec(n);
            for (int i = 0; i < a.total_dim(); ++i) {
                if (const Vec* v = a.bracket_entry(i, j)) bracket_row[i] = (*v)[c];
                if (const Vec* v = a.aprod_entry(i, j)) left_row[i] = (*v)[c];
                if (const Vec* v = a.aprod_entry(j, i)) right_row[i] = (*v)[c];
            }
            constraints.insert(std::move(bracket_row));
            constraints.insert(std::move(left_row));
            constraints.insert(std::move(right_row));
        }
    }
    return null_space(std::move(constraints).take(), n);
}

bool is_tight_zero(const GradedAlgebra& a, const StarTable& table) {
    if (!a.zero_label()) return true;
    const LabelId zero = *a.zero_label();
    EchelonBuilder span(static_cast<std::size_t>(a.dim_of(zero)));
    for (LabelId mu : nonzero_labels(a)) {
        for (LabelId eta : nonzero_labels(a)) {
            if (table.plain(mu, eta) != zero) continue;
            const int mi = a.offset_of(mu), mn = a.dim_of(mu);
            const int ei = a.offset_of(eta), en = a.dim_of(eta);
            for (int i = mi; i < mi + mn; ++i) {
                for (int j = ei; j < ei + en; ++j) {
                    if (const Vec* v = a.bracket_entry(i, j)) span.insert(a.block_slice(*v, zero));
                    if (const Vec* v = a.aprod_entry(i, j)) span.insert(a.block_slice(*v, zero));
                }
            }
        }
    }
    return span.dim() == static_cast<std::size_t>(a.dim_of(zero));
}

bool is_maximal_length(const GradedAlgebra& a) {
    for (LabelId l : nonzero_labels(a))
        if (a.dim_of(l) != 1) return false;
    return true;
}

MultiplicativityReport is_multiplicative(const GradedAlgebra& a, const StarTable& table) {
    MultiplicativityReport report;
    const auto support = nonzero_labels(a);
    for (LabelId mu : support) {
        for (bool tilded : {false, true}) {
            for (LabelId s_base = 0; s_base < a.label_count(); ++s_base) {
                const ExtLabel s{s_base, tilded};
                for (LabelId lambda : table.star(plain(mu), s)) {
                    if (a.zero_label() && lambda == *a.zero_label()) continue;
                    // The tilde convention zeroes the twin block, so the
                    // product space always reads through the plain label.
                    if (!block_covered(a, lambda, mu, s_base))
                        report.failures.push_back({lambda, mu, s});
                }
            }
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

StructureFlags structure_flags(const GradedAlgebra& a, const StarTable& table) {
    StructureFlags flags;
    flags.center = center(a);
    flags.centerless = flags.center.dim() == 0;
    flags.tight_zero = is_tight_zero(a, table);
    flags.maximal_length = is_maximal_length(a);
    flags.multiplicative = is_multiplicative(a, table).pass();
    return flags;
}

DecompositionReport decompose(const GradedAlgebra& a, const StarTable& table,
                              const ConnectionPartition& partition) {
    DecompositionReport report;
    for (const auto& cls : partition.classes)
        report.summands.emplace_back(cls, ideal_of_class(a, table, partition, cls));

    if (a.zero_label()) {
        const LabelId zero = *a.zero_label();
        EchelonBuilder i0_sum(static_cast<std::size_t>(a.dim_of(zero)));
        for (const auto& [cls, ideal] : report.summands)
            for (const Vec& row : ideal.block(zero).basis()) i0_sum.insert(row);
        report.u = complement_in(std::move(i0_sum).take(), Subspace::full(a.dim_of(zero)));
    } else {
        report.u = Subspace(0);
    }

    EchelonBuilder total(static_cast<std::size_t>(a.total_dim()));
    std::size_t dim_sum = report.u.dim();
    if (a.zero_label())
        for (const Vec& row : report.u.basis())
            total.insert(a.embed_block(*a.zero_label(), row));
    for (const auto& [cls, ideal] : report.summands) {
        dim_sum += ideal.dim();
        for (const Vec& row : ideal.global_basis(a)) total.insert(row);
    }
    report.covers = total.dim() == static_cast<std::size_t>(a.total_dim());

    bool orthogonal = true;
    for (std::size_t i = 0; i < report.summands.size() && orthogonal; ++i)
        for (std::size_t j = i + 1; j < report.summands.size() && orthogonal; ++j)
            orthogonal =
                pairwise_orthogonal(a, report.summands[i].second, report.summands[j].second)
                    .pass();
    report.direct =
        report.covers && dim_sum == static_cast<std::size_t>(a.total_dim()) && orthogonal;
    return report;
}

TheoremCheck check_direct_sum_theorem(const GradedAlgebra& a, const StarTable& table,
                                      const ConnectionPartition& partition) {
    TheoremCheck check;
    const Subspace z = center(a);
    if (z.dim() != 0 || !is_tight_zero(a, table)) {
        check.status = TheoremCheck::Status::hypotheses_not_met;
        check.detail = z.dim() != 0 ? "center is nonzero" : "zero block is not tight";
        return check;
    }
    const DecompositionReport report = decompose(a, table, partition);
    const bool ok = report.u.dim() == 0 && report.covers && report.direct;
    check.status = ok ? TheoremCheck::Status::asserted_pass : TheoremCheck::Status::asserted_fail;
    if (!ok) check.detail = "decomposition is not a direct sum of the class ideals";
    return check;
}

SimplicityResult gr_simple_direct(const GradedAlgebra& a, const StarTable& table,
                                  const StructureFlags& flags) {
    SimplicityResult result;
    if (!direct_route_applicable(flags, result.notes)) {
        result.verdict = Verdict::inapplicable;
        // Still look for a proper ideal so the report can say something
        // concrete about non-simplicity.
        result.witness = proper_closure_witness(a, result.notes);
        return result;
    }
    if (!a.has_nonzero_product()) {
        result.verdict = Verdict::not_simple;
        result.notes.push_back("both products vanish identically");
        return result;
    }
    for (LabelId l : nonzero_labels(a)) {
        GradedSubspace closure = ideal_closure(a, GradedSubspace::full_blocks(a, {l}));
        if (closure.dim() < static_cast<std::size_t>(a.total_dim())) {
            result.verdict = Verdict::not_simple;
            result.notes.push_back("closure of block " + a.label_name(l) +
                                   " is a proper ideal");
            result.witness = std::move(closure);
            return result;
        }
    }
    result.verdict = Verdict::simple;
    return result;
}

SimplicityResult gr_simple_criterion(const GradedAlgebra& a, const StarTable& table,
                                     const ConnectionPartition& partition,
                                     const StructureFlags& flags) {
    SimplicityResult result;
    bool applicable = direct_route_applicable(flags, result.notes);
    if (!flags.multiplicative) {
        result.notes.push_back("not multiplicative");
        applicable = false;
    }
    if (!applicable) {
        result.verdict = Verdict::inapplicable;
        return result;
    }
    if (!a.has_nonzero_product()) {
        result.verdict = Verdict::not_simple;
        result.notes.push_back("both products vanish identically");
        return result;
    }
    if (partition.classes.size() == 1) {
        result.verdict = Verdict::simple;
        result.notes.push_back("support is one connection class");
    } else {
        result.verdict = Verdict::not_simple;
        result.notes.push_back(std::to_string(partition.classes.size()) +
                               " connection classes");
    }
    return result;
}

RestrictedAlgebra restrict_to_summand(const GradedAlgebra& a, const StarTable& table,
                                      const ConnectionPartition& partition,
                                      const std::vector<LabelId>& cls) {
    const GradedSubspace i0 = i0_of_class(a, table, partition, cls);
    const GradedSubspace summand = ideal_of_class(a, table, partition, cls);

    // Restricted labels keep the ambient order; the zero slice only
    // survives when it is nonzero.
    std::vector<LabelId> kept;
    std::optional<LabelId> new_zero;
    std::vector<std::string> names;
    std::vector<int> dims;
    for (LabelId l = 0; l < a.label_count(); ++l) {
        const bool is_zero_slice =
            a.zero_label() && l == *a.zero_label() && i0.block(l).dim() > 0;
        const bool in_class = std::find(cls.begin(), cls.end(), l) != cls.end();
        if (!is_zero_slice && !in_class) continue;
        if (is_zero_slice) new_zero = static_cast<LabelId>(names.size());
        kept.push_back(l);
        names.push_back(a.label_name(l));
        dims.push_back(is_zero_slice ? static_cast<int>(i0.block(l).dim()) : a.dim_of(l));
    }

    std::vector<Vec> basis;
    for (LabelId l : kept)
        for (const Vec& row : summand.block(l).basis()) basis.push_back(a.embed_block(l, row));
    const int n = static_cast<int>(basis.size());

    const auto restricted_coordinates = [&](const Vec& global) {
        Vec out = zero_vec(n);
        int r = 0;
        for (LabelId l : kept) {
            const Subspace& block = summand.block(l);
            const auto coef = block.coordinates(a.block_slice(global, l));
            for (std::size_t c = 0; c < coef.size(); ++c) out[r + static_cast<int>(c)] = coef[c];
            r += static_cast<int>(block.dim());
        }
        return out;
    };

    ProductTable bracket, aprod;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Vec b = a.bracket_vec(basis[r], basis[c]);
            if (!is_zero(b)) bracket[{r, c}] = restricted_coordinates(b);
            Vec p = a.aprod_vec(basis[r], basis[c]);
            if (!is_zero(p)) aprod[{r, c}] = restricted_coordinates(p);
        }
    }

    return RestrictedAlgebra{
        GradedAlgebra(a.name() + ":" + a.label_name(cls.front()), std::move(names),
                      std::move(dims), new_zero, std::move(bracket), std::move(aprod)),
        std::move(basis)};
}

bool FineDecompositionReport::pass() const {
    if (entries.empty()) return false;
    for (const auto& e : entries)
        if (!e.valid || e.verdict != Verdict::simple) return false;
    return true;
}

FineDecompositionReport fine_decomposition_check(const GradedAlgebra& a, const StarTable& table,
                                                 const ConnectionPartition& partition,
                                                 const StructureFlags& flags) {
    if (!flags.centerless || !flags.tight_zero || !flags.maximal_length || !flags.multiplicative)
        throw std::invalid_argument("fine decomposition requires a centerless, tight, "
                                    "maximal-length, multiplicative algebra");

    FineDecompositionReport report;
    for (const auto& cls : partition.classes) {
        FineDecompositionReport::Entry entry;
        entry.cls = cls;
        const RestrictedAlgebra restricted = restrict_to_summand(a, table, partition, cls);
        entry.valid = validate(restricted.algebra).all_pass();
        if (entry.valid) {
            const StarTable sub_table = StarTable::build(restricted.algebra);
            const StructureFlags sub_flags = structure_flags(restricted.algebra, sub_table);
            entry.verdict = gr_simple_direct(restricted.algebra, sub_table, sub_flags).verdict;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace sgpa
