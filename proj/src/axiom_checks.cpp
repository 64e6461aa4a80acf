#include "sgpa/axiom_checks.hpp"

#include <algorithm>

#ifdef SGPA_HAVE_OPENMP
#include <omp.h>
#endif

namespace sgpa {

namespace {

bool antisym_pair_ok(const GradedAlgebra& a, int i, int j) {
    const Vec* forward = a.bracket_entry(i, j);
    const Vec* backward = a.bracket_entry(j, i);
    Vec acc = forward ? *forward : zero_vec(a.total_dim());
    if (i == j) {
        // [e_i, e_i] + [e_i, e_i] = 0 reduces to the entry itself over Q.
        return is_zero(acc);
    }
    if (backward) add_scaled(acc, Rational(1), *backward);
    return is_zero(acc);
}

bool jacobi_triple_ok(const GradedAlgebra& a, int i, int j, int k) {
    Vec acc = zero_vec(a.total_dim());
    const auto add_term = [&](int x, int y, int z) {
        if (const Vec* inner = a.bracket_entry(x, y))
            add_scaled(acc, Rational(1), a.bracket_vec_basis(*inner, z));
    };
    add_term(i, j, k);
    add_term(j, k, i);
    add_term(k, i, j);
    return is_zero(acc);
}

bool assoc_triple_ok(const GradedAlgebra& a, int i, int j, int k) {
    Vec lhs = zero_vec(a.total_dim());
    if (const Vec* ij = a.aprod_entry(i, j)) lhs = a.aprod_vec_basis(*ij, k);
    Vec rhs = zero_vec(a.total_dim());
    if (const Vec* jk = a.aprod_entry(j, k)) rhs = a.aprod_basis_vec(i, *jk);
    return lhs == rhs;
}

bool leibniz_triple_ok(const GradedAlgebra& a, int i, int j, int k) {
    Vec lhs = zero_vec(a.total_dim());
    if (const Vec* jk = a.aprod_entry(j, k)) lhs = a.bracket_basis_vec(i, *jk);
    Vec rhs = zero_vec(a.total_dim());
    if (const Vec* ij = a.bracket_entry(i, j))
        add_scaled(rhs, Rational(1), a.aprod_vec_basis(*ij, k));
    if (const Vec* ik = a.bracket_entry(i, k))
        add_scaled(rhs, Rational(1), a.aprod_basis_vec(j, *ik));
    return lhs == rhs;
}

void finish(CheckReport& report) {
    std::sort(report.violations.begin(), report.violations.end());
}

#ifdef SGPA_HAVE_OPENMP
template <typename PerRow>
std::vector<Violation> parallel_rows(int n, PerRow&& per_row) {
    std::vector<std::vector<Violation>> buckets(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) per_row(i, buckets[omp_get_thread_num()]);
    std::vector<Violation> merged;
    for (auto& b : buckets) merged.insert(merged.end(), b.begin(), b.end());
    return merged;
}
#endif

}  // namespace

namespace detail {

CheckReport check_antisymmetry_serial(const GradedAlgebra& a) {
    CheckReport report{"antisymmetry", {}};
    const int n = a.total_dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!antisym_pair_ok(a, i, j)) report.violations.push_back({i, j, -1});
    finish(report);
    return report;
}

CheckReport check_jacobi_serial(const GradedAlgebra& a) {
    CheckReport report{"jacobi", {}};
    const int n = a.total_dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                if (!jacobi_triple_ok(a, i, j, k)) report.violations.push_back({i, j, k});
    finish(report);
    return report;
}

CheckReport check_associativity_serial(const GradedAlgebra& a) {
    CheckReport report{"associativity", {}};
    const int n = a.total_dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!assoc_triple_ok(a, i, j, k)) report.violations.push_back({i, j, k});
    finish(report);
    return report;
}

CheckReport check_leibniz_serial(const GradedAlgebra& a) {
    CheckReport report{"leibniz", {}};
    const int n = a.total_dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!leibniz_triple_ok(a, i, j, k)) report.violations.push_back({i, j, k});
    finish(report);
    return report;
}

CheckReport check_grading_coherence_serial(const GradedAlgebra& a) {
    CheckReport report{"grading_coherence", {}};
    const int L = a.label_count();
    for (int s = 0; s < L; ++s)
        for (int t = 0; t < L; ++t)
            if (component_product_target(a, s, t).kind == ComponentTarget::Kind::incoherent)
                report.violations.push_back({s, t, -1});
    finish(report);
    return report;
}

#ifdef SGPA_HAVE_OPENMP

CheckReport check_antisymmetry_parallel(const GradedAlgebra& a) {
    CheckReport report{"antisymmetry", {}};
    const int n = a.total_dim();
    report.violations = parallel_rows(n, [&](int i, std::vector<Violation>& out) {
        for (int j = i; j < n; ++j)
            if (!antisym_pair_ok(a, i, j)) out.push_back({i, j, -1});
    });
    finish(report);
    return report;
}

CheckReport check_jacobi_parallel(const GradedAlgebra& a) {
    CheckReport report{"jacobi", {}};
    const int n = a.total_dim();
    report.violations = parallel_rows(n, [&](int i, std::vector<Violation>& out) {
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                if (!jacobi_triple_ok(a, i, j, k)) out.push_back({i, j, k});
    });
    finish(report);
    return report;
}

CheckReport check_associativity_parallel(const GradedAlgebra& a) {
    CheckReport report{"associativity", {}};
    const int n = a.total_dim();
    report.violations = parallel_rows(n, [&](int i, std::vector<Violation>& out) {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!assoc_triple_ok(a, i, j, k)) out.push_back({i, j, k});
    });
    finish(report);
    return report;
}

CheckReport check_leibniz_parallel(const GradedAlgebra& a) {
    CheckReport report{"leibniz", {}};
    const int n = a.total_dim();
    report.violations = parallel_rows(n, [&](int i, std::vector<Violation>& out) {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!leibniz_triple_ok(a, i, j, k)) out.push_back({i, j, k});
    });
    finish(report);
    return report;
}

CheckReport check_grading_coherence_parallel(const GradedAlgebra& a) {
    CheckReport report{"grading_coherence", {}};
    const int L = a.label_count();
    report.violations = parallel_rows(L, [&](int s, std::vector<Violation>& out) {
        for (int t = 0; t < L; ++t)
            if (component_product_target(a, s, t).kind == ComponentTarget::Kind::incoherent)
                out.push_back({s, t, -1});
    });
    finish(report);
    return report;
}

#else

CheckReport check_antisymmetry_parallel(const GradedAlgebra& a) {
    return check_antisymmetry_serial(a);
}
CheckReport check_jacobi_parallel(const GradedAlgebra& a) { return check_jacobi_serial(a); }
CheckReport check_associativity_parallel(const GradedAlgebra& a) {
    return check_associativity_serial(a);
}
CheckReport check_leibniz_parallel(const GradedAlgebra& a) { return check_leibniz_serial(a); }
CheckReport check_grading_coherence_parallel(const GradedAlgebra& a) {
    return check_grading_coherence_serial(a);
}

#endif

}  // namespace detail

CheckReport check_antisymmetry(const GradedAlgebra& a, ExecMode mode) {
    return mode == ExecMode::serial ? detail::check_antisymmetry_serial(a)
                                    : detail::check_antisymmetry_parallel(a);
}
CheckReport check_jacobi(const GradedAlgebra& a, ExecMode mode) {
    return mode == ExecMode::serial ? detail::check_jacobi_serial(a)
                                    : detail::check_jacobi_parallel(a);
}
CheckReport check_associativity(const GradedAlgebra& a, ExecMode mode) {
    return mode == ExecMode::serial ? detail::check_associativity_serial(a)
                                    : detail::check_associativity_parallel(a);
}
CheckReport check_leibniz(const GradedAlgebra& a, ExecMode mode) {
    return mode == ExecMode::serial ? detail::check_leibniz_serial(a)
                                    : detail::check_leibniz_parallel(a);
}
CheckReport check_grading_coherence(const GradedAlgebra& a, ExecMode mode) {
    return mode == ExecMode::serial ? detail::check_grading_coherence_serial(a)
                                    : detail::check_grading_coherence_parallel(a);
}

ComponentTarget component_product_target(const GradedAlgebra& a, LabelId s, LabelId t) {
    std::vector<LabelId> touched;
    const auto note = [&](const Vec* v) {
        if (!v) return;
        for (LabelId l : a.blocks_touched(*v))
            if (std::find(touched.begin(), touched.end(), l) == touched.end())
                touched.push_back(l);
    };
    const int si = a.offset_of(s), sn = a.dim_of(s);
    const int ti = a.offset_of(t), tn = a.dim_of(t);
    for (int i = si; i < si + sn; ++i) {
        for (int j = ti; j < ti + tn; ++j) {
            note(a.bracket_entry(i, j));
            note(a.aprod_entry(i, j));
        }
    }
    std::sort(touched.begin(), touched.end());
    ComponentTarget out;
    if (touched.empty()) {
        out.kind = ComponentTarget::Kind::zero;
    } else if (touched.size() == 1) {
        out.kind = ComponentTarget::Kind::target;
        out.target = touched.front();
    } else {
        out.kind = ComponentTarget::Kind::incoherent;
        out.touched = std::move(touched);
    }
    return out;
}

CheckReport check_zero_label(const GradedAlgebra& a) {
    CheckReport report{"zero_label", {}};
    if (!a.zero_label()) return report;
    const LabelId zero = *a.zero_label();
    for (LabelId l = 0; l < a.label_count(); ++l) {
        if (l == zero) continue;
        const ComponentTarget ct = component_product_target(a, zero, l);
        if (ct.kind == ComponentTarget::Kind::target && ct.target == zero)
            report.violations.push_back({l, -1, -1});
    }
    return report;
}

bool ValidationReport::all_pass() const {
    for (const CheckReport* r : reports())
        if (!r->pass()) return false;
    return true;
}

std::vector<const CheckReport*> ValidationReport::reports() const {
    return {&antisymmetry, &jacobi, &associativity, &leibniz, &grading_coherence, &zero_label};
}

ValidationReport validate(const GradedAlgebra& a, ExecMode mode) {
    ValidationReport v;
    v.antisymmetry = check_antisymmetry(a, mode);
    v.jacobi = check_jacobi(a, mode);
    v.associativity = check_associativity(a, mode);
    v.leibniz = check_leibniz(a, mode);
    v.grading_coherence = check_grading_coherence(a, mode);
    v.zero_label = check_zero_label(a);
    return v;
}

}  // namespace sgpa
