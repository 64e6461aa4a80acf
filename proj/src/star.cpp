#include "sgpa/star.hpp"

#include <atomic>
#include <stdexcept>

namespace sgpa {

StarTable StarTable::build(const GradedAlgebra& a, ExecMode mode) {
    StarTable st;
    st.label_count_ = a.label_count();
    st.zero_ = a.zero_label();
    st.table_.assign(static_cast<std::size_t>(st.label_count_) * st.label_count_, std::nullopt);

    const int L = st.label_count_;
    std::atomic<bool> incoherent{false};
    const auto fill_row = [&](int s) {
        for (int t = 0; t < L; ++t) {
            const ComponentTarget ct = component_product_target(a, s, t);
            if (ct.kind == ComponentTarget::Kind::incoherent) {
                incoherent = true;
                return;
            }
            if (ct.kind == ComponentTarget::Kind::target)
                st.table_[static_cast<std::size_t>(s) * L + t] = ct.target;
        }
    };
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < L; ++s) fill_row(s);
    } else {
        for (int s = 0; s < L; ++s) fill_row(s);
    }
    if (incoherent)
        throw std::invalid_argument("star table requires a coherently graded algebra");
    return st;
}

std::optional<LabelId> StarTable::plain(LabelId a, LabelId b) const {
    if (a < 0 || a >= label_count_ || b < 0 || b >= label_count_)
        throw std::invalid_argument("label id out of range");
    return table_[static_cast<std::size_t>(a) * label_count_ + b];
}

std::vector<LabelId> StarTable::star(ExtLabel a, ExtLabel b) const {
    if (a.tilded && b.tilded) return {};
    if (!a.tilded && !b.tilded) {
        const auto target = plain(a.base, b.base);
        if (target) return {*target};
        return {};
    }
    const LabelId plain_arg = a.tilded ? b.base : a.base;
    const LabelId tilde_base = a.tilded ? a.base : b.base;
    std::vector<LabelId> out;
    for (LabelId c = 0; c < label_count_; ++c)
        if (plain(c, tilde_base) == plain_arg) out.push_back(c);
    return out;
}

std::set<ExtLabel> propagate(const StarTable& table, const std::set<ExtLabel>& omega,
                             ExtLabel a) {
    if (table.zero_label()) {
        const LabelId zero = *table.zero_label();
        if (omega.count(plain(zero)) || omega.count(tilde(zero)))
            throw std::invalid_argument("propagation domain excludes the zero label");
    }
    std::set<ExtLabel> out;
    for (const ExtLabel& x : omega) {
        for (LabelId c : table.star(x, a)) {
            if (table.zero_label() && c == *table.zero_label()) continue;
            out.insert(plain(c));
            out.insert(tilde(c));
        }
    }
    return out;
}

}  // namespace sgpa
