#include "sgpa/report.hpp"

#include <ostream>

namespace sgpa {

namespace {

using nlohmann::ordered_json;

ordered_json check_json(const CheckReport& check) {
    ordered_json j;
    j["pass"] = check.pass();
    ordered_json violations = ordered_json::array();
    for (const auto& v : check.violations) {
        ordered_json t = ordered_json::array();
        t.push_back(v.i);
        if (v.j >= 0) t.push_back(v.j);
        if (v.k >= 0) t.push_back(v.k);
        violations.push_back(std::move(t));
    }
    j["violations"] = std::move(violations);
    return j;
}

ordered_json star_json(const GradedAlgebra& a, const StarTable& table) {
    ordered_json rows = ordered_json::array();
    for (LabelId s = 0; s < a.label_count(); ++s) {
        for (LabelId t = 0; t < a.label_count(); ++t) {
            const auto target = table.plain(s, t);
            rows.push_back({{"a", a.label_name(s)},
                            {"b", a.label_name(t)},
                            {"target", target ? ordered_json(a.label_name(*target))
                                              : ordered_json(nullptr)}});
        }
    }
    return rows;
}

ordered_json class_names(const GradedAlgebra& a, const std::vector<LabelId>& cls) {
    ordered_json names = ordered_json::array();
    for (LabelId l : cls) names.push_back(a.label_name(l));
    return names;
}

ordered_json simplicity_json(const SimplicityResult& r) {
    ordered_json j;
    j["verdict"] = verdict_name(r.verdict);
    j["witness_dim"] =
        r.witness ? ordered_json(r.witness->dim()) : ordered_json(nullptr);
    j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string ext_label_name(const GradedAlgebra& a, ExtLabel l) {
    return a.label_name(l.base) + (l.tilded ? "~" : "");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::simple: return "simple";
        case Verdict::not_simple: return "not_simple";
        default: return "inapplicable";
    }
}

int FullReport::exit_code() const {
    if (!axioms.all_pass()) return 1;
    if (!ideal_theorems_pass) return 1;
    if (decomposition && !decomposition->covers) return 1;
    if (direct_sum && direct_sum->status == TheoremCheck::Status::asserted_fail) return 1;
    if (verdicts_agree && !*verdicts_agree) return 1;
    if (fine && !fine->pass()) return 1;
    return 0;
}

FullReport analyze(const GradedAlgebra& a, const ReportOptions& options) {
    FullReport report;
    report.axioms = validate(a, options.mode);
    if (!report.axioms.all_pass() || options.scope == ReportScope::validate) return report;

    report.star = StarTable::build(a, options.mode);
    report.partition = connection_classes(*report.star);
    if (options.scope == ReportScope::classes) return report;

    const StarTable& table = *report.star;
    const ConnectionPartition& partition = *report.partition;

    if (options.scope != ReportScope::simple) {
        report.decomposition = decompose(a, table, partition);
        report.direct_sum = check_direct_sum_theorem(a, table, partition);
    }
    if (options.scope == ReportScope::decompose) return report;

    report.flags = structure_flags(a, table);
    report.simple_direct = gr_simple_direct(a, table, *report.flags);
    report.simple_criterion = gr_simple_criterion(a, table, partition, *report.flags);
    if (report.simple_direct->verdict != Verdict::inapplicable &&
        report.simple_criterion->verdict != Verdict::inapplicable)
        report.verdicts_agree =
            report.simple_direct->verdict == report.simple_criterion->verdict;
    if (options.scope == ReportScope::simple) return report;

    for (const auto& [cls, ideal] : report.decomposition->summands) {
        if (!is_graded_subalgebra(a, ideal).pass() || !is_graded_ideal(a, ideal).pass())
            report.ideal_theorems_pass = false;
    }
    for (std::size_t i = 0; i < report.decomposition->summands.size(); ++i)
        for (std::size_t j = i + 1; j < report.decomposition->summands.size(); ++j)
            if (!pairwise_orthogonal(a, report.decomposition->summands[i].second,
                                     report.decomposition->summands[j].second)
                     .pass())
                report.ideal_theorems_pass = false;

    if (report.flags->centerless && report.flags->tight_zero &&
        report.flags->maximal_length && report.flags->multiplicative)
        report.fine = fine_decomposition_check(a, table, partition, *report.flags);
    return report;
}

nlohmann::ordered_json report_to_json(const GradedAlgebra& a, const FullReport& report,
                                      const ReportOptions& options) {
    ordered_json j;
    {
        ordered_json meta;
        meta["name"] = a.name();
        ordered_json labels = ordered_json::array();
        for (LabelId l = 0; l < a.label_count(); ++l)
            labels.push_back({{"name", a.label_name(l)}, {"dim", a.dim_of(l)}});
        meta["labels"] = std::move(labels);
        meta["zero_label"] = a.zero_label() ? ordered_json(a.label_name(*a.zero_label()))
                                            : ordered_json(nullptr);
        meta["total_dim"] = a.total_dim();
        j["algebra"] = std::move(meta);
    }
    {
        ordered_json axioms;
        for (const CheckReport* check : report.axioms.reports())
            axioms[check->name] = check_json(*check);
        axioms["pass"] = report.axioms.all_pass();
        j["axioms"] = std::move(axioms);
    }
    if (report.star) j["support"] = {{"star", star_json(a, *report.star)}};
    if (report.partition) {
        ordered_json classes = ordered_json::array();
        for (const auto& cls : report.partition->classes)
            classes.push_back(class_names(a, cls));
        ordered_json section;
        section["classes"] = std::move(classes);
        if (options.witnesses) {
            ordered_json witnesses = ordered_json::array();
            for (const auto& cls : report.partition->classes) {
                const LabelId rep = cls.front();
                for (LabelId other : cls) {
                    if (other == rep && cls.size() > 1) continue;
                    const auto& family =
                        report.partition->witness.at(std::make_pair(rep, other));
                    ordered_json names = ordered_json::array();
                    for (const ExtLabel& e : family) names.push_back(ext_label_name(a, e));
                    witnesses.push_back({{"from", a.label_name(rep)},
                                         {"to", a.label_name(other)},
                                         {"family", std::move(names)}});
                }
            }
            section["witnesses"] = std::move(witnesses);
        }
        j["classes"] = std::move(section);
    }
    if (report.decomposition) {
        const auto& d = *report.decomposition;
        ordered_json summands = ordered_json::array();
        for (const auto& [cls, ideal] : d.summands) {
            ordered_json s;
            s["class"] = class_names(a, cls);
            s["dim"] = ideal.dim();
            s["i0_dim"] =
                a.zero_label() ? ordered_json(ideal.block(*a.zero_label()).dim())
                               : ordered_json(0);
            summands.push_back(std::move(s));
        }
        ordered_json section;
        section["u_dim"] = d.u.dim();
        section["summands"] = std::move(summands);
        section["covers"] = d.covers;
        section["direct"] = d.direct;
        if (report.direct_sum) {
            const char* status = "hypotheses_not_met";
            if (report.direct_sum->status == TheoremCheck::Status::asserted_pass)
                status = "asserted_pass";
            else if (report.direct_sum->status == TheoremCheck::Status::asserted_fail)
                status = "asserted_fail";
            section["direct_sum_theorem"] = status;
        }
        j["decomposition"] = std::move(section);
    }
    if (report.flags) {
        const auto& f = *report.flags;
        j["flags"] = {{"centerless", f.centerless},
                      {"tight_zero", f.tight_zero},
                      {"maximal_length", f.maximal_length},
                      {"multiplicative", f.multiplicative},
                      {"center_dim", f.center.dim()}};
    }
    if (report.simple_direct && report.simple_criterion) {
        ordered_json section;
        section["criterion"] = simplicity_json(*report.simple_criterion);
        section["direct"] = simplicity_json(*report.simple_direct);
        section["agree"] = report.verdicts_agree ? ordered_json(*report.verdicts_agree)
                                                 : ordered_json(nullptr);
        j["simplicity"] = std::move(section);
    }
    if (options.scope == ReportScope::full && report.decomposition) {
        ordered_json theorems;
        theorems["class_ideals_pass"] = report.ideal_theorems_pass;
        if (report.fine) {
            ordered_json entries = ordered_json::array();
            for (const auto& e : report.fine->entries)
                entries.push_back({{"class", class_names(a, e.cls)},
                                   {"valid", e.valid},
                                   {"verdict", verdict_name(e.verdict)}});
            theorems["fine_decomposition"] = std::move(entries);
        }
        j["theorems"] = std::move(theorems);
    }
    j["exit_code"] = report.exit_code();
    return j;
}

void print_report(std::ostream& out, const GradedAlgebra& a, const FullReport& report,
                  const ReportOptions& options) {
    out << "algebra " << a.name() << ": " << a.label_count() << " labels, dim "
        << a.total_dim();
    if (a.zero_label()) out << ", zero label " << a.label_name(*a.zero_label());
    out << "\n";

    out << "axioms:";
    for (const CheckReport* check : report.axioms.reports())
        out << " " << check->name << (check->pass() ? " OK" : " FAIL");
    out << "\n";
    for (const CheckReport* check : report.axioms.reports()) {
        if (check->pass()) continue;
        out << "  " << check->name << " violations:";
        std::size_t shown = 0;
        for (const auto& v : check->violations) {
            out << " (" << v.i;
            if (v.j >= 0) out << "," << v.j;
            if (v.k >= 0) out << "," << v.k;
            out << ")";
            if (++shown == 8 && check->violations.size() > 8) {
                out << " ... " << check->violations.size() << " total";
                break;
            }
        }
        out << "\n";
    }

    if (report.partition) {
        out << "classes:";
        for (const auto& cls : report.partition->classes) {
            out << " {";
            for (std::size_t i = 0; i < cls.size(); ++i)
                out << (i ? "," : "") << a.label_name(cls[i]);
            out << "}";
        }
        if (report.partition->classes.empty()) out << " none";
        out << "\n";
        if (options.witnesses) {
            for (const auto& cls : report.partition->classes) {
                const LabelId rep = cls.front();
                for (LabelId other : cls) {
                    if (other == rep && cls.size() > 1) continue;
                    const auto& family =
                        report.partition->witness.at(std::make_pair(rep, other));
                    out << "  witness " << a.label_name(rep) << " ~ " << a.label_name(other)
                        << ": [";
                    for (std::size_t i = 0; i < family.size(); ++i)
                        out << (i ? "," : "") << ext_label_name(a, family[i]);
                    out << "]\n";
                }
            }
        }
    }
    if (report.decomposition) {
        const auto& d = *report.decomposition;
        out << "decomposition: U dim " << d.u.dim() << "; summands:";
        for (const auto& [cls, ideal] : d.summands) out << " " << ideal.dim();
        out << "; covers " << (d.covers ? "yes" : "NO") << "; direct "
            << (d.direct ? "yes" : "no") << "\n";
    }
    if (report.flags) {
        const auto& f = *report.flags;
        out << "flags: centerless " << (f.centerless ? "yes" : "no") << ", tight "
            << (f.tight_zero ? "yes" : "no") << ", maximal length "
            << (f.maximal_length ? "yes" : "no") << ", multiplicative "
            << (f.multiplicative ? "yes" : "no") << "\n";
    }
    if (report.simple_criterion && report.simple_direct) {
        out << "simplicity: criterion=" << verdict_name(report.simple_criterion->verdict)
            << " direct=" << verdict_name(report.simple_direct->verdict);
        if (report.verdicts_agree)
            out << " agree=" << (*report.verdicts_agree ? "yes" : "NO");
        out << "\n";
        for (const auto& note : report.simple_criterion->notes)
            out << "  criterion: " << note << "\n";
        for (const auto& note : report.simple_direct->notes)
            out << "  direct: " << note << "\n";
    }
    if (options.scope == ReportScope::full && report.decomposition) {
        out << "theorems: class ideals "
            << (report.ideal_theorems_pass ? "OK" : "FAIL");
        if (report.direct_sum) {
            out << ", direct sum ";
            switch (report.direct_sum->status) {
                case TheoremCheck::Status::asserted_pass: out << "asserted OK"; break;
                case TheoremCheck::Status::asserted_fail: out << "asserted FAIL"; break;
                default: out << "hypotheses not met (" << report.direct_sum->detail << ")";
            }
        }
        if (report.fine) {
            out << ", fine decomposition " << (report.fine->pass() ? "simple" : "FAIL");
        }
        out << "\n";
    }
}

}  // namespace sgpa
