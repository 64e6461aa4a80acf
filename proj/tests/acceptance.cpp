// Acceptance suite: one line per criterion, nonzero exit when any fails.
// The randomized part of the suite is seeded, so runs are reproducible.

#include "sgpa/analysis.hpp"
#include "sgpa/document.hpp"
#include "sgpa/report.hpp"

#include "support/fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <sys/wait.h>

using namespace sgpa;
using namespace sgpa::testing;

namespace {

#ifndef SGPA_CLI_PATH
#define SGPA_CLI_PATH "sgpa"
#endif

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %-28s %s%s%s\n", number, label.c_str(),
                    ok ? "PASS" : "FAIL", detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

struct Analyzed {
    std::string name;
    GradedAlgebra algebra;
    StarTable table;
    ConnectionPartition partition;
    StructureFlags flags;

    explicit Analyzed(SuiteAlgebra s)
        : name(std::move(s.name)),
          algebra(std::move(s.algebra)),
          table(StarTable::build(algebra)),
          partition(connection_classes(table)),
          flags(structure_flags(algebra, table)) {}
};

std::string run_cli(const std::string& args, int* exit_code) {
    const std::string cmd = std::string(SGPA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return {};
    }
    std::string out;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    const int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

const char* const kCorpusNames[] = {"m2-cartan",     "heis3",          "m2-double",
                                    "untight-z",     "broken-jacobi",  "broken-leibniz"};

}  // namespace

int main() {
    Harness h;

    std::vector<Analyzed> suite;
    for (auto& s : corpus_suite()) suite.emplace_back(std::move(s));
    for (auto& s : random_suite(90125, 50)) suite.emplace_back(std::move(s));
    const std::size_t corpus_count = 3;

    // 1. Axiom suite on the corpus plus mutation sensitivity, under 1 s.
    h.criterion(1, "axiom suite + mutations", [&](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < corpus_count; ++i) {
            const ValidationReport v = validate(suite[i].algebra);
            if (!(v.antisymmetry.pass() && v.jacobi.pass() && v.associativity.pass() &&
                  v.leibniz.pass() && v.grading_coherence.pass())) {
                detail = suite[i].name + " failed an axiom check";
                return false;
            }
        }
        const AlgebraDocument base = load_corpus_document("m2-cartan");
        int mutants = 0;
        for (const bool mutate_bracket : {true, false}) {
            const std::size_t count = mutate_bracket ? base.bracket.size() : base.aprod.size();
            for (std::size_t e = 0; e < count; ++e) {
                for (const long factor : {-1, 2}) {
                    AlgebraDocument doc = base;
                    auto& target = mutate_bracket ? doc.bracket[e] : doc.aprod[e];
                    for (auto& se : target.value) se.num *= factor;
                    const ValidationReport v = validate(load_spec(doc));
                    if (v.antisymmetry.pass() && v.jacobi.pass() && v.associativity.pass() &&
                        v.leibniz.pass() && v.grading_coherence.pass()) {
                        detail = "mutation escaped every checker";
                        return false;
                    }
                    ++mutants;
                }
            }
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream os;
        os << mutants << " mutants, " << elapsed << " s";
        detail = os.str();
        return mutants >= 20 && elapsed < 1.0;
    });

    // 2. The connection relation is an equivalence, exactly.
    h.criterion(2, "equivalence of ~", [&](std::string& detail) {
        for (const Analyzed& s : suite) {
            if (!validate(s.algebra).all_pass()) {
                detail = s.name + " is not a valid algebra";
                return false;
            }
            std::vector<LabelId> support;
            for (LabelId l = 0; l < s.algebra.label_count(); ++l)
                if (!s.algebra.zero_label() || l != *s.algebra.zero_label())
                    support.push_back(l);
            std::map<LabelId, ReachableSet> reach;
            for (LabelId l : support) reach.emplace(l, reachable(s.table, l));
            for (LabelId lam : support) {
                if (!reach.at(lam).reaches(lam)) {
                    detail = s.name + ": not reflexive";
                    return false;
                }
                for (LabelId mu : support) {
                    if (reach.at(lam).reaches(mu) != reach.at(mu).reaches(lam)) {
                        detail = s.name + ": not symmetric";
                        return false;
                    }
                    for (LabelId tau : support)
                        if (reach.at(lam).reaches(mu) && reach.at(mu).reaches(tau) &&
                            !reach.at(lam).reaches(tau)) {
                            detail = s.name + ": not transitive";
                            return false;
                        }
                }
            }
        }
        detail = std::to_string(suite.size()) + " algebras";
        return suite.size() >= 53;
    });

    // 3. Class ideals are graded subalgebras and ideals; distinct classes
    //    annihilate each other.
    h.criterion(3, "ideal theorems", [&](std::string& detail) {
        for (const Analyzed& s : suite) {
            std::vector<GradedSubspace> ideals;
            for (const auto& cls : s.partition.classes) {
                ideals.push_back(ideal_of_class(s.algebra, s.table, s.partition, cls));
                if (!is_graded_subalgebra(s.algebra, ideals.back()).pass()) {
                    detail = s.name + ": subalgebra containment failed";
                    return false;
                }
                if (!is_graded_ideal(s.algebra, ideals.back()).pass()) {
                    detail = s.name + ": ideal containment failed";
                    return false;
                }
            }
            for (std::size_t i = 0; i < ideals.size(); ++i)
                for (std::size_t j = i + 1; j < ideals.size(); ++j)
                    if (!pairwise_orthogonal(s.algebra, ideals[i], ideals[j]).pass()) {
                        detail = s.name + ": distinct classes not orthogonal";
                        return false;
                    }
        }
        return true;
    });

    // 4. Decomposition coverage, directness under the corollary hypotheses,
    //    and the exact m2-double shape.
    h.criterion(4, "decomposition theorem", [&](std::string& detail) {
        for (const Analyzed& s : suite) {
            const DecompositionReport d = decompose(s.algebra, s.table, s.partition);
            if (!d.covers) {
                detail = s.name + ": decomposition does not cover";
                return false;
            }
            if (s.flags.centerless && s.flags.tight_zero && !d.direct) {
                detail = s.name + ": corollary hypotheses hold but the sum is not direct";
                return false;
            }
            if (s.name == "m2-double") {
                if (d.u.dim() != 0 || d.summands.size() != 2 ||
                    d.summands[0].second.dim() != 4 || d.summands[1].second.dim() != 4) {
                    detail = "m2-double decomposition shape is wrong";
                    return false;
                }
            }
        }
        return true;
    });

    // 5. The two simplicity routes agree whenever both apply.
    h.criterion(5, "simplicity cross-validation", [&](std::string& detail) {
        int compared = 0;
        for (const Analyzed& s : suite) {
            const SimplicityResult direct = gr_simple_direct(s.algebra, s.table, s.flags);
            const SimplicityResult criterion =
                gr_simple_criterion(s.algebra, s.table, s.partition, s.flags);
            if (direct.verdict != Verdict::inapplicable &&
                criterion.verdict != Verdict::inapplicable) {
                ++compared;
                if (direct.verdict != criterion.verdict) {
                    detail = s.name + ": verdicts disagree";
                    return false;
                }
            }
            if (s.name == "m2-cartan" && (direct.verdict != Verdict::simple ||
                                          criterion.verdict != Verdict::simple)) {
                detail = "m2-cartan must be simple by both routes";
                return false;
            }
            if (s.name == "m2-double") {
                if (direct.verdict != Verdict::not_simple ||
                    criterion.verdict != Verdict::not_simple) {
                    detail = "m2-double must be not simple by both routes";
                    return false;
                }
                if (!direct.witness || direct.witness->dim() != 4) {
                    detail = "m2-double witness ideal must be 4-dimensional";
                    return false;
                }
            }
        }
        detail = std::to_string(compared) + " algebras compared on both routes";
        return compared >= 2;
    });

    // 6. Fine decomposition of m2-double into simple summands.
    h.criterion(6, "fine decomposition", [&](std::string& detail) {
        const Analyzed& dbl = suite[2];
        if (dbl.name != "m2-double") {
            detail = "suite order changed";
            return false;
        }
        const FineDecompositionReport fine =
            fine_decomposition_check(dbl.algebra, dbl.table, dbl.partition, dbl.flags);
        if (fine.entries.size() != 2) {
            detail = "expected two summands";
            return false;
        }
        for (const auto& e : fine.entries)
            if (!e.valid || e.verdict != Verdict::simple) {
                detail = "a restricted summand failed revalidation or simplicity";
                return false;
            }
        return true;
    });

    // 7. Every emitted witness family replays through the propagation map;
    //    checked in-process for the whole suite and end-to-end through the
    //    CLI --witness output for the corpus.
    h.criterion(7, "witness replay", [&](std::string& detail) {
        int replayed = 0;
        for (const Analyzed& s : suite) {
            for (const auto& [pair, family] : s.partition.witness) {
                if (!replay_family(s.table, family, pair.first, pair.second)) {
                    detail = s.name + ": stored witness failed to replay";
                    return false;
                }
                ++replayed;
            }
        }
        for (std::size_t i = 0; i < corpus_count; ++i) {
            const Analyzed& s = suite[i];
            int code = 0;
            const std::string out = run_cli(
                "report --json --witness " + corpus_path(s.name).string(), &code);
            if (code != 0) {
                detail = s.name + ": cli run failed";
                return false;
            }
            const auto j = nlohmann::json::parse(out);
            for (const auto& w : j.at("classes").at("witnesses")) {
                const auto to_id = [&](const std::string& n) {
                    return *s.algebra.label_id(n);
                };
                ConnectionFamily family;
                for (const auto& item : w.at("family")) {
                    std::string n = item.get<std::string>();
                    const bool tilded = !n.empty() && n.back() == '~';
                    if (tilded) n.pop_back();
                    family.push_back({to_id(n), tilded});
                }
                if (!replay_family(s.table, family, to_id(w.at("from")), to_id(w.at("to")))) {
                    detail = s.name + ": emitted witness failed to replay";
                    return false;
                }
                ++replayed;
            }
        }
        detail = std::to_string(replayed) + " families replayed";
        return replayed > 0;
    });

    // 8. Byte-identical --json reports across process runs.
    h.criterion(8, "report determinism", [&](std::string& detail) {
        for (const char* name : kCorpusNames) {
            const std::string args =
                "report --json --witness " + corpus_path(name).string();
            int code1 = 0, code2 = 0;
            const std::string one = run_cli(args, &code1);
            const std::string two = run_cli(args, &code2);
            if (code1 != code2 || one != two || one.empty()) {
                detail = std::string(name) + ": runs differ";
                return false;
            }
        }
        return true;
    });

    if (h.failures == 0) {
        std::printf("ACCEPTANCE: all 8 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criteria FAILED\n", h.failures);
    return 1;
}
