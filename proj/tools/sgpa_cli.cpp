// Command-line front end: validates set-graded non-commutative Poisson
// algebras given as JSON structure constants and reports their support
// combinatorics, ideal decomposition and graded simplicity.

#include "sgpa/document.hpp"
#include "sgpa/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <vector>

namespace {

namespace fs = std::filesystem;

#ifndef SGPA_CORPUS_DIR
#define SGPA_CORPUS_DIR "corpus"
#endif

struct CliOptions {
    std::string path;
    bool json = false;
    bool corpus = false;
    bool witnesses = false;
    bool serial = false;
};

int run_one(const fs::path& file, sgpa::ReportScope scope, const CliOptions& opt,
            bool* first_json) {
    sgpa::ReportOptions options;
    options.scope = scope;
    options.witnesses = opt.witnesses;
    options.mode = opt.serial ? sgpa::ExecMode::serial : sgpa::ExecMode::parallel;

    sgpa::GradedAlgebra algebra = sgpa::load_algebra_file(file);
    const sgpa::FullReport report = sgpa::analyze(algebra, options);
    if (opt.json) {
        if (!*first_json) std::cout << "\n";
        *first_json = false;
        std::cout << sgpa::report_to_json(algebra, report, options).dump(2) << "\n";
    } else {
        print_report(std::cout, algebra, report, options);
    }
    return report.exit_code();
}

int run(sgpa::ReportScope scope, const CliOptions& opt) {
    std::vector<fs::path> files;
    if (opt.corpus) {
        const fs::path dir{SGPA_CORPUS_DIR};
        if (!fs::is_directory(dir)) {
            std::cerr << "corpus directory not found: " << dir << "\n";
            return 2;
        }
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(opt.path);
    }

    int worst = 0;
    bool first_json = true;
    for (const auto& file : files) {
        if (opt.corpus && !opt.json) std::cout << "== " << file.string() << " ==\n";
        try {
            worst = std::max(worst, run_one(file, scope, opt, &first_json));
        } catch (const sgpa::ParseError& e) {
            std::cerr << "input error: " << e.what() << "\n";
            worst = std::max(worst, 2);
        }
        if (opt.corpus && !opt.json) std::cout << "\n";
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure analysis of set-graded non-commutative Poisson algebras"};
    app.require_subcommand(1);

    CliOptions opt;
    const auto add_common = [&](CLI::App* sub, bool with_witness) {
        sub->add_option("file", opt.path, "algebra spec (JSON)");
        sub->add_flag("--corpus", opt.corpus, "run over the bundled corpus directory");
        sub->add_flag("--json", opt.json, "machine-readable output");
        if (with_witness)
            sub->add_flag("--witness", opt.witnesses, "include connection witness families");
        sub->add_flag("--serial", opt.serial, "force the serial reference kernels");
    };

    add_common(app.add_subcommand("validate", "run the axiom checks"), false);
    add_common(app.add_subcommand("classes", "connection classes of the support"), true);
    add_common(app.add_subcommand("decompose", "ideal decomposition"), true);
    add_common(app.add_subcommand("simple", "graded simplicity verdicts"), true);
    add_common(app.add_subcommand("report", "full structure report"), true);

    CLI11_PARSE(app, argc, argv);

    sgpa::ReportScope scope = sgpa::ReportScope::full;
    if (app.got_subcommand("validate")) scope = sgpa::ReportScope::validate;
    else if (app.got_subcommand("classes")) scope = sgpa::ReportScope::classes;
    else if (app.got_subcommand("decompose")) scope = sgpa::ReportScope::decompose;
    else if (app.got_subcommand("simple")) scope = sgpa::ReportScope::simple;

    if (!opt.corpus && opt.path.empty()) {
        std::cerr << "error: give an input file or --corpus\n";
        return 2;
    }
    try {
        return run(scope, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
