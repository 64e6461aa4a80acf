// Timing comparison of the serial reference kernels against the OpenMP
// ones, on full n x n matrix algebras with the diagonal/off-diagonal
// set grading (the checks are cubic in the total dimension).

#include "sgpa/axiom_checks.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef SGPA_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using sgpa::GradedAlgebra;
using sgpa::ProductTable;
using sgpa::Vec;

// Basis: E_11..E_nn first (the diagonal block), then E_ab for a != b,
// one 1-dimensional label per off-diagonal position.
int unit_index(int n, int a, int b) {
    if (a == b) return a;
    return n + a * (n - 1) + (b > a ? b - 1 : b);
}

GradedAlgebra matrix_cartan(int n) {
    std::vector<std::string> labels{"z"};
    std::vector<int> dims{n};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) {
                labels.push_back("e" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
                dims.push_back(1);
            }
    const int total = n * n;

    ProductTable bracket, aprod;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const int i = unit_index(n, a, b), j = unit_index(n, c, d);
                    // E_ab E_cd = [b == c] E_ad
                    if (b == c) {
                        Vec v = sgpa::zero_vec(total);
                        v[unit_index(n, a, d)] = 1;
                        aprod[{i, j}] = v;
                    }
                    Vec w = sgpa::zero_vec(total);
                    bool nz = false;
                    if (b == c) {
                        w[unit_index(n, a, d)] += 1;
                        nz = true;
                    }
                    if (d == a) {
                        w[unit_index(n, c, b)] -= 1;
                        nz = true;
                    }
                    if (nz && !sgpa::is_zero(w)) bracket[{i, j}] = w;
                }
    return GradedAlgebra("m" + std::to_string(n) + "-cartan", std::move(labels),
                         std::move(dims), 0, std::move(bracket), std::move(aprod));
}

template <typename F>
double timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{4, 6, 8};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::stoi(argv[i]));
    }

#ifdef SGPA_HAVE_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP not available; parallel == serial)\n");
#endif
    std::printf("%-6s %-6s %-16s %10s %10s %8s\n", "n", "dim", "check", "serial[s]",
                "parallel[s]", "speedup");

    for (int n : sizes) {
        const GradedAlgebra a = matrix_cartan(n);
        struct Row {
            const char* name;
            sgpa::CheckReport (*serial)(const GradedAlgebra&);
            sgpa::CheckReport (*parallel)(const GradedAlgebra&);
        };
        const Row rows[] = {
            {"jacobi", sgpa::detail::check_jacobi_serial, sgpa::detail::check_jacobi_parallel},
            {"associativity", sgpa::detail::check_associativity_serial,
             sgpa::detail::check_associativity_parallel},
            {"leibniz", sgpa::detail::check_leibniz_serial,
             sgpa::detail::check_leibniz_parallel},
        };
        for (const Row& row : rows) {
            bool ok_serial = true, ok_parallel = true;
            const double ts = timed([&] { ok_serial = row.serial(a).pass(); });
            const double tp = timed([&] { ok_parallel = row.parallel(a).pass(); });
            if (!ok_serial || !ok_parallel) {
                std::printf("unexpected violation in %s on m%d\n", row.name, n);
                return 1;
            }
            std::printf("%-6d %-6d %-16s %10.3f %10.3f %8.2f\n", n, a.total_dim(), row.name,
                        ts, tp, tp > 0 ? ts / tp : 0.0);
        }
    }
    return 0;
}
