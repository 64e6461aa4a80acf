#pragma once

// Shared test scaffolding: corpus loading, an independent matrix-unit
// oracle for the corpus structure constants, hand-built fixture documents
// and the randomized suite generator used by the acceptance criteria.

#include "sgpa/analysis.hpp"
#include "sgpa/document.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace sgpa::testing {

#ifndef SGPA_CORPUS_DIR
#define SGPA_CORPUS_DIR "corpus"
#endif

inline std::filesystem::path corpus_path(const std::string& name) {
    return std::filesystem::path(SGPA_CORPUS_DIR) / (name + ".json");
}

inline Vec rvec(std::initializer_list<long> entries) {
    Vec v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

inline GradedAlgebra load_corpus(const std::string& name) {
    return load_algebra_file(corpus_path(name));
}

inline AlgebraDocument load_corpus_document(const std::string& name) {
    return load_document_file(corpus_path(name));
}

// ---------------------------------------------------------------------
// Independent oracle for the corpus constants: basis vectors are matrix
// units of block-diagonal factors, and products are computed from the
// matrix-unit multiplication rule rather than from any stored table.
struct MatrixUnitsOracle {
    // basis[i] = {factor, row, col}
    std::vector<std::array<int, 3>> basis;
    std::map<std::array<int, 3>, int> index;

    explicit MatrixUnitsOracle(std::vector<std::array<int, 3>> b) : basis(std::move(b)) {
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    }

    Vec unit(int factor, int row, int col) const {
        Vec v = zero_vec(basis.size());
        v[index.at({factor, row, col})] = 1;
        return v;
    }

    // E_{f,a,b} E_{g,c,d} = [f==g][b==c] E_{f,a,d}
    Vec mul(int i, int j) const {
        const auto& [f, a, b] = basis[i];
        const auto& [g, c, d] = basis[j];
        if (f != g || b != c) return zero_vec(basis.size());
        return unit(f, a, d);
    }

    Vec commutator(int i, int j) const {
        Vec v = mul(i, j);
        add_scaled(v, Rational(-1), mul(j, i));
        return v;
    }
};

inline MatrixUnitsOracle m2_cartan_oracle() {
    return MatrixUnitsOracle({{0, 0, 0}, {0, 1, 1}, {0, 0, 1}, {0, 1, 0}});
}

inline MatrixUnitsOracle m2_double_oracle() {
    return MatrixUnitsOracle({{0, 0, 0},
                              {0, 1, 1},
                              {1, 0, 0},
                              {1, 1, 1},
                              {0, 0, 1},
                              {0, 1, 0},
                              {1, 0, 1},
                              {1, 1, 0}});
}

// Full n x n matrix algebra with the diagonal block as distinguished zero
// and one label per off-diagonal unit.
inline GradedAlgebra matrix_cartan(int n) {
    const auto unit_index = [n](int a, int b) {
        if (a == b) return a;
        return n + a * (n - 1) + (b > a ? b - 1 : b);
    };
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
                    const int i = unit_index(a, b), j = unit_index(c, d);
                    if (b == c) {
                        Vec v = zero_vec(total);
                        v[unit_index(a, d)] = 1;
                        aprod[{i, j}] = v;
                    }
                    Vec w = zero_vec(total);
                    if (b == c) w[unit_index(a, d)] += 1;
                    if (d == a) w[unit_index(c, b)] -= 1;
                    if (!is_zero(w)) bracket[{i, j}] = std::move(w);
                }
    return GradedAlgebra("m" + std::to_string(n) + "-cartan", std::move(labels),
                         std::move(dims), 0, std::move(bracket), std::move(aprod));
}

// ---------------------------------------------------------------------
// Compact document builder for hand-written fixtures.
struct E {
    int index;
    long num;
    long den = 1;
};

inline AlgebraDocument::ProductEntry entry(int i, int j, std::vector<E> value) {
    AlgebraDocument::ProductEntry e;
    e.i = i;
    e.j = j;
    for (const auto& t : value) e.value.push_back({t.index, BigInt(t.num), BigInt(t.den)});
    return e;
}

inline AlgebraDocument make_doc(std::string name,
                                std::vector<std::pair<std::string, int>> labels,
                                std::optional<std::string> zero,
                                std::vector<AlgebraDocument::ProductEntry> bracket,
                                std::vector<AlgebraDocument::ProductEntry> aprod) {
    AlgebraDocument doc;
    doc.name = std::move(name);
    for (auto& [n, d] : labels) doc.labels.push_back({n, d});
    doc.zero_label = std::move(zero);
    doc.bracket = std::move(bracket);
    doc.aprod = std::move(aprod);
    return doc;
}

// ---------------------------------------------------------------------
// Randomized suite: direct sums of small building blocks (matrix factors,
// Heisenberg-type and sl2-type Lie components with zero associative
// product, abelian paddings), at most 6 labels, blocks at most 2-dim.
struct Component {
    std::vector<std::pair<std::string, int>> labels;
    std::vector<AlgebraDocument::ProductEntry> bracket, aprod;  // local indices
    int zero_candidate = 0;  // local label index usable as distinguished zero
};

inline Component comp_m2() {
    Component c;
    c.labels = {{"z", 2}, {"p", 1}, {"m", 1}};
    c.bracket = {entry(0, 2, {{2, 1}}), entry(0, 3, {{3, -1}}), entry(1, 2, {{2, -1}}),
                 entry(1, 3, {{3, 1}}), entry(2, 3, {{0, 1}, {1, -1}})};
    c.aprod = {entry(0, 0, {{0, 1}}), entry(0, 2, {{2, 1}}), entry(1, 1, {{1, 1}}),
               entry(1, 3, {{3, 1}}), entry(2, 1, {{2, 1}}), entry(2, 3, {{0, 1}}),
               entry(3, 0, {{3, 1}}), entry(3, 2, {{1, 1}})};
    return c;
}

inline Component comp_heis() {
    Component c;
    c.labels = {{"z", 1}, {"a", 1}, {"b", 1}};
    c.bracket = {entry(1, 2, {{0, 1}})};
    return c;
}

inline Component comp_sl2() {
    Component c;
    c.labels = {{"h", 1}, {"e", 1}, {"f", 1}};
    c.bracket = {entry(0, 1, {{1, 2}}), entry(0, 2, {{2, -2}}), entry(1, 2, {{0, 1}})};
    return c;
}

inline Component comp_heis5() {
    Component c;
    c.labels = {{"z", 1}, {"a", 2}, {"b", 2}};
    c.bracket = {entry(1, 3, {{0, 1}}), entry(2, 4, {{0, 1}})};
    return c;
}

inline Component comp_abelian(int dim) {
    Component c;
    c.labels = {{"t", dim}};
    return c;
}

struct SuiteAlgebra {
    std::string name;
    GradedAlgebra algebra;
};

inline GradedAlgebra assemble(const std::string& name, const std::vector<Component>& parts,
                              std::optional<int> zero_part) {
    AlgebraDocument doc;
    doc.name = name;
    std::vector<int> label_offset, basis_offset;
    int labels_so_far = 0, basis_so_far = 0;
    for (const auto& part : parts) {
        label_offset.push_back(labels_so_far);
        basis_offset.push_back(basis_so_far);
        for (std::size_t l = 0; l < part.labels.size(); ++l) {
            doc.labels.push_back(
                {part.labels[l].first + std::to_string(label_offset.back() + 1),
                 part.labels[l].second});
            basis_so_far += part.labels[l].second;
        }
        labels_so_far += static_cast<int>(part.labels.size());
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const int off = basis_offset[p];
        const auto shift = [off](AlgebraDocument::ProductEntry e) {
            e.i += off;
            e.j += off;
            for (auto& se : e.value) se.index += off;
            return e;
        };
        for (const auto& e : parts[p].bracket) doc.bracket.push_back(shift(e));
        for (const auto& e : parts[p].aprod) doc.aprod.push_back(shift(e));
    }
    if (zero_part) {
        const auto& part = parts.at(*zero_part);
        doc.zero_label = part.labels[part.zero_candidate].first +
                         std::to_string(label_offset[*zero_part] + 1);
    }
    return load_spec(doc);
}

inline std::vector<SuiteAlgebra> corpus_suite() {
    std::vector<SuiteAlgebra> out;
    for (const char* name : {"m2-cartan", "heis3", "m2-double"})
        out.push_back({name, load_corpus(name)});
    return out;
}

inline std::vector<SuiteAlgebra> random_suite(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::vector<SuiteAlgebra> out;
    for (int k = 0; k < count; ++k) {
        std::vector<Component> parts;
        int label_budget = 6;
        const int want = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(parts.size()) < want) {
            Component c;
            switch (rng() % 6) {
                case 0: c = comp_m2(); break;
                case 1: c = comp_heis(); break;
                case 2: c = comp_sl2(); break;
                case 3: c = comp_heis5(); break;
                default: c = comp_abelian(1 + static_cast<int>(rng() % 2));
            }
            if (static_cast<int>(c.labels.size()) > label_budget) break;
            label_budget -= static_cast<int>(c.labels.size());
            parts.push_back(std::move(c));
        }
        if (parts.empty()) parts.push_back(comp_heis());
        std::optional<int> zero_part;
        if (rng() % 2 == 0) zero_part = static_cast<int>(rng() % parts.size());
        out.push_back({"random-" + std::to_string(k),
                       assemble("random-" + std::to_string(k), parts, zero_part)});
    }
    return out;
}

}  // namespace sgpa::testing
