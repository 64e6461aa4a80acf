#include "sgpa/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace sgpa {

namespace {

using nlohmann::json;

BigInt parse_bigint(const json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(std::string("malformed integer string for ") + what);
        }
    }
    throw ParseError(std::string("expected integer or integer string for ") + what);
}

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field: ") + key);
    return j.at(key);
}

std::vector<AlgebraDocument::ProductEntry> parse_product(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<AlgebraDocument::ProductEntry> out;
    for (const auto& e : j) {
        AlgebraDocument::ProductEntry entry;
        entry.i = require(e, "i").get<int>();
        entry.j = require(e, "j").get<int>();
        const json value = require(e, "value");
        if (!value.is_array()) throw ParseError("value must be an array of sparse entries");
        for (const auto& t : value) {
            AlgebraDocument::SparseEntry se;
            se.index = require(t, "index").get<int>();
            se.num = parse_bigint(require(t, "num"), "num");
            se.den = parse_bigint(require(t, "den"), "den");
            entry.value.push_back(std::move(se));
        }
        out.push_back(std::move(entry));
    }
    return out;
}

json bigint_to_json(const BigInt& z) {
    if (fits_int64(z)) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

}  // namespace

AlgebraDocument parse_document(const json& j) {
    AlgebraDocument doc;
    doc.name = require(j, "name").get<std::string>();
    const json labels = require(j, "labels");
    if (!labels.is_array() || labels.empty())
        throw ParseError("labels must be a non-empty array");
    for (const auto& l : labels) {
        AlgebraDocument::LabelSpec spec;
        spec.name = require(l, "name").get<std::string>();
        spec.dim = require(l, "dim").get<int>();
        doc.labels.push_back(std::move(spec));
    }
    if (j.contains("zero_label") && !j.at("zero_label").is_null())
        doc.zero_label = j.at("zero_label").get<std::string>();
    doc.bracket = parse_product(require(j, "bracket"), "bracket");
    doc.aprod = parse_product(require(j, "aprod"), "aprod");
    return doc;
}

AlgebraDocument load_document_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
    try {
        return parse_document(j);
    } catch (const json::exception& e) {
        throw ParseError("malformed document " + path.string() + ": " + e.what());
    }
}

AlgebraDocument canonicalize(AlgebraDocument doc) {
    const auto clean_value = [](std::vector<AlgebraDocument::SparseEntry> value) {
        std::map<int, Rational> merged;
        for (auto& se : value) {
            if (se.den == 0) throw ParseError("zero denominator");
            merged[se.index] += make_rational(se.num, se.den);
        }
        std::vector<AlgebraDocument::SparseEntry> out;
        for (const auto& [index, r] : merged)
            if (r != 0) out.push_back({index, BigInt(r.get_num()), BigInt(r.get_den())});
        return out;
    };
    const auto clean_product = [&](std::vector<AlgebraDocument::ProductEntry> entries) {
        std::vector<AlgebraDocument::ProductEntry> out;
        for (auto& e : entries) {
            e.value = clean_value(std::move(e.value));
            if (!e.value.empty()) out.push_back(std::move(e));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::pair(a.i, a.j) < std::pair(b.i, b.j);
        });
        return out;
    };
    doc.bracket = clean_product(std::move(doc.bracket));
    doc.aprod = clean_product(std::move(doc.aprod));
    return doc;
}

nlohmann::ordered_json document_to_json(const AlgebraDocument& doc) {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["labels"] = nlohmann::ordered_json::array();
    for (const auto& l : doc.labels)
        j["labels"].push_back({{"name", l.name}, {"dim", l.dim}});
    j["zero_label"] = doc.zero_label ? nlohmann::ordered_json(*doc.zero_label)
                                     : nlohmann::ordered_json(nullptr);
    const auto product_json = [](const std::vector<AlgebraDocument::ProductEntry>& entries) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json value = nlohmann::ordered_json::array();
            for (const auto& se : e.value)
                value.push_back({{"index", se.index},
                                 {"num", bigint_to_json(se.num)},
                                 {"den", bigint_to_json(se.den)}});
            arr.push_back({{"i", e.i}, {"j", e.j}, {"value", std::move(value)}});
        }
        return arr;
    };
    j["bracket"] = product_json(doc.bracket);
    j["aprod"] = product_json(doc.aprod);
    return j;
}

GradedAlgebra load_spec(const AlgebraDocument& doc) {
    std::vector<std::string> names;
    std::vector<int> dims;
    std::set<std::string> seen;
    int total = 0;
    for (const auto& l : doc.labels) {
        if (l.name.empty()) throw ParseError("empty label name");
        if (!seen.insert(l.name).second) throw ParseError("duplicate label: " + l.name);
        if (l.dim <= 0)
            throw ParseError("label " + l.name + " must have positive dimension");
        names.push_back(l.name);
        dims.push_back(l.dim);
        total += l.dim;
    }

    std::optional<LabelId> zero;
    if (doc.zero_label) {
        const auto it = std::find(names.begin(), names.end(), *doc.zero_label);
        if (it == names.end())
            throw ParseError("zero_label references unknown label: " + *doc.zero_label);
        zero = static_cast<LabelId>(it - names.begin());
    }

    const auto build_value = [&](const AlgebraDocument::ProductEntry& e) {
        Vec v = zero_vec(total);
        for (const auto& se : e.value) {
            if (se.index < 0 || se.index >= total)
                throw ParseError("sparse entry index out of range");
            if (se.den == 0) throw ParseError("zero denominator in structure constant");
            v[se.index] += make_rational(se.num, se.den);
        }
        return v;
    };

    ProductTable bracket;
    for (const auto& e : doc.bracket) {
        if (e.i < 0 || e.i >= total || e.j < 0 || e.j >= total)
            throw ParseError("bracket entry index out of range");
        if (e.i > e.j) throw ParseError("bracket entries must satisfy i <= j");
        if (bracket.count({e.i, e.j})) throw ParseError("duplicate bracket entry");
        Vec v = build_value(e);
        if (is_zero(v)) continue;
        if (e.i < e.j) {
            Vec neg = v;
            for (auto& x : neg) x = -x;
            bracket[{e.j, e.i}] = std::move(neg);
        }
        bracket[{e.i, e.j}] = std::move(v);
    }

    ProductTable aprod;
    for (const auto& e : doc.aprod) {
        if (e.i < 0 || e.i >= total || e.j < 0 || e.j >= total)
            throw ParseError("aprod entry index out of range");
        if (aprod.count({e.i, e.j})) throw ParseError("duplicate aprod entry");
        Vec v = build_value(e);
        if (!is_zero(v)) aprod[{e.i, e.j}] = std::move(v);
    }

    return GradedAlgebra(doc.name, std::move(names), std::move(dims), zero, std::move(bracket),
                         std::move(aprod));
}

GradedAlgebra load_algebra_file(const std::filesystem::path& path) {
    return load_spec(load_document_file(path));
}

AlgebraDocument document_from_algebra(const GradedAlgebra& a) {
    AlgebraDocument doc;
    doc.name = a.name();
    for (LabelId l = 0; l < a.label_count(); ++l)
        doc.labels.push_back({a.label_name(l), a.dim_of(l)});
    if (a.zero_label()) doc.zero_label = a.label_name(*a.zero_label());

    const auto sparse_value = [](const Vec& v) {
        std::vector<AlgebraDocument::SparseEntry> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                out.push_back({static_cast<int>(i), BigInt(v[i].get_num()),
                               BigInt(v[i].get_den())});
        return out;
    };
    for (const auto& [key, value] : a.bracket_table()) {
        if (key.first > key.second) continue;  // derived half
        if (is_zero(value)) continue;
        doc.bracket.push_back({key.first, key.second, sparse_value(value)});
    }
    for (const auto& [key, value] : a.aprod_table()) {
        if (is_zero(value)) continue;
        doc.aprod.push_back({key.first, key.second, sparse_value(value)});
    }
    return canonicalize(std::move(doc));
}

}  // namespace sgpa
