#include "sgpa/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgpa {

namespace {

std::size_t leading_index(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

}  // namespace

EchelonBuilder::EchelonBuilder(const Subspace& base)
    : ambient_(base.ambient()), rows_(base.basis()), pivots_(base.pivots()) {}

bool EchelonBuilder::insert(Vec v) {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c != 0) add_scaled(v, -c, rows_[r]);
    }
    const std::size_t lead = leading_index(v);
    if (lead == ambient_) return false;

    const Rational inv = Rational(1) / v[lead];
    for (auto& x : v) x *= inv;

    // eliminate the new pivot column from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = rows_[r][lead];
        if (c != 0) add_scaled(rows_[r], -c, v);
    }

    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

Subspace EchelonBuilder::take() && {
    Subspace s(ambient_);
    s.rows_ = std::move(rows_);
    s.pivots_ = std::move(pivots_);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& generators) {
    EchelonBuilder b(ambient);
    for (const auto& g : generators) b.insert(g);
    return std::move(b).take();
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.rows_.push_back(unit_vec(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c != 0) add_scaled(v, -c, rows_[r]);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

std::vector<Rational> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<Rational> coef(rows_.size(), Rational(0));
    Vec rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        coef[r] = rest[pivots_[r]];
        if (coef[r] != 0) add_scaled(rest, -coef[r], rows_[r]);
    }
    if (!is_zero(rest)) throw std::invalid_argument("vector not contained in subspace");
    return coef;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    EchelonBuilder builder(a);
    for (const auto& row : b.basis()) builder.insert(row);
    return std::move(builder).take();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    const std::size_t n = a.ambient();

    // Zassenhaus: echelonize rows [u|u] for u in a and [v|0] for v in b;
    // rows with zero left half carry an intersection basis in the right half.
    EchelonBuilder wide(2 * n);
    for (const auto& u : a.basis()) {
        Vec row(2 * n, Rational(0));
        std::copy(u.begin(), u.end(), row.begin());
        std::copy(u.begin(), u.end(), row.begin() + n);
        wide.insert(std::move(row));
    }
    for (const auto& v : b.basis()) {
        Vec row(2 * n, Rational(0));
        std::copy(v.begin(), v.end(), row.begin());
        wide.insert(std::move(row));
    }
    const Subspace combined = std::move(wide).take();

    std::vector<Vec> inter;
    for (const auto& row : combined.basis()) {
        if (is_zero(slice(row, 0, n))) inter.push_back(slice(row, n, n));
    }
    return Subspace::span(n, inter);
}

Subspace complement_in(const Subspace& sub, const Subspace& ambient) {
    if (!ambient.contains(sub))
        throw std::invalid_argument("complement_in: sub is not contained in ambient");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < ambient.dim(); ++r) {
        const std::size_t p = ambient.pivots()[r];
        if (!std::binary_search(sub.pivots().begin(), sub.pivots().end(), p))
            rows.push_back(ambient.basis()[r]);
    }
    return Subspace::span(ambient.ambient(), rows);
}

}  // namespace sgpa
