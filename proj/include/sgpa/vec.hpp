#pragma once

#include "sgpa/rational.hpp"

#include <cstddef>
#include <vector>

namespace sgpa {

// Coordinate vector in the global ordered basis of the ambient algebra.
using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t dim) { return Vec(dim, Rational(0)); }

inline Vec unit_vec(std::size_t dim, std::size_t i) {
    Vec v(dim, Rational(0));
    v.at(i) = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// acc += c * v
inline void add_scaled(Vec& acc, const Rational& c, const Vec& v) {
    if (acc.size() != v.size()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

inline Vec scaled(const Vec& v, const Rational& c) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

inline Vec slice(const Vec& v, std::size_t offset, std::size_t len) {
    return Vec(v.begin() + offset, v.begin() + offset + len);
}

}  // namespace sgpa
