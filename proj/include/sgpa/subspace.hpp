#pragma once

#include "sgpa/vec.hpp"

#include <cstddef>
#include <vector>

namespace sgpa {

// A linear subspace of Q^n held as its reduced row-echelon basis. The RREF
// rows are the canonical representative: two subspaces are equal exactly
// when their basis rows (and ambient dimension) are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& generators);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Residual of v after elimination against the basis; zero iff v lies in
    // the subspace.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Coefficients of v in the basis rows; throws when v is not contained.
    std::vector<Rational> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    friend class EchelonBuilder;
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// Incremental RREF accumulator behind span computations and ideal closures.
// Rows are kept fully reduced at all times, so take() is cheap.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}
    explicit EchelonBuilder(const Subspace& base);

    // Returns true when v enlarged the span.
    bool insert(Vec v);
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    Subspace take() &&;

private:
    std::size_t ambient_;
    std::vector<Vec> rows_;              // sorted by pivot, reduced
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Deterministic complement of sub inside ambient: the span of those echelon
// basis rows of ambient whose pivots are not pivots of sub. Requires
// sub to be contained in ambient; then sub + result = ambient directly.
Subspace complement_in(const Subspace& sub, const Subspace& ambient);

}  // namespace sgpa
