#pragma once

// Dense square matrices and vectors with 1-based indexing. The public
// indices mirror the usual mathematical convention (rows and columns
// start at 1), which keeps every hand-written expected value readable.

#include <dnamat/bipoly.hpp>
#include <dnamat/rational.hpp>

#include <stdexcept>
#include <vector>

namespace dnamat {

template <typename T>
class SquareMatrix {
public:
    explicit SquareMatrix(int order, const T& fill = T())
        : order_(order), cells_(static_cast<size_t>(order) * order, fill) {
        if (order < 1) throw std::invalid_argument("SquareMatrix: order must be >= 1");
    }

    int order() const { return order_; }

    const T& operator()(int i, int j) const { return cells_[index(i, j)]; }
    T& operator()(int i, int j) { return cells_[index(i, j)]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    int order_;
    std::vector<T> cells_;

    size_t index(int i, int j) const {
        if (i < 1 || i > order_ || j < 1 || j > order_)
            throw std::out_of_range("SquareMatrix: index out of range");
        return static_cast<size_t>(i - 1) * order_ + (j - 1);
    }
};

template <typename T>
class Vector {
public:
    explicit Vector(int size, const T& fill = T())
        : cells_(static_cast<size_t>(size), fill) {
        if (size < 1) throw std::invalid_argument("Vector: size must be >= 1");
    }
    explicit Vector(std::vector<T> cells) : cells_(std::move(cells)) {
        if (cells_.empty()) throw std::invalid_argument("Vector: size must be >= 1");
    }

    int size() const { return static_cast<int>(cells_.size()); }

    const T& operator()(int i) const { return cells_[index(i)]; }
    T& operator()(int i) { return cells_[index(i)]; }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<T> cells_;

    size_t index(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("Vector: index out of range");
        return static_cast<size_t>(i - 1);
    }
};

using PolyMatrix = SquareMatrix<BiPoly>;
using RatMatrix = SquareMatrix<Rational>;
using RatVector = Vector<Rational>;

// m(i, j) == m(N+1-i, N+1-j) for all i, j (invariance under central
// reflection of the entry grid).
template <typename T>
bool is_centrosymmetric(const SquareMatrix<T>& m) {
    const int n = m.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!(m(i, j) == m(n + 1 - i, n + 1 - j))) return false;
    return true;
}

}  // namespace dnamat
