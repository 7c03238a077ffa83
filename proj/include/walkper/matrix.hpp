#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "walkper/rational.hpp"

namespace walkper {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;

    /// Least common multiple of all entry denominators.
    Integer denominator_lcm() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Dense row-major integer matrix; the working form for exact elimination.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;

    Integer& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Returns (scale * m) as an integer matrix, where scale = m.denominator_lcm().
IntegerMatrix scale_to_integer(const RationalMatrix& m, Integer& scale);

}  // namespace walkper
