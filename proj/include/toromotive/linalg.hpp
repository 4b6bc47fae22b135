#pragma once

// Exact integer and rational linear algebra on small dense matrices.
// Lattice coordinates are machine integers with overflow-checked
// arithmetic; anything that divides (determinants, inverses, kernels)
// goes through arbitrary-precision integers/rationals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toromotive {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

Int dot(std::span<const Int> a, std::span<const Int> b);
IntVector negated(std::span<const Int> v);
bool is_zero(std::span<const Int> v) noexcept;

/// Row-major dense integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of equal length).
    static IntMatrix from_columns(std::span<const IntVector> columns);
    static IntMatrix from_rows(std::span<const IntVector> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    const std::vector<Int>& data() const noexcept { return data_; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const Int> v) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

using RationalMatrix = std::vector<RationalVector>;

/// Bareiss fraction-free elimination.
BigInt determinant(const IntMatrix& m);

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const IntMatrix& m);

/// Integer inverse of a matrix with determinant +-1; nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Unique solution of a x = b for a matrix with independent columns;
/// nullopt when b is outside the column span.
std::optional<RationalVector> solve(const IntMatrix& a, std::span<const Int> b);

RationalVector multiply(const RationalMatrix& m, std::span<const Int> v);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0} for a matrix with `cols` columns.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols);

int sign(const Rational& q) noexcept;

}  // namespace toromotive
