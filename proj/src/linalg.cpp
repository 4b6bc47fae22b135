#include "toromotive/linalg.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "toromotive/error.hpp"

namespace toromotive {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
    return r;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
    return acc;
}

IntVector negated(std::span<const Int> v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_mul(v[i], -1);
    return out;
}

bool is_zero(std::span<const Int> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
    const std::size_t n = columns.empty() ? 0 : columns.front().size();
    IntMatrix m(n, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != n) throw Error(ErrorKind::DimensionMismatch, "columns of different length");
        for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
    return from_columns(rows).transposed();
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
        }
    return out;
}

IntVector IntMatrix::operator*(std::span<const Int> v) const {
    if (cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            out[i] = checked_add(out[i], checked_mul((*this)(i, k), v[k]));
    return out;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    BigInt prev = 1;
    int flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            ++flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = a[n - 1][n - 1];
    return (flips % 2 == 0) ? det : BigInt(-det);
}

namespace {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), RationalVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        const Rational lead = a[row][col];
        for (auto& x : a[row]) x /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<RationalMatrix> inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug = to_rational(m);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n);
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    RationalMatrix inv(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
    const BigInt det = determinant(m);
    if (det != 1 && det != -1) return std::nullopt;
    const auto inv = inverse(m);
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = (*inv)[i][j];
            if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
            const BigInt num = boost::multiprecision::numerator(q);
            if (num > std::numeric_limits<Int>::max() || num < std::numeric_limits<Int>::min())
                throw Error(ErrorKind::Overflow, "inverse entry exceeds 64 bits");
            out(i, j) = static_cast<Int>(num);
        }
    return out;
}

std::optional<RationalVector> solve(const IntMatrix& a, std::span<const Int> b) {
    if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "right-hand side has the wrong length");
    const std::size_t cols = a.cols();
    RationalMatrix aug = to_rational(a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug[i].push_back(Rational(b[i]));
    const auto pivots = rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() != cols) throw Error(ErrorKind::NotSimplicial, "columns are linearly dependent");
    RationalVector x(cols);
    for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Int> v) {
    RationalVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
        Rational acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

std::size_t rank(RationalMatrix m) {
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    return rref(m, cols).size();
}

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols) {
    const auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

int sign(const Rational& q) noexcept {
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

}  // namespace toromotive
