#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyvor {

// mpq_class keeps results of arithmetic canonical; every constructor path in
// this header goes through make_rational/parse_rational which canonicalize too.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or a finite decimal literal such as "-0.75" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Closest rational with denominator at most max_den (continued fractions).
Rational rationalize(double x, long max_den = 1000000);

RationalVector make_vector(std::initializer_list<Rational> entries);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RationalVector add(std::span<const Rational> a, std::span<const Rational> b);
RationalVector sub(std::span<const Rational> a, std::span<const Rational> b);
RationalVector scale(const Rational& s, std::span<const Rational> a);
RationalVector negate(std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);
std::vector<double> to_double(std::span<const Rational> a);
std::string to_string(std::span<const Rational> a);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(std::span<const RationalVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;
    RationalMatrix transpose() const;
    void swap_rows(std::size_t a, std::size_t b);

    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalVector operator*(std::span<const Rational> v) const;
    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves M x = b exactly by Gaussian elimination with full pivoting.
/// M may be overdetermined; std::nullopt when the system is inconsistent.
/// Underdetermined consistent systems return the solution with free
/// variables set to zero.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b);

RationalMatrix matrix_inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : M x = 0}; empty when M has full column rank.
std::vector<RationalVector> null_space(const RationalMatrix& m);

}  // namespace polyvor
