#include "polyvor/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyvor {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t start = (s.front() == '+' || s.front() == '-') ? 1 : 0;
    if (start == s.size()) {
        throw std::invalid_argument("malformed integer literal");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("malformed integer literal: " + std::string(s));
        }
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

Rational parse_decimal(std::string_view s) {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        exponent = parse_integer(s.substr(e + 1)).get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) {
                throw std::invalid_argument("malformed decimal literal: " + std::string(s));
            }
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) {
                ++frac_digits;
            }
        } else {
            throw std::invalid_argument("malformed decimal literal: " + std::string(s));
        }
    }
    if (digits.empty()) {
        throw std::invalid_argument("malformed decimal literal: " + std::string(s));
    }
    mpz_class num(digits, 10);
    if (negative) {
        num = -num;
    }
    long shift = exponent - frac_digits;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    Rational q = shift >= 0 ? Rational(num * power) : Rational(num, power);
    q.canonicalize();
    return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (text.find_first_of(".eE") != std::string_view::npos) {
        return parse_decimal(text);
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("cannot rationalize a non-finite value");
    }
    Rational exact(x);
    if (exact.get_den() <= max_den) {
        return exact;
    }
    // Continued-fraction convergents h/k with semiconvergent check at the end.
    mpz_class h_prev2 = 0, h_prev1 = 1, k_prev2 = 1, k_prev1 = 0;
    Rational rest = exact;
    const mpz_class cap = max_den;
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class h = a * h_prev1 + h_prev2;
        mpz_class k = a * k_prev1 + k_prev2;
        if (k > cap) {
            mpz_class t = (cap - k_prev2) / k_prev1;
            Rational semi(t * h_prev1 + h_prev2, t * k_prev1 + k_prev2);
            Rational conv(h_prev1, k_prev1);
            semi.canonicalize();
            conv.canonicalize();
            Rational ds = abs(semi - exact);
            Rational dc = abs(conv - exact);
            return ds < dc ? semi : conv;
        }
        h_prev2 = h_prev1;
        h_prev1 = h;
        k_prev2 = k_prev1;
        k_prev1 = k;
        Rational frac = rest - Rational(a);
        if (frac == 0) {
            Rational q(h, k);
            q.canonicalize();
            return q;
        }
        rest = 1 / frac;
    }
}

RationalVector make_vector(std::initializer_list<Rational> entries) {
    return RationalVector(entries);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

RationalVector add(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("add: dimension mismatch");
    }
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

RationalVector sub(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sub: dimension mismatch");
    }
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

RationalVector scale(const Rational& s, std::span<const Rational> a) {
    RationalVector r(a.begin(), a.end());
    for (auto& x : r) {
        x *= s;
    }
    return r;
}

RationalVector negate(std::span<const Rational> a) {
    return scale(Rational(-1), a);
}

bool is_zero(std::span<const Rational> a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

std::vector<double> to_double(std::span<const Rational> a) {
    std::vector<double> r;
    r.reserve(a.size());
    for (const auto& x : a) {
        r.push_back(x.get_d());
    }
    return r;
}

std::string to_string(std::span<const Rational> a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += to_string(a[i]);
    }
    return s + ")";
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("RationalMatrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows) {
    if (rows.empty()) {
        return {};
    }
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw std::invalid_argument("RationalMatrix: ragged rows");
        }
        for (std::size_t c = 0; c < m.cols_; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    RationalMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                p(i, j) += a * other(k, j);
            }
        }
    }
    return p;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    RationalVector r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r[i] += (*this)(i, j) * v[j];
        }
    }
    return r;
}

namespace {

// Reduced row echelon form with full pivoting. Columns [0, pivot_cols) are
// eligible as pivots; trailing columns ride along (augmented right-hand sides).
struct Echelon {
    RationalMatrix m;
    std::vector<std::size_t> col_order;  // col_order[k] = original column of position k
    std::size_t rank = 0;
    int sign = 1;  // parity of row and column swaps
};

Echelon reduce(RationalMatrix m, std::size_t pivot_cols) {
    Echelon e;
    e.col_order.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        e.col_order[c] = c;
    }
    std::size_t r = 0;
    for (; r < m.rows() && r < pivot_cols; ++r) {
        // Full pivoting: pick the entry of largest magnitude in the remaining block.
        std::size_t best_r = m.rows(), best_c = pivot_cols;
        Rational best = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            for (std::size_t j = r; j < pivot_cols; ++j) {
                Rational a = abs(m(i, j));
                if (a > best) {
                    best = a;
                    best_r = i;
                    best_c = j;
                }
            }
        }
        if (best == 0) {
            break;
        }
        if (best_r != r) {
            m.swap_rows(best_r, r);
            e.sign = -e.sign;
        }
        if (best_c != r) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                std::swap(m(i, best_c), m(i, r));
            }
            std::swap(e.col_order[best_c], e.col_order[r]);
            e.sign = -e.sign;
        }
        const Rational pivot = m(r, r);
        for (std::size_t j = r; j < m.cols(); ++j) {
            m(r, j) /= pivot;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, r) == 0) {
                continue;
            }
            const Rational factor = m(i, r);
            for (std::size_t j = r; j < m.cols(); ++j) {
                m(i, j) -= factor * m(r, j);
            }
        }
    }
    e.rank = r;
    e.m = std::move(m);
    return e;
}

}  // namespace

std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve_linear: dimension mismatch");
    }
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = b[i];
    }
    Echelon e = reduce(std::move(aug), m.cols());
    const std::size_t rhs = m.cols();
    for (std::size_t i = e.rank; i < m.rows(); ++i) {
        if (e.m(i, rhs) != 0) {
            return std::nullopt;
        }
    }
    RationalVector x(m.cols(), Rational(0));
    for (std::size_t k = 0; k < e.rank; ++k) {
        x[e.col_order[k]] = e.m(k, rhs);
    }
    return x;
}

RationalMatrix matrix_inverse(const RationalMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("matrix_inverse: non-square matrix");
    }
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = 1;
    }
    Echelon e = reduce(std::move(aug), n);
    if (e.rank < n) {
        throw SingularMatrixError("matrix_inverse: singular matrix");
    }
    // Row k of the reduced system solves for original variable col_order[k].
    RationalMatrix inv(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(e.col_order[k], j) = e.m(k, n + j);
        }
    }
    return inv;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("determinant: non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    // Fraction-free (Bareiss) elimination with full pivoting.
    RationalMatrix a = m;
    int sign = 1;
    Rational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pr = n, pc = n;
        for (std::size_t i = k; i < n && pr == n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (a(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr == n) {
            return 0;
        }
        if (pr != k) {
            a.swap_rows(pr, k);
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < n; ++i) {
                std::swap(a(i, pc), a(i, k));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    return reduce(m, m.cols()).rank;
}

std::vector<RationalVector> null_space(const RationalMatrix& m) {
    Echelon e = reduce(m, m.cols());
    std::vector<RationalVector> basis;
    for (std::size_t free = e.rank; free < m.cols(); ++free) {
        RationalVector v(m.cols(), Rational(0));
        v[e.col_order[free]] = 1;
        for (std::size_t k = 0; k < e.rank; ++k) {
            v[e.col_order[k]] = -e.m(k, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace polyvor
