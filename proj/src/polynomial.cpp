#include "polyvor/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyvor {

namespace {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) {
        throw std::out_of_range("MultiPoly::variable: index out of range");
    }
    MultiPoly p(arity);
    Exponents e(arity, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coeffs, const Rational& offset) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    p.add_term(Exponents(coeffs.size(), 0), offset);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != arity_) {
        throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
    }
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) {
        throw std::invalid_argument("MultiPoly: negative exponent");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int MultiPoly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e.at(var));
    }
    return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) {
        throw std::logic_error("leading term of the zero polynomial");
    }
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) {
        throw std::logic_error("leading term of the zero polynomial");
    }
    return terms_.rbegin()->second;
}

void MultiPoly::check_arity(const MultiPoly& o) const {
    if (o.arity_ != arity_) {
        throw std::invalid_argument("MultiPoly: arity mismatch");
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(arity_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k) {
            base = base * base;
        }
    }
    return result;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool is_const = total_degree(e) == 0;
        if (mag != 1 || is_const) {
            os << polyvor::to_string(mag);
            if (!is_const) {
                os << "*";
            }
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!first_var) {
                os << "*";
            }
            first_var = false;
            os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (e[i] > 1) {
                os << "^" << e[i];
            }
        }
    }
    return os.str();
}

Rational evaluate(const MultiPoly& f, std::span<const Rational> x) {
    if (x.size() != f.arity()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    Rational sum = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                term *= x[i];
            }
        }
        sum += term;
    }
    return sum;
}

double evaluate(const MultiPoly& f, std::span<const double> x) {
    if (x.size() != f.arity()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    double sum = 0.0;
    for (const auto& [e, c] : f.terms()) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i) {
            term *= std::pow(x[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

MultiPoly derivative(const MultiPoly& f, std::size_t var) {
    if (var >= f.arity()) {
        throw std::out_of_range("derivative: variable out of range");
    }
    MultiPoly d(f.arity());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) {
            continue;
        }
        Exponents de = e;
        de[var] -= 1;
        d.add_term(de, c * e[var]);
    }
    return d;
}

std::vector<MultiPoly> gradient(const MultiPoly& f) {
    std::vector<MultiPoly> g;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        g.push_back(derivative(f, i));
    }
    return g;
}

std::vector<Rational> evaluate_gradient(const MultiPoly& f, std::span<const Rational> x) {
    std::vector<Rational> g;
    for (const auto& d : gradient(f)) {
        g.push_back(evaluate(d, x));
    }
    return g;
}

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images) {
    if (images.size() != f.arity()) {
        throw std::invalid_argument("compose: wrong number of images");
    }
    if (images.empty()) {
        return f;
    }
    const std::size_t arity = images.front().arity();
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    MultiPoly result(arity);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(arity, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) {
                pw.push_back(MultiPoly::constant(arity, 1));
            }
            while (pw.size() <= static_cast<std::size_t>(e[i])) {
                pw.push_back(pw.back() * images[i]);
            }
            term = term * pw[static_cast<std::size_t>(e[i])];
        }
        result += term;
    }
    return result;
}

MultiPoly normalize(const MultiPoly& f) {
    if (f.is_zero()) {
        return f;
    }
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : f.terms()) {
        mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (f.leading_coefficient() < 0) {
        factor = -factor;
    }
    return f * factor;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) {
        throw std::invalid_argument("exact_divide: division by the zero polynomial");
    }
    if (p.arity() != q.arity()) {
        throw std::invalid_argument("exact_divide: arity mismatch");
    }
    MultiPoly rest = p;
    MultiPoly quotient(p.arity());
    const Exponents& lq = q.leading_exponents();
    const Rational& cq = q.leading_coefficient();
    while (!rest.is_zero()) {
        const Exponents& lr = rest.leading_exponents();
        Exponents shift(lr.size());
        for (std::size_t i = 0; i < lr.size(); ++i) {
            shift[i] = lr[i] - lq[i];
            if (shift[i] < 0) {
                return std::nullopt;
            }
        }
        MultiPoly t(p.arity());
        t.add_term(shift, rest.leading_coefficient() / cq);
        quotient += t;
        rest -= t * q;
    }
    return quotient;
}

UniPolyOverU::UniPolyOverU(std::size_t u_arity, std::vector<MultiPoly> coefficients)
    : arity_(u_arity), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (c.arity() != arity_) {
            throw std::invalid_argument("UniPolyOverU: coefficient arity mismatch");
        }
    }
    trim();
}

void UniPolyOverU::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

UniPolyOverU& UniPolyOverU::operator+=(const UniPolyOverU& o) {
    if (o.arity_ != arity_) {
        throw std::invalid_argument("UniPolyOverU: arity mismatch");
    }
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), MultiPoly(arity_));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPolyOverU operator*(const UniPolyOverU& a, const UniPolyOverU& b) {
    if (a.arity_ != b.arity_) {
        throw std::invalid_argument("UniPolyOverU: arity mismatch");
    }
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return UniPolyOverU(a.arity_, {});
    }
    std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(a.arity_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPolyOverU(a.arity_, std::move(c));
}

Rational UniPolyOverU::evaluate(std::span<const Rational> u, const Rational& lambda) const {
    Rational sum = 0;
    Rational power = 1;
    for (const auto& c : coeffs_) {
        sum += polyvor::evaluate(c, u) * power;
        power *= lambda;
    }
    return sum;
}

std::vector<Rational> UniPolyOverU::specialize(std::span<const Rational> u) const {
    std::vector<Rational> out;
    for (const auto& c : coeffs_) {
        out.push_back(polyvor::evaluate(c, u));
    }
    return out;
}

UniPolyOverU substitute_line(const MultiPoly& f, std::span<const Rational> direction) {
    const std::size_t n = f.arity();
    if (direction.size() != n) {
        throw std::invalid_argument("substitute_line: direction has wrong dimension");
    }
    // x_i = u_i + d_i * lambda as a polynomial in lambda over Q[u].
    std::vector<UniPolyOverU> images;
    for (std::size_t i = 0; i < n; ++i) {
        images.emplace_back(n, std::vector<MultiPoly>{MultiPoly::variable(n, i),
                                                      MultiPoly::constant(n, direction[i])});
    }
    UniPolyOverU result(n, {});
    std::vector<std::vector<UniPolyOverU>> powers(n);
    for (const auto& [e, c] : f.terms()) {
        UniPolyOverU term(n, {MultiPoly::constant(n, c)});
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) {
                pw.emplace_back(n, std::vector<MultiPoly>{MultiPoly::constant(n, 1)});
            }
            while (pw.size() <= static_cast<std::size_t>(e[i])) {
                pw.push_back(pw.back() * images[i]);
            }
            term = term * pw[static_cast<std::size_t>(e[i])];
        }
        result += term;
    }
    return result;
}

MultiPoly polynomial_determinant(std::vector<std::vector<MultiPoly>> m, std::size_t arity) {
    const std::size_t n = m.size();
    if (n == 0) {
        return MultiPoly::constant(arity, 1);
    }
    for (const auto& row : m) {
        if (row.size() != n) {
            throw std::invalid_argument("polynomial_determinant: non-square matrix");
        }
    }
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(arity, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot: the nonzero entry with the fewest terms keeps growth down.
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!m[i][k].is_zero() &&
                (pivot == n || m[i][k].term_count() < m[pivot][k].term_count())) {
                pivot = i;
            }
        }
        if (pivot == n) {
            return MultiPoly(arity);
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) {
                    throw std::logic_error("Bareiss step is not exact");
                }
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly(arity);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    if (sign < 0) {
        det = -det;
    }
    return det;
}

std::vector<std::vector<MultiPoly>> sylvester_matrix(const UniPolyOverU& g1,
                                                     const UniPolyOverU& g2) {
    const int m = g1.degree();
    const int k = g2.degree();
    const std::size_t arity = g1.u_arity();
    const std::size_t size = static_cast<std::size_t>(m + k);
    std::vector<std::vector<MultiPoly>> t(size, std::vector<MultiPoly>(size, MultiPoly(arity)));
    // Rows 0..k-1: shifted copies of g1 (descending powers); rows k..: g2.
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= m; ++j) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                g1.coefficient(static_cast<std::size_t>(m - j));
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= k; ++j) {
            t[static_cast<std::size_t>(k + i)][static_cast<std::size_t>(i + j)] =
                g2.coefficient(static_cast<std::size_t>(k - j));
        }
    }
    return t;
}

MultiPoly sylvester_resultant(const UniPolyOverU& g1, const UniPolyOverU& g2) {
    if (g1.u_arity() != g2.u_arity()) {
        throw std::invalid_argument("sylvester_resultant: arity mismatch");
    }
    const std::size_t arity = g1.u_arity();
    if (g1.is_zero() || g2.is_zero()) {
        return MultiPoly(arity);
    }
    const int m = g1.degree();
    const int k = g2.degree();
    if (m == 0 && k == 0) {
        throw std::invalid_argument("sylvester_resultant: both inputs are constant in lambda");
    }
    if (m == 0) {
        return g1.coefficient(0).pow(static_cast<unsigned>(k));
    }
    if (k == 0) {
        return g2.coefficient(0).pow(static_cast<unsigned>(m));
    }
    return polynomial_determinant(sylvester_matrix(g1, g2), arity);
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double UniPoly::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.push_back(c_[i] * static_cast<long>(i));
    }
    return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        c[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        c[i] -= b.c_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return UniPoly();
    }
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divide(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) {
        throw std::invalid_argument("divide: division by the zero polynomial");
    }
    std::vector<Rational> rest = a.coefficients();
    const int db = b.degree();
    std::vector<Rational> q(std::max(0, a.degree() - db + 1), Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        const Rational factor = rest[static_cast<std::size_t>(i)] / b.leading();
        q[static_cast<std::size_t>(i - db)] = factor;
        if (factor == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rest[static_cast<std::size_t>(i - db + j)] -=
                factor * b.coefficients()[static_cast<std::size_t>(j)];
        }
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rest))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    std::vector<Rational> c = a.coefficients();
    const Rational lead = c.back();
    for (auto& x : c) {
        x /= lead;
    }
    return UniPoly(std::move(c));
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) {
        return p;
    }
    UniPoly g = gcd(p, p.derivative());
    return divide(p, g).first;
}

UniPoly to_univariate(const MultiPoly& f, std::size_t var) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, f.degree_in(var) + 1)),
                            Rational(0));
    for (const auto& [e, coeff] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != var && e[i] != 0) {
                throw std::invalid_argument("to_univariate: polynomial involves other variables");
            }
        }
        c[static_cast<std::size_t>(e[var])] += coeff;
    }
    return UniPoly(std::move(c));
}

double RealRoot::approx() const {
    return Rational((lo + hi) / 2).get_d();
}

namespace {

int sign_of(const Rational& x) {
    return sgn(x);
}

int sign_variations(const std::vector<UniPoly>& sturm, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& p : sturm) {
        int s = sign_of(p.evaluate(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

// Simplest rational (smallest denominator) in the closed interval [a, b].
Rational simplest_between(const Rational& a, const Rational& b) {
    if (a <= 0 && b >= 0) {
        return 0;
    }
    if (b < 0) {
        return -simplest_between(-b, -a);
    }
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    Rational ceil_a = Rational(fl) == a ? Rational(fl) : Rational(fl + 1);
    if (ceil_a <= b) {
        return ceil_a;
    }
    Rational base(fl);
    return base + 1 / simplest_between(1 / (b - base), 1 / (a - base));
}

}  // namespace

std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& max_width) {
    if (p.is_zero()) {
        throw std::invalid_argument("real_roots: zero polynomial");
    }
    UniPoly q = squarefree_part(p);
    if (q.degree() <= 0) {
        return {};
    }
    std::vector<UniPoly> sturm{q, q.derivative()};
    while (sturm.back().degree() > 0) {
        UniPoly r = divide(sturm[sturm.size() - 2], sturm.back()).second;
        if (r.is_zero()) {
            break;
        }
        std::vector<Rational> neg = r.coefficients();
        for (auto& x : neg) {
            x = -x;
        }
        sturm.emplace_back(std::move(neg));
    }

    // Integer-primitive leading coefficient L: distinct rationals with
    // denominators <= L differ by at least 1/L^2.
    mpz_class den_lcm = 1;
    for (const auto& c : q.coefficients()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    mpz_class lead_int = Rational(abs(q.leading() * Rational(den_lcm))).get_num();
    Rational separation(1, lead_int * lead_int * 2);
    separation.canonicalize();

    Rational bound = 0;
    for (const auto& c : q.coefficients()) {
        bound = std::max(bound, Rational(abs(c / q.leading())));
    }
    bound += 1;

    std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
    std::vector<RealRoot> roots;
    while (!pending.empty()) {
        auto [a, b] = pending.back();
        pending.pop_back();
        const int count = sign_variations(sturm, a) - sign_variations(sturm, b);
        if (count == 0) {
            continue;
        }
        if (count > 1) {
            Rational mid = (a + b) / 2;
            pending.emplace_back(a, mid);
            pending.emplace_back(mid, b);
            continue;
        }
        // Exactly one root in (a, b].
        if (q.evaluate(b) == 0) {
            roots.push_back({b, b});
            continue;
        }
        Rational lo = a, hi = b;
        const Rational target = std::min(max_width, separation);
        while (hi - lo > target) {
            Rational mid = (lo + hi) / 2;
            Rational v = q.evaluate(mid);
            if (v == 0) {
                lo = hi = mid;
                break;
            }
            if (sign_variations(sturm, lo) - sign_variations(sturm, mid) == 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if (lo != hi) {
            Rational candidate = simplest_between(lo, hi);
            if (candidate > lo && candidate <= hi && q.evaluate(candidate) == 0) {
                lo = hi = candidate;
            }
        }
        roots.push_back({lo, hi});
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
    return roots;
}

}  // namespace polyvor
