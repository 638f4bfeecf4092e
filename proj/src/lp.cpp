#include "polyvor/lp.hpp"

#include <stdexcept>

namespace polyvor {

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a,
                                                        std::span<const Rational> b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) {
        throw std::invalid_argument("find_nonnegative_solution: dimension mismatch");
    }
    // Tableau over [x | artificials | rhs], rows normalized to b >= 0.
    const std::size_t width = n + m + 1;
    RationalMatrix t(m + 1, width);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t(i, j) = s * a(i, j);
        }
        t(i, n + i) = 1;
        t(i, width - 1) = s * b[i];
        basis[i] = n + i;
    }
    // Objective row: minimize the sum of artificials, stored as reduced costs.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            if (j < n || j == width - 1) {
                t(m, j) -= t(i, j);
            }
        }
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (t(m, j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) {
                continue;
            }
            Rational ratio = t(i, width - 1) / t(i, enter);
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            break;  // unbounded direction; cannot happen for phase one
        }
        const Rational pivot = t(leave, enter);
        for (std::size_t j = 0; j < width; ++j) {
            t(leave, j) /= pivot;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t(i, enter) == 0) {
                continue;
            }
            const Rational factor = t(i, enter);
            for (std::size_t j = 0; j < width; ++j) {
                t(i, j) -= factor * t(leave, j);
            }
        }
        basis[leave] = enter;
    }

    if (t(m, width - 1) != 0) {
        return std::nullopt;
    }
    RationalVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x[basis[i]] = t(i, width - 1);
        }
    }
    return x;
}

std::optional<RationalVector> positive_combination(std::span<const RationalVector> generators,
                                                   std::span<const Rational> target) {
    if (generators.empty()) {
        throw std::invalid_argument("positive_combination: empty generator list");
    }
    const std::size_t dim = target.size();
    const std::size_t k = generators.size();
    // lambda_i = 1 + s_i, tau = 1 + sigma:
    //   sum s_i g_i - sigma * target = target - sum g_i
    RationalMatrix a(dim, k + 1);
    RationalVector rhs(target.begin(), target.end());
    for (std::size_t j = 0; j < k; ++j) {
        if (generators[j].size() != dim) {
            throw std::invalid_argument("positive_combination: dimension mismatch");
        }
        for (std::size_t r = 0; r < dim; ++r) {
            a(r, j) = generators[j][r];
            rhs[r] -= generators[j][r];
        }
    }
    for (std::size_t r = 0; r < dim; ++r) {
        a(r, k) = -target[r];
    }
    auto sol = find_nonnegative_solution(a, rhs);
    if (!sol) {
        return std::nullopt;
    }
    const Rational tau = 1 + (*sol)[k];
    RationalVector lambda(k);
    for (std::size_t j = 0; j < k; ++j) {
        lambda[j] = (1 + (*sol)[j]) / tau;
    }
    return lambda;
}

std::optional<RationalVector> span_meets_open_cone(std::span<const RationalVector> basis,
                                                   std::span<const RationalVector> generators) {
    if (basis.empty() || generators.empty()) {
        throw std::invalid_argument("span_meets_open_cone: empty input");
    }
    const std::size_t dim = generators.front().size();
    const std::size_t k = generators.size();
    const std::size_t c = basis.size();
    // lambda_i = 1 + s_i, mu = mu_plus - mu_minus:
    //   sum s_i g_i - sum mu_plus n + sum mu_minus n = -sum g_i
    RationalMatrix a(dim, k + 2 * c);
    RationalVector rhs(dim, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t r = 0; r < dim; ++r) {
            a(r, j) = generators[j][r];
            rhs[r] -= generators[j][r];
        }
    }
    for (std::size_t j = 0; j < c; ++j) {
        if (basis[j].size() != dim) {
            throw std::invalid_argument("span_meets_open_cone: dimension mismatch");
        }
        for (std::size_t r = 0; r < dim; ++r) {
            a(r, k + j) = -basis[j][r];
            a(r, k + c + j) = basis[j][r];
        }
    }
    auto sol = find_nonnegative_solution(a, rhs);
    if (!sol) {
        return std::nullopt;
    }
    RationalVector lambda(k);
    for (std::size_t j = 0; j < k; ++j) {
        lambda[j] = 1 + (*sol)[j];
    }
    return lambda;
}

}  // namespace polyvor
