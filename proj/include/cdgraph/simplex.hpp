#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdgraph/errors.hpp"
#include "cdgraph/rational.hpp"

namespace cdgraph {

/// Dense system A x <= b over x >= 0.
struct LinearSystem
{
    std::size_t columns = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    void add_row(std::vector<Rational> coefficients, Rational bound)
    {
        if (coefficients.size() != columns) throw InternalError("row width mismatch");
        rows.push_back(std::move(coefficients));
        rhs.push_back(std::move(bound));
    }
};

/**
 * Either a point x >= 0 with A x <= b, or Farkas multipliers y >= 0 with
 * y^T A >= 0 and y^T b = -1.
 */
struct FeasibilityResult
{
    bool feasible = false;
    std::vector<Rational> point;
    std::vector<Rational> farkas;
};

inline bool is_feasible_point(const LinearSystem& sys, const std::vector<Rational>& x)
{
    if (x.size() != sys.columns) return false;
    for (const auto& xi : x)
        if (xi < 0) return false;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < sys.columns; ++j) lhs += sys.rows[i][j] * x[j];
        if (lhs > sys.rhs[i]) return false;
    }
    return true;
}

inline bool is_farkas_certificate(const LinearSystem& sys, const std::vector<Rational>& y)
{
    if (y.size() != sys.rows.size()) return false;
    Rational bound = 0;
    std::vector<Rational> combo(sys.columns, Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0) return false;
        if (y[i] == 0) continue;
        bound += y[i] * sys.rhs[i];
        for (std::size_t j = 0; j < sys.columns; ++j) combo[j] += y[i] * sys.rows[i][j];
    }
    for (const auto& c : combo)
        if (c < 0) return false;
    return bound < 0;
}

namespace detail {

/**
 * Dictionary simplex on the auxiliary problem max -x0 s.t. A x - x0 <= b,
 * with Bland's rule. Variables: 0..n-1 structural, n..n+m-1 slacks, n+m x0.
 * Each basic variable is value[i] + sum_k coef[i][k] * nonbasic[k].
 */
class AuxiliarySimplex
{
  public:
    explicit AuxiliarySimplex(const LinearSystem& sys) : n_(sys.columns), m_(sys.rows.size())
    {
        nonbasic_.resize(n_ + 1);
        for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
        nonbasic_[n_] = x0();
        basic_.resize(m_);
        value_ = sys.rhs;
        rhs_ = sys.rhs;
        coef_.assign(m_, std::vector<Rational>(n_ + 1));
        for (std::size_t i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            for (std::size_t j = 0; j < n_; ++j) coef_[i][j] = -sys.rows[i][j];
            coef_[i][n_] = 1;
        }
        objective_.assign(n_ + 1, Rational(0));
        objective_[n_] = -1;
    }

    FeasibilityResult run()
    {
        std::size_t worst = m_;
        for (std::size_t i = 0; i < m_; ++i)
            if (value_[i] < 0 && (worst == m_ || value_[i] < value_[worst])) worst = i;
        FeasibilityResult result;
        if (worst != m_) {
            pivot(worst, n_); // x0 enters; every basic value becomes non-negative
            optimize();
        }
        if (objective_value_ < 0) {
            result.farkas.assign(m_, Rational(0));
            for (std::size_t k = 0; k <= n_; ++k)
                if (nonbasic_[k] >= n_ && nonbasic_[k] < n_ + m_) result.farkas[nonbasic_[k] - n_] = -objective_[k];
            Rational scale = 0;
            for (std::size_t i = 0; i < m_; ++i) scale += result.farkas[i] * rhs_[i];
            for (auto& y : result.farkas) y /= -scale;
            return result;
        }
        result.feasible = true;
        result.point.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basic_[i] < n_) result.point[basic_[i]] = value_[i];
        return result;
    }

  private:
    std::size_t x0() const { return n_ + m_; }

    void optimize()
    {
        for (;;) {
            std::size_t enter = n_ + 1;
            for (std::size_t k = 0; k <= n_; ++k)
                if (objective_[k] > 0 && (enter > n_ || nonbasic_[k] < nonbasic_[enter])) enter = k;
            if (enter > n_) return;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (coef_[i][enter] >= 0) continue;
                Rational ratio = value_[i] / -coef_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) throw InternalError("auxiliary problem is unbounded");
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t k)
    {
        const Rational a = coef_[r][k];
        auto& row = coef_[r];
        value_[r] = -value_[r] / a;
        for (std::size_t j = 0; j <= n_; ++j)
            if (j != k) row[j] = -row[j] / a;
        row[k] = Rational(1) / a;
        std::swap(basic_[r], nonbasic_[k]);

        auto substitute = [&](std::vector<Rational>& target, Rational& constant) {
            const Rational c = target[k];
            if (c == 0) return;
            constant += c * value_[r];
            for (std::size_t j = 0; j <= n_; ++j)
                if (j != k) target[j] += c * row[j];
            target[k] = c * row[k];
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) substitute(coef_[i], value_[i]);
        substitute(objective_, objective_value_);
    }

    std::size_t n_, m_;
    std::vector<std::size_t> basic_, nonbasic_;
    std::vector<Rational> value_;
    std::vector<std::vector<Rational>> coef_;
    std::vector<Rational> objective_;
    Rational objective_value_ = 0;
    std::vector<Rational> rhs_;
};

} // namespace detail

/// Exact feasibility of A x <= b, x >= 0. The returned certificate is re-checked.
inline FeasibilityResult solve_feasibility(const LinearSystem& sys)
{
    FeasibilityResult result = detail::AuxiliarySimplex(sys).run();
    if (result.feasible ? !is_feasible_point(sys, result.point) : !is_farkas_certificate(sys, result.farkas))
        throw InternalError("simplex produced an invalid certificate");
    return result;
}

} // namespace cdgraph
