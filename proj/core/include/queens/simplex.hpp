#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace queens::lpcore {

// Internal engine behind max_fractional_completion / min_cover_value. Not a
// general-purpose LP surface: exactly the machinery those two dual programs
// need. Instantiated with double for the search phase and with Rat for the
// exact reconstruction / re-check phase.

template <class T>
struct ScalarTraits {
  static constexpr bool exact = true;
  static T tolerance() { return T(0); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double tolerance() { return 1e-9; }
};

// maximize c'x  subject to  A x <= b,  0 <= x <= upper  (nullopt = no upper).
template <class T>
struct Problem {
  int num_vars = 0;
  std::vector<T> objective;
  std::vector<std::optional<T>> upper;
  struct Row {
    std::vector<std::pair<int, T>> coeffs;
    T rhs;
  };
  std::vector<Row> rows;
  // Initial nonbasic position of bounded variables. The two queen LPs are
  // feasible from one of the two all-at-bound starts, so no phase 1 exists.
  bool start_at_upper = false;
};

enum class LpStatus { Optimal, Unbounded, IterLimit };

enum class ColStatus : std::uint8_t { AtLower, AtUpper, Basic };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::IterLimit;
  T objective{};
  std::vector<T> x;      // variable values
  std::vector<T> duals;  // y per row; y >= 0, with c - y'A <= 0 on nonbasic-at-lower columns
  std::vector<int> basis;
  std::vector<ColStatus> col_status;  // vars then slacks
  std::uint64_t pivots = 0;
};

struct SingularBasis : std::runtime_error {
  SingularBasis() : std::runtime_error("warm-start basis is singular") {}
};
struct InfeasibleBasis : std::runtime_error {
  InfeasibleBasis() : std::runtime_error("warm-start basis is primal infeasible") {}
};

template <class T>
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const Problem<T>& problem) : p_(problem) {
    m_ = static_cast<int>(p_.rows.size());
    nv_ = p_.num_vars;
    ncols_ = nv_ + m_;
    tab_.assign(static_cast<std::size_t>(m_), std::vector<T>(ncols_, T(0)));
    for (int i = 0; i < m_; ++i) {
      for (const auto& [j, a] : p_.rows[i].coeffs) tab_[i][j] = a;
      tab_[i][nv_ + i] = T(1);
    }
  }

  // Cold solve from the all-slack basis with nonbasics at their start bound.
  LpResult<T> solve(std::uint64_t max_pivots) {
    std::vector<int> basis(m_);
    std::vector<ColStatus> status(ncols_, ColStatus::AtLower);
    for (int j = 0; j < nv_; ++j) {
      if (p_.start_at_upper && p_.upper[j]) status[j] = ColStatus::AtUpper;
    }
    for (int i = 0; i < m_; ++i) {
      basis[i] = nv_ + i;
      status[nv_ + i] = ColStatus::Basic;
    }
    install(basis, status, /*need_canonicalize=*/false);
    if (!betas_feasible()) throw InfeasibleBasis();
    return iterate(max_pivots);
  }

  // Warm solve: canonicalize the given basis exactly, re-check feasibility,
  // then pivot to optimality (usually zero pivots when the float basis was
  // right). Throws SingularBasis / InfeasibleBasis so the caller can fall
  // back to a cold solve.
  LpResult<T> solve_from(const std::vector<int>& basis, const std::vector<ColStatus>& status,
                         std::uint64_t max_pivots) {
    install(basis, status, /*need_canonicalize=*/true);
    if (!betas_feasible()) throw InfeasibleBasis();
    return iterate(max_pivots);
  }

 private:
  static bool pos(const T& v) { return v > ScalarTraits<T>::tolerance(); }
  static bool neg(const T& v) { return v < -ScalarTraits<T>::tolerance(); }

  const T& upper_of(int j) const {
    if (j < nv_ && p_.upper[j]) return *p_.upper[j];
    throw std::logic_error("column has no upper bound");
  }
  bool has_upper(int j) const { return j < nv_ && p_.upper[j].has_value(); }

  T bound_value(int j, ColStatus s) const {
    if (s == ColStatus::AtUpper) return *p_.upper[j];
    return T(0);
  }

  void install(std::vector<int> basis, std::vector<ColStatus> status, bool need_canonicalize) {
    basis_ = std::move(basis);
    status_ = std::move(status);
    if (need_canonicalize) canonicalize();
    compute_betas();
    compute_reduced_costs();
  }

  // Gauss-Jordan reduction so that the basis columns form an identity,
  // re-associating rows with basis columns as pivots are found.
  void canonicalize() {
    std::vector<int> want = basis_;
    std::vector<bool> row_done(m_, false);
    std::vector<int> new_basis(m_, -1);
    for (int c : want) {
      int pick = -1;
      for (int i = 0; i < m_; ++i) {
        if (row_done[i]) continue;
        if constexpr (ScalarTraits<T>::exact) {
          if (tab_[i][c] != T(0)) {
            pick = i;
            break;
          }
        } else {
          if (pick == -1 || std::abs(tab_[i][c]) > std::abs(tab_[pick][c])) pick = i;
        }
      }
      if (pick == -1 || tab_[pick][c] == T(0)) throw SingularBasis();
      row_done[pick] = true;
      new_basis[pick] = c;
      const T inv_p = T(1) / tab_[pick][c];
      for (int j = 0; j < ncols_; ++j) tab_[pick][j] *= inv_p;
      tab_[pick][c] = T(1);
      for (int i = 0; i < m_; ++i) {
        if (i == pick || tab_[i][c] == T(0)) continue;
        const T f = tab_[i][c];
        for (int j = 0; j < ncols_; ++j) tab_[i][j] -= f * tab_[pick][j];
        tab_[i][c] = T(0);
      }
    }
    basis_ = std::move(new_basis);
  }

  // basic values: beta = B^{-1} (b - A_N x_N), expressed through the current
  // (already reduced) tableau rows.
  void compute_betas() {
    beta_.assign(m_, T(0));
    // B^{-1} b: replay the reduction on the rhs by solving with tableau rows.
    // Since tab_ = B^{-1}[A|I], the rhs transforms as B^{-1} b = tab_ * [0...b]
    // restricted to the slack block. Cheaper: recompute from scratch via the
    // identity beta_i = (B^{-1}b)_i - sum_{j nonbasic} tab_[i][j] * xval_j,
    // where (B^{-1}b)_i = sum_k tab_[i][nv_+k] * b_k.
    for (int i = 0; i < m_; ++i) {
      T v(0);
      for (int k = 0; k < m_; ++k) {
        if (tab_[i][nv_ + k] != T(0)) v += tab_[i][nv_ + k] * p_.rows[k].rhs;
      }
      for (int j = 0; j < nv_; ++j) {
        if (status_[j] == ColStatus::AtUpper && tab_[i][j] != T(0))
          v -= tab_[i][j] * *p_.upper[j];
      }
      beta_[i] = v;
    }
  }

  bool betas_feasible() const {
    for (int i = 0; i < m_; ++i) {
      if (neg(beta_[i])) return false;
      if (has_upper(basis_[i]) && pos(beta_[i] - upper_of(basis_[i]))) return false;
    }
    return true;
  }

  void compute_reduced_costs() {
    d_.assign(ncols_, T(0));
    obj_ = T(0);
    for (int j = 0; j < ncols_; ++j) d_[j] = (j < nv_) ? p_.objective[j] : T(0);
    for (int i = 0; i < m_; ++i) {
      const int bj = basis_[i];
      const T cb = (bj < nv_) ? p_.objective[bj] : T(0);
      if (cb == T(0)) continue;
      for (int j = 0; j < ncols_; ++j) {
        if (tab_[i][j] != T(0)) d_[j] -= cb * tab_[i][j];
      }
    }
    for (int i = 0; i < m_; ++i) {
      const int bj = basis_[i];
      if (bj < nv_ && p_.objective[bj] != T(0)) obj_ += p_.objective[bj] * beta_[i];
    }
    for (int j = 0; j < nv_; ++j) {
      if (status_[j] == ColStatus::AtUpper && p_.objective[j] != T(0))
        obj_ += p_.objective[j] * *p_.upper[j];
    }
  }

  LpResult<T> iterate(std::uint64_t max_pivots) {
    LpResult<T> result;
    // Entering rule: most-improving reduced cost, ties to the smallest index.
    // A degenerate stall switches to pure Bland (smallest eligible index)
    // until a pivot makes strict progress, which rules out cycling.
    int degenerate_run = 0;
    bool bland = false;
    while (true) {
      int enter = -1;
      int dir = 0;
      if (bland) {
        for (int j = 0; j < ncols_; ++j) {
          if (status_[j] == ColStatus::AtLower && pos(d_[j])) {
            enter = j;
            dir = 1;
            break;
          }
          if (status_[j] == ColStatus::AtUpper && neg(d_[j])) {
            enter = j;
            dir = -1;
            break;
          }
        }
      } else {
        T best{};
        for (int j = 0; j < ncols_; ++j) {
          if (status_[j] == ColStatus::AtLower && pos(d_[j]) && (enter == -1 || d_[j] > best)) {
            enter = j;
            dir = 1;
            best = d_[j];
          } else if (status_[j] == ColStatus::AtUpper && neg(d_[j]) &&
                     (enter == -1 || T(0) - d_[j] > best)) {
            enter = j;
            dir = -1;
            best = T(0) - d_[j];
          }
        }
      }
      if (enter == -1) break;  // optimal

      if (result.pivots >= max_pivots) {
        result.status = LpStatus::IterLimit;
        return result;
      }
      ++result.pivots;

      // ratio test
      bool theta_inf = true;
      T theta{};
      int leave_row = -1;
      bool leave_to_upper = false;
      for (int i = 0; i < m_; ++i) {
        const T alpha = (dir > 0) ? tab_[i][enter] : T(-tab_[i][enter]);
        if (pos(alpha)) {
          T t = beta_[i] / alpha;
          if (t < T(0)) t = T(0);  // float roundoff; exact betas are never negative
          if (theta_inf || t < theta ||
              (t == theta && leave_row != -1 && basis_[i] < basis_[leave_row])) {
            theta_inf = false;
            theta = t;
            leave_row = i;
            leave_to_upper = false;
          }
        } else if (neg(alpha) && has_upper(basis_[i])) {
          T t = (upper_of(basis_[i]) - beta_[i]) / T(-alpha);
          if (t < T(0)) t = T(0);
          if (theta_inf || t < theta ||
              (t == theta && leave_row != -1 && basis_[i] < basis_[leave_row])) {
            theta_inf = false;
            theta = t;
            leave_row = i;
            leave_to_upper = true;
          }
        }
      }
      // the entering variable can also just run to its own other bound
      bool flip = false;
      if (has_upper(enter)) {
        const T span = upper_of(enter);
        if (theta_inf || !(theta < span)) {
          flip = true;
          theta = span;
          theta_inf = false;
        }
      }
      if (theta_inf) {
        result.status = LpStatus::Unbounded;
        return result;
      }

      if (!pos(theta)) {
        if (++degenerate_run >= 30) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }

      const T delta = (dir > 0) ? theta : T(-theta);
      obj_ += d_[enter] * delta;
      if (flip) {
        for (int i = 0; i < m_; ++i) {
          if (tab_[i][enter] != T(0)) beta_[i] -= tab_[i][enter] * delta;
        }
        status_[enter] = (dir > 0) ? ColStatus::AtUpper : ColStatus::AtLower;
        continue;
      }

      // pivot on (leave_row, enter)
      const int leaving = basis_[leave_row];
      const T entering_value = bound_value_or_zero(enter) + delta;
      for (int i = 0; i < m_; ++i) {
        if (i != leave_row && tab_[i][enter] != T(0)) beta_[i] -= tab_[i][enter] * delta;
      }
      const T inv_p = T(1) / tab_[leave_row][enter];
      for (int j = 0; j < ncols_; ++j) tab_[leave_row][j] *= inv_p;
      tab_[leave_row][enter] = T(1);
      for (int i = 0; i < m_; ++i) {
        if (i == leave_row || tab_[i][enter] == T(0)) continue;
        const T f = tab_[i][enter];
        for (int j = 0; j < ncols_; ++j) {
          if (tab_[leave_row][j] != T(0)) tab_[i][j] -= f * tab_[leave_row][j];
        }
        tab_[i][enter] = T(0);
      }
      if (d_[enter] != T(0)) {
        const T f = d_[enter];
        for (int j = 0; j < ncols_; ++j) {
          if (tab_[leave_row][j] != T(0)) d_[j] -= f * tab_[leave_row][j];
        }
        d_[enter] = T(0);
      }
      basis_[leave_row] = enter;
      status_[enter] = ColStatus::Basic;
      status_[leaving] = leave_to_upper ? ColStatus::AtUpper : ColStatus::AtLower;
      beta_[leave_row] = entering_value;
    }

    result.status = LpStatus::Optimal;
    result.objective = obj_;
    result.x.assign(nv_, T(0));
    for (int j = 0; j < nv_; ++j) {
      if (status_[j] == ColStatus::AtUpper) result.x[j] = *p_.upper[j];
    }
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nv_) result.x[basis_[i]] = beta_[i];
    }
    result.duals.assign(m_, T(0));
    for (int i = 0; i < m_; ++i) result.duals[i] = T(0) - d_[nv_ + i];
    result.basis = basis_;
    result.col_status = status_;
    return result;
  }

  T bound_value_or_zero(int j) const {
    if (status_[j] == ColStatus::AtUpper) return *p_.upper[j];
    return T(0);
  }

  Problem<T> p_;
  int m_ = 0, nv_ = 0, ncols_ = 0;
  std::vector<std::vector<T>> tab_;
  std::vector<int> basis_;
  std::vector<ColStatus> status_;
  std::vector<T> beta_;
  std::vector<T> d_;
  T obj_{};
};

}  // namespace queens::lpcore
