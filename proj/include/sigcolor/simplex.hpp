#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sigcolor {

/// Dense dictionary simplex for
///
///     maximize c.x  subject to  A x <= b,  x >= 0,   with b >= 0,
///
/// so the slack basis is feasible from the start. Bland's rule (smallest
/// variable index enters, smallest basic index breaks ratio ties) rules out
/// cycling. `Scalar` must be an exact field for the result to be exact.
template <class Scalar>
class DenseSimplex {
 public:
  enum class Status { kOptimal, kUnbounded };

  struct Solution {
    Status status = Status::kOptimal;
    Scalar objective{};
    std::vector<Scalar> x;       // structural variables, size n
    std::vector<Scalar> duals;   // one per constraint row, size m
    std::size_t pivots = 0;
  };

  /// `a` is row-major m x n.
  DenseSimplex(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b, std::vector<Scalar> c)
      : m_(b.size()), n_(c.size()), table_(std::move(a)), rhs_(std::move(b)),
        cost_(std::move(c)), basic_(m_), nonbasic_(n_) {
    if (table_.size() != m_) throw std::invalid_argument("simplex: row count mismatch");
    for (const auto& row : table_) {
      if (row.size() != n_) throw std::invalid_argument("simplex: column count mismatch");
    }
    for (const auto& v : rhs_) {
      if (v < 0) throw std::invalid_argument("simplex: negative right-hand side");
    }
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    for (std::size_t i = 0; i < m_; ++i) basic_[i] = n_ + i;
  }

  Solution solve() {
    Solution sol;
    for (;;) {
      // Entering column: smallest variable index with positive reduced cost.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n_; ++j) {
        if (cost_[j] > 0 && (!enter || nonbasic_[j] < nonbasic_[*enter])) enter = j;
      }
      if (!enter) break;
      std::optional<std::size_t> leave;
      Scalar best_ratio{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!(table_[i][*enter] > 0)) continue;
        Scalar ratio = rhs_[i] / table_[i][*enter];
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) {
        sol.status = Status::kUnbounded;
        return sol;
      }
      pivot(*leave, *enter);
      ++sol.pivots;
    }

    sol.objective = objective_;
    sol.x.assign(n_, Scalar{});
    sol.duals.assign(m_, Scalar{});
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < n_) sol.x[basic_[i]] = rhs_[i];
    }
    // The dual value of row i is minus the reduced cost of its slack.
    for (std::size_t j = 0; j < n_; ++j) {
      if (nonbasic_[j] >= n_) sol.duals[nonbasic_[j] - n_] = -cost_[j];
    }
    return sol;
  }

 private:
  // Row r: x_B[r] = rhs[r] - sum_j T[r][j] x_N[j]; swaps B[r] and N[e].
  void pivot(std::size_t r, std::size_t e) {
    const Scalar p = table_[r][e];
    auto& prow = table_[r];
    rhs_[r] /= p;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != e) prow[j] /= p;
    }
    prow[e] = Scalar{1} / p;

    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      auto& row = table_[i];
      const Scalar f = row[e];
      if (f == 0) continue;
      rhs_[i] -= f * rhs_[r];
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != e) row[j] -= f * prow[j];
      }
      row[e] = -f * prow[e];
    }

    const Scalar ce = cost_[e];
    objective_ += ce * rhs_[r];
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != e) cost_[j] -= ce * prow[j];
    }
    cost_[e] = -ce * prow[e];
    std::swap(basic_[r], nonbasic_[e]);
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Scalar>> table_;
  std::vector<Scalar> rhs_;
  std::vector<Scalar> cost_;
  Scalar objective_{};
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

}  // namespace sigcolor
