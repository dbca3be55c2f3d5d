#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drinfeld/gfq.hpp"

namespace drinfeld {

/// Dense row-major matrix over F_q.
class FqMatrix {
 public:
  FqMatrix(GFqPtr gf, std::size_t rows, std::size_t cols)
      : gf_(std::move(gf)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const GFqPtr& field() const noexcept { return gf_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coef& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
  Coef operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }

  std::vector<Coef> apply(const std::vector<Coef>& x) const;

 private:
  GFqPtr gf_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coef> a_;
};

struct LinearSolution {
  std::vector<Coef> particular;
  /// Basis of the null space of the coefficient matrix.
  std::vector<std::vector<Coef>> kernel;
};

/// Solves A x = b by Gaussian elimination; nullopt when inconsistent.
std::optional<LinearSolution> solve(const FqMatrix& a, const std::vector<Coef>& b);

std::vector<std::vector<Coef>> kernel(const FqMatrix& a);
std::size_t rank(const FqMatrix& a);

/// Characteristic polynomial det(T*I - M) of a square matrix over a
/// commutative ring by Berkowitz's division-free algorithm.  Returns
/// coefficients c_0..c_n (ascending, c_n = 1).  `Ring` is any value type with
/// +, -, *; `zero`/`one` supply the context.
template <class Elem>
std::vector<Elem> berkowitz_charpoly(const std::vector<std::vector<Elem>>& m, const Elem& zero,
                                     const Elem& one) {
  const std::size_t n = m.size();
  // Vector of coefficients, highest degree first, for the leading k x k block.
  std::vector<Elem> c{one};
  for (std::size_t k = 0; k < n; ++k) {
    // Block: A = m[k][k], R = m[k][0..k), S = m[0..k)[k], M = leading k x k.
    // Toeplitz column: 1, -A, -R S, -R M S, -R M^2 S, ...
    std::vector<Elem> col;
    col.reserve(k + 2);
    col.push_back(one);
    col.push_back(zero - m[k][k]);
    std::vector<Elem> v(k, zero);
    for (std::size_t i = 0; i < k; ++i) v[i] = m[i][k];
    for (std::size_t step = 0; step < k; ++step) {
      Elem dot = zero;
      for (std::size_t i = 0; i < k; ++i) dot = dot + m[k][i] * v[i];
      col.push_back(zero - dot);
      std::vector<Elem> w(k, zero);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) w[i] = w[i] + m[i][j] * v[j];
      v = std::move(w);
    }
    // new c = T * c (lower-triangular Toeplitz with first column col)
    std::vector<Elem> next(c.size() + 1, zero);
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j)
        if (i - j < col.size()) next[i] = next[i] + col[i - j] * c[j];
    c = std::move(next);
  }
  return {c.rbegin(), c.rend()};
}

}  // namespace drinfeld
