#include "drinfeld/linalg.hpp"

#include <utility>

#include "drinfeld/error.hpp"

namespace drinfeld {

std::vector<Coef> FqMatrix::apply(const std::vector<Coef>& x) const {
  if (x.size() != cols_) fail(ErrorCode::InvalidArgument, "matrix/vector size mismatch");
  std::vector<Coef> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Coef acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Coef v = a_[r * cols_ + c];
      if (v != 0 && x[c] != 0) acc = gf_->add(acc, gf_->mul(v, x[c]));
    }
    y[r] = acc;
  }
  return y;
}

namespace {

struct Echelon {
  std::vector<std::vector<Coef>> rows;  // augmented, reduced
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of [A | b] (b may be empty).
Echelon reduce(const FqMatrix& a, const std::vector<Coef>* b) {
  const GFq& gf = *a.field();
  const std::size_t cols = a.cols() + (b ? 1 : 0);
  Echelon e;
  e.rows.assign(a.rows(), std::vector<Coef>(cols, 0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) e.rows[r][c] = a(r, c);
    if (b) e.rows[r][a.cols()] = (*b)[r];
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && e.rows[piv][col] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(e.rows[piv], e.rows[row]);
    const Coef inv = gf.inv(e.rows[row][col]);
    for (auto& v : e.rows[row]) v = gf.mul(v, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Coef f = e.rows[r][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        e.rows[r][c] = gf.sub(e.rows[r][c], gf.mul(f, e.rows[row][c]));
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

std::vector<std::vector<Coef>> kernel_from(const Echelon& e, std::size_t ncols, const GFq& gf) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Coef>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coef> v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = gf.neg(e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<LinearSolution> solve(const FqMatrix& a, const std::vector<Coef>& b) {
  if (b.size() != a.rows()) fail(ErrorCode::InvalidArgument, "right-hand side size mismatch");
  const Echelon e = reduce(a, &b);
  const std::size_t rk = e.pivot_cols.size();
  for (std::size_t r = rk; r < a.rows(); ++r)
    if (e.rows[r][a.cols()] != 0) return std::nullopt;
  LinearSolution s;
  s.particular.assign(a.cols(), 0);
  for (std::size_t i = 0; i < rk; ++i) s.particular[e.pivot_cols[i]] = e.rows[i][a.cols()];
  s.kernel = kernel_from(e, a.cols(), *a.field());
  return s;
}

std::vector<std::vector<Coef>> kernel(const FqMatrix& a) {
  const Echelon e = reduce(a, nullptr);
  return kernel_from(e, a.cols(), *a.field());
}

std::size_t rank(const FqMatrix& a) { return reduce(a, nullptr).pivot_cols.size(); }

}  // namespace drinfeld
