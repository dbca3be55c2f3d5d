#include "drinfeld/division_algebra.hpp"

#include <climits>
#include <numeric>
#include <sstream>

#include "drinfeld/error.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

// Absolute precision used for the exact zero inside Berkowitz.
constexpr int kExactZero = 1 << 20;

LaurentSeries shift_pi(const LaurentSeries& s, int k) {
  if (s.is_zero()) return LaurentSeries::zero(s.ctx(), s.absolute_precision() + k);
  return LaurentSeries(s.ctx(), s.lead() + k, s.coeffs());
}

LaurentSeries sigma(const LaurentSeries& s, int i) {
  if (i == 0) return s;
  return s.map_coeffs([i](const FFElem& c) { return frobenius_power(c, i); });
}

LaurentSeries to_constants(const LaurentSeries& s, const FieldPtr& k) {
  if (s.is_zero()) return LaurentSeries::zero(k, s.absolute_precision());
  std::vector<FFElem> v;
  v.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) {
    if (!in_subfield(c, 1)) fail(ErrorCode::InvalidArgument, "value does not lie in F_inf");
    v.push_back(k->from_base(c.coeffs()[0]));
  }
  return LaurentSeries(k, s.lead(), std::move(v));
}

LaurentSeries to_w(const LaurentSeries& s, const FieldPtr& w) {
  if (s.is_zero()) return LaurentSeries::zero(w, s.absolute_precision());
  std::vector<FFElem> v;
  v.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) v.push_back(w->from_base(c.coeffs()[0]));
  return LaurentSeries(w, s.lead(), std::move(v));
}

void require_same(const DivAlgElem& x, const DivAlgElem& y) {
  if (x.ctx() != y.ctx()) fail(ErrorCode::ContextMismatch, "division algebra elements from different contexts");
}

std::vector<LaurentSeries> charpoly_over_w(const DivAlgElem& x) {
  const auto m = right_regular_matrix(x);
  const FieldPtr& w = x.ctx()->residue_field();
  return berkowitz_charpoly(m, LaurentSeries::zero(w, kExactZero), LaurentSeries::one(w, x.ctx()->precision()));
}

}  // namespace

DivAlgPtr DivAlgCtx::create(const GFqPtr& gf, int n, int precision) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "division algebra degree must be positive");
  if (precision < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  return DivAlgPtr(new DivAlgCtx(gf, n, precision, FieldCtx::standard(gf, n), constant_field(gf)));
}

DivAlgElem::DivAlgElem(DivAlgPtr ctx, std::vector<LaurentSeries> components)
    : ctx_(std::move(ctx)), a_(std::move(components)) {
  if (static_cast<int>(a_.size()) != ctx_->n()) fail(ErrorCode::InvalidArgument, "expected n components");
  for (const auto& c : a_)
    if (!c.ctx()->same_as(*ctx_->residue_field()))
      fail(ErrorCode::ContextMismatch, "component not over the residue field of W");
}

DivAlgElem DivAlgElem::zero(const DivAlgPtr& ctx) {
  return DivAlgElem(ctx, std::vector<LaurentSeries>(static_cast<std::size_t>(ctx->n()),
                                                    LaurentSeries::zero(ctx->residue_field(), ctx->precision())));
}

DivAlgElem DivAlgElem::one(const DivAlgPtr& ctx) {
  return from_w(ctx, LaurentSeries::one(ctx->residue_field(), ctx->precision()));
}

DivAlgElem DivAlgElem::beta(const DivAlgPtr& ctx) {
  if (ctx->n() == 1) return from_w(ctx, LaurentSeries::pi_power(ctx->residue_field(), 1, ctx->precision()));
  DivAlgElem x = zero(ctx);
  x.a_[1] = LaurentSeries::one(ctx->residue_field(), ctx->precision());
  return x;
}

DivAlgElem DivAlgElem::from_w(const DivAlgPtr& ctx, const LaurentSeries& a) {
  DivAlgElem x = zero(ctx);
  x.a_[0] = a;
  if (!a.ctx()->same_as(*ctx->residue_field()))
    fail(ErrorCode::ContextMismatch, "value not over the residue field of W");
  return x;
}

DivAlgElem DivAlgElem::scalar(const DivAlgPtr& ctx, const LaurentSeries& s) {
  if (s.ctx()->degree() != 1 || s.ctx()->base() != ctx->base())
    fail(ErrorCode::ContextMismatch, "scalar must be a series over F_q");
  return from_w(ctx, to_w(s, ctx->residue_field()));
}

bool DivAlgElem::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

DivAlgElem DivAlgElem::operator-() const {
  std::vector<LaurentSeries> v;
  for (const auto& c : a_) v.push_back(-c);
  return DivAlgElem(ctx_, std::move(v));
}

DivAlgElem operator+(const DivAlgElem& x, const DivAlgElem& y) {
  require_same(x, y);
  std::vector<LaurentSeries> v;
  for (std::size_t i = 0; i < x.a_.size(); ++i) v.push_back(x.a_[i] + y.a_[i]);
  return DivAlgElem(x.ctx_, std::move(v));
}

DivAlgElem operator-(const DivAlgElem& x, const DivAlgElem& y) {
  require_same(x, y);
  std::vector<LaurentSeries> v;
  for (std::size_t i = 0; i < x.a_.size(); ++i) v.push_back(x.a_[i] - y.a_[i]);
  return DivAlgElem(x.ctx_, std::move(v));
}

DivAlgElem operator*(const DivAlgElem& x, const DivAlgElem& y) {
  require_same(x, y);
  const int n = x.ctx_->n();
  std::vector<std::optional<LaurentSeries>> acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentSeries term = x.a_[static_cast<std::size_t>(i)] * sigma(y.a_[static_cast<std::size_t>(j)], i);
      int k = i + j;
      if (k >= n) {
        term = shift_pi(term, 1);
        k -= n;
      }
      auto& slot = acc[static_cast<std::size_t>(k)];
      slot = slot ? *slot + term : term;
    }
  std::vector<LaurentSeries> v;
  for (auto& s : acc) v.push_back(*s);
  return DivAlgElem(x.ctx_, std::move(v));
}

DivAlgElem DivAlgElem::left_scaled(const LaurentSeries& w) const {
  std::vector<LaurentSeries> v;
  for (const auto& c : a_) v.push_back(w * c);
  return DivAlgElem(ctx_, std::move(v));
}

DivAlgElem DivAlgElem::inv() const {
  if (is_zero()) fail(ErrorCode::InverseOfZero, "inverse of a division algebra element that is zero to precision");
  const auto cp = charpoly_over_w(*this);
  const int n = ctx_->n();
  if (cp[0].is_zero()) fail(ErrorCode::InverseOfZero, "reduced norm vanishes to precision");
  // x^{-1} = -c_0^{-1} (x^{n-1} + c_{n-1} x^{n-2} + ... + c_1)
  DivAlgElem acc = from_w(ctx_, cp[static_cast<std::size_t>(n)]);
  for (int k = n - 1; k >= 1; --k) acc = acc * *this + from_w(ctx_, cp[static_cast<std::size_t>(k)]);
  return acc.left_scaled(-cp[0].inv());
}

std::string DivAlgElem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i > 0) os << " + ";
    os << '[' << a_[i].to_string() << "]*beta^" << i;
  }
  return os.str();
}

bool equal_to_precision(const DivAlgElem& x, const DivAlgElem& y) { return (x - y).is_zero(); }

int da_valuation(const DivAlgElem& x) {
  const int n = x.ctx()->n();
  int best = INT_MAX;
  for (int i = 0; i < n; ++i) {
    const auto& c = x.component(i);
    if (!c.is_zero()) best = std::min(best, n * c.lead() + i);
  }
  if (best == INT_MAX) fail(ErrorCode::ZeroValuation, "valuation of an element that is zero to precision");
  for (int i = 0; i < n; ++i) {
    const auto& c = x.component(i);
    if (c.is_zero() && n * c.absolute_precision() + i < best)
      fail(ErrorCode::PrecisionExhausted, "valuation not determined at this precision");
  }
  return best;
}

std::vector<std::vector<LaurentSeries>> right_regular_matrix(const DivAlgElem& x) {
  const int n = x.ctx()->n();
  const FieldPtr& w = x.ctx()->residue_field();
  std::vector<std::vector<LaurentSeries>> m(static_cast<std::size_t>(n),
                                            std::vector<LaurentSeries>(static_cast<std::size_t>(n),
                                                                       LaurentSeries::zero(w, kExactZero)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentSeries e = sigma(x.component(j), i);
      int k = i + j;
      if (k >= n) {
        e = shift_pi(e, 1);
        k -= n;
      }
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = e;
    }
  return m;
}

LaurentSeries da_reduced_trace(const DivAlgElem& x) {
  const LaurentSeries tr =
      x.component(0).map_coeffs([](const FFElem& c) { return relative_trace_norm(c, 1).trace; });
  return to_constants(tr, x.ctx()->constants());
}

LaurentSeries da_reduced_norm(const DivAlgElem& x) {
  const auto cp = charpoly_over_w(x);
  LaurentSeries det = cp[0];
  if (x.ctx()->n() % 2 == 1) det = -det;
  return to_constants(det, x.ctx()->constants());
}

std::vector<LaurentSeries> da_reduced_charpoly(const DivAlgElem& x) {
  std::vector<LaurentSeries> out;
  for (const auto& c : charpoly_over_w(x)) out.push_back(to_constants(c, x.ctx()->constants()));
  return out;
}

// ---------------------------------------------------------------- counting

namespace {

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) fail(ErrorCode::QuotientTooLarge, "quotient size exceeds 64 bits");
    r *= b;
  }
  return r;
}

std::string describe(int n, int j, const CosetCondition& cond) {
  std::ostringstream os;
  os << (cond.scope == CosetScope::WUnits ? "W_units" : "D_units") << " n=" << n << " j=" << j;
  if (!cond.trace_residues.empty()) {
    os << " trace in {";
    for (std::size_t r = 0; r < cond.trace_residues.size(); ++r) {
      if (r > 0) os << ',';
      os << '[';
      for (std::size_t k = 0; k < cond.trace_residues[r].size(); ++k) os << (k ? " " : "") << cond.trace_residues[r][k];
      os << ']';
    }
    os << '}';
  }
  return os.str();
}

}  // namespace

CosetCount coset_count(const GFqPtr& gf, int n, int j, const CosetCondition& cond, std::uint64_t cap) {
  if (n < 1 || j < 1) fail(ErrorCode::InvalidArgument, "coset_count needs n >= 1 and j >= 1");
  const std::uint64_t q = gf->q();
  for (const auto& r : cond.trace_residues) {
    if (static_cast<int>(r.size()) != j) fail(ErrorCode::InvalidArgument, "trace residue must have j digits");
    for (Coef c : r)
      if (c >= q) fail(ErrorCode::InvalidArgument, "trace residue digit outside F_q");
  }
  const std::uint64_t residue_size = checked_pow(q, static_cast<std::uint64_t>(n));
  const std::uint64_t enumerated = checked_pow(q, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(j));
  if (enumerated > cap)
    fail(ErrorCode::QuotientTooLarge, "quotient of size " + std::to_string(enumerated) + " exceeds the cap");

  const FieldPtr w = FieldCtx::standard(gf, n);
  std::vector<Coef> trace_of(residue_size);
  for (std::uint64_t idx = 0; idx < residue_size; ++idx)
    trace_of[idx] = relative_trace_norm(w->from_index(idx), 1).trace.coeffs()[0];

  // classes of O_inf / pi^j encoded base q, digit k weighted q^k
  std::vector<char> allowed;
  if (!cond.trace_residues.empty()) {
    allowed.assign(checked_pow(q, static_cast<std::uint64_t>(j)), 0);
    for (const auto& r : cond.trace_residues) {
      std::uint64_t code = 0;
      for (int k = j - 1; k >= 0; --k) code = code * q + r[static_cast<std::size_t>(k)];
      allowed[code] = 1;
    }
  }

  std::uint64_t per_unit = 1;
  std::uint64_t per_nonunit = 1;
  std::uint64_t total = 0;
  if (cond.scope == CosetScope::WUnits) {
    total = enumerated - enumerated / residue_size;
  } else {
    const auto nn = static_cast<std::uint64_t>(n);
    const auto jj = static_cast<std::uint64_t>(j);
    // the other n - 1 components, free or not all in p_W
    per_unit = checked_pow(q, nn * jj * (nn - 1));
    per_nonunit = per_unit - checked_pow(q, nn * (jj - 1) * (nn - 1));
    const std::uint64_t all = checked_pow(q, nn * nn * jj);
    total = all - checked_pow(q, nn * nn * (jj - 1));
  }

  std::uint64_t count = 0;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(j), 0);
  for (std::uint64_t e = 0; e < enumerated; ++e) {
    std::uint64_t rest = e;
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    for (int k = 0; k < j; ++k) {
      digits[static_cast<std::size_t>(k)] = rest % residue_size;
      rest /= residue_size;
      code += trace_of[digits[static_cast<std::size_t>(k)]] * scale;
      scale *= q;
    }
    if (!allowed.empty() && !allowed[code]) continue;
    const bool unit = digits[0] != 0;
    if (cond.scope == CosetScope::WUnits) {
      if (unit) ++count;
    } else {
      count += unit ? per_unit : per_nonunit;
    }
  }

  CosetCount out;
  out.condition = describe(n, j, cond);
  out.count = count;
  out.total = total;
  const std::uint64_t g = std::gcd(count, total);
  out.ratio_num = count / g;
  out.ratio_den = total / g;
  return out;
}

nlohmann::json coset_count_to_json(const CosetCount& c) {
  return nlohmann::json{{"condition", c.condition},
                        {"count", c.count},
                        {"total", c.total},
                        {"exact_ratio_num", c.ratio_num},
                        {"exact_ratio_den", c.ratio_den}};
}

}  // namespace drinfeld
