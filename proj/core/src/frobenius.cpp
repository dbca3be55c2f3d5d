#include "drinfeld/frobenius.hpp"

#include <algorithm>

#include "drinfeld/error.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

std::vector<SkewPolyL> phi_t_powers(const FiniteDrinfeldModule& phi, int kmax) {
  std::vector<SkewPolyL> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  out.push_back(SkewPolyL::one(phi.field()));
  for (int k = 1; k <= kmax; ++k) out.push_back(phi.phi_t() * out.back());
  return out;
}

BasePoly ipow(const BasePoly& p, int e) {
  BasePoly r = BasePoly::constant(p.field(), 1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

SkewPolyL charpoly_residual(const FiniteDrinfeldModule& phi, const std::vector<BasePoly>& c) {
  const int n = phi.rank();
  const int m = phi.field()->degree();
  SkewPolyL acc = SkewPolyL::tau(phi.field(), m * n);
  for (int i = 0; i < static_cast<int>(c.size()); ++i) acc += phi.eval(c[static_cast<std::size_t>(i)]) * SkewPolyL::tau(phi.field(), m * i);
  return acc;
}

CharPolyRecord frob_charpoly(const FiniteDrinfeldModule& phi) {
  const FieldPtr& L = phi.field();
  const GFqPtr& gf = L->base();
  const int n = phi.rank();
  const int m = L->degree();
  const auto D = static_cast<std::size_t>(m);

  CharPolyRecord rec;
  rec.p = phi.characteristic();
  rec.m = m;
  rec.n = n;

  std::vector<int> base_bound(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base_bound[static_cast<std::size_t>(i)] = ((n - i) * m + n - 1) / n;
  const auto powers = phi_t_powers(phi, *std::max_element(base_bound.begin(), base_bound.end()) + 1);

  std::optional<LinearSolution> sol;
  std::vector<int> bound;
  for (int extra = 0; extra <= 1 && !sol; ++extra) {
    bound = base_bound;
    for (auto& b : bound) b += extra;
    int top = n * m;
    std::vector<std::pair<int, int>> cols;  // (i, k)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k <= bound[static_cast<std::size_t>(i)]; ++k) {
        cols.emplace_back(i, k);
        top = std::max(top, n * k + m * i);
      }
    const std::size_t rows = static_cast<std::size_t>(top + 1) * D;
    FqMatrix a(gf, rows, cols.size());
    for (std::size_t col = 0; col < cols.size(); ++col) {
      const auto [i, k] = cols[col];
      const SkewPolyL& pk = powers[static_cast<std::size_t>(k)];
      for (int e = 0; e <= pk.degree(); ++e) {
        const auto& coords = pk.coeffs()[static_cast<std::size_t>(e)].coeffs();
        const auto row0 = static_cast<std::size_t>(e + m * i) * D;
        for (std::size_t l = 0; l < D; ++l) a(row0 + l, col) = coords[l];
      }
    }
    std::vector<Coef> rhs(rows, 0);
    const auto minus_one = L->from_base(gf->neg(1)).coeffs();
    for (std::size_t l = 0; l < D; ++l) rhs[static_cast<std::size_t>(n * m) * D + l] = minus_one[l];
    sol = solve(a, rhs);
    if (sol) {
      if (!sol->kernel.empty())
        fail(ErrorCode::NonUniqueSolution,
             "charpoly system has a " + std::to_string(sol->kernel.size()) + "-dimensional kernel");
      rec.bounds_relaxed = extra > 0;
      rec.c.assign(static_cast<std::size_t>(n), BasePoly(gf));
      for (int i = 0; i < n; ++i) {
        std::vector<Coef> coeffs;
        for (std::size_t col = 0; col < cols.size(); ++col)
          if (cols[col].first == i) coeffs.push_back(sol->particular[col]);
        rec.c[static_cast<std::size_t>(i)] = BasePoly(gf, std::move(coeffs));
      }
    }
  }
  if (!sol) fail(ErrorCode::NoSolution, "charpoly system infeasible within the degree bounds");

  if (!charpoly_residual(phi, rec.c).is_zero())
    fail(ErrorCode::InvalidArgument, "charpoly multiply-back identity failed");
  rec.verified = true;
  rec.a_x = -rec.c[static_cast<std::size_t>(n - 1)];

  const int dp = rec.p.degree();
  if (dp >= 1 && m % dp == 0) {
    BasePoly s = rec.c[0];
    if (n % 2 == 1) s = -s;
    auto [quo, rem] = divmod(s, ipow(rec.p, m / dp));
    if (rem.is_zero() && quo.degree() == 0) rec.epsilon = quo.coeff(0);
  }
  return rec;
}

CharPolyRecord frob_charpoly_at(const RationalDrinfeldModule& phi, const BasePoly& p) {
  return frob_charpoly(phi.reduce_at(p));
}

BasePoly trace_of_frobenius(const FiniteDrinfeldModule& phi) { return frob_charpoly(phi).a_x; }

bool hasse_check(const CharPolyRecord& rec) {
  if (rec.a_x.is_zero()) return true;
  return rec.n * rec.a_x.degree() <= rec.m;
}

nlohmann::json record_to_json(const CharPolyRecord& rec) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& ci : rec.c) c.push_back(poly_to_json(ci));
  nlohmann::json out{{"p", poly_to_json(rec.p)}, {"m", rec.m}, {"n", rec.n}, {"c", c}, {"a_x", poly_to_json(rec.a_x)}};
  return out;
}

// ---------------------------------------------------------------- lambda-adic

namespace {

bool in_span(const GFqPtr& gf, const std::vector<std::vector<Coef>>& span, const std::vector<Coef>& v) {
  if (span.empty()) return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; });
  const std::size_t rows = v.size();
  FqMatrix a(gf, rows, span.size());
  for (std::size_t c = 0; c < span.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) a(r, c) = span[c][r];
  return solve(a, v).has_value();
}

}  // namespace

LambdaAdicResult lambda_adic_oracle(const FiniteDrinfeldModule& phi, const BasePoly& p_aux, const CharPolyRecord& rec,
                                    int degree_cap) {
  if (!p_aux.is_monic() || p_aux.degree() < 1 || !is_irreducible(p_aux))
    fail(ErrorCode::InvalidArgument, "auxiliary prime must be monic irreducible");
  if (p_aux == phi.characteristic()) fail(ErrorCode::InvalidArgument, "auxiliary prime equals the characteristic");
  const FieldPtr& L = phi.field();
  const GFqPtr& gf = L->base();
  const int D = L->degree();
  const int n = phi.rank();
  const int dp = p_aux.degree();
  const auto target = static_cast<std::size_t>(n * dp);
  const SkewPolyL phi_p = phi.eval(p_aux);

  for (int e = D; e <= degree_cap; e += D) {
    FieldPtr k = e == D ? L : FieldCtx::standard(gf, e);
    const auto E = static_cast<std::size_t>(e);
    FqMatrix map(gf, E, E);
    for (std::size_t l = 0; l < E; ++l) {
      std::vector<Coef> unit(E, 0);
      unit[l] = 1;
      const auto img = skew_apply(phi_p, FFElem(k, unit)).coeffs();
      for (std::size_t r = 0; r < E; ++r) map(r, l) = img[r];
    }
    const auto ker = kernel(map);
    if (ker.size() < target) continue;
    if (ker.size() > target) fail(ErrorCode::InvalidArgument, "torsion larger than q^{n deg p}");

    // greedy A/(p_aux)-basis
    auto act_t = [&](const FFElem& x) { return skew_apply(phi.phi_t(), x); };
    std::vector<FFElem> basis;
    std::vector<std::vector<Coef>> span;
    for (const auto& v : ker) {
      if (basis.size() == static_cast<std::size_t>(n)) break;
      if (in_span(gf, span, v)) continue;
      FFElem y(k, v);
      basis.push_back(y);
      for (int j = 0; j < dp; ++j) {
        span.push_back(y.coeffs());
        y = act_t(y);
      }
    }
    if (basis.size() != static_cast<std::size_t>(n)) fail(ErrorCode::InvalidArgument, "torsion is not free of rank n");

    FqMatrix cols(gf, E, target);
    for (std::size_t c = 0; c < target; ++c)
      for (std::size_t r = 0; r < E; ++r) cols(r, c) = span[c][r];

    LambdaAdicResult out;
    out.torsion_field = k;
    out.residue = FieldCtx::create(gf, dp, p_aux);
    out.matrix.assign(static_cast<std::size_t>(n), std::vector<FFElem>(static_cast<std::size_t>(n), out.residue->zero()));
    for (int j = 0; j < n; ++j) {
      const FFElem img = frobenius_power(basis[static_cast<std::size_t>(j)], D);
      const auto s = solve(cols, img.coeffs());
      if (!s || !s->kernel.empty()) fail(ErrorCode::InvalidArgument, "Frobenius image outside the torsion span");
      for (int i = 0; i < n; ++i) {
        std::vector<Coef> alpha(s->particular.begin() + i * dp, s->particular.begin() + (i + 1) * dp);
        out.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = FFElem(out.residue, std::move(alpha));
      }
    }
    out.charpoly = berkowitz_charpoly(out.matrix, out.residue->zero(), out.residue->one());
    for (const auto& ci : rec.c) out.expected.push_back(out.residue->from_poly(ci));
    out.expected.push_back(out.residue->one());
    out.agrees = out.charpoly == out.expected;
    return out;
  }
  fail(ErrorCode::TorsionNotSplit, "torsion not split within degree " + std::to_string(degree_cap));
}

}  // namespace drinfeld
