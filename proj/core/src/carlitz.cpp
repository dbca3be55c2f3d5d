#include "drinfeld/carlitz.hpp"

#include <algorithm>

#include <boost/rational.hpp>

#include "drinfeld/error.hpp"
#include "drinfeld/frobenius.hpp"

namespace drinfeld {

bool carlitz_frobenius_identity(std::uint64_t q, const BasePoly& p) {
  if (!p.is_monic() || !is_irreducible(p)) fail(ErrorCode::InvalidArgument, "p must be monic irreducible");
  const auto red = carlitz(q).reduce_at(p);
  return red.eval(p) == SkewPolyL::tau(red.field(), p.degree());
}

std::vector<CarlitzCheckRow> carlitz_check(std::uint64_t q, int dmax) {
  const auto phi = carlitz(q);
  const GFqPtr gf = GFq::make(q);
  std::vector<CarlitzCheckRow> rows;
  for (int d = 1; d <= dmax; ++d)
    for (const auto& p : irreducible_monics(gf, d)) {
      CarlitzCheckRow row;
      row.prime = p;
      const auto red = phi.reduce_at(p);
      row.identity_holds = red.eval(p) == SkewPolyL::tau(red.field(), d);
      const auto rec = frob_charpoly(red);
      row.charpoly_is_t_minus_p = rec.c.size() == 1 && rec.c[0] == -p;
      row.epsilon = rec.epsilon;
      rows.push_back(std::move(row));
    }
  return rows;
}

nlohmann::json carlitz_check_to_json(const std::vector<CarlitzCheckRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"prime", poly_to_json(r.prime)},
                     {"identity_holds", r.identity_holds},
                     {"charpoly_is_t_minus_p", r.charpoly_is_t_minus_p}};
    j["epsilon"] = r.epsilon ? nlohmann::json(*r.epsilon) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

std::uint64_t cyclotomic_degree(const BasePoly& a) {
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "cyclotomic degree of zero");
  const std::uint64_t q = a.field()->q();
  std::uint64_t out = 1;
  for (const auto& [p, e] : factor(a).factors) {
    std::uint64_t qd = 1;
    for (int i = 0; i < p.degree(); ++i) qd *= q;
    out *= qd - 1;
    for (int i = 1; i < e; ++i) out *= qd;
  }
  return out;
}

// ---------------------------------------------------------------- factoring

namespace {

using Rat = boost::rational<std::int64_t>;

int apoly_degree(const APoly& f) {
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k)
    if (!f[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

// Exact division by a monic g; nullopt when g does not divide f.
std::optional<APoly> divide_monic(APoly f, const APoly& g) {
  const int n = apoly_degree(f);
  const int k = apoly_degree(g);
  if (n < k) return std::nullopt;
  APoly quo(static_cast<std::size_t>(n - k + 1), BasePoly(f[0].field()));
  for (int i = n; i >= k; --i) {
    const BasePoly c = f[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(i - k)] = c;
    for (int r = 0; r <= k; ++r) f[static_cast<std::size_t>(i - k + r)] -= c * g[static_cast<std::size_t>(r)];
  }
  for (int i = 0; i < k; ++i)
    if (!f[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  return quo;
}

// Degrees -v_inf of the roots of f, descending.
std::vector<Rat> root_degrees(const APoly& f) {
  std::vector<std::pair<int, int>> pts;
  for (int k = 0; k <= apoly_degree(f); ++k)
    if (!f[static_cast<std::size_t>(k)].is_zero()) pts.emplace_back(k, f[static_cast<std::size_t>(k)].degree());
  // upper convex hull, left to right
  std::vector<std::pair<int, int>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const std::int64_t cross = static_cast<std::int64_t>(b.first - a.first) * (p.second - a.second) -
                                 static_cast<std::int64_t>(b.second - a.second) * (p.first - a.first);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<Rat> out;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int len = hull[s + 1].first - hull[s].first;
    const Rat deg(hull[s].second - hull[s + 1].second, len);
    for (int i = 0; i < len; ++i) out.push_back(deg);
  }
  std::sort(out.begin(), out.end(), [](const Rat& a, const Rat& b) { return a > b; });
  return out;
}

std::int64_t floor_rat(const Rat& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

}  // namespace

std::vector<APoly> factor_over_rational_function_field(const APoly& f_in, std::uint64_t budget) {
  APoly f = f_in;
  f.resize(static_cast<std::size_t>(apoly_degree(f) + 1));
  if (f.empty() || !f.back().is_one()) fail(ErrorCode::InvalidArgument, "polynomial must be monic in X");
  if (f[0].is_zero()) fail(ErrorCode::InvalidArgument, "polynomial must not vanish at X = 0");
  const GFqPtr& gf = f[0].field();
  const std::uint64_t q = gf->q();
  const int n = apoly_degree(f);
  if (n <= 1) return {f};

  const auto degs = root_degrees(f);
  for (int k = 1; 2 * k <= n; ++k) {
    // coefficient of X^{k-i} in a degree-k factor is +-e_i of k roots
    std::vector<int> bound(static_cast<std::size_t>(k) + 1, -1);
    Rat prefix(0);
    std::uint64_t candidates = 1;
    for (int i = 1; i <= k; ++i) {
      prefix += degs[static_cast<std::size_t>(i - 1)];
      const std::int64_t b = floor_rat(prefix);
      bound[static_cast<std::size_t>(i)] = b < 0 ? -1 : static_cast<int>(b);
      for (int r = 0; r <= bound[static_cast<std::size_t>(i)]; ++r) {
        if (candidates > budget / q) fail(ErrorCode::Unsupported, "factor search exceeds the budget");
        candidates *= q;
      }
    }
    // the constant term must be nonzero, so bound[k] >= 0
    if (bound[static_cast<std::size_t>(k)] < 0) continue;
    std::vector<std::uint64_t> radix(static_cast<std::size_t>(k) + 1, 1);
    for (int i = 1; i <= k; ++i)
      for (int r = 0; r <= bound[static_cast<std::size_t>(i)]; ++r) radix[static_cast<std::size_t>(i)] *= q;
    for (std::uint64_t c = 0; c < candidates; ++c) {
      std::uint64_t rest = c;
      APoly g(static_cast<std::size_t>(k) + 1, BasePoly(gf));
      g[static_cast<std::size_t>(k)] = BasePoly::constant(gf, 1);
      for (int i = 1; i <= k; ++i) {
        const std::uint64_t r = radix[static_cast<std::size_t>(i)];
        g[static_cast<std::size_t>(k - i)] = BasePoly::from_index(gf, rest % r);
        rest /= r;
      }
      if (g[0].is_zero()) continue;
      if (auto quo = divide_monic(f, g)) {
        std::vector<APoly> out{g};
        for (auto& h : factor_over_rational_function_field(*quo, budget)) out.push_back(std::move(h));
        std::stable_sort(out.begin(), out.end(),
                         [](const APoly& a, const APoly& b) { return apoly_degree(a) < apoly_degree(b); });
        return out;
      }
    }
  }
  return {f};
}

CyclotomicCheck cyclotomic_check(const BasePoly& a) {
  CyclotomicCheck out;
  out.degree = cyclotomic_degree(a);
  const GFqPtr& gf = a.field();
  if (a.degree() < 1 || a.degree() > 2 || gf->q() > 3) return out;
  const auto tp = carlitz(gf->q()).torsion_polynomial(a);
  // phi_a(X) / X = sum_i c_i X^{q^i - 1}, made monic
  const Coef inv_lead = gf->inv(tp.coeffs.back().lead());
  std::uint64_t qi = 1;
  APoly f;
  for (const auto& c : tp.coeffs) {
    f.resize(static_cast<std::size_t>(qi), BasePoly(gf));
    f[static_cast<std::size_t>(qi - 1)] = c.scaled(inv_lead);
    qi *= gf->q();
  }
  out.galois_checked = true;
  for (const auto& g : factor_over_rational_function_field(f)) out.factor_degrees.push_back(apoly_degree(g));
  out.consistent = !out.factor_degrees.empty();
  bool full = false;
  for (int d : out.factor_degrees) {
    if (out.degree % static_cast<std::uint64_t>(d) != 0) out.consistent = false;
    if (static_cast<std::uint64_t>(d) == out.degree) full = true;
  }
  out.consistent = out.consistent && full;
  return out;
}

// ---------------------------------------------------------------- tower

namespace {

// Tr(tbar abar_{j-1}) != 0 along one residue chain at l.
bool step_inert_at(const BasePoly& l, int j, int& residue_degree) {
  const GFqPtr& gf = l.field();
  FieldPtr k = FieldCtx::create(gf, l.degree(), l);
  FFElem tbar = k->from_poly(BasePoly::t(gf));
  FFElem alpha = k->one();
  for (int i = 1; i < j; ++i) {
    const auto as = solve_artin_schreier(1, tbar * alpha);
    tbar = embed(tbar, as.field);
    alpha = as.roots.front();
    k = as.field;
  }
  residue_degree = k->degree();
  return !relative_trace_norm(tbar * alpha, 1).trace.is_zero();
}

}  // namespace

std::vector<TowerLevel> artin_schreier_tower(std::uint64_t q, int j_max, int max_prime_degree) {
  if (!is_prime(q)) fail(ErrorCode::Unsupported, "tower certification requires prime q");
  if (j_max < 0) fail(ErrorCode::InvalidArgument, "negative level count");
  const GFqPtr gf = GFq::make(q);
  std::vector<TowerLevel> out;
  TowerLevel base;
  base.j = 0;
  base.degree_over_F = 1;
  base.certified = true;
  out.push_back(base);
  for (int j = 1; j <= j_max; ++j) {
    TowerLevel lv;
    lv.j = j;
    lv.min_poly_chain = out.back().min_poly_chain;
    lv.min_poly_chain.push_back("X^" + std::to_string(q) + " - X + t*a_" + std::to_string(j - 1));
    for (int d = 1; d <= max_prime_degree && !lv.certified; ++d)
      for (const auto& l : irreducible_monics(gf, d)) {
        if (l == BasePoly::t(gf)) continue;
        int rd = 0;
        if (step_inert_at(l, j, rd)) {
          lv.certified = out.back().certified;
          lv.certificate_prime = l;
          lv.residue_degree = rd;
          break;
        }
      }
    if (!lv.certificate_prime && j == 1) {
      // a root of X^q - X + t in F_q(t) is a polynomial of degree 1/q; search deg <= 1
      for (std::uint64_t idx = 0; idx < q * q; ++idx) {
        const BasePoly r = BasePoly::from_index(gf, idx);
        BasePoly rq = BasePoly::constant(gf, 1);
        for (std::uint64_t e = 0; e < q; ++e) rq *= r;
        if ((rq - r + BasePoly::t(gf)).is_zero())
          fail(ErrorCode::RootFound, "X^q - X + t has the root " + r.to_string());
      }
    }
    lv.degree_over_F = lv.certified ? out.back().degree_over_F * q : 0;
    out.push_back(std::move(lv));
  }
  return out;
}

nlohmann::json tower_to_json(const std::vector<TowerLevel>& levels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& lv : levels) {
    nlohmann::json j{{"level", lv.j}, {"degree", lv.degree_over_F}, {"certified", lv.certified},
                     {"chain", lv.min_poly_chain}};
    j["certificate_prime"] = lv.certificate_prime ? poly_to_json(*lv.certificate_prime) : nlohmann::json(nullptr);
    if (lv.certificate_prime) j["residue_degree"] = lv.residue_degree;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace drinfeld
