#include "drinfeld/experiments.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "drinfeld/error.hpp"
#include "drinfeld/laurent.hpp"

namespace drinfeld {

std::vector<BasePoly> enumerate_good_points(const RationalDrinfeldModule& phi, int d) {
  std::vector<BasePoly> out;
  for (auto& p : irreducible_monics(phi.base(), d))
    if (phi.good_reduction_at(p)) out.push_back(std::move(p));
  return out;
}

namespace {

PointRecord make_point(const RationalDrinfeldModule& phi, const BasePoly& p, int j) {
  PointRecord r;
  r.p = p;
  r.charpoly = frob_charpoly(phi.reduce_at(p));
  const int n = phi.rank();
  const int d = p.degree();
  const int shift = d / n;
  const BasePoly& a = r.charpoly.a_x;
  r.hasse = hasse_check(r.charpoly);
  r.gating = a.is_zero() || a.degree() <= shift;
  const FieldPtr k = constant_field(phi.base());
  LaurentSeries s = LaurentSeries::zero(k, j);
  if (!a.is_zero()) {
    const LaurentSeries e = expand_at_infinity(a, j + a.degree() + shift + 1);
    s = LaurentSeries(k, e.lead() + shift, e.coeffs());
  }
  r.integral = s.is_zero() || s.valuation() >= 0;
  if (r.integral)
    for (const auto& c : s.residue(j)) r.bucket.push_back(c.coeffs()[0]);
  return r;
}

Rational abs_rat(const Rational& r) { return r < 0 ? -r : r; }

nlohmann::json rat_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rat_from(const nlohmann::json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Bucket> all_buckets(std::uint64_t q, int j) {
  std::vector<Bucket> out;
  const std::uint64_t total = upow(q, j);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Bucket b(static_cast<std::size_t>(j));
    std::uint64_t rest = idx;
    // last digit varies fastest so the list is lexicographic
    for (int k = j - 1; k >= 0; --k) {
      b[static_cast<std::size_t>(k)] = static_cast<Coef>(rest % q);
      rest /= q;
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::string join_bucket(const Bucket& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) s += ';';
    s += std::to_string(b[i]);
  }
  return s;
}

}  // namespace

std::vector<PointRecord> collect_points(const RationalDrinfeldModule& phi, int d, int j, int workers) {
  const auto primes = enumerate_good_points(phi, d);
  std::vector<PointRecord> out(primes.size());
  const int w = std::max(1, workers);
  if (w == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) out[i] = make_point(phi, primes[i], j);
    return out;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
  std::vector<std::thread> pool;
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = static_cast<std::size_t>(t); i < primes.size(); i += static_cast<std::size_t>(w))
          out[i] = make_point(phi, primes[i], j);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::map<Bucket, Rational> theoretical_measure(int n, std::uint64_t q, int j, int d_mod_n) {
  if (j < 1) fail(ErrorCode::InvalidArgument, "precision j must be positive");
  if (n < 1) fail(ErrorCode::InvalidArgument, "rank must be positive");
  std::map<Bucket, Rational> out;
  const auto qj = static_cast<std::int64_t>(upow(q, j));
  const auto deeper = static_cast<std::int64_t>(upow(q, j - 1));
  const auto qn = static_cast<std::int64_t>(upow(q, n * kDegInfinity));
  const auto qn1 = static_cast<std::int64_t>(upow(q, (n - 1) * kDegInfinity));
  const bool haar = ((d_mod_n % n) + n) % n != 0;
  for (auto& b : all_buckets(q, j)) {
    Rational m;
    if (haar)
      m = Rational(1, qj);
    else
      m = Rational(b[0] == 0 ? qn1 - 1 : qn1, (qn - 1) * deeper);
    out.emplace(std::move(b), m);
  }
  return out;
}

Rational total_variation(const std::map<Bucket, std::uint64_t>& counts, const std::map<Bucket, Rational>& masses) {
  std::uint64_t total = 0;
  for (const auto& [b, c] : counts) total += c;
  Rational tv(0);
  for (const auto& [b, m] : masses) {
    const auto it = counts.find(b);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    const Rational emp = total == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(c), static_cast<std::int64_t>(total));
    tv += abs_rat(emp - m);
  }
  return tv / 2;
}

HistogramReport histogram_from_points(const std::vector<PointRecord>& pts, int d, int n, std::uint64_t q, int j) {
  HistogramReport r;
  r.d = d;
  r.n = n;
  r.q = q;
  r.j = j;
  r.theoretical = theoretical_measure(n, q, j, d % n);
  for (const auto& [b, m] : r.theoretical) r.buckets[b] = 0;
  for (const auto& p : pts) {
    if (!p.hasse || !p.integral || !p.gating) ++r.violations;
    if (!p.integral) continue;
    ++r.buckets[p.bucket];
    ++r.sample_size;
  }
  r.tv = total_variation(r.buckets, r.theoretical);
  for (const auto& [b, m] : r.theoretical) {
    const Rational emp = r.sample_size == 0 ? Rational(0)
                                            : Rational(static_cast<std::int64_t>(r.buckets[b]),
                                                       static_cast<std::int64_t>(r.sample_size));
    r.max_dev = std::max(r.max_dev, abs_rat(emp - m));
  }
  return r;
}

HistogramReport sato_tate_histogram(const RationalDrinfeldModule& phi, int d, int j, int workers) {
  return histogram_from_points(collect_points(phi, d, j, workers), d, phi.rank(), phi.base()->q(), j);
}

std::vector<HistogramReport> sato_tate_histograms(const ExperimentConfig& cfg) {
  if (cfg.precision < 1) fail(ErrorCode::InvalidArgument, "precision j must be positive");
  if (cfg.d_min < 1 || cfg.d_max < cfg.d_min) fail(ErrorCode::InvalidArgument, "empty degree range");
  std::vector<HistogramReport> out;
  for (int d = cfg.d_min; d <= cfg.d_max; ++d)
    out.push_back(sato_tate_histogram(cfg.module, d, cfg.precision, cfg.workers));
  return out;
}

LangTrotterReport lang_trotter_counts(const RationalDrinfeldModule& phi, const BasePoly& a, int d_min, int d_max,
                                      int workers) {
  if (d_min < 1 || d_max < d_min) fail(ErrorCode::InvalidArgument, "empty degree range");
  LangTrotterReport rep;
  rep.a = a;
  rep.n = phi.rank();
  rep.q = phi.base()->q();
  const double n = rep.n;
  for (int d = d_min; d <= d_max; ++d) {
    LangTrotterRow row;
    row.d = d;
    const auto pts = collect_points(phi, d, 1, workers);
    row.good_points = pts.size();
    for (const auto& p : pts) ++row.by_trace[p.charpoly.a_x];
    for (const auto& [t, c] : row.by_trace) row.partition_sum += c;
    const auto it = row.by_trace.find(a);
    row.count = it == row.by_trace.end() ? 0 : it->second;
    const double q = static_cast<double>(rep.q);
    row.ratio_bound = static_cast<double>(row.count) / std::pow(q, (1.0 - 1.0 / (n * n)) * d * kDegInfinity);
    row.ratio_heuristic = static_cast<double>(row.count) * d / std::pow(q, (1.0 - 1.0 / n) * d * kDegInfinity);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

nlohmann::json lang_trotter_to_json(const LangTrotterReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"d", row.d},
                    {"count", row.count},
                    {"good_points", row.good_points},
                    {"partition_sum", row.partition_sum},
                    {"distinct_traces", row.by_trace.size()},
                    {"ratio_bound", row.ratio_bound},
                    {"ratio_heuristic", row.ratio_heuristic}});
  return {{"a", poly_to_json(r.a)}, {"n", r.n}, {"q", r.q}, {"rows", rows}};
}

// ---------------------------------------------------------------- reports

nlohmann::json report_to_json(const HistogramReport& r) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& [b, c] : r.buckets) {
    const auto it = r.theoretical.find(b);
    const Rational m = it == r.theoretical.end() ? Rational(0) : it->second;
    buckets.push_back({{"bucket", b},
                       {"empirical_count", c},
                       {"theoretical_num", m.numerator()},
                       {"theoretical_den", m.denominator()}});
  }
  return {{"d", r.d},
          {"n", r.n},
          {"q", r.q},
          {"j", r.j},
          {"sample_size", r.sample_size},
          {"buckets", buckets},
          {"tv", rat_json(r.tv)},
          {"tv_float", boost::rational_cast<double>(r.tv)},
          {"max_dev", rat_json(r.max_dev)},
          {"violations", r.violations}};
}

HistogramReport report_from_json(const nlohmann::json& j) {
  try {
    HistogramReport r;
    r.d = j.at("d").get<int>();
    r.n = j.at("n").get<int>();
    r.q = j.at("q").get<std::uint64_t>();
    r.j = j.at("j").get<int>();
    r.sample_size = j.at("sample_size").get<std::uint64_t>();
    for (const auto& b : j.at("buckets")) {
      const auto key = b.at("bucket").get<Bucket>();
      r.buckets[key] = b.at("empirical_count").get<std::uint64_t>();
      r.theoretical[key] =
          Rational(b.at("theoretical_num").get<std::int64_t>(), b.at("theoretical_den").get<std::int64_t>());
    }
    r.tv = rat_from(j.at("tv"));
    r.max_dev = rat_from(j.at("max_dev"));
    r.violations = j.at("violations").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

nlohmann::json reports_to_json(const std::vector<HistogramReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return {{"reports", arr}};
}

std::vector<HistogramReport> reports_from_json(const nlohmann::json& j) {
  std::vector<HistogramReport> out;
  if (!j.contains("reports") || !j["reports"].is_array()) fail(ErrorCode::InvalidArgument, "missing reports array");
  for (const auto& r : j["reports"]) out.push_back(report_from_json(r));
  return out;
}

std::vector<CsvRow> reports_to_rows(const std::vector<HistogramReport>& rs) {
  std::vector<const HistogramReport*> sorted;
  for (const auto& r : rs) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) { return a->d < b->d; });
  std::vector<CsvRow> out;
  for (const auto* r : sorted)
    for (const auto& [b, c] : r->buckets) {
      CsvRow row;
      row.d = r->d;
      row.bucket = b;
      row.empirical_count = c;
      const auto it = r->theoretical.find(b);
      const Rational m = it == r->theoretical.end() ? Rational(0) : it->second;
      row.theoretical_num = m.numerator();
      row.theoretical_den = m.denominator();
      out.push_back(std::move(row));
    }
  return out;
}

std::string reports_to_csv(const std::vector<HistogramReport>& rs) {
  std::ostringstream os;
  os << "d,bucket,empirical_count,theoretical_num,theoretical_den\n";
  for (const auto& row : reports_to_rows(rs))
    os << row.d << ',' << join_bucket(row.bucket) << ',' << row.empirical_count << ',' << row.theoretical_num << ','
       << row.theoretical_den << '\n';
  return os.str();
}

std::vector<CsvRow> csv_to_rows(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "d,bucket,empirical_count,theoretical_num,theoretical_den")
    fail(ErrorCode::InvalidArgument, "unexpected CSV header");
  std::vector<CsvRow> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 5) fail(ErrorCode::InvalidArgument, "CSV row needs 5 fields: " + line);
    try {
      CsvRow row;
      row.d = std::stoi(f[0]);
      std::stringstream bs(f[1]);
      std::string digit;
      while (std::getline(bs, digit, ';')) row.bucket.push_back(static_cast<Coef>(std::stoul(digit)));
      row.empirical_count = std::stoull(f[2]);
      row.theoretical_num = std::stoll(f[3]);
      row.theoretical_den = std::stoll(f[4]);
      out.push_back(std::move(row));
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidArgument, "malformed CSV row: " + line);
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  os << content;
  if (!os) fail(ErrorCode::IoError, "write to " + path + " failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace drinfeld
