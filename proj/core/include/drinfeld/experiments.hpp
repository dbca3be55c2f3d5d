#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/frobenius.hpp"

namespace drinfeld {

using Rational = boost::rational<std::int64_t>;
/// Class of O_inf / pi^j as its digits c_0 .. c_{j-1} over F_q.
using Bucket = std::vector<Coef>;

struct ExperimentConfig {
  RationalDrinfeldModule module;
  int d_min = 1;
  int d_max = 1;
  int precision = 1;             // j
  std::optional<BasePoly> trace;  // fixed a for Lang-Trotter
  std::string json_out;
  std::string csv_out;
  int workers = 1;
};

/// Monic irreducibles of degree d at which the module has good reduction.
std::vector<BasePoly> enumerate_good_points(const RationalDrinfeldModule& phi, int d);

/// Frobenius data at one good point with its normalized trace class.
struct PointRecord {
  BasePoly p;
  CharPolyRecord charpoly;
  Bucket bucket;          // residue of a_x pi^{floor(d/n)} modulo pi^j
  bool hasse = false;     // n deg a_x <= d
  bool integral = false;  // a_x pi^{floor(d/n)} in O_inf
  bool gating = false;    // deg a_x <= floor(d/n)
};

/// Charpolys at all good points of degree d, split across `workers` threads
/// by index; the result order is the enumeration order regardless of workers.
std::vector<PointRecord> collect_points(const RationalDrinfeldModule& phi, int d, int j, int workers = 1);

/// Exact masses on O_inf / pi^j: Haar for d != 0 mod n, and for d = 0 mod n
/// the coset weights (q^{n-1} - 1) / (q^n - 1) on pi O_inf and q^{n-1} / (q^n - 1)
/// on each other residue class, spread uniformly over the deeper digits.
std::map<Bucket, Rational> theoretical_measure(int n, std::uint64_t q, int j, int d_mod_n);

struct HistogramReport {
  int d = 0;
  int n = 0;
  std::uint64_t q = 0;
  int j = 1;
  std::uint64_t sample_size = 0;
  std::map<Bucket, std::uint64_t> buckets;  // every class, zero counts included
  std::map<Bucket, Rational> theoretical;
  Rational tv{0};       // total variation distance
  Rational max_dev{0};  // largest |empirical - theoretical| over buckets
  std::uint64_t violations = 0;  // points failing Hasse, integrality or gating

  friend bool operator==(const HistogramReport&, const HistogramReport&) = default;
};

HistogramReport histogram_from_points(const std::vector<PointRecord>& pts, int d, int n, std::uint64_t q, int j);
HistogramReport sato_tate_histogram(const RationalDrinfeldModule& phi, int d, int j, int workers = 1);
std::vector<HistogramReport> sato_tate_histograms(const ExperimentConfig& cfg);

/// 1/2 sum |empirical / N - theoretical|.
Rational total_variation(const std::map<Bucket, std::uint64_t>& counts, const std::map<Bucket, Rational>& masses);

struct LangTrotterRow {
  int d = 0;
  std::uint64_t count = 0;        // P_{phi,a}(d)
  std::uint64_t good_points = 0;
  std::uint64_t partition_sum = 0;  // sum over all traces of their counts
  double ratio_bound = 0;         // count / q^{(1 - 1/n^2) d}
  double ratio_heuristic = 0;     // count * d / q^{(1 - 1/n) d}
  std::map<BasePoly, std::uint64_t> by_trace;
};

struct LangTrotterReport {
  BasePoly a;
  int n = 0;
  std::uint64_t q = 0;
  std::vector<LangTrotterRow> rows;
};

LangTrotterReport lang_trotter_counts(const RationalDrinfeldModule& phi, const BasePoly& a, int d_min, int d_max,
                                      int workers = 1);
nlohmann::json lang_trotter_to_json(const LangTrotterReport& r);

// ---------------------------------------------------------------- reports

nlohmann::json report_to_json(const HistogramReport& r);
HistogramReport report_from_json(const nlohmann::json& j);
/// {"reports": [...]}.
nlohmann::json reports_to_json(const std::vector<HistogramReport>& rs);
std::vector<HistogramReport> reports_from_json(const nlohmann::json& j);

struct CsvRow {
  int d = 0;
  Bucket bucket;
  std::uint64_t empirical_count = 0;
  std::int64_t theoretical_num = 0;
  std::int64_t theoretical_den = 1;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

/// Header d,bucket,empirical_count,theoretical_num,theoretical_den; bucket
/// digits joined by ';'; rows ordered by d then bucket.
std::string reports_to_csv(const std::vector<HistogramReport>& rs);
std::vector<CsvRow> csv_to_rows(const std::string& csv);
std::vector<CsvRow> reports_to_rows(const std::vector<HistogramReport>& rs);

/// Throws IoError.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace drinfeld
