#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld {

/// phi_p reduced modulo p equals tau^{deg p} for the Carlitz module.
bool carlitz_frobenius_identity(std::uint64_t q, const BasePoly& p);

struct CarlitzCheckRow {
  BasePoly prime;
  bool identity_holds = false;
  bool charpoly_is_t_minus_p = false;  // frob_charpoly gives c_0 = -p
  std::optional<Coef> epsilon;
};

/// Every monic irreducible of degree 1..dmax.
std::vector<CarlitzCheckRow> carlitz_check(std::uint64_t q, int dmax);

/// [{prime, identity_holds, charpoly_is_t_minus_p, epsilon}].
nlohmann::json carlitz_check_to_json(const std::vector<CarlitzCheckRow>& rows);

/// |(A/a)^x| from the factorization of a.  Throws InvalidArgument for a = 0.
std::uint64_t cyclotomic_degree(const BasePoly& a);

/// A polynomial in X over A, ascending in X.
using APoly = std::vector<BasePoly>;

/// Complete factorization over F_q(t) of a monic f in A[X] with f(0) != 0,
/// by exhaustive search over monic factors whose coefficient degrees obey
/// the Newton polygon of f at infinity.  Factors are monic, smallest degree
/// first.  Throws Unsupported when a search would exceed `budget` candidates.
std::vector<APoly> factor_over_rational_function_field(const APoly& f, std::uint64_t budget = 5'000'000);

struct CyclotomicCheck {
  std::uint64_t degree = 0;            // |(A/a)^x|
  bool galois_checked = false;         // desk-scale factorization performed
  std::vector<int> factor_degrees;     // of phi_a(X)/X over F_q(t)
  /// Every factor degree divides `degree` and one factor has full degree.
  bool consistent = false;
};

/// cyclotomic_degree plus, for deg a <= 2 and q <= 3, the factorization of
/// the Carlitz torsion polynomial phi_a(X)/X.
CyclotomicCheck cyclotomic_check(const BasePoly& a);

/// Level j of F(a_0) in F(a_1) in ..., a_0 = 1, a_{i+1}^q - a_{i+1} = -t a_i.
struct TowerLevel {
  int j = 0;
  /// Defining polynomial of each step, the i-th over the level-i field.
  std::vector<std::string> min_poly_chain;
  std::uint64_t degree_over_F = 1;  // 0 when a step is not certified
  bool certified = false;
  /// Prime of A whose residue chain certifies the last step, with the degree
  /// over F_q of the residue field at level j - 1.
  std::optional<BasePoly> certificate_prime;
  int residue_degree = 0;
};

/// Levels 0..j_max.  Step j is certified when some prime l of A (degree up
/// to `max_prime_degree`) carries a chain of residues abar_0 = 1,
/// abar_{i+1}^q - abar_{i+1} = -tbar abar_i with Tr(tbar abar_{j-1}) != 0:
/// then X^q - X + t a_{j-1} has no root in the level-(j-1) field.  q must be
/// prime (Unsupported).  At level 1 an uncertified step falls back to a
/// direct root search in F_q[t], throwing RootFound if one exists.
std::vector<TowerLevel> artin_schreier_tower(std::uint64_t q, int j_max, int max_prime_degree = 8);

/// [{level, degree, certified, certificate_prime, chain}].
nlohmann::json tower_to_json(const std::vector<TowerLevel>& levels);

}  // namespace drinfeld
