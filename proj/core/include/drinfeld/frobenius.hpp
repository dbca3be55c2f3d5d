#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld {

/// Frobenius data of a Drinfeld module over a finite field L = F_{q^m}:
/// P(T) = T^n + c_{n-1} T^{n-1} + ... + c_0 with
/// tau^{mn} + sum_i phi_{c_i} tau^{mi} = 0.
struct CharPolyRecord {
  BasePoly p;               // characteristic of the module
  int m = 0;                // [L : F_q]
  int n = 0;                // rank
  std::vector<BasePoly> c;  // c_0 .. c_{n-1}
  BasePoly a_x;             // trace of Frobenius, -c_{n-1}
  /// (-1)^n c_0 = epsilon * p^{m / deg p}, when that holds with epsilon in F_q^x.
  std::optional<Coef> epsilon;
  bool bounds_relaxed = false;  // the degree bounds had to be widened once
  bool verified = false;        // multiply-back identity checked
};

/// Solves the F_q-linear system for c_0..c_{n-1} under the bounds
/// deg c_i <= ceil((n - i) m / n) (relaxed by one if infeasible) and verifies
/// the skew identity.  Throws NoSolution / NonUniqueSolution.
CharPolyRecord frob_charpoly(const FiniteDrinfeldModule& phi);

/// Reduction at p followed by frob_charpoly.
CharPolyRecord frob_charpoly_at(const RationalDrinfeldModule& phi, const BasePoly& p);

BasePoly trace_of_frobenius(const FiniteDrinfeldModule& phi);

/// n * deg a_x <= m.
bool hasse_check(const CharPolyRecord& rec);

/// tau^{mn} + sum_i phi_{c_i} tau^{mi} evaluated in L[tau].
SkewPolyL charpoly_residual(const FiniteDrinfeldModule& phi, const std::vector<BasePoly>& c);

/// {p, m, n, c, a_x} with polynomials as ascending coefficient arrays.
nlohmann::json record_to_json(const CharPolyRecord& rec);

/// Frobenius on the p_aux-torsion as a matrix over A/(p_aux).
struct LambdaAdicResult {
  FieldPtr torsion_field;            // extension of L holding phi[p_aux]
  FieldPtr residue;                  // A/(p_aux), modulus p_aux
  std::vector<std::vector<FFElem>> matrix;
  std::vector<FFElem> charpoly;      // ascending, monic
  /// P(T) reduced modulo p_aux, ascending, for comparison.
  std::vector<FFElem> expected;
  bool agrees = false;
};

/// Computes phi[p_aux] as the kernel of x -> phi_{p_aux}(x) on growing
/// extensions of L, an A/(p_aux)-basis of it, and the matrix of
/// x -> x^{q^m}.  Throws TorsionNotSplit past `degree_cap` and
/// InvalidArgument when p_aux is the characteristic.
LambdaAdicResult lambda_adic_oracle(const FiniteDrinfeldModule& phi, const BasePoly& p_aux,
                                    const CharPolyRecord& rec, int degree_cap = 24);

}  // namespace drinfeld
