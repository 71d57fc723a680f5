#pragma once
/**
 * @file oracle.hpp
 * @brief Independent brute-force oracles for the isomorphism and the energy,
 *        plus the verification report that diffs them against r_apply.
 *
 * oracle_bfs       - A2_2n and C1_n: propagate the image and H over every
 *                    e_i/f_i edge (i = 0..n) from the seed pair, using the
 *                    tensor rule and the three-branch energy classification.
 * oracle_classical - B1_n/D1_n with l >= k: classify classical-highest
 *                    elements by the closed form from the main theorem's
 *                    proof and extend componentwise.
 * oracle_l_less_k  - l < k: invert the (k,l) table.
 * oracle_d2        - D2_np1: pull the C1 engine table at (2l,2k) back
 *                    through omega.
 */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "crystal/rmatrix.hpp"

namespace crystal {

class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Total bijective map of B_l (x) B_k with energies.
struct IsoTable {
  Family fam;
  int l = 0, k = 0;
  std::map<TensorElement, TensorElement> image;
  std::map<TensorElement, int> H;
  IsoTable(Family f, int l_, int k_) : fam(f), l(l_), k(k_) {}
};

IsoTable oracle_bfs(const Family& fam, int l, int k);
IsoTable oracle_classical(const Family& fam, int l, int k);
IsoTable oracle_l_less_k(const Family& fam, int l, int k);
IsoTable oracle_d2(int n, int l, int k);

/// The applicable oracle for the family and sizes.
IsoTable oracle_table(const Family& fam, int l, int k);

/// One verified property.
struct PropertyResult {
  std::string id;
  bool pass = false;
  std::string details;
};

struct Report {
  std::vector<PropertyResult> properties;
  bool all_pass() const;
  /// One line per property: "PASS|FAIL <property-id> <details>".
  std::string to_text() const;
};

/**
 * Diff r_apply against the applicable oracle on every element of
 * B_l (x) B_k and run the structural property suites (bijectivity,
 * inversion, weight reversal, w-monotonicity, H classical invariance).
 * Parallelism is capped by the CRYSTAL_RMATRIX_THREADS environment variable.
 */
Report verify(const Family& fam, int l, int k);

/// Worker count honoring CRYSTAL_RMATRIX_THREADS (>= 1).
int verification_threads();

}  // namespace crystal
