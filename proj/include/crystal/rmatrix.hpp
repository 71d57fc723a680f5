#pragma once
/**
 * @file rmatrix.hpp
 * @brief The combinatorial R matrix: isomorphism B_l (x) B_k -> B_k (x) B_l
 *        plus the energy function H, via column insertion.
 *
 * Twisted families (A2_2n, D2_np1) go through the omega embedding and the
 * type-C engine on padded rows of lengths 2l and 2k; C1_n pairs feed the
 * engine directly; B1_n / D1_n use type B / D insertion on unpadded rows.
 * Energy is normalized by H(1^l (x) 1bar^k) = 0.
 */

#include <vector>

#include "crystal/crystal.hpp"
#include "crystal/insertion.hpp"

namespace crystal {

/// Internal failure of the pipeline (pad mismatch, shape breakdown, ...).
class RMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Diagnostics of one R application.
struct RDiag {
  int z = 0;                  ///< stripped pad pairs
  int l_prime = 0;            ///< l' (row length after stripping)
  int k_prime = 0;            ///< k'
  int m = 0;                  ///< second-row length of T0
  Tableau T0;                 ///< product tableau before reverse bumping
  std::vector<Letter> w;      ///< bumped-out letters w_1..w_{l'}
  RDiag() : T0(ClassicalFamily(ClassicalType::C, 2)) {}
};

struct RResult {
  TensorElement image;  ///< b2' (x) b1' in B_k (x) B_l
  int H;
  RDiag diag;
};

/// Transcript of the type-C engine (Rule 3.1 body, independent of omega).
struct EngineResult {
  std::vector<Letter> out_row2;  ///< padded row of b2~ (length cap2)
  std::vector<Letter> out_row1;  ///< padded row of b1~ (length cap1)
  RDiag diag;
};

/**
 * Type-C pipeline on padded one-row tableaux.  cap1/cap2 are the row lengths
 * (2l and 2k for twisted input).  Each row must carry equally many leading 0s
 * and trailing 0-bars; violations raise RMatrixError.
 */
EngineResult r_engine_C(const Tableau& t1pad, const Tableau& t2pad,
                        int cap1, int cap2);

/// Apply R to b1 (x) b2 in B_l (x) B_k; returns image b2' (x) b1' and H.
RResult r_apply(const TensorElement& t);

/// Inverse map B_k (x) B_l -> B_l (x) B_k (R applied with roles swapped).
TensorElement r_inverse(const TensorElement& t);

}  // namespace crystal
