#pragma once
/**
 * @file crystal.hpp
 * @brief One-row affine crystals B_l for the five families, Kashiwara
 *        operators, string statistics, tensor products, omega maps and
 *        enumeration.
 *
 * An Element is a coordinate vector (x_1..x_n, [x_o], xbar_n..xbar_1):
 *   A2_2n : sum <= l
 *   D2_np1: x_o in {0,1}, x_o + sum <= l
 *   C1_n  : sum <= l and sum == l (mod 2); the padding count
 *           x_empty = (l - sum)/2 is implied (engine elements)
 *   B1_n  : x_o in {0,1}, x_o + sum == l
 *   D1_n  : x_n = 0 or xbar_n = 0, sum == l
 *
 * Classical operators (i = 1..n) act through the reading word of the one-row
 * tableau and the single-box arrows; the word's first letter (rightmost box)
 * is the first tensor factor.  The 0-operators exist in closed form for
 * A2_2n and C1_n only; elsewhere they raise UnsupportedZeroArrowError.
 */

#include <optional>
#include <string>
#include <vector>

#include "crystal/letters.hpp"
#include "crystal/tableaux.hpp"

namespace crystal {

class InvalidElementError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// i = 0 requested for a family whose 0-arrows are not implemented.
class UnsupportedZeroArrowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// omega_inverse applied off the image of omega (parity failure).
class NotInImageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Element {
  Family fam;
  int l;                    ///< capacity
  std::vector<int> x;       ///< x_1..x_n
  std::vector<int> xb;      ///< xbar_1..xbar_n (index i-1 holds xbar_i)
  int xo = 0;               ///< circle slot; used by D2_np1 and B1_n only

  Element(Family f, int cap);
  int n() const { return fam.n; }
  int sum() const;          ///< sum of x, xb and xo
  bool operator==(const Element&) const = default;
  bool operator<(const Element& o) const;  ///< container key order
};

/// Throws InvalidElementError if the coordinates violate the family's set.
void check_element(const Element& b);
bool element_ok(const Element& b);

struct TensorElement {
  Element b1;  ///< first factor, capacity l
  Element b2;  ///< second factor, capacity k
  TensorElement(Element a, Element b);
  bool operator==(const TensorElement&) const = default;
  bool operator<(const TensorElement& o) const;
};

/// The one-row tableau T(b) (no padding letters).
Tableau to_tableau(const Element& b);

/// For C1_n: the padded row of length l with x_empty 0s and 0-bars.
Tableau to_padded_tableau(const Element& b);

/// For A2_2n/D2_np1: the padded row T(omega(b)) of length 2l.
Tableau to_omega_tableau(const Element& b);

/// Rebuild an element of the family from the letter multiset of a one-row
/// tableau (padding letters 0/0-bar are ignored for C1_n).
Element element_from_row(const Family& fam, int cap,
                         const std::vector<Letter>& row);

/// The doubling embedding into the C1_n crystal B_{2l} (twisted families).
Element omega(const Element& b);
/// Inverse of omega; throws NotInImageError off the image.
Element omega_inverse(const Element& c1elt, const Family& target_fam);

// --- Kashiwara operators on words of single boxes (exposed for tableaux) ---
int word_eps(int i, const std::vector<Letter>& w, const ClassicalFamily& fam);
int word_phi(int i, const std::vector<Letter>& w, const ClassicalFamily& fam);
std::optional<std::vector<Letter>> word_apply_e(int i, std::vector<Letter> w,
                                                const ClassicalFamily& fam);
std::optional<std::vector<Letter>> word_apply_f(int i, std::vector<Letter> w,
                                                const ClassicalFamily& fam);

// --- Kashiwara operators ---
std::optional<Element> apply_e(int i, const Element& b);
std::optional<Element> apply_f(int i, const Element& b);
std::optional<TensorElement> apply_e(int i, const TensorElement& t);
std::optional<TensorElement> apply_f(int i, const TensorElement& t);
/// Operators on a (one- or two-row) tableau via its reading word.
std::optional<Tableau> apply_e(int i, const Tableau& t);
std::optional<Tableau> apply_f(int i, const Tableau& t);

// --- string statistics (operational: repeated application) ---
int eps(int i, const Element& b);
int phi(int i, const Element& b);
int eps(int i, const TensorElement& t);
int phi(int i, const TensorElement& t);

/// Classical weight (x_1 - xbar_1, ..., x_n - xbar_n); additive on tensors.
std::vector<int> weight(const Element& b);
std::vector<int> weight(const TensorElement& t);

/// All elements of B_l, complete and duplicate-free.
std::vector<Element> enumerate(const Family& fam, int l);

/// Text format "<FAM>:n=<n>,l=<l>:[x1,..,xn(,o=<0|1>),xbn,..,xb1]".
std::string element_text(const Element& b);
Element element_from_text(const std::string& text);

/// Parse just the coordinate list "[x1,..(,o=..),..,xb1]" for a given family.
Element element_from_coords_text(const Family& fam, int cap,
                                 const std::string& text);
std::string coords_text(const Element& b);

}  // namespace crystal
