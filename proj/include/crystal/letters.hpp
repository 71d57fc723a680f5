#pragma once
/**
 * @file letters.hpp
 * @brief Alphabets for Kashiwara-Nakashima tableaux of types B, C and D.
 *
 * A Letter is one symbol of a classical alphabet:
 *   C (extended):  0 < 1 < ... < n < n-bar < ... < 1-bar < 0-bar   (total)
 *   B:             1 < ... < n < circle < n-bar < ... < 1-bar      (total)
 *   D:             1 < ... < n-1 < {n, n-bar} < (n-1)-bar < ... < 1-bar
 *                  with n and n-bar incomparable                   (partial)
 *
 * The file also defines the single-box crystal arrows (vector representation)
 * used to drive the Kashiwara operators on reading words.  The padding
 * letters 0 and 0-bar of the extended C alphabet are inert under all arrows.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

/// The five affine families handled by this library.
enum class Affine { A2_2n, D2_np1, C1_n, B1_n, D1_n };

/// The classical type underlying an affine family.
enum class ClassicalType { B, C, D };

ClassicalType classical_of(Affine a);
std::string affine_tag(Affine a);                        ///< "A2", "D2", "C1", "B1", "D1"
std::optional<Affine> affine_from_tag(const std::string& tag);

/// Error for letters used outside their alphabet or malformed tokens.
class InvalidLetterError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * A classical family: type (B/C/D) plus rank n >= 2.
 * Rank 1 is rejected: several insertion case tables degenerate there.
 */
struct ClassicalFamily {
  ClassicalType type;
  int n;
  ClassicalFamily(ClassicalType t, int rank);
  bool operator==(const ClassicalFamily&) const = default;
};

/**
 * An affine family: one of the five affine tags plus rank n >= 2.
 */
struct Family {
  Affine affine;
  int n;
  Family(Affine a, int rank);
  ClassicalType classical() const { return classical_of(affine); }
  ClassicalFamily classical_family() const { return {classical(), n}; }
  bool operator==(const Family&) const = default;
};

/**
 * One symbol.  Encoding (signed small integer):
 *   +(k+1) = unbarred k (k = 0 is the padding letter "0"),
 *   -(k+1) = barred k   (k = 0 is the padding letter "0-bar"),
 *        0 = circle (B alphabet only).
 * Barring is the involution v -> -v.
 */
struct Letter {
  int8_t v = 0;

  static Letter unbarred(int k);
  static Letter barred(int k);
  static Letter circ() { return Letter{}; }

  bool is_circ() const { return v == 0; }
  bool is_unbarred() const { return v > 0; }
  bool is_barred() const { return v < 0; }

  /// The numeral k of the letter (k or k-bar).  Error on circle.
  int index() const;
  /// k <-> k-bar.  Error on circle.
  Letter bar() const;

  bool operator==(const Letter&) const = default;
  /// Encoding order, for use as a container key only (not the alphabet order).
  bool operator<(const Letter& o) const { return v < o.v; }
};

enum class Ordering { LT, EQ, GT, INCOMPARABLE };

/// Whether the letter belongs to the family's alphabet.
bool in_alphabet(Letter a, const ClassicalFamily& fam);

/**
 * Compare two letters in the family's alphabet order.
 * Throws InvalidLetterError if either letter is outside the alphabet.
 * INCOMPARABLE occurs exactly for {n, n-bar} in type D.
 */
Ordering compare(Letter a, Letter b, const ClassicalFamily& fam);

bool letter_lt(Letter a, Letter b, const ClassicalFamily& fam);  ///< strictly smaller
bool letter_le(Letter a, Letter b, const ClassicalFamily& fam);  ///< smaller or equal

/// All letters of the alphabet, in weakly increasing order (D: n before n-bar).
std::vector<Letter> alphabet(const ClassicalFamily& fam);

/**
 * Single-box crystal arrow f_i (1 <= i <= n); null when f_i kills the letter.
 * box_arrow_e is the exact inverse relation.  Padding letters are inert.
 */
std::optional<Letter> box_arrow_f(int i, Letter a, const ClassicalFamily& fam);
std::optional<Letter> box_arrow_e(int i, Letter a, const ClassicalFamily& fam);

/// Text token: "1".."9" / "10"... for k; "-1".. for k-bar; "o"; "0"; "-0".
std::string letter_token(Letter a);
Letter letter_from_token(const std::string& tok);

}  // namespace crystal
