#pragma once
/**
 * @file tableaux.hpp
 * @brief One- and two-row semistandard B/C/D tableaux: validity, reading
 *        words, text format.
 *
 * Validity follows the Kashiwara-Nakashima conditions restricted to at most
 * two rows: rows weakly increase, columns obey the family's column rules,
 * and the (x,x)-, (n,n)- and quadruple-configuration exclusions hold.
 *
 * Text format: boxes separated by single spaces, rows separated by " / ",
 * first row first.  Example: "1 1 2 2 / 2 2".
 */

#include <string>
#include <vector>

#include "crystal/letters.hpp"

namespace crystal {

struct Tableau {
  ClassicalFamily fam;
  std::vector<Letter> row1;
  std::vector<Letter> row2;

  explicit Tableau(ClassicalFamily f) : fam(f) {}
  Tableau(ClassicalFamily f, std::vector<Letter> r1, std::vector<Letter> r2 = {})
      : fam(f), row1(std::move(r1)), row2(std::move(r2)) {}

  int r1() const { return static_cast<int>(row1.size()); }
  int r2() const { return static_cast<int>(row2.size()); }
  int boxes() const { return r1() + r2(); }
  bool operator==(const Tableau& o) const {
    return fam == o.fam && row1 == o.row1 && row2 == o.row2;
  }
};

/// One violated validity condition, by tag and 0-based column index.
struct Violation {
  std::string tag;  ///< e.g. "row-order", "column-order", "xx-config"
  int column;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/**
 * Check all validity conditions for the tableau's family.
 * Tags: "shape", "alphabet", "row-order", "column-order", "zero-zerobar" (C),
 * "one-onebar" (B/D), "xx-config", "nn-config" (B/D), "quad-config" (D).
 */
ValidationReport validate(const Tableau& t);

/**
 * Japanese reading word: letters from the rightmost column to the leftmost,
 * top to bottom within a column.
 */
std::vector<Letter> reading_word(const Tableau& t);

std::string render(const Tableau& t);
Tableau parse_tableau(const std::string& text, ClassicalFamily fam);

/// Render a bare row of letters (no family checks), space separated.
std::string render_row(const std::vector<Letter>& row);

}  // namespace crystal
