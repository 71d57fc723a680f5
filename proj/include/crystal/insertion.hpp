#pragma once
/**
 * @file insertion.hpp
 * @brief Column insertion and inverse column insertion for B/C/D tableaux.
 *
 * The case tables (C: A0-B4/C0-C4, B: A0-B7/C0-C7, D: A0-B8/C0-C8) are
 * implemented literally.  Guards are mutually exclusive; every call checks
 * all guards and fails hard if none (NoCaseError) or more than one
 * (logic_error) matches.  Inputs that match no case are exactly the ones the
 * product rules never produce.
 */

#include <optional>
#include <utility>
#include <vector>

#include "crystal/tableaux.hpp"

namespace crystal {

enum class CaseTag {
  A0, A1,
  B0, B1, B2, B3, B4, B5, B6, B7, B8,
  C0, C1, C2, C3, C4, C5, C6, C7, C8,
};
std::string case_tag_name(CaseTag t);

/// A column of one or two letters (top first); empty only for Case A0 input.
using Column = std::vector<Letter>;

/// Error: no insertion case covers (family, column, letter).
class NoCaseError : public std::runtime_error {
public:
  NoCaseError(const ClassicalFamily& fam, const Column& col, Letter a,
              bool inverse);
};

/// Error: an insertion would create a third row (or an illegal shape).
class ThreeRowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Result of inserting a letter into a single column.
struct ColumnStep {
  Column column;                  ///< the column after insertion
  std::optional<Letter> bumped;   ///< letter bumped to the next column, if any
  CaseTag tag;
  bool settled_in_row1;           ///< where the inserted letter was set
};

/// Result of inversely inserting a letter into a single column.
struct InverseStep {
  Column column;   ///< the restored column
  Letter emitted;  ///< letter bumped out to the left-hand column
  CaseTag tag;
};

ColumnStep insert_column(const ClassicalFamily& fam, const Column& col, Letter a);
InverseStep inverse_insert_column(const ClassicalFamily& fam, const Column& col,
                                  Letter b);

/// One route box per touched column, left to right.
struct RouteEntry {
  int column;   ///< 0-based column index
  int row;      ///< 1 or 2
  CaseTag tag;
};
using Route = std::vector<RouteEntry>;

/// The column of the first route box lying in row 1 (route length if none).
int route_crossing(const Route& r);

/**
 * Insert a letter into the leftmost column and propagate bumps rightwards
 * until Case A0 or A1.  The shape grows by exactly one box.
 */
std::pair<Tableau, Route> insert(const ClassicalFamily& fam, const Tableau& t,
                                 Letter a);

/**
 * Reverse bumping: remove the box at (row, col) -- which must be the
 * rightmost box of its row -- and inversely insert its letter through the
 * columns to the left.  Returns the reduced tableau and the letter expelled
 * from the leftmost column.
 */
std::pair<Tableau, Letter> reverse_bump(const ClassicalFamily& fam,
                                        const Tableau& t, int row, int col);

/**
 * Product tableau T1 * T2: the letters of T2's reading word
 * tau_j ... tau_1 are inserted into T1 as (tau_1 -> ... (tau_j -> T1)...),
 * i.e. the first letter of the reading word is inserted first.
 */
Tableau product(const ClassicalFamily& fam, const Tableau& t1, const Tableau& t2);

}  // namespace crystal
