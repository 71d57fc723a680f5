#include "crystal/insertion.hpp"

#include <sstream>

namespace crystal {

std::string case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::A0: return "A0";
    case CaseTag::A1: return "A1";
    case CaseTag::B0: return "B0";
    case CaseTag::B1: return "B1";
    case CaseTag::B2: return "B2";
    case CaseTag::B3: return "B3";
    case CaseTag::B4: return "B4";
    case CaseTag::B5: return "B5";
    case CaseTag::B6: return "B6";
    case CaseTag::B7: return "B7";
    case CaseTag::B8: return "B8";
    case CaseTag::C0: return "C0";
    case CaseTag::C1: return "C1";
    case CaseTag::C2: return "C2";
    case CaseTag::C3: return "C3";
    case CaseTag::C4: return "C4";
    case CaseTag::C5: return "C5";
    case CaseTag::C6: return "C6";
    case CaseTag::C7: return "C7";
    case CaseTag::C8: return "C8";
  }
  return "?";
}

namespace {

std::string describe(const ClassicalFamily& fam, const Column& col, Letter a) {
  std::ostringstream os;
  os << "family " << (fam.type == ClassicalType::B   ? "B"
                      : fam.type == ClassicalType::C ? "C"
                                                     : "D")
     << fam.n << ", column (";
  for (std::size_t j = 0; j < col.size(); ++j)
    os << (j ? "," : "") << letter_token(col[j]);
  os << "), letter " << letter_token(a);
  return os.str();
}

}  // namespace

NoCaseError::NoCaseError(const ClassicalFamily& fam, const Column& col, Letter a,
                         bool inverse)
    : std::runtime_error(std::string("no ") + (inverse ? "inverse " : "") +
                         "insertion case matches: " + describe(fam, col, a)) {}

namespace {

// Where the inserted letter is set per case (first row = true).
bool case_in_row1(ClassicalType type, CaseTag tag) {
  switch (tag) {
    case CaseTag::A0:
    case CaseTag::B0:
    case CaseTag::B2:
    case CaseTag::B4:
      return true;
    case CaseTag::B5:
      return type == ClassicalType::D;
    case CaseTag::B6:
      return type == ClassicalType::B;
    case CaseTag::B7:
      return type == ClassicalType::B || type == ClassicalType::D;
    default:
      return false;
  }
}

struct Matcher {
  std::vector<std::pair<CaseTag, ColumnStep>> hits;
  ClassicalType type;

  void add(CaseTag tag, Column col, std::optional<Letter> bumped) {
    hits.push_back({tag, ColumnStep{std::move(col), bumped, tag,
                                    case_in_row1(type, tag)}});
  }
};

// Is the column the pair (x, x-bar) with x unbarred?
bool xxbar(Letter top, Letter bot) {
  return top.is_unbarred() && bot == top.bar();
}

void match_forward_C(const ClassicalFamily& fam, const Column& col, Letter i,
                     Matcher& m) {
  const int n = fam.n;
  if (col.empty()) {
    m.add(CaseTag::A0, {i}, std::nullopt);
    return;
  }
  if (col.size() == 1) {
    const Letter t = col[0];
    if (letter_lt(t, i, fam)) m.add(CaseTag::A1, {t, i}, std::nullopt);
    if (letter_le(i, t, fam)) m.add(CaseTag::B0, {i}, t);
    return;
  }
  const Letter t = col[0], b = col[1];
  if (letter_lt(t, i, fam) && letter_le(i, b, fam) && !xxbar(t, b))
    m.add(CaseTag::B1, {t, i}, b);
  if (letter_le(i, t, fam) && letter_lt(t, b, fam) &&
      !(i.is_unbarred() && b == i.bar()))
    m.add(CaseTag::B2, {i, b}, t);
  if (xxbar(t, b) && letter_le(t, i, fam) && letter_le(i, b, fam) &&
      t.index() != 0) {
    const int x = t.index();
    m.add(CaseTag::B3, {Letter::unbarred(x - 1), i}, Letter::barred(x - 1));
  }
  if (i.is_unbarred() && b == i.bar() && letter_lt(i, t, fam) &&
      letter_lt(t, b, fam) && i.index() != n) {
    const int x = i.index();
    m.add(CaseTag::B4, {Letter::unbarred(x + 1), Letter::barred(x + 1)}, t);
  }
}

void match_forward_B(const ClassicalFamily& fam, const Column& col, Letter i,
                     Matcher& m) {
  const int n = fam.n;
  const Letter oo = Letter::circ();
  if (col.empty()) {
    m.add(CaseTag::A0, {i}, std::nullopt);
    return;
  }
  if (col.size() == 1) {
    const Letter t = col[0];
    if (letter_lt(t, i, fam) || (t == oo && i == oo))
      m.add(CaseTag::A1, {t, i}, std::nullopt);
    if (letter_le(i, t, fam) && !(t == oo && i == oo)) m.add(CaseTag::B0, {i}, t);
    return;
  }
  const Letter t = col[0], b = col[1];
  if (letter_lt(t, i, fam) && letter_le(i, b, fam) && !xxbar(t, b) &&
      !(i == oo && b == oo))
    m.add(CaseTag::B1, {t, i}, b);
  if (letter_le(i, t, fam) && letter_lt(t, b, fam) &&
      !(i.is_unbarred() && b == i.bar()) && !(i == oo && t == oo))
    m.add(CaseTag::B2, {i, b}, t);
  if (i == oo && t == oo && b.is_barred()) m.add(CaseTag::B3, {oo, oo}, b);
  if (i.is_unbarred() && t == oo && b == oo) m.add(CaseTag::B4, {i, oo}, oo);
  if (xxbar(t, b) && letter_le(t, i, fam) && letter_le(i, b, fam) &&
      t.index() != 1) {
    const int x = t.index();
    m.add(CaseTag::B5, {Letter::unbarred(x - 1), i}, Letter::barred(x - 1));
  }
  if (i.is_unbarred() && b == i.bar() && letter_lt(i, t, fam) &&
      letter_lt(t, b, fam) && i.index() != n) {
    const int x = i.index();
    m.add(CaseTag::B6, {Letter::unbarred(x + 1), Letter::barred(x + 1)}, t);
  }
  if (i == Letter::unbarred(n) && t == oo && b == Letter::barred(n))
    m.add(CaseTag::B7, {Letter::unbarred(n), oo}, Letter::barred(n));
}

// Is (a, b) the pair (n, n-bar) or (n-bar, n)?
bool nnpair(Letter a, Letter b, int n) {
  return !a.is_circ() && !b.is_circ() && a.index() == n && b == a.bar();
}

void match_forward_D(const ClassicalFamily& fam, const Column& col, Letter i,
                     Matcher& m) {
  const int n = fam.n;
  if (col.empty()) {
    m.add(CaseTag::A0, {i}, std::nullopt);
    return;
  }
  if (col.size() == 1) {
    const Letter t = col[0];
    if (letter_lt(t, i, fam) || nnpair(t, i, n))
      m.add(CaseTag::A1, {t, i}, std::nullopt);
    if (letter_le(i, t, fam)) m.add(CaseTag::B0, {i}, t);
    return;
  }
  const Letter t = col[0], b = col[1];
  if (letter_lt(t, i, fam) && letter_le(i, b, fam) && !xxbar(t, b))
    m.add(CaseTag::B1, {t, i}, b);
  if (letter_le(i, t, fam) && letter_lt(t, b, fam) &&
      !(i.is_unbarred() && b == i.bar()))
    m.add(CaseTag::B2, {i, b}, t);
  if (xxbar(t, b) && letter_le(t, i, fam) && letter_le(i, b, fam) &&
      t.index() != n && t.index() != 1) {
    const int x = t.index();
    m.add(CaseTag::B3, {Letter::unbarred(x - 1), i}, Letter::barred(x - 1));
  }
  if (i.is_unbarred() && b == i.bar() && letter_lt(i, t, fam) &&
      letter_lt(t, b, fam) && i.index() != n - 1 && i.index() != n) {
    const int x = i.index();
    m.add(CaseTag::B4, {Letter::unbarred(x + 1), Letter::barred(x + 1)}, t);
  }
  if (nnpair(t, b, n) && i.is_unbarred() && i.index() != n)
    m.add(CaseTag::B5, {i, b}, t);
  if (!t.is_circ() && t.index() == n && i == t.bar() && b.is_barred() &&
      b != Letter::barred(n))
    m.add(CaseTag::B6, {t, i}, b);
  if (!t.is_circ() && t.index() == n && b == Letter::barred(n - 1) &&
      i == Letter::unbarred(n - 1))
    m.add(CaseTag::B7, {t, t.bar()}, t);
  if (nnpair(t, b, n) && i == b)
    m.add(CaseTag::B8, {Letter::unbarred(n - 1), b}, Letter::barred(n - 1));
}

struct InvMatcher {
  std::vector<std::pair<CaseTag, InverseStep>> hits;
  void add(CaseTag tag, Column col, Letter emitted) {
    hits.push_back({tag, InverseStep{std::move(col), emitted, tag}});
  }
};

void match_inverse_C(const ClassicalFamily& fam, const Column& col, Letter i,
                     InvMatcher& m) {
  const int n = fam.n;
  if (col.size() == 1) {
    const Letter t = col[0];
    if (letter_le(t, i, fam)) m.add(CaseTag::C0, {i}, t);
    return;
  }
  if (col.size() != 2) throw std::invalid_argument("inverse insertion needs a 1- or 2-box column");
  const Letter t = col[0], b = col[1];
  // C1: column (alpha, beta), insert gamma with alpha < beta <= gamma,
  //     (alpha, gamma) != (x, x-bar) -> (alpha, gamma), emit beta.
  if (letter_lt(t, b, fam) && letter_le(b, i, fam) &&
      !(t.is_unbarred() && i == t.bar()))
    m.add(CaseTag::C1, {t, i}, b);
  // C2: column (alpha, gamma), insert beta with alpha <= beta < gamma,
  //     (alpha, gamma) != (x, x-bar) -> (beta, gamma), emit alpha.
  if (letter_le(t, i, fam) && letter_lt(i, b, fam) && !xxbar(t, b))
    m.add(CaseTag::C2, {i, b}, t);
  // C3: column (x, beta), insert x-bar, x < beta < x-bar, x != n.
  if (t.is_unbarred() && i == t.bar() && letter_lt(t, b, fam) &&
      letter_lt(b, i, fam) && t.index() != n) {
    const int x = t.index();
    m.add(CaseTag::C3, {Letter::unbarred(x + 1), Letter::barred(x + 1)}, b);
  }
  // C4: column (x, x-bar), insert beta, x <= beta <= x-bar, x != 0.
  if (xxbar(t, b) && letter_le(t, i, fam) && letter_le(i, b, fam) &&
      t.index() != 0) {
    const int x = t.index();
    m.add(CaseTag::C4, {i, Letter::barred(x - 1)}, Letter::unbarred(x - 1));
  }
}

void match_inverse_B(const ClassicalFamily& fam, const Column& col, Letter i,
                     InvMatcher& m) {
  const int n = fam.n;
  const Letter oo = Letter::circ();
  if (col.size() == 1) {
    const Letter t = col[0];
    if (letter_le(t, i, fam) && !(t == oo && i == oo)) m.add(CaseTag::C0, {i}, t);
    return;
  }
  if (col.size() != 2) throw std::invalid_argument("inverse insertion needs a 1- or 2-box column");
  const Letter t = col[0], b = col[1];
  if (letter_lt(t, b, fam) && letter_le(b, i, fam) &&
      !(t.is_unbarred() && i == t.bar()) && !(b == oo && i == oo))
    m.add(CaseTag::C1, {t, i}, b);
  if (letter_le(t, i, fam) && letter_lt(i, b, fam) && !xxbar(t, b) &&
      !(t == oo && i == oo))
    m.add(CaseTag::C2, {i, b}, t);
  if (i.is_barred() && t == oo && b == oo) m.add(CaseTag::C3, {oo, i}, oo);
  if (i == oo && t.is_unbarred() && b == oo) m.add(CaseTag::C4, {oo, oo}, t);
  if (t.is_unbarred() && i == t.bar() && letter_lt(t, b, fam) &&
      letter_lt(b, i, fam) && t.index() != n) {
    const int x = t.index();
    m.add(CaseTag::C5, {Letter::unbarred(x + 1), Letter::barred(x + 1)}, b);
  }
  if (xxbar(t, b) && letter_le(t, i, fam) && letter_le(i, b, fam) &&
      t.index() != 1) {
    const int x = t.index();
    m.add(CaseTag::C6, {i, Letter::barred(x - 1)}, Letter::unbarred(x - 1));
  }
  if (i == Letter::barred(n) && t == Letter::unbarred(n) && b == oo)
    m.add(CaseTag::C7, {oo, Letter::barred(n)}, Letter::unbarred(n));
}

void match_inverse_D(const ClassicalFamily& fam, const Column& col, Letter i,
                     InvMatcher& m) {
  const int n = fam.n;
  if (col.size() == 1) {
    const Letter t = col[0];
    if (letter_le(t, i, fam)) m.add(CaseTag::C0, {i}, t);
    return;
  }
  if (col.size() != 2) throw std::invalid_argument("inverse insertion needs a 1- or 2-box column");
  const Letter t = col[0], b = col[1];
  if (letter_lt(t, b, fam) && letter_le(b, i, fam) &&
      !(t.is_unbarred() && i == t.bar()))
    m.add(CaseTag::C1, {t, i}, b);
  if (letter_le(t, i, fam) && letter_lt(i, b, fam) && !xxbar(t, b))
    m.add(CaseTag::C2, {i, b}, t);
  if (t.is_unbarred() && i == t.bar() && letter_lt(t, b, fam) &&
      letter_lt(b, i, fam) && t.index() != n - 1 && t.index() != n) {
    const int x = t.index();
    m.add(CaseTag::C3, {Letter::unbarred(x + 1), Letter::barred(x + 1)}, b);
  }
  if (xxbar(t, b) && letter_le(t, i, fam) && letter_le(i, b, fam) &&
      t.index() != n && t.index() != 1) {
    const int x = t.index();
    m.add(CaseTag::C4, {i, Letter::barred(x - 1)}, Letter::unbarred(x - 1));
  }
  // C5: column (x, mu2), insert mu1 = bar(mu2), x unbarred != n.
  if (!i.is_circ() && i.index() == n && !b.is_circ() && b == i.bar() &&
      t.is_unbarred() && t.index() != n)
    m.add(CaseTag::C5, {i, b}, t);
  // C6: column (mu1, mu2), insert x-bar != n-bar.
  if (nnpair(t, b, n) && i.is_barred() && i != Letter::barred(n))
    m.add(CaseTag::C6, {t, i}, b);
  // C7: column (mu1, mu2), insert mu1 (the top letter).
  if (nnpair(t, b, n) && i == t)
    m.add(CaseTag::C7, {t, Letter::barred(n - 1)}, Letter::unbarred(n - 1));
  // C8: column (n-1, mu), insert (n-1)-bar -> (bar(mu), mu), emit mu.
  if (t == Letter::unbarred(n - 1) && !b.is_circ() && b.index() == n &&
      i == Letter::barred(n - 1))
    m.add(CaseTag::C8, {b.bar(), b}, b);
}

}  // namespace

ColumnStep insert_column(const ClassicalFamily& fam, const Column& col,
                         Letter a) {
  Matcher m;
  m.type = fam.type;
  switch (fam.type) {
    case ClassicalType::C: match_forward_C(fam, col, a, m); break;
    case ClassicalType::B: match_forward_B(fam, col, a, m); break;
    case ClassicalType::D: match_forward_D(fam, col, a, m); break;
  }
  if (m.hits.empty()) throw NoCaseError(fam, col, a, false);
  if (m.hits.size() > 1)
    throw std::logic_error("overlapping insertion cases for " +
                           describe(fam, col, a));
  return m.hits.front().second;
}

InverseStep inverse_insert_column(const ClassicalFamily& fam, const Column& col,
                                  Letter b) {
  InvMatcher m;
  switch (fam.type) {
    case ClassicalType::C: match_inverse_C(fam, col, b, m); break;
    case ClassicalType::B: match_inverse_B(fam, col, b, m); break;
    case ClassicalType::D: match_inverse_D(fam, col, b, m); break;
  }
  if (m.hits.empty()) throw NoCaseError(fam, col, b, true);
  if (m.hits.size() > 1)
    throw std::logic_error("overlapping inverse insertion cases for " +
                           describe(fam, col, b));
  return m.hits.front().second;
}

int route_crossing(const Route& r) {
  for (const RouteEntry& e : r)
    if (e.row == 1) return e.column;
  return static_cast<int>(r.size());
}

std::pair<Tableau, Route> insert(const ClassicalFamily& fam, const Tableau& t,
                                 Letter a) {
  Tableau out = t;
  Route route;
  Letter cur = a;
  for (int j = 0;; ++j) {
    Column col;
    if (j < out.r1()) col.push_back(out.row1[j]);
    if (j < out.r2()) col.push_back(out.row2[j]);
    const ColumnStep step = insert_column(fam, col, cur);

    // Write the new column back, growing the shape by one box if needed.
    if (step.column.size() != col.size()) {
      if (step.column.size() == 1) {            // Case A0: new box in row 1
        if (j != out.r1())
          throw ThreeRowError("insertion would leave a gap in row 1");
        out.row1.push_back(step.column[0]);
      } else {                                  // Case A1: new box in row 2
        out.row1[j] = step.column[0];
        if (j != out.r2())
          throw ThreeRowError("insertion would leave a gap in row 2");
        out.row2.push_back(step.column[1]);
      }
    } else {
      out.row1[j] = step.column[0];
      if (step.column.size() == 2) out.row2[j] = step.column[1];
    }

    route.push_back({j, step.settled_in_row1 ? 1 : 2, step.tag});
    if (!step.bumped) break;
    cur = *step.bumped;
  }
  return {out, route};
}

std::pair<Tableau, Letter> reverse_bump(const ClassicalFamily& fam,
                                        const Tableau& t, int row, int col) {
  if (row != 1 && row != 2) throw std::invalid_argument("row must be 1 or 2");
  Tableau out = t;
  Letter cur{};
  if (row == 1) {
    if (col != out.r1() - 1 || col < 0)
      throw std::invalid_argument("start box is not the rightmost of row 1");
    if (out.r1() == out.r2())
      throw std::invalid_argument("removing the row-1 box would break the shape");
    cur = out.row1.back();
    out.row1.pop_back();
  } else {
    if (col != out.r2() - 1 || col < 0)
      throw std::invalid_argument("start box is not the rightmost of row 2");
    cur = out.row2.back();
    out.row2.pop_back();
  }
  for (int j = col - 1; j >= 0; --j) {
    Column c;
    c.push_back(out.row1[j]);
    if (j < out.r2()) c.push_back(out.row2[j]);
    const InverseStep step = inverse_insert_column(fam, c, cur);
    out.row1[j] = step.column[0];
    if (step.column.size() == 2) out.row2[j] = step.column[1];
    cur = step.emitted;
  }
  return {out, cur};
}

Tableau product(const ClassicalFamily& fam, const Tableau& t1,
                const Tableau& t2) {
  Tableau out = t1;
  for (Letter a : reading_word(t2)) out = insert(fam, out, a).first;
  return out;
}

}  // namespace crystal
