#include "crystal/tableaux.hpp"

#include <sstream>

namespace crystal {

namespace {

bool weakly_ordered(Letter a, Letter b, const ClassicalFamily& fam) {
  const Ordering o = compare(a, b, fam);
  return o == Ordering::LT || o == Ordering::EQ;
}

}  // namespace

ValidationReport validate(const Tableau& t) {
  ValidationReport rep;
  const ClassicalFamily& fam = t.fam;
  const int n = fam.n;

  if (t.r2() > t.r1()) rep.violations.push_back({"shape", 0});

  for (const auto* row : {&t.row1, &t.row2})
    for (int j = 0; j < static_cast<int>(row->size()); ++j)
      if (!in_alphabet((*row)[j], fam)) rep.violations.push_back({"alphabet", j});
  if (!rep.ok()) return rep;  // later checks assume alphabet membership

  // Rows weakly increase (for D the partial order: incomparable pairs fail).
  for (const auto* row : {&t.row1, &t.row2})
    for (int j = 0; j + 1 < static_cast<int>(row->size()); ++j)
      if (!weakly_ordered((*row)[j], (*row)[j + 1], fam))
        rep.violations.push_back({"row-order", j});

  const Letter un = Letter::unbarred(n), bn = Letter::barred(n);

  // Column conditions.
  for (int a = 0; a < t.r2(); ++a) {
    const Letter top = t.row1[a], bot = t.row2[a];
    bool col_ok = false;
    switch (fam.type) {
      case ClassicalType::C:
        col_ok = letter_lt(top, bot, fam);
        if (top == Letter::unbarred(0) && bot == Letter::barred(0))
          rep.violations.push_back({"zero-zerobar", a});
        break;
      case ClassicalType::B:
        col_ok = letter_lt(top, bot, fam) || (top.is_circ() && bot.is_circ());
        if (top == Letter::unbarred(1) && bot == Letter::barred(1))
          rep.violations.push_back({"one-onebar", a});
        break;
      case ClassicalType::D:
        col_ok = letter_lt(top, bot, fam) || (top == un && bot == bn) ||
                 (top == bn && bot == un);
        if (top == Letter::unbarred(1) && bot == Letter::barred(1))
          rep.violations.push_back({"one-onebar", a});
        break;
    }
    if (!col_ok) rep.violations.push_back({"column-order", a});
  }

  // (x,x)-configurations: 1 <= x <= n for C; 1 <= x < n for B and D.
  const int xmax = (fam.type == ClassicalType::C) ? n : n - 1;
  auto is_x = [&](Letter a) {
    return a.is_unbarred() && a.index() >= 1 && a.index() <= xmax;
  };
  for (int a = 0; a + 1 < t.r2(); ++a) {
    // (alpha_a, alpha_{a+1}, beta_{a+1}) = (x, x, x-bar)
    if (is_x(t.row1[a]) && t.row1[a + 1] == t.row1[a] &&
        t.row2[a + 1] == t.row1[a].bar())
      rep.violations.push_back({"xx-config", a});
    // (alpha_a, beta_a, beta_{a+1}) = (x, x-bar, x-bar)
    if (is_x(t.row1[a]) && t.row2[a] == t.row1[a].bar() &&
        t.row2[a + 1] == t.row1[a].bar())
      rep.violations.push_back({"xx-config", a});
  }

  // (n,n)-configurations and the D quadruples.
  if (fam.type == ClassicalType::B) {
    const Letter oo = Letter::circ();
    for (int a = 0; a + 1 < t.r2(); ++a) {
      const Letter p = t.row1[a], q = t.row2[a + 1];
      if ((p == un && q == bn) || (p == un && q == oo) || (p == oo && q == oo) ||
          (p == oo && q == bn))
        rep.violations.push_back({"nn-config", a});
    }
  } else if (fam.type == ClassicalType::D) {
    for (int a = 0; a + 1 < t.r2(); ++a) {
      const Letter p = t.row1[a], q = t.row2[a + 1];
      if ((p == un || p == bn) && (q == un || q == bn))
        rep.violations.push_back({"nn-config", a});
      // (alpha_a, alpha_{a+1}, beta_a, beta_{a+1})
      const Letter um = Letter::unbarred(n - 1), bm = Letter::barred(n - 1);
      if (t.row1[a] == um && t.row2[a + 1] == bm &&
          ((t.row1[a + 1] == un && t.row2[a] == un) ||
           (t.row1[a + 1] == bn && t.row2[a] == bn)))
        rep.violations.push_back({"quad-config", a});
    }
  }

  return rep;
}

std::vector<Letter> reading_word(const Tableau& t) {
  std::vector<Letter> w;
  w.reserve(t.boxes());
  for (int j = t.r1() - 1; j >= 0; --j) {
    w.push_back(t.row1[j]);
    if (j < t.r2()) w.push_back(t.row2[j]);
  }
  return w;
}

std::string render_row(const std::vector<Letter>& row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out += ' ';
    out += letter_token(row[j]);
  }
  return out;
}

std::string render(const Tableau& t) {
  std::string out = render_row(t.row1);
  if (t.r2() > 0) out += " / " + render_row(t.row2);
  return out;
}

namespace {

std::vector<Letter> parse_row(const std::string& text) {
  std::vector<Letter> row;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) row.push_back(letter_from_token(tok));
  return row;
}

}  // namespace

Tableau parse_tableau(const std::string& text, ClassicalFamily fam) {
  Tableau t(fam);
  const std::string sep = " / ";
  const auto pos = text.find(sep);
  if (pos == std::string::npos) {
    t.row1 = parse_row(text);
  } else {
    t.row1 = parse_row(text.substr(0, pos));
    t.row2 = parse_row(text.substr(pos + sep.size()));
  }
  if (t.r2() > t.r1())
    throw std::invalid_argument("tableau text violates row lengths: " + text);
  return t;
}

}  // namespace crystal
