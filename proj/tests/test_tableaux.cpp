#include "doctest.h"

#include "crystal/tableaux.hpp"

using namespace crystal;

namespace {

const ClassicalFamily C2(ClassicalType::C, 2);
const ClassicalFamily C3(ClassicalType::C, 3);
const ClassicalFamily B3(ClassicalType::B, 3);
const ClassicalFamily D3(ClassicalType::D, 3);

bool has_tag(const ValidationReport& rep, const std::string& tag) {
  for (const Violation& v : rep.violations)
    if (v.tag == tag) return true;
  return false;
}

}  // namespace

TEST_CASE("render and parse round-trip") {
  for (const char* text : {"1 1 2 2 / 2 2", "1 2 3", "o", "0 1 -1 -0",
                           "1 2 o -3 / 3 3 -3 -2"}) {
    const ClassicalFamily fam =
        std::string(text).find('o') != std::string::npos ? B3 : C3;
    const Tableau t = parse_tableau(text, fam);
    CHECK(render(t) == text);
    CHECK(parse_tableau(render(t), fam) == t);
  }
  CHECK_THROWS(parse_tableau("1 / 1 2", C3));  // second row longer
}

TEST_CASE("reading word runs right-to-left, top-to-bottom") {
  const Tableau t = parse_tableau("1 2 3 / 2 3", C3);
  const std::vector<Letter> w = reading_word(t);
  REQUIRE(w.size() == 5);
  CHECK(render_row(w) == "3 2 3 1 2");
  CHECK(reading_word(parse_tableau("1 2", C3)).size() == 2);
  CHECK(render_row(reading_word(parse_tableau("1 2", C3))) == "2 1");
}

TEST_CASE("valid tableaux pass validation") {
  CHECK(validate(parse_tableau("1 1 2 2 / 2 2", C3)).ok());
  CHECK(validate(parse_tableau("1 2 o -3 / 3 3 -3 -2", B3)).ok());
  CHECK(validate(parse_tableau("o / o", B3)).ok());             // circle column
  CHECK(validate(parse_tableau("3 / -3", D3)).ok());            // n over n-bar
  CHECK(validate(parse_tableau("-3 / 3", D3)).ok());            // n-bar over n
  CHECK(validate(parse_tableau("0 1 -1 -0", C3)).ok());
  CHECK(validate(Tableau(C3)).ok());                            // empty
}

TEST_CASE("row order violations") {
  CHECK(has_tag(validate(parse_tableau("2 1", C3)), "row-order"));
  CHECK(has_tag(validate(parse_tableau("3 -3", D3)), "row-order"));  // incomparable
  CHECK(has_tag(validate(parse_tableau("-3 3", D3)), "row-order"));
  CHECK(validate(parse_tableau("3 3", D3)).ok());
}

TEST_CASE("column order violations") {
  CHECK(has_tag(validate(parse_tableau("2 / 1", C3)), "column-order"));
  CHECK(has_tag(validate(parse_tableau("1 / 1", C3)), "column-order"));
  // B allows a circle-over-circle column but no other repeats.
  CHECK(has_tag(validate(parse_tableau("1 / 1", B3)), "column-order"));
  CHECK(validate(parse_tableau("o / o", B3)).ok());
  CHECK(validate(parse_tableau("1 / o", B3)).ok());
}

TEST_CASE("forbidden letter-over-bar columns") {
  CHECK(has_tag(validate(parse_tableau("0 / -0", C3)), "zero-zerobar"));
  CHECK(has_tag(validate(parse_tableau("1 / -1", B3)), "one-onebar"));
  CHECK(has_tag(validate(parse_tableau("1 / -1", D3)), "one-onebar"));
  CHECK(validate(parse_tableau("1 / -1", C3)).ok());  // fine in type C
}

TEST_CASE("xx-configuration exclusions") {
  // (x, x / ., x-bar) and (x, . / x-bar, x-bar) are both excluded.
  CHECK(has_tag(validate(parse_tableau("2 2 / 3 -2", C3)), "xx-config"));
  CHECK(has_tag(validate(parse_tableau("2 3 / -2 -2", C3)), "xx-config"));
  CHECK(validate(parse_tableau("2 2 / 3 -1", C3)).ok());
}

TEST_CASE("nn- and quadruple-configuration exclusions") {
  // B: n or circle in row 1 above n-bar or circle one column right.
  CHECK(has_tag(validate(parse_tableau("3 3 / o -3", B3)), "nn-config"));
  CHECK(has_tag(validate(parse_tableau("3 o / o -3", B3)), "nn-config"));
  // D: {n, n-bar} at the two corners.
  CHECK(has_tag(validate(parse_tableau("3 3 / -3 -3", D3)), "nn-config"));
  // D quadruple (n-1, n / n, (n-1)-bar) and its barred twin.
  CHECK(has_tag(validate(parse_tableau("2 3 / 3 -2", D3)), "quad-config"));
  CHECK(has_tag(validate(parse_tableau("2 -3 / -3 -2", D3)), "quad-config"));
}

TEST_CASE("shape violations") {
  Tableau t(C2);
  t.row1 = {Letter::unbarred(1)};
  t.row2 = {Letter::unbarred(2), Letter::unbarred(2)};
  CHECK(has_tag(validate(t), "shape"));
}

TEST_CASE("alphabet violations are reported first") {
  Tableau t(D3);
  t.row1 = {Letter::circ()};
  const ValidationReport rep = validate(t);
  CHECK(has_tag(rep, "alphabet"));
}
