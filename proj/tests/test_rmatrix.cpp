#include "doctest.h"

#include "crystal/rmatrix.hpp"

using namespace crystal;

namespace {

TensorElement T(const char* fam, int n, int l, int k, const char* c1,
                const char* c2) {
  const Family f(*affine_from_tag(fam), n);
  return TensorElement(element_from_coords_text(f, l, c1),
                       element_from_coords_text(f, k, c2));
}

void check_map(const char* fam, int n, int l, int k, const char* c1,
               const char* c2, const char* i1, const char* i2, int H = -999) {
  const RResult res = r_apply(T(fam, n, l, k, c1, c2));
  CHECK(res.image == T(fam, n, k, l, i1, i2));
  if (H != -999) CHECK(res.H == H);
}

}  // namespace

TEST_CASE("golden mappings: A2, n=2, B_3 (x) B_2") {
  check_map("A2", 2, 3, 2, "[1,0,0,0]", "[0,2,0,0]",
            "[2,0,0,0]", "[0,2,0,1]");
  check_map("A2", 2, 3, 2, "[1,1,0,0]", "[0,1,0,0]",
            "[1,0,0,0]", "[0,2,0,0]");
  const RResult third =
      r_apply(T("A2", 2, 3, 2, "[2,1,0,0]", "[0,1,0,1]"));
  CHECK(third.image == T("A2", 2, 2, 3, "[1,1,0,0]", "[0,1,0,0]"));
  CHECK(third.diag.l_prime == 6);
  CHECK(third.diag.k_prime == 4);
  CHECK(third.diag.m == 4);
  CHECK(third.H == 0);
}

TEST_CASE("golden engine transcripts: A2 embedded in C, B_6 (x) B_4") {
  const ClassicalFamily c2(ClassicalType::C, 2);
  const struct {
    const char *in1, *in2, *out2, *out1;
  } rows[] = {
      {"0 0 1 1 -0 -0", "2 2 2 2", "1 1 1 1", "2 2 2 2 -1 -1"},
      {"0 1 1 2 2 -0", "0 2 2 -0", "0 1 1 -0", "0 2 2 2 2 -0"},
      {"1 1 1 1 2 2", "2 2 -1 -1", "1 1 2 2", "0 0 2 2 -0 -0"},
  };
  for (const auto& r : rows) {
    const EngineResult er = r_engine_C(parse_tableau(r.in1, c2),
                                       parse_tableau(r.in2, c2), 6, 4);
    CHECK(render_row(er.out_row2) == r.out2);
    CHECK(render_row(er.out_row1) == r.out1);
  }
}

TEST_CASE("golden mappings: D2, n=2, B_3 (x) B_2") {
  check_map("D2", 2, 3, 2, "[1,0,o=0,0,0]", "[0,1,o=1,0,0]",
            "[2,0,o=0,0,0]", "[0,1,o=1,0,1]");
  check_map("D2", 2, 3, 2, "[1,0,o=1,0,0]", "[0,1,o=0,0,0]",
            "[1,0,o=0,0,0]", "[0,1,o=1,0,0]");
  check_map("D2", 2, 3, 2, "[2,0,o=1,0,0]", "[0,1,o=0,0,1]",
            "[1,0,o=1,0,0]", "[0,1,o=0,0,0]");
}

TEST_CASE("golden engine transcripts: D2 embedded in C, B_6 (x) B_4") {
  const ClassicalFamily c2(ClassicalType::C, 2);
  const struct {
    const char *in1, *in2, *out2, *out1;
  } rows[] = {
      {"0 0 1 1 -0 -0", "2 2 2 -2", "1 1 1 1", "2 2 2 -2 -1 -1"},
      {"0 1 1 2 -2 -0", "0 2 2 -0", "0 1 1 -0", "0 2 2 2 -2 -0"},
      {"1 1 1 1 2 -2", "2 2 -1 -1", "1 1 2 -2", "0 0 2 2 -0 -0"},
  };
  for (const auto& r : rows) {
    const EngineResult er = r_engine_C(parse_tableau(r.in1, c2),
                                       parse_tableau(r.in2, c2), 6, 4);
    CHECK(render_row(er.out_row2) == r.out2);
    CHECK(render_row(er.out_row1) == r.out1);
  }
}

TEST_CASE("golden mappings: B1, n=5, B_5 (x) B_3") {
  check_map("B1", 5, 5, 3,
            "[0,0,0,0,2,o=1,2,0,0,0,0]", "[0,0,0,0,1,o=1,1,0,0,0,0]",
            "[0,0,0,0,1,o=1,1,0,0,0,0]", "[0,0,0,0,2,o=1,2,0,0,0,0]", 3);
  check_map("B1", 5, 5, 3,
            "[0,0,0,0,2,o=0,3,0,0,0,0]", "[0,0,0,2,0,o=1,0,0,0,0,0]",
            "[0,0,0,0,0,o=1,2,0,0,0,0]", "[0,0,0,2,2,o=0,1,0,0,0,0]", 5);
  check_map("B1", 5, 5, 3,
            "[2,0,0,0,0,o=1,2,0,0,0,0]", "[0,0,0,0,0,o=1,0,0,0,0,2]",
            "[2,0,0,0,0,o=1,0,0,0,0,0]", "[0,0,0,0,0,o=1,2,0,0,0,2]", 1);
}

TEST_CASE("golden transcript: B1 first example, insertion and reverse bumps") {
  const ClassicalFamily b5(ClassicalType::B, 5);
  const RResult res =
      r_apply(T("B1", 5, 5, 3, "[0,0,0,0,2,o=1,2,0,0,0,0]",
                "[0,0,0,0,1,o=1,1,0,0,0,0]"));
  CHECK(res.diag.z == 0);
  CHECK(res.diag.l_prime == 5);
  CHECK(res.diag.k_prime == 3);
  CHECK(res.diag.m == 3);
  CHECK(render(res.diag.T0) == "4 5 o -5 -5 / 5 o -4");
  CHECK(render_row(res.diag.w) == "5 5 o -5 -5");

  // Re-run the reverse bumps, checking every intermediate tableau.
  const char* steps[] = {"4 o -5 -5 / 5 o -4", "4 o -5 / o -5 -4",
                         "4 o -5 / -5 -4", "5 o -5 / -5", "5 o -5"};
  const char* letters[] = {"5", "5", "o", "-5", "-5"};
  Tableau t = res.diag.T0;
  for (int s = 0; s < 5; ++s) {
    const int row = s < 2 ? 1 : 2;
    const int col = row == 1 ? t.r1() - 1 : t.r2() - 1;
    const auto [rest, out] = reverse_bump(b5, t, row, col);
    t = rest;
    CHECK(render(t) == steps[s]);
    CHECK(letter_token(out) == letters[s]);
  }
}

TEST_CASE("golden mappings: D1, n=5, B_2 (x) B_1") {
  check_map("D1", 5, 2, 1,
            "[0,0,0,1,0,0,1,0,0,0]", "[0,0,0,0,1,0,0,0,0,0]",
            "[0,0,0,0,0,1,0,0,0,0]", "[0,0,0,0,2,0,0,0,0,0]");
  check_map("D1", 5, 2, 1,
            "[0,0,0,0,0,2,0,0,0,0]", "[0,0,0,0,1,0,0,0,0,0]",
            "[0,0,0,0,0,1,0,0,0,0]", "[0,0,0,1,0,0,1,0,0,0]");
}

TEST_CASE("r_inverse undoes r_apply") {
  const TensorElement t =
      T("B1", 5, 5, 3, "[0,0,0,0,2,o=0,3,0,0,0,0]",
        "[0,0,0,2,0,o=1,0,0,0,0,0]");
  CHECK(r_inverse(r_apply(t).image) == t);
}

TEST_CASE("pad stripping: C1 pairs with common padding") {
  // 1^1 (x) 1bar^1 inside B_3 (x) B_3 strips one pad pair.
  const RResult res = r_apply(T("C1", 2, 3, 3, "[1,0,0,0]", "[0,0,0,1]"));
  CHECK(res.diag.z == 1);
  CHECK(res.diag.l_prime == 1);
  CHECK(res.diag.k_prime == 1);
  CHECK(res.H == 1 - res.diag.m);
  CHECK(res.image == T("C1", 2, 3, 3, "[1,0,0,0]", "[0,0,0,1]"));
}

TEST_CASE("engine input validation") {
  const ClassicalFamily c2(ClassicalType::C, 2);
  // Unbalanced padding.
  CHECK_THROWS_AS(r_engine_C(parse_tableau("0 1 1 1", c2),
                             parse_tableau("1 1", c2), 4, 2),
                  RMatrixError);
  // Length disagrees with the capacity.
  CHECK_THROWS_AS(r_engine_C(parse_tableau("1 1", c2),
                             parse_tableau("1 1", c2), 4, 2),
                  RMatrixError);
  // Two-row input.
  CHECK_THROWS_AS(r_engine_C(parse_tableau("1 1 / 2 2", c2),
                             parse_tableau("1 1", c2), 2, 2),
                  RMatrixError);
}
