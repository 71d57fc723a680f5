#include "doctest.h"

#include "crystal/letters.hpp"

using namespace crystal;

TEST_CASE("affine tags round-trip") {
  for (Affine a : {Affine::A2_2n, Affine::D2_np1, Affine::C1_n, Affine::B1_n,
                   Affine::D1_n}) {
    const auto back = affine_from_tag(affine_tag(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK(!affine_from_tag("E8").has_value());
  CHECK(classical_of(Affine::A2_2n) == ClassicalType::C);
  CHECK(classical_of(Affine::D2_np1) == ClassicalType::B);
  CHECK(classical_of(Affine::C1_n) == ClassicalType::C);
  CHECK(classical_of(Affine::B1_n) == ClassicalType::B);
  CHECK(classical_of(Affine::D1_n) == ClassicalType::D);
}

TEST_CASE("rank 1 families are rejected") {
  CHECK_THROWS(ClassicalFamily(ClassicalType::C, 1));
  CHECK_THROWS(Family(Affine::B1_n, 1));
  CHECK_NOTHROW(Family(Affine::B1_n, 2));
}

TEST_CASE("letter encoding and barring") {
  const Letter a = Letter::unbarred(3);
  CHECK(a.is_unbarred());
  CHECK(a.index() == 3);
  CHECK(a.bar() == Letter::barred(3));
  CHECK(a.bar().bar() == a);
  CHECK(Letter::circ().is_circ());
  CHECK_THROWS_AS(Letter::circ().index(), InvalidLetterError);
  CHECK_THROWS_AS(Letter::circ().bar(), InvalidLetterError);
}

TEST_CASE("letter tokens round-trip over every alphabet") {
  for (ClassicalType ty : {ClassicalType::B, ClassicalType::C,
                           ClassicalType::D}) {
    const ClassicalFamily fam(ty, 3);
    for (Letter a : alphabet(fam)) {
      CHECK(in_alphabet(a, fam));
      CHECK(letter_from_token(letter_token(a)) == a);
    }
  }
  CHECK(letter_token(Letter::unbarred(0)) == "0");
  CHECK(letter_token(Letter::barred(0)) == "-0");
  CHECK(letter_token(Letter::circ()) == "o");
  CHECK_THROWS_AS(letter_from_token("x"), InvalidLetterError);
  CHECK_THROWS_AS(letter_from_token(""), InvalidLetterError);
}

TEST_CASE("alphabet sizes and membership") {
  CHECK(alphabet(ClassicalFamily(ClassicalType::C, 3)).size() == 8);  // 0..0bar
  CHECK(alphabet(ClassicalFamily(ClassicalType::B, 3)).size() == 7);
  CHECK(alphabet(ClassicalFamily(ClassicalType::D, 3)).size() == 6);
  CHECK(!in_alphabet(Letter::circ(), ClassicalFamily(ClassicalType::C, 3)));
  CHECK(!in_alphabet(Letter::circ(), ClassicalFamily(ClassicalType::D, 3)));
  CHECK(!in_alphabet(Letter::unbarred(0), ClassicalFamily(ClassicalType::B, 3)));
  CHECK(!in_alphabet(Letter::unbarred(4), ClassicalFamily(ClassicalType::C, 3)));
}

TEST_CASE("alphabet order: B and C are total, D has one incomparable pair") {
  for (ClassicalType ty : {ClassicalType::B, ClassicalType::C,
                           ClassicalType::D}) {
    const ClassicalFamily fam(ty, 3);
    const auto abc = alphabet(fam);
    for (std::size_t i = 0; i < abc.size(); ++i)
      for (std::size_t j = 0; j < abc.size(); ++j) {
        const Ordering o = compare(abc[i], abc[j], fam);
        const bool d_pair =
            ty == ClassicalType::D && abc[i] != abc[j] &&
            !abc[i].is_circ() && !abc[j].is_circ() &&
            abc[i].index() == 3 && abc[j].index() == 3;
        if (d_pair) {
          CHECK(o == Ordering::INCOMPARABLE);
        } else if (i == j) {
          CHECK(o == Ordering::EQ);
        } else {
          CHECK((o == Ordering::LT || o == Ordering::GT));
          // alphabet() lists letters weakly increasing, so i < j means <=.
          if (i < j) CHECK(letter_le(abc[i], abc[j], fam));
        }
      }
  }
  const ClassicalFamily b3(ClassicalType::B, 3);
  CHECK(letter_lt(Letter::unbarred(3), Letter::circ(), b3));
  CHECK(letter_lt(Letter::circ(), Letter::barred(3), b3));
  CHECK_THROWS_AS(compare(Letter::circ(), Letter::unbarred(1),
                          ClassicalFamily(ClassicalType::C, 3)),
                  InvalidLetterError);
}

TEST_CASE("single-box arrows match the vector representation") {
  const ClassicalFamily c3(ClassicalType::C, 3);
  const ClassicalFamily b3(ClassicalType::B, 3);
  const ClassicalFamily d3(ClassicalType::D, 3);

  // C: f_i: i -> i+1, (i+1)bar -> ibar; f_n: n -> nbar.
  CHECK(box_arrow_f(1, Letter::unbarred(1), c3) == Letter::unbarred(2));
  CHECK(box_arrow_f(1, Letter::barred(2), c3) == Letter::barred(1));
  CHECK(box_arrow_f(3, Letter::unbarred(3), c3) == Letter::barred(3));
  CHECK(!box_arrow_f(1, Letter::unbarred(2), c3).has_value());

  // B: f_n: n -> circle -> nbar.
  CHECK(box_arrow_f(3, Letter::unbarred(3), b3) == Letter::circ());
  CHECK(box_arrow_f(3, Letter::circ(), b3) == Letter::barred(3));
  CHECK(!box_arrow_f(2, Letter::circ(), b3).has_value());

  // D: f_{n-1}: n-1 -> n, nbar -> (n-1)bar; f_n: n-1 -> nbar, n -> (n-1)bar.
  CHECK(box_arrow_f(2, Letter::unbarred(2), d3) == Letter::unbarred(3));
  CHECK(box_arrow_f(2, Letter::barred(3), d3) == Letter::barred(2));
  CHECK(box_arrow_f(3, Letter::unbarred(2), d3) == Letter::barred(3));
  CHECK(box_arrow_f(3, Letter::unbarred(3), d3) == Letter::barred(2));

  // Padding letters are inert.
  for (int i = 1; i <= 3; ++i) {
    CHECK(!box_arrow_f(i, Letter::unbarred(0), c3).has_value());
    CHECK(!box_arrow_f(i, Letter::barred(0), c3).has_value());
    CHECK(!box_arrow_e(i, Letter::unbarred(0), c3).has_value());
    CHECK(!box_arrow_e(i, Letter::barred(0), c3).has_value());
  }
}

TEST_CASE("box arrows e and f are exact inverses") {
  for (ClassicalType ty : {ClassicalType::B, ClassicalType::C,
                           ClassicalType::D}) {
    for (int n = 2; n <= 4; ++n) {
      const ClassicalFamily fam(ty, n);
      std::vector<Letter> all = alphabet(fam);
      if (ty == ClassicalType::C) {
        all.push_back(Letter::unbarred(0));
        all.push_back(Letter::barred(0));
      }
      for (Letter a : all)
        for (int i = 1; i <= n; ++i) {
          if (const auto b = box_arrow_f(i, a, fam)) {
            CHECK(box_arrow_e(i, *b, fam) == a);
          }
          if (const auto b = box_arrow_e(i, a, fam)) {
            CHECK(box_arrow_f(i, *b, fam) == a);
          }
        }
    }
  }
}
