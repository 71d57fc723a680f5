#include "crystal/letters.hpp"

#include <array>

namespace crystal {

ClassicalType classical_of(Affine a) {
  switch (a) {
    case Affine::A2_2n:
    case Affine::C1_n:
      return ClassicalType::C;
    case Affine::D2_np1:
    case Affine::B1_n:
      return ClassicalType::B;
    case Affine::D1_n:
      return ClassicalType::D;
  }
  throw std::logic_error("unknown affine family");
}

std::string affine_tag(Affine a) {
  switch (a) {
    case Affine::A2_2n: return "A2";
    case Affine::D2_np1: return "D2";
    case Affine::C1_n: return "C1";
    case Affine::B1_n: return "B1";
    case Affine::D1_n: return "D1";
  }
  throw std::logic_error("unknown affine family");
}

std::optional<Affine> affine_from_tag(const std::string& tag) {
  if (tag == "A2") return Affine::A2_2n;
  if (tag == "D2") return Affine::D2_np1;
  if (tag == "C1") return Affine::C1_n;
  if (tag == "B1") return Affine::B1_n;
  if (tag == "D1") return Affine::D1_n;
  return std::nullopt;
}

ClassicalFamily::ClassicalFamily(ClassicalType t, int rank) : type(t), n(rank) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
}

Family::Family(Affine a, int rank) : affine(a), n(rank) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
}

Letter Letter::unbarred(int k) {
  if (k < 0) throw InvalidLetterError("unbarred letter index must be >= 0");
  return Letter{static_cast<int8_t>(k + 1)};
}

Letter Letter::barred(int k) {
  if (k < 0) throw InvalidLetterError("barred letter index must be >= 0");
  return Letter{static_cast<int8_t>(-(k + 1))};
}

int Letter::index() const {
  if (is_circ()) throw InvalidLetterError("circle has no index");
  return (v > 0 ? v : -v) - 1;
}

Letter Letter::bar() const {
  if (is_circ()) throw InvalidLetterError("circle has no bar");
  return Letter{static_cast<int8_t>(-v)};
}

bool in_alphabet(Letter a, const ClassicalFamily& fam) {
  switch (fam.type) {
    case ClassicalType::C:
      return !a.is_circ() && a.index() <= fam.n;  // 0..n and bars
    case ClassicalType::B:
      return a.is_circ() || (a.index() >= 1 && a.index() <= fam.n);
    case ClassicalType::D:
      return !a.is_circ() && a.index() >= 1 && a.index() <= fam.n;
  }
  return false;
}

namespace {

// Position in the total order; for D the pair {n, n-bar} shares a rank and
// is handled separately in compare().
int order_rank(Letter a, const ClassicalFamily& fam) {
  const int n = fam.n;
  switch (fam.type) {
    case ClassicalType::C:
      // 0..n then n-bar..0-bar
      return a.is_unbarred() ? a.index() : 2 * n + 1 - a.index();
    case ClassicalType::B:
      // 1..n, circle, n-bar..1-bar
      if (a.is_circ()) return n + 1;
      return a.is_unbarred() ? a.index() : 2 * n + 2 - a.index();
    case ClassicalType::D:
      // 1..n-1, {n, n-bar}, (n-1)-bar..1-bar
      return a.is_unbarred() ? a.index() : 2 * n - a.index();
  }
  throw std::logic_error("unknown classical type");
}

}  // namespace

Ordering compare(Letter a, Letter b, const ClassicalFamily& fam) {
  if (!in_alphabet(a, fam) || !in_alphabet(b, fam))
    throw InvalidLetterError("letter outside the family's alphabet");
  if (a == b) return Ordering::EQ;
  if (fam.type == ClassicalType::D && !a.is_circ() && !b.is_circ() &&
      a.index() == fam.n && b.index() == fam.n)
    return Ordering::INCOMPARABLE;  // {n, n-bar}
  const int ra = order_rank(a, fam), rb = order_rank(b, fam);
  if (ra < rb) return Ordering::LT;
  if (ra > rb) return Ordering::GT;
  return Ordering::EQ;
}

bool letter_lt(Letter a, Letter b, const ClassicalFamily& fam) {
  return compare(a, b, fam) == Ordering::LT;
}

bool letter_le(Letter a, Letter b, const ClassicalFamily& fam) {
  const Ordering o = compare(a, b, fam);
  return o == Ordering::LT || o == Ordering::EQ;
}

std::vector<Letter> alphabet(const ClassicalFamily& fam) {
  std::vector<Letter> out;
  const int n = fam.n;
  switch (fam.type) {
    case ClassicalType::C:
      for (int k = 0; k <= n; ++k) out.push_back(Letter::unbarred(k));
      for (int k = n; k >= 0; --k) out.push_back(Letter::barred(k));
      break;
    case ClassicalType::B:
      for (int k = 1; k <= n; ++k) out.push_back(Letter::unbarred(k));
      out.push_back(Letter::circ());
      for (int k = n; k >= 1; --k) out.push_back(Letter::barred(k));
      break;
    case ClassicalType::D:
      for (int k = 1; k <= n; ++k) out.push_back(Letter::unbarred(k));
      for (int k = n; k >= 1; --k) out.push_back(Letter::barred(k));
      break;
  }
  return out;
}

std::optional<Letter> box_arrow_f(int i, Letter a, const ClassicalFamily& fam) {
  const int n = fam.n;
  if (i < 1 || i > n) throw std::invalid_argument("box arrow index out of range");
  if (!in_alphabet(a, fam))
    throw InvalidLetterError("letter outside the family's alphabet");

  if (a.is_circ())  // B alphabet only
    return i == n ? std::optional<Letter>(Letter::barred(n)) : std::nullopt;

  const int k = a.index();
  const bool shared = (fam.type == ClassicalType::D) ? (i < n - 1) : (i < n);
  if (shared) {
    // f_i: i -> i+1 and (i+1)-bar -> i-bar.  Padding (k = 0) is inert.
    if (a.is_unbarred() && k == i) return Letter::unbarred(i + 1);
    if (a.is_barred() && k == i + 1) return Letter::barred(i);
    return std::nullopt;
  }
  switch (fam.type) {
    case ClassicalType::C:
      // f_n: n -> n-bar
      if (a.is_unbarred() && k == n) return Letter::barred(n);
      return std::nullopt;
    case ClassicalType::B:
      // f_n: n -> circle -> n-bar
      if (a.is_unbarred() && k == n) return Letter::circ();
      return std::nullopt;
    case ClassicalType::D:
      if (i == n - 1) {
        // f_{n-1}: n-1 -> n and n-bar -> (n-1)-bar
        if (a.is_unbarred() && k == n - 1) return Letter::unbarred(n);
        if (a.is_barred() && k == n) return Letter::barred(n - 1);
      } else {  // i == n
        // f_n: n-1 -> n-bar and n -> (n-1)-bar
        if (a.is_unbarred() && k == n - 1) return Letter::barred(n);
        if (a.is_unbarred() && k == n) return Letter::barred(n - 1);
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Letter> box_arrow_e(int i, Letter a, const ClassicalFamily& fam) {
  // e_i is the exact inverse relation of f_i; the alphabet is tiny, so scan.
  for (Letter b : alphabet(fam))
    if (box_arrow_f(i, b, fam) == a) return b;
  if (!in_alphabet(a, fam))
    throw InvalidLetterError("letter outside the family's alphabet");
  if (i < 1 || i > fam.n) throw std::invalid_argument("box arrow index out of range");
  return std::nullopt;
}

std::string letter_token(Letter a) {
  if (a.is_circ()) return "o";
  const std::string digits = std::to_string(a.index());
  return a.is_barred() ? "-" + digits : digits;
}

Letter letter_from_token(const std::string& tok) {
  if (tok == "o") return Letter::circ();
  std::string body = tok;
  bool barred = false;
  if (!body.empty() && body[0] == '-') {
    barred = true;
    body = body.substr(1);
  }
  if (body.empty()) throw InvalidLetterError("empty letter token");
  for (char c : body)
    if (c < '0' || c > '9') throw InvalidLetterError("bad letter token: " + tok);
  const int k = std::stoi(body);
  return barred ? Letter::barred(k) : Letter::unbarred(k);
}

}  // namespace crystal
