#include "crystal/crystal.hpp"

#include <numeric>
#include <sstream>
#include <tuple>

namespace crystal {

Element::Element(Family f, int cap)
    : fam(f), l(cap), x(f.n, 0), xb(f.n, 0) {
  if (cap < 0) throw InvalidElementError("capacity must be >= 0");
}

int Element::sum() const {
  return std::accumulate(x.begin(), x.end(), 0) +
         std::accumulate(xb.begin(), xb.end(), 0) + xo;
}

bool Element::operator<(const Element& o) const {
  return std::tie(fam.affine, fam.n, l, x, xo, xb) <
         std::tie(o.fam.affine, o.fam.n, o.l, o.x, o.xo, o.xb);
}

void check_element(const Element& b) {
  const int n = b.n();
  if (static_cast<int>(b.x.size()) != n || static_cast<int>(b.xb.size()) != n)
    throw InvalidElementError("coordinate vector has the wrong length");
  for (int v : b.x)
    if (v < 0) throw InvalidElementError("negative coordinate");
  for (int v : b.xb)
    if (v < 0) throw InvalidElementError("negative coordinate");

  const int s = b.sum();
  switch (b.fam.affine) {
    case Affine::A2_2n:
      if (b.xo != 0) throw InvalidElementError("circle slot unused here");
      if (s > b.l) throw InvalidElementError("coordinate sum exceeds capacity");
      break;
    case Affine::D2_np1:
      if (b.xo != 0 && b.xo != 1)
        throw InvalidElementError("circle slot must be 0 or 1");
      if (s > b.l) throw InvalidElementError("coordinate sum exceeds capacity");
      break;
    case Affine::C1_n:
      if (b.xo != 0) throw InvalidElementError("circle slot unused here");
      if (s > b.l) throw InvalidElementError("coordinate sum exceeds capacity");
      if ((b.l - s) % 2 != 0)
        throw InvalidElementError("coordinate sum must match capacity parity");
      break;
    case Affine::B1_n:
      if (b.xo != 0 && b.xo != 1)
        throw InvalidElementError("circle slot must be 0 or 1");
      if (s != b.l)
        throw InvalidElementError("coordinate sum must equal capacity");
      break;
    case Affine::D1_n:
      if (b.xo != 0) throw InvalidElementError("circle slot unused here");
      if (b.x[n - 1] != 0 && b.xb[n - 1] != 0)
        throw InvalidElementError("x_n and xbar_n cannot both be positive");
      if (s != b.l)
        throw InvalidElementError("coordinate sum must equal capacity");
      break;
  }
}

bool element_ok(const Element& b) {
  try {
    check_element(b);
    return true;
  } catch (const InvalidElementError&) {
    return false;
  }
}

TensorElement::TensorElement(Element a, Element b)
    : b1(std::move(a)), b2(std::move(b)) {
  if (!(b1.fam == b2.fam))
    throw InvalidElementError("tensor factors must share the family");
}

bool TensorElement::operator<(const TensorElement& o) const {
  return std::tie(b1, b2) < std::tie(o.b1, o.b2);
}

Tableau to_tableau(const Element& b) {
  check_element(b);
  const ClassicalFamily cf(classical_of(b.fam.affine), b.n());
  Tableau t(cf);
  for (int i = 1; i <= b.n(); ++i)
    t.row1.insert(t.row1.end(), b.x[i - 1], Letter::unbarred(i));
  t.row1.insert(t.row1.end(), b.xo, Letter::circ());
  for (int i = b.n(); i >= 1; --i)
    t.row1.insert(t.row1.end(), b.xb[i - 1], Letter::barred(i));
  return t;
}

Tableau to_padded_tableau(const Element& b) {
  if (b.fam.affine != Affine::C1_n)
    throw std::invalid_argument("padded rows exist for C1 elements only");
  Tableau t = to_tableau(b);
  const int pad = (b.l - b.sum()) / 2;
  t.row1.insert(t.row1.begin(), pad, Letter::unbarred(0));
  t.row1.insert(t.row1.end(), pad, Letter::barred(0));
  return t;
}

Tableau to_omega_tableau(const Element& b) {
  return to_padded_tableau(omega(b));
}

Element element_from_row(const Family& fam, int cap,
                         const std::vector<Letter>& row) {
  Element b(fam, cap);
  for (Letter a : row) {
    if (a.is_circ()) {
      ++b.xo;
    } else if (a.index() == 0) {
      if (classical_of(fam.affine) != ClassicalType::C)
        throw InvalidElementError("padding letter outside a type-C alphabet");
      // padding: not a coordinate
    } else if (a.index() > fam.n) {
      throw InvalidElementError("letter outside the family's alphabet");
    } else if (a.is_unbarred()) {
      ++b.x[a.index() - 1];
    } else {
      ++b.xb[a.index() - 1];
    }
  }
  check_element(b);
  return b;
}

Element omega(const Element& b) {
  check_element(b);
  Element c(Family(Affine::C1_n, b.n()), 2 * b.l);
  for (int i = 0; i < b.n(); ++i) {
    c.x[i] = 2 * b.x[i];
    c.xb[i] = 2 * b.xb[i];
  }
  if (b.fam.affine == Affine::A2_2n) {
    // circle slot absent
  } else if (b.fam.affine == Affine::D2_np1) {
    c.x[b.n() - 1] += b.xo;
    c.xb[b.n() - 1] += b.xo;
  } else {
    throw std::invalid_argument("omega is defined for A2 and D2 elements only");
  }
  check_element(c);
  return c;
}

Element omega_inverse(const Element& c1elt, const Family& target_fam) {
  check_element(c1elt);
  if (c1elt.fam.affine != Affine::C1_n)
    throw std::invalid_argument("omega_inverse expects a C1 element");
  if (c1elt.n() != target_fam.n)
    throw std::invalid_argument("rank mismatch in omega_inverse");
  if (c1elt.l % 2 != 0)
    throw NotInImageError("odd capacity is outside the image of omega");
  Element b(target_fam, c1elt.l / 2);
  const int n = b.n();
  switch (target_fam.affine) {
    case Affine::A2_2n:
      for (int i = 0; i < n; ++i) {
        if (c1elt.x[i] % 2 != 0 || c1elt.xb[i] % 2 != 0)
          throw NotInImageError("odd coordinate is outside the image of omega");
        b.x[i] = c1elt.x[i] / 2;
        b.xb[i] = c1elt.xb[i] / 2;
      }
      break;
    case Affine::D2_np1: {
      for (int i = 0; i + 1 < n; ++i) {
        if (c1elt.x[i] % 2 != 0 || c1elt.xb[i] % 2 != 0)
          throw NotInImageError("odd coordinate is outside the image of omega");
        b.x[i] = c1elt.x[i] / 2;
        b.xb[i] = c1elt.xb[i] / 2;
      }
      const int pn = c1elt.x[n - 1] % 2, pbn = c1elt.xb[n - 1] % 2;
      if (pn != pbn)
        throw NotInImageError("x_n/xbar_n parity mismatch off the image of omega");
      b.xo = pn;
      b.x[n - 1] = (c1elt.x[n - 1] - pn) / 2;
      b.xb[n - 1] = (c1elt.xb[n - 1] - pn) / 2;
      break;
    }
    default:
      throw std::invalid_argument("omega_inverse targets A2 or D2");
  }
  check_element(b);
  return b;
}

namespace {

// Surviving signs after cancelling (+ -) pairs in the signature
// (-)^{eps(w_0)} (+)^{phi(w_0)} (-)^{eps(w_1)} ... (word index = factor index).
struct Signature {
  std::vector<int> minus;  // word positions of surviving minuses, in order
  std::vector<int> plus;   // word positions of surviving pluses, in order
};

Signature signature(int i, const std::vector<Letter>& w,
                    const ClassicalFamily& fam) {
  // Each letter contributes (-)^eps (+)^phi, where eps and phi are its
  // string lengths in the single-box crystal.  The lengths exceed 1 only
  // for the type-B string n -> circle -> n-bar.
  Signature s;
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    for (auto x = box_arrow_e(i, w[j], fam); x; x = box_arrow_e(i, *x, fam)) {
      if (!s.plus.empty())
        s.plus.pop_back();
      else
        s.minus.push_back(j);
    }
    for (auto x = box_arrow_f(i, w[j], fam); x; x = box_arrow_f(i, *x, fam))
      s.plus.push_back(j);
  }
  return s;
}

}  // namespace

int word_eps(int i, const std::vector<Letter>& w, const ClassicalFamily& fam) {
  return static_cast<int>(signature(i, w, fam).minus.size());
}

int word_phi(int i, const std::vector<Letter>& w, const ClassicalFamily& fam) {
  return static_cast<int>(signature(i, w, fam).plus.size());
}

std::optional<std::vector<Letter>> word_apply_e(int i, std::vector<Letter> w,
                                                const ClassicalFamily& fam) {
  const Signature s = signature(i, w, fam);
  if (s.minus.empty()) return std::nullopt;
  const int j = s.minus.back();
  w[j] = *box_arrow_e(i, w[j], fam);
  return w;
}

std::optional<std::vector<Letter>> word_apply_f(int i, std::vector<Letter> w,
                                                const ClassicalFamily& fam) {
  const Signature s = signature(i, w, fam);
  if (s.plus.empty()) return std::nullopt;
  const int j = s.plus.front();
  w[j] = *box_arrow_f(i, w[j], fam);
  return w;
}

namespace {

bool zero_arrow_supported(Affine a) {
  return a == Affine::A2_2n || a == Affine::C1_n;
}

std::optional<Element> apply_zero_e(const Element& b) {
  Element out = b;
  const int x1 = b.x[0], xb1 = b.xb[0];
  if (b.fam.affine == Affine::A2_2n) {
    if (x1 >= xb1 + 1) {
      out.x[0] = x1 - 1;
    } else {
      if (b.sum() == b.l) return std::nullopt;
      out.xb[0] = xb1 + 1;
    }
  } else {  // C1_n
    if (x1 >= xb1 + 2) {
      out.x[0] = x1 - 2;
    } else if (x1 == xb1 + 1) {
      out.x[0] = x1 - 1;
      out.xb[0] = xb1 + 1;
    } else {
      if (b.sum() == b.l) return std::nullopt;
      out.xb[0] = xb1 + 2;
    }
  }
  check_element(out);
  return out;
}

std::optional<Element> apply_zero_f(const Element& b) {
  Element out = b;
  const int x1 = b.x[0], xb1 = b.xb[0];
  if (b.fam.affine == Affine::A2_2n) {
    if (xb1 >= x1 + 1) {
      out.xb[0] = xb1 - 1;
    } else {
      if (b.sum() == b.l) return std::nullopt;
      out.x[0] = x1 + 1;
    }
  } else {  // C1_n
    if (xb1 >= x1 + 2) {
      out.xb[0] = xb1 - 2;
    } else if (xb1 == x1 + 1) {
      out.xb[0] = xb1 - 1;
      out.x[0] = x1 + 1;
    } else {
      if (b.sum() == b.l) return std::nullopt;
      out.x[0] = x1 + 2;
    }
  }
  check_element(out);
  return out;
}

}  // namespace

std::optional<Element> apply_e(int i, const Element& b) {
  check_element(b);
  if (i == 0) {
    if (!zero_arrow_supported(b.fam.affine))
      throw UnsupportedZeroArrowError("0-arrows are implemented for A2 and C1 only");
    return apply_zero_e(b);
  }
  const Tableau t = to_tableau(b);
  auto w = word_apply_e(i, reading_word(t), t.fam);
  if (!w) return std::nullopt;
  return element_from_row(b.fam, b.l, *w);
}

std::optional<Element> apply_f(int i, const Element& b) {
  check_element(b);
  if (i == 0) {
    if (!zero_arrow_supported(b.fam.affine))
      throw UnsupportedZeroArrowError("0-arrows are implemented for A2 and C1 only");
    return apply_zero_f(b);
  }
  const Tableau t = to_tableau(b);
  auto w = word_apply_f(i, reading_word(t), t.fam);
  if (!w) return std::nullopt;
  return element_from_row(b.fam, b.l, *w);
}

std::optional<TensorElement> apply_e(int i, const TensorElement& t) {
  if (phi(i, t.b1) >= eps(i, t.b2)) {
    auto b = apply_e(i, t.b1);
    if (!b) return std::nullopt;
    return TensorElement(*b, t.b2);
  }
  auto b = apply_e(i, t.b2);
  if (!b) return std::nullopt;
  return TensorElement(t.b1, *b);
}

std::optional<TensorElement> apply_f(int i, const TensorElement& t) {
  if (phi(i, t.b1) > eps(i, t.b2)) {
    auto b = apply_f(i, t.b1);
    if (!b) return std::nullopt;
    return TensorElement(*b, t.b2);
  }
  auto b = apply_f(i, t.b2);
  if (!b) return std::nullopt;
  return TensorElement(t.b1, *b);
}

namespace {

std::optional<Tableau> tableau_op(int i, const Tableau& t, bool raise) {
  const std::vector<Letter> w = reading_word(t);
  auto res = raise ? word_apply_e(i, w, t.fam) : word_apply_f(i, w, t.fam);
  if (!res) return std::nullopt;
  Tableau out = t;
  int p = 0;
  for (int j = out.r1() - 1; j >= 0; --j) {
    out.row1[j] = (*res)[p++];
    if (j < out.r2()) out.row2[j] = (*res)[p++];
  }
  return out;
}

}  // namespace

std::optional<Tableau> apply_e(int i, const Tableau& t) {
  return tableau_op(i, t, true);
}

std::optional<Tableau> apply_f(int i, const Tableau& t) {
  return tableau_op(i, t, false);
}

int eps(int i, const Element& b) {
  int c = 0;
  std::optional<Element> cur = b;
  while ((cur = apply_e(i, *cur))) ++c;
  return c;
}

int phi(int i, const Element& b) {
  int c = 0;
  std::optional<Element> cur = b;
  while ((cur = apply_f(i, *cur))) ++c;
  return c;
}

int eps(int i, const TensorElement& t) {
  const int e1 = eps(i, t.b1), p1 = phi(i, t.b1), e2 = eps(i, t.b2);
  return e1 + std::max(0, e2 - p1);
}

int phi(int i, const TensorElement& t) {
  const int p1 = phi(i, t.b1), e2 = eps(i, t.b2), p2 = phi(i, t.b2);
  return p2 + std::max(0, p1 - e2);
}

std::vector<int> weight(const Element& b) {
  std::vector<int> wt(b.n());
  for (int i = 0; i < b.n(); ++i) wt[i] = b.x[i] - b.xb[i];
  return wt;
}

std::vector<int> weight(const TensorElement& t) {
  std::vector<int> wt = weight(t.b1);
  const std::vector<int> w2 = weight(t.b2);
  for (std::size_t i = 0; i < wt.size(); ++i) wt[i] += w2[i];
  return wt;
}

namespace {

void enumerate_rec(Element& b, int slot, int budget,
                   std::vector<Element>& out) {
  const int n = b.n();
  const bool has_circ = b.fam.affine == Affine::D2_np1 ||
                        b.fam.affine == Affine::B1_n;
  const int slots = 2 * n + (has_circ ? 1 : 0);
  if (slot == slots) {
    if (element_ok(b)) out.push_back(b);
    return;
  }
  const int cap = (has_circ && slot == n) ? std::min(budget, 1) : budget;
  for (int v = 0; v <= cap; ++v) {
    if (slot < n)
      b.x[slot] = v;
    else if (has_circ && slot == n)
      b.xo = v;
    else
      b.xb[slot - n - (has_circ ? 1 : 0)] = v;
    enumerate_rec(b, slot + 1, budget - v, out);
  }
  if (slot < n)
    b.x[slot] = 0;
  else if (has_circ && slot == n)
    b.xo = 0;
  else
    b.xb[slot - n - (has_circ ? 1 : 0)] = 0;
}

}  // namespace

std::vector<Element> enumerate(const Family& fam, int l) {
  if (l < 0) throw std::invalid_argument("capacity must be >= 0");
  std::vector<Element> out;
  Element b(fam, l);
  enumerate_rec(b, 0, l, out);
  return out;
}

std::string coords_text(const Element& b) {
  const bool has_circ = b.fam.affine == Affine::D2_np1 ||
                        b.fam.affine == Affine::B1_n;
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < b.n(); ++i) os << (i ? "," : "") << b.x[i];
  if (has_circ) os << ",o=" << b.xo;
  for (int i = b.n(); i >= 1; --i) os << ',' << b.xb[i - 1];
  os << ']';
  return os.str();
}

std::string element_text(const Element& b) {
  std::ostringstream os;
  os << affine_tag(b.fam.affine) << ":n=" << b.n() << ",l=" << b.l << ':'
     << coords_text(b);
  return os.str();
}

Element element_from_coords_text(const Family& fam, int cap,
                                 const std::string& text) {
  std::string body = text;
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw InvalidElementError("coordinate list must be bracketed: " + text);
  body = body.substr(1, body.size() - 2);

  std::vector<std::string> toks;
  std::string cur;
  std::istringstream in(body);
  while (std::getline(in, cur, ',')) toks.push_back(cur);

  const bool has_circ =
      fam.affine == Affine::D2_np1 || fam.affine == Affine::B1_n;
  const std::size_t want = 2 * fam.n + (has_circ ? 1 : 0);
  if (toks.size() != want)
    throw InvalidElementError("expected " + std::to_string(want) +
                              " coordinates: " + text);

  auto parse_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw InvalidElementError("bad coordinate '" + s + "' in " + text);
    }
    if (pos != s.size())
      throw InvalidElementError("bad coordinate '" + s + "' in " + text);
    return v;
  };

  Element b(fam, cap);
  std::size_t p = 0;
  for (int i = 0; i < fam.n; ++i) b.x[i] = parse_int(toks[p++]);
  if (has_circ) {
    const std::string& t = toks[p++];
    if (t.rfind("o=", 0) != 0)
      throw InvalidElementError("expected o=<0|1> slot in " + text);
    b.xo = parse_int(t.substr(2));
  }
  for (int i = fam.n; i >= 1; --i) b.xb[i - 1] = parse_int(toks[p++]);
  check_element(b);
  return b;
}

Element element_from_text(const std::string& text) {
  // "<FAM>:n=<n>,l=<l>:[...]"
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw InvalidElementError("malformed element text: " + text);
  const std::string tag = text.substr(0, c1);
  const std::string mid = text.substr(c1 + 1, c2 - c1 - 1);
  const std::string coords = text.substr(c2 + 1);

  const auto aff = affine_from_tag(tag);
  if (!aff) throw InvalidElementError("unknown family tag '" + tag + "'");

  int n = -1, l = -1;
  std::istringstream in(mid);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.rfind("n=", 0) == 0)
      n = std::stoi(part.substr(2));
    else if (part.rfind("l=", 0) == 0)
      l = std::stoi(part.substr(2));
    else
      throw InvalidElementError("malformed element text: " + text);
  }
  if (n < 2 || l < 0)
    throw InvalidElementError("malformed element text: " + text);
  return element_from_coords_text(Family(*aff, n), l, coords);
}

}  // namespace crystal
