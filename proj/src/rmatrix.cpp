#include "crystal/rmatrix.hpp"

#include <algorithm>

namespace crystal {

namespace {

// Shared body of both product rules: build the product tableau of the
// stripped rows, then bump every u-box back out.
struct CoreOut {
  std::vector<Letter> final_row;  // T^(l') -- one row of length k'
  std::vector<Letter> w;          // expelled letters, execution order
  int m = 0;
  Tableau T0;
  CoreOut() : T0(ClassicalFamily(ClassicalType::C, 2)) {}
};

CoreOut run_core(const ClassicalFamily& cf, const std::vector<Letter>& u,
                 const std::vector<Letter>& v) {
  CoreOut out;
  Tableau tu(cf), tv(cf);
  tu.row1 = u;
  tv.row1 = v;
  out.T0 = product(cf, tu, tv);
  out.m = out.T0.r2();

  const int lp = static_cast<int>(u.size());
  if (out.m > lp)
    throw RMatrixError("product tableau's second row exceeds the u-row length");

  Tableau t = out.T0;
  for (int s = 0; s < lp - out.m; ++s) {
    auto [rest, letter] = reverse_bump(cf, t, 1, t.r1() - 1);
    t = std::move(rest);
    out.w.push_back(letter);
  }
  for (int s = 0; s < out.m; ++s) {
    auto [rest, letter] = reverse_bump(cf, t, 2, t.r2() - 1);
    t = std::move(rest);
    out.w.push_back(letter);
  }
  if (t.r2() != 0 || t.r1() != static_cast<int>(v.size()))
    throw RMatrixError("reverse bumping did not restore a one-row shape");
  out.final_row = t.row1;
  return out;
}

int leading(const std::vector<Letter>& row, Letter a) {
  int c = 0;
  while (c < static_cast<int>(row.size()) && row[c] == a) ++c;
  return c;
}

int trailing(const std::vector<Letter>& row, Letter a) {
  int c = 0;
  while (c < static_cast<int>(row.size()) && row[row.size() - 1 - c] == a) ++c;
  return c;
}

}  // namespace

EngineResult r_engine_C(const Tableau& t1pad, const Tableau& t2pad, int cap1,
                        int cap2) {
  if (t1pad.fam.type != ClassicalType::C || !(t2pad.fam == t1pad.fam))
    throw RMatrixError("the engine runs on matching type-C rows");
  if (t1pad.r2() != 0 || t2pad.r2() != 0)
    throw RMatrixError("engine inputs must be one-row tableaux");
  if (t1pad.r1() != cap1 || t2pad.r1() != cap2)
    throw RMatrixError("padded row length disagrees with its capacity");

  const Letter z0 = Letter::unbarred(0), zb = Letter::barred(0);
  const int p1 = leading(t1pad.row1, z0), q1 = trailing(t1pad.row1, zb);
  const int p2 = leading(t2pad.row1, z0), q2 = trailing(t2pad.row1, zb);
  if (p1 != q1 || p2 != q2)
    throw RMatrixError("leading 0s and trailing 0-bars must balance");

  EngineResult res;
  RDiag& d = res.diag;
  d.z = std::min(p1, p2);
  d.l_prime = cap1 - 2 * d.z;
  d.k_prime = cap2 - 2 * d.z;

  const std::vector<Letter> u(t1pad.row1.begin() + d.z,
                              t1pad.row1.end() - d.z);
  const std::vector<Letter> v(t2pad.row1.begin() + d.z,
                              t2pad.row1.end() - d.z);
  CoreOut core = run_core(t1pad.fam, u, v);
  d.m = core.m;
  d.T0 = core.T0;
  d.w = core.w;

  res.out_row2.insert(res.out_row2.end(), d.z, z0);
  res.out_row2.insert(res.out_row2.end(), core.final_row.begin(),
                      core.final_row.end());
  res.out_row2.insert(res.out_row2.end(), d.z, zb);

  res.out_row1.insert(res.out_row1.end(), d.z, z0);
  res.out_row1.insert(res.out_row1.end(), core.w.begin(), core.w.end());
  res.out_row1.insert(res.out_row1.end(), d.z, zb);
  return res;
}

RResult r_apply(const TensorElement& t) {
  const Family fam = t.b1.fam;
  const int n = fam.n, l = t.b1.l, k = t.b2.l;
  check_element(t.b1);
  check_element(t.b2);

  switch (fam.affine) {
    case Affine::A2_2n:
    case Affine::D2_np1: {
      const EngineResult er = r_engine_C(to_omega_tableau(t.b1),
                                         to_omega_tableau(t.b2), 2 * l, 2 * k);
      const Family c1(Affine::C1_n, n);
      const Element im2 =
          omega_inverse(element_from_row(c1, 2 * k, er.out_row2), fam);
      const Element im1 =
          omega_inverse(element_from_row(c1, 2 * l, er.out_row1), fam);
      const int H =
          std::min(er.diag.l_prime, er.diag.k_prime) - er.diag.m;
      return RResult{TensorElement(im2, im1), H, er.diag};
    }
    case Affine::C1_n: {
      const EngineResult er =
          r_engine_C(to_padded_tableau(t.b1), to_padded_tableau(t.b2), l, k);
      const Element im2 = element_from_row(fam, k, er.out_row2);
      const Element im1 = element_from_row(fam, l, er.out_row1);
      const int H =
          std::min(er.diag.l_prime, er.diag.k_prime) - er.diag.m;
      return RResult{TensorElement(im2, im1), H, er.diag};
    }
    case Affine::B1_n:
    case Affine::D1_n: {
      const ClassicalFamily cf = fam.classical_family();
      const std::vector<Letter> r1 = to_tableau(t.b1).row1;
      const std::vector<Letter> r2 = to_tableau(t.b2).row1;
      const Letter one = Letter::unbarred(1), oneb = Letter::barred(1);

      RDiag d;
      d.z = std::min(leading(r1, one), trailing(r2, oneb));
      d.l_prime = l - d.z;
      d.k_prime = k - d.z;
      const std::vector<Letter> u(r1.begin() + d.z, r1.end());
      const std::vector<Letter> v(r2.begin(), r2.end() - d.z);

      CoreOut core = run_core(cf, u, v);
      d.m = core.m;
      d.T0 = core.T0;
      d.w = core.w;

      std::vector<Letter> row2(d.z, one);
      row2.insert(row2.end(), core.final_row.begin(), core.final_row.end());
      std::vector<Letter> row1 = core.w;
      row1.insert(row1.end(), d.z, oneb);

      const Element im2 = element_from_row(fam, k, row2);
      const Element im1 = element_from_row(fam, l, row1);
      const int H = 2 * std::min(d.l_prime, d.k_prime) - d.m;
      return RResult{TensorElement(im2, im1), H, d};
    }
  }
  throw std::logic_error("unknown affine family");
}

TensorElement r_inverse(const TensorElement& t) {
  return r_apply(t).image;
}

}  // namespace crystal
