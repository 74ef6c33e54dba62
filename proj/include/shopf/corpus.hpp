// Bundled example objects shared by the tests and the CLI: group corpora,
// gl(1|1) and osp(1|2), the divided-power dual, and the standard valid /
// broken pairs.
#pragma once

#include "shopf/dhcp.hpp"
#include "shopf/hcp.hpp"

namespace shopf::corpus {

inline LieSuperAlgebra gl11(const FieldSpec& f) {
  LieSuperAlgebra L;
  L.field = f;
  L.space = SuperSpace({"a", "b", "x", "y"}, {0, 0, 1, 1});
  L.bracket.assign(4, std::vector<SVec>(4));
  auto one = Scalar::one(f);
  auto set = [&](int i, int j, std::initializer_list<std::pair<int, long>> val) {
    for (auto [k, c] : val) L.bracket[i][j][k] = Scalar::of_long(f, c);
  };
  // a, b commute; [x,a] = -x, [x,b] = x, [y,a] = y, [y,b] = -y; [x,y] = a + b
  set(2, 0, {{2, -1}});
  set(0, 2, {{2, 1}});
  set(2, 1, {{2, 1}});
  set(1, 2, {{2, -1}});
  set(3, 0, {{3, 1}});
  set(0, 3, {{3, -1}});
  set(3, 1, {{3, -1}});
  set(1, 3, {{3, 1}});
  set(2, 3, {{0, 1}, {1, 1}});
  set(3, 2, {{0, 1}, {1, 1}});
  (void)one;
  return L;
}

// osp(1|2) computed from the supermatrix model on k^{1|2}: matrices X with
// B(Xv, w) = -(-1)^{|X||v|} B(v, Xw), where B has a 1x1 symmetric even block
// and a symplectic odd block.
inline LieSuperAlgebra osp12(const FieldSpec& f) {
  const int par[3] = {0, 1, 1};
  auto zero = Scalar::zero(f);
  auto one = Scalar::one(f);
  // form
  Scalar G[3][3] = {{one, zero, zero}, {zero, zero, one}, {zero, -one, zero}};
  // solve the defining equations on the even and odd matrix blocks
  auto solve_block = [&](int xpar) {
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if ((par[r] + par[c]) % 2 == xpar) slots.push_back({r, c});
    SMat sys(0, (int)slots.size());
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) {
        SVec row;
        for (size_t s = 0; s < slots.size(); ++s) {
          auto [i, j] = slots[s];
          Scalar v = zero;
          // B(X e_c, e_d): X[r][c] G[r][d]
          if (j == c) v += G[i][d];
          // (-1)^{|X||e_c|} B(e_c, X e_d): G[c][r] X[r][d]
          if (j == d) {
            Scalar t = G[c][i];
            if (xpar == 1 && par[c] == 1) t = -t;
            v += t;
          }
          add_term(row, (int)s, v);
        }
        sys.rows.push_back(row);
      }
    sys.cols = (int)slots.size();
    auto ker = kernel(sys, f);
    std::vector<std::vector<Scalar>> mats;
    for (const auto& k : ker) {
      std::vector<Scalar> m(9, zero);
      for (const auto& [s, c] : k) m[slots[s].first * 3 + slots[s].second] = c;
      mats.push_back(std::move(m));
    }
    return mats;
  };
  auto evens = solve_block(0);
  auto odds = solve_block(1);
  if (evens.size() != 3 || odds.size() != 2)
    throw error(ErrKind::internal, "unexpected osp(1|2) block dimensions");
  std::vector<std::vector<Scalar>> mats = evens;
  mats.insert(mats.end(), odds.begin(), odds.end());
  std::vector<int> parity = {0, 0, 0, 1, 1};
  Echelon span(f);
  for (const auto& m : mats) {
    SVec v;
    for (int i = 0; i < 9; ++i) add_term(v, i, m[i]);
    span.insert(v);
  }
  LieSuperAlgebra L;
  L.field = f;
  L.space = SuperSpace({"a0", "a1", "a2", "b0", "b1"}, parity);
  L.bracket.assign(5, std::vector<SVec>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      // [A,B] = AB - (-1)^{|A||B|} BA
      std::vector<Scalar> ab(9, zero), ba(9, zero);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          for (int k = 0; k < 3; ++k) {
            ab[r * 3 + c] += mats[i][r * 3 + k] * mats[j][k * 3 + c];
            ba[r * 3 + c] += mats[j][r * 3 + k] * mats[i][k * 3 + c];
          }
      Scalar s = (parity[i] == 1 && parity[j] == 1) ? one : -one;
      SVec v;
      for (int t = 0; t < 9; ++t) add_term(v, t, ab[t] + s * ba[t]);
      auto coords = span.coords(v);
      if (!coords) throw error(ErrKind::internal, "osp(1|2) bracket escapes the span");
      L.bracket[i][j] = *coords;
    }
  return L;
}

// k[t]/(t^p) with t primitive; requires char p.
inline HopfAlgebra truncated_polynomial_hopf(const FieldSpec& f) {
  long p = f.characteristic();
  if (p == 0) throw error(ErrKind::invalid_input, "k[t]/(t^p) needs positive characteristic");
  int n = (int)p;
  HopfAlgebra h;
  h.field = f;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t" + std::to_string(i)));
  h.space = SuperSpace(names, std::vector<int>(n, 0));
  h.mult.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) h.mult[i][j] = unit_vec(i + j, f);
  h.unit = unit_vec(0, f);
  h.comult.assign(n, SVec2{});
  for (int k = 0; k < n; ++k) {
    // Delta(t^k) = sum binom(k,i) t^i (x) t^{k-i}
    mpq_class binom = 1;
    for (int i = 0; i <= k; ++i) {
      h.comult[k][{i, k - i}] = Scalar::of_mpq(f, binom);
      binom = binom * (k - i) / (i + 1);
    }
  }
  h.counit.assign(n, Scalar::zero(f));
  h.counit[0] = Scalar::one(f);
  h.antipode.assign(n, SVec{});
  for (int k = 0; k < n; ++k)
    h.antipode[k][k] = (k % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
  return h;
}

// ---------------------------------------------------------------------------
// DHCP corpus.

inline DHCPData dhcp_trivial(const FieldSpec& f) {
  DHCPData d;
  d.pres.ring = std::make_shared<FiniteJRing>(group_algebra(GroupTable::cyclic(1), f));
  d.pres.xspace = SuperSpace({"x"}, {1});
  d.pres.gen_action = {{unit_vec(0, f)}};
  d.pres.bracket = {{SVec{}}};
  return d;
}

inline DHCPData dhcp_z2(const FieldSpec& f) {
  DHCPData d;
  d.pres.ring = std::make_shared<FiniteJRing>(group_algebra(GroupTable::cyclic(2), f));
  d.pres.xspace = SuperSpace({"x"}, {1});
  d.pres.gen_action = {{unit_vec(0, f), scaled(unit_vec(0, f), -Scalar::one(f))}};
  d.pres.bracket = {{SVec{}}};
  return d;
}

// two odd generators with the sign action of Z/2 on both
inline DHCPData dhcp_z2_2d(const FieldSpec& f) {
  DHCPData d;
  d.pres.ring = std::make_shared<FiniteJRing>(group_algebra(GroupTable::cyclic(2), f));
  d.pres.xspace = SuperSpace({"x", "y"}, {1, 1});
  d.pres.gen_action.assign(2, std::vector<SVec>(2));
  for (int x = 0; x < 2; ++x) {
    d.pres.gen_action[x][0] = unit_vec(x, f);
    d.pres.gen_action[x][1] = scaled(unit_vec(x, f), -Scalar::one(f));
  }
  d.pres.bracket.assign(2, std::vector<SVec>(2));
  return d;
}

// J = (k[t]/(t^p))^*, trivial action, [x,x] = the primitive dual to t
inline DHCPData dhcp_charp(const FieldSpec& f) {
  auto J = dual(truncated_polynomial_hopf(f));
  DHCPData d;
  d.pres.ring = std::make_shared<FiniteJRing>(J);
  d.pres.xspace = SuperSpace({"x"}, {1});
  int n = J.dim();
  d.pres.gen_action.assign(1, std::vector<SVec>(n));
  for (int a = 0; a < n; ++a)
    d.pres.gen_action[0][a] = scaled(unit_vec(0, f), J.counit[a]);
  d.pres.bracket = {{unit_vec(1, f)}};
  return d;
}

// the broken pair (U(kh), kv, v <| h = v, [v,v] = h): fails (a) and (c)
inline DHCPData dhcp_broken_c(const FieldSpec& f, int cap = 8) {
  LieAlgebra lie;
  lie.field = f;
  lie.names = {"h"};
  lie.bracket.assign(1, std::vector<SVec>(1));
  auto ring = std::make_shared<PbwRing>(lie, cap);
  DHCPData d;
  d.pres.ring = ring;
  d.pres.xspace = SuperSpace({"v"}, {1});
  d.pres.gen_action = {{unit_vec(0, f)}};
  d.pres.bracket = {{unit_vec(ring->generator(0), f)}};
  return d;
}

// ---------------------------------------------------------------------------
// HCP corpus.

inline HCPData hcp_trivial(const FieldSpec& f) {
  HCPData h;
  h.C = group_algebra(GroupTable::cyclic(1), f);
  h.W = SuperSpace({"w"}, {1});
  h.coaction.assign(1, SVec2{});
  h.coaction[0][{0, 0}] = Scalar::one(f);
  h.bracket.assign(1, std::vector<SVec>(1));
  return h;
}

// C = functions on Z/2, one odd w with the sign coaction w -> w (x) (e0 - e1)
inline HCPData hcp_z2(const FieldSpec& f) {
  HCPData h;
  h.C = function_algebra(GroupTable::cyclic(2), f);
  h.W = SuperSpace({"w"}, {1});
  h.coaction.assign(1, SVec2{});
  h.coaction[0][{0, 0}] = Scalar::one(f);
  h.coaction[0][{0, 1}] = -Scalar::one(f);
  h.bracket.assign(1, std::vector<SVec>(1));
  return h;
}

// two odd generators: w1 coinvariant, w2 with the sign coaction
inline HCPData hcp_z2_2d(const FieldSpec& f) {
  HCPData h;
  h.C = function_algebra(GroupTable::cyclic(2), f);
  h.W = SuperSpace({"w1", "w2"}, {1, 1});
  h.coaction.assign(2, SVec2{});
  h.coaction[0][{0, 0}] = Scalar::one(f);
  h.coaction[0][{0, 1}] = Scalar::one(f); // w1 -> w1 (x) 1 = w1 (x) (e0 + e1)
  h.coaction[1][{1, 0}] = Scalar::one(f);
  h.coaction[1][{1, 1}] = -Scalar::one(f);
  h.bracket.assign(2, std::vector<SVec>(2));
  return h;
}

// three odd generators over the trivial C: A = the exterior algebra on three
inline HCPData hcp_trivial_3w(const FieldSpec& f) {
  HCPData h;
  h.C = group_algebra(GroupTable::cyclic(1), f);
  h.W = SuperSpace({"w1", "w2", "w3"}, {1, 1, 1});
  h.coaction.assign(3, SVec2{});
  for (int i = 0; i < 3; ++i) h.coaction[i][{i, 0}] = Scalar::one(f);
  h.bracket.assign(3, std::vector<SVec>(3));
  return h;
}

// C = k^{S3}, one odd w coacted by the sign character
inline HCPData hcp_s3(const FieldSpec& f) {
  GroupTable s3 = GroupTable::s3();
  HCPData h;
  h.C = function_algebra(s3, f);
  h.W = SuperSpace({"w"}, {1});
  h.coaction.assign(1, SVec2{});
  // sgn(p) from the one-line notation parity encoded in the names
  std::vector<int> sgn = {1, -1, -1, -1, 1, 1};
  for (int g = 0; g < 6; ++g) h.coaction[0][{0, g}] = Scalar::of_long(f, sgn[g]);
  h.bracket.assign(1, std::vector<SVec>(1));
  return h;
}

// char-p pair with nonzero bracket: C = k[t]/(t^p), trivial coaction,
// [x,x] = the primitive dual to t
inline HCPData hcp_charp(const FieldSpec& f) {
  HCPData h;
  h.C = truncated_polynomial_hopf(f);
  h.W = SuperSpace({"w"}, {1});
  h.coaction.assign(1, SVec2{});
  h.coaction[0][{0, 0}] = Scalar::one(f);
  h.bracket.assign(1, std::vector<SVec>(1));
  h.bracket[0][0] = unit_vec(1, f);
  return h;
}

// broken: non-coassociative coaction table
inline HCPData hcp_broken_coaction(const FieldSpec& f) {
  HCPData h;
  h.C = function_algebra(GroupTable::cyclic(2), f);
  h.W = SuperSpace({"w"}, {1});
  h.coaction.assign(1, SVec2{});
  h.coaction[0][{0, 0}] = Scalar::one(f); // w -> w (x) e0: fails the counit law
  h.bracket.assign(1, std::vector<SVec>(1));
  return h;
}

// broken at char 3: C = k[t]/(t^3), 2-dim W with a unipotent coaction and a
// bracket that is not colinear (condition (a) fails on the dual side)
inline HCPData hcp_broken_colinear(const FieldSpec& f) {
  if (f.characteristic() != 3)
    throw error(ErrKind::invalid_input, "this counterexample lives over F_3");
  HCPData h;
  h.C = truncated_polynomial_hopf(f);
  h.W = SuperSpace({"w1", "w2"}, {1, 1});
  h.coaction.assign(2, SVec2{});
  h.coaction[0][{0, 0}] = Scalar::one(f);           // w1 -> w1 (x) 1
  h.coaction[1][{1, 0}] = Scalar::one(f);           // w2 -> w2 (x) 1 + w1 (x) t
  h.coaction[1][{0, 1}] = Scalar::one(f);
  h.bracket.assign(2, std::vector<SVec>(2));
  h.bracket[1][1] = unit_vec(1, f); // [x2, x2] = dual of t
  return h;
}

} // namespace shopf::corpus
