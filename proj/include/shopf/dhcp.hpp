// Dual Harish-Chandra pairs: validation of the defining conditions,
// construction from Lie superalgebras, the Hopf superalgebra H(J,V) in PBW
// normal form, the inverse functor H -> (underline H, V_H), and normality /
// short-exactness checks at the pair level.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shopf/builders.hpp"
#include "shopf/rewrite.hpp"
#include "shopf/tensorword.hpp"

namespace shopf {

struct DHCPData {
  JPresentation pres; // J, X (ordered basis of V), action, bracket

  int dimV() const { return pres.nx(); }
  const FieldSpec& field() const { return pres.ring->field(); }
};

// ---------------------------------------------------------------------------
// Condition checks (a)-(d).

inline SVec bracket_of(JPresentation& p, const SVec& u, const SVec& v) {
  SVec out;
  for (const auto& [i, ci] : u)
    for (const auto& [j, cj] : v) addmul(out, ci * cj, p.bracket[i][j]);
  return out;
}

inline SVec act_of(JPresentation& p, const SVec& v, const SVec& jelem) {
  SVec out;
  for (const auto& [x, cx] : v)
    for (const auto& [a, ca] : jelem) addmul(out, cx * ca, p.act(x, a));
  return out;
}

inline CheckReport verify_dhcp(DHCPData& d) {
  JPresentation& p = d.pres;
  const FieldSpec& f = d.field();
  CheckReport rep = p.validate();
  auto gens = p.ring->generator_indices();
  int nx = p.nx();
  {
    // (a) sum [u <| a_(1), v <| a_(2)] = sum S(a_(1)) [u,v] a_(2)
    bool ok = true;
    std::string wit;
    for (int u = 0; u < nx && ok; ++u)
      for (int v = 0; v < nx && ok; ++v)
        for (int a : gens) {
          SVec lhs, rhs;
          for (const auto& [a12, c] : p.ring->comult(a))
            addmul(lhs, c,
                   bracket_of(p, p.act(u, a12.first), p.act(v, a12.second)));
          for (const auto& [a12, c] : p.ring->comult(a))
            addmul(rhs, c,
                   p.ring->mul(p.ring->mul(p.ring->antipode(a12.first), p.bracket[u][v]),
                               unit_vec(a12.second, f)));
          if (lhs != rhs) {
            ok = false;
            wit = "(" + p.xspace.names[u] + "," + p.xspace.names[v] + "," + p.ring->name(a) +
                  "): lhs != rhs";
            break;
          }
        }
    rep.add("condition-(a)", ok, wit);
  }
  {
    // (b) bracket symmetric (also part of the presentation validity)
    bool ok = true;
    std::string wit;
    for (int u = 0; u < nx && ok; ++u)
      for (int v = 0; v < nx && ok; ++v)
        if (p.bracket[u][v] != p.bracket[v][u]) {
          ok = false;
          wit = "(" + p.xspace.names[u] + "," + p.xspace.names[v] + ")";
        }
    rep.add("condition-(b)", ok, wit);
  }
  {
    // (c) v <| [v,v] = 0 on basis vectors, plus the polarized family at char 3
    bool ok = true;
    std::string wit;
    for (int v = 0; v < nx && ok; ++v) {
      SVec r = act_of(p, unit_vec(v, f), p.bracket[v][v]);
      if (!r.empty()) {
        ok = false;
        wit = p.xspace.names[v] + " <| [" + p.xspace.names[v] + "," + p.xspace.names[v] +
              "] = " + vec_str(r, p.xspace.names);
      }
    }
    if (f.characteristic() == 3)
      for (int i = 0; i < nx && ok; ++i)
        for (int j = i + 1; j < nx && ok; ++j) {
          SVec v = unit_vec(i, f);
          add_term(v, j, Scalar::one(f));
          SVec r = act_of(p, v, bracket_of(p, v, v));
          if (!r.empty()) {
            ok = false;
            wit = "polarized v = " + p.xspace.names[i] + "+" + p.xspace.names[j];
          }
        }
    rep.add("condition-(c)", ok, wit);
  }
  {
    // (d) u <| [v,w] + v <| [w,u] + w <| [u,v] = 0
    bool ok = true;
    std::string wit;
    for (int u = 0; u < nx && ok; ++u)
      for (int v = 0; v < nx && ok; ++v)
        for (int w = 0; w < nx && ok; ++w) {
          SVec s = act_of(p, unit_vec(u, f), p.bracket[v][w]);
          addmul(s, Scalar::one(f), act_of(p, unit_vec(v, f), p.bracket[w][u]));
          addmul(s, Scalar::one(f), act_of(p, unit_vec(w, f), p.bracket[u][v]));
          if (!s.empty()) {
            ok = false;
            wit = "(" + p.xspace.names[u] + "," + p.xspace.names[v] + "," + p.xspace.names[w] +
                  ")";
            break;
          }
        }
    rep.add("condition-(d)", ok, wit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lie superalgebras and the associated pair (U(L_0), L_1).

struct LieSuperAlgebra {
  FieldSpec field;
  SuperSpace space;
  std::vector<std::vector<SVec>> bracket; // [i][j] over the basis

  int dim() const { return space.dim(); }

  SVec br(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) addmul(out, ci * cj, bracket[i][j]);
    return out;
  }

  CheckReport validate() const {
    CheckReport rep;
    int n = dim();
    {
      bool ok = true;
      std::string wit;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          Scalar s = (space.parity[i] == 1 && space.parity[j] == 1) ? Scalar::one(field)
                                                                    : -Scalar::one(field);
          if (bracket[i][j] != scaled(bracket[j][i], s)) {
            ok = false;
            wit = "(" + space.names[i] + "," + space.names[j] + ")";
          }
          if (ok && !bracket[i][j].empty()) {
            int pb = space.parity_of(bracket[i][j]);
            if (pb != (space.parity[i] + space.parity[j]) % 2) {
              ok = false;
              wit = "parity of [" + space.names[i] + "," + space.names[j] + "]";
            }
          }
        }
      rep.add("super-antisymmetry", ok, wit);
    }
    {
      // graded Jacobi in derivation form:
      // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]
      bool ok = true;
      std::string wit;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n && ok; ++c) {
            SVec lhs = br(unit_vec(a, field), bracket[b][c]);
            SVec rhs = br(bracket[a][b], unit_vec(c, field));
            Scalar s = (space.parity[a] == 1 && space.parity[b] == 1) ? -Scalar::one(field)
                                                                      : Scalar::one(field);
            addmul(rhs, s, br(unit_vec(b, field), bracket[a][c]));
            if (lhs != rhs) {
              ok = false;
              wit = "(" + space.names[a] + "," + space.names[b] + "," + space.names[c] + ")";
            }
          }
      rep.add("super-jacobi", ok, wit);
    }
    return rep;
  }
};

inline DHCPData from_lie_superalgebra(const LieSuperAlgebra& L, int pbw_cap = 8) {
  if (L.field.characteristic() == 3)
    throw error(ErrKind::unsupported_characteristic,
                "char 3 rejected: condition (d) no longer implies condition (c)");
  auto val = L.validate();
  if (!val.all_pass()) {
    std::string wit;
    for (const auto& e : val.entries)
      if (!e.pass) wit += e.name + " at " + e.witness + "; ";
    throw error(ErrKind::invalid_input, "not a Lie superalgebra: " + wit);
  }
  std::vector<int> even, odd;
  for (int i = 0; i < L.dim(); ++i) (L.space.parity[i] == 0 ? even : odd).push_back(i);
  std::map<int, int> even_pos, odd_pos;
  for (size_t k = 0; k < even.size(); ++k) even_pos[even[k]] = (int)k;
  for (size_t k = 0; k < odd.size(); ++k) odd_pos[odd[k]] = (int)k;
  auto to_even = [&](const SVec& v) {
    SVec out;
    for (const auto& [i, c] : v) {
      auto it = even_pos.find(i);
      if (it == even_pos.end())
        throw error(ErrKind::invalid_input, "bracket value not purely even");
      add_term(out, it->second, c);
    }
    return out;
  };
  auto to_odd = [&](const SVec& v) {
    SVec out;
    for (const auto& [i, c] : v) {
      auto it = odd_pos.find(i);
      if (it == odd_pos.end())
        throw error(ErrKind::invalid_input, "action value not purely odd");
      add_term(out, it->second, c);
    }
    return out;
  };
  LieAlgebra l0;
  l0.field = L.field;
  for (int i : even) l0.names.push_back(L.space.names[i]);
  l0.bracket.assign(even.size(), std::vector<SVec>(even.size()));
  for (size_t a = 0; a < even.size(); ++a)
    for (size_t b = 0; b < even.size(); ++b)
      l0.bracket[a][b] = to_even(L.bracket[even[a]][even[b]]);
  auto ring = std::make_shared<PbwRing>(l0, pbw_cap);
  DHCPData d;
  d.pres.ring = ring;
  std::vector<std::string> xnames;
  for (int i : odd) xnames.push_back(L.space.names[i]);
  d.pres.xspace = SuperSpace(xnames, std::vector<int>(odd.size(), 1));
  d.pres.gen_action.assign(odd.size(), std::vector<SVec>(even.size()));
  for (size_t x = 0; x < odd.size(); ++x)
    for (size_t a = 0; a < even.size(); ++a)
      d.pres.gen_action[x][a] = to_odd(L.bracket[odd[x]][even[a]]); // x <| a = [x, a]
  d.pres.bracket.assign(odd.size(), std::vector<SVec>(odd.size()));
  for (size_t x = 0; x < odd.size(); ++x)
    for (size_t y = 0; y < odd.size(); ++y) {
      SVec val = to_even(L.bracket[odd[x]][odd[y]]);
      SVec out;
      for (const auto& [g, c] : val) add_term(out, ring->generator(g), c);
      d.pres.bracket[x][y] = out;
    }
  return d;
}

// ---------------------------------------------------------------------------
// H(J, V): PBW-normal-form backed view, materialized for finite J.

class HView {
public:
  explicit HView(DHCPData& d) : d_(d), f_(d.field()) {}

  JPresentation& pres() { return d_.pres; }
  const FieldSpec& field() const { return f_; }

  int intern(int j, const Word& wedge) {
    auto key = std::make_pair(j, wedge);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int idx = (int)labels_.size();
    labels_.push_back(key);
    index_.emplace(key, idx);
    return idx;
  }

  int dim() const { return (int)labels_.size(); }
  const std::pair<int, Word>& label(int i) const { return labels_[i]; }
  int parity(int i) const { return (int)labels_[i].second.size() % 2; }
  int filt_degree(int i) const {
    return d_.pres.ring->degree(labels_[i].first) + (int)labels_[i].second.size();
  }

  std::string name(int i) const {
    const auto& [j, w] = labels_[i];
    std::string jn = d_.pres.ring->name(j);
    if (w.empty()) return jn;
    std::string wn;
    for (int l : w) wn += (wn.empty() ? "" : "^") + d_.pres.xspace.names[l];
    return jn == "1" ? wn : jn + "." + wn;
  }

  SVec from_normal(const NormalElement& n) {
    SVec out;
    for (const auto& [w, jv] : n.terms)
      for (const auto& [a, c] : jv) add_term(out, intern(a, w), c);
    return out;
  }

  SVec mul(int i, int k) {
    auto key = std::make_pair(i, k);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
    MWord w;
    auto push = [&](const std::pair<int, Word>& lab) {
      w.push_back(j_factor(lab.first));
      for (int l : lab.second) w.push_back(x_factor(l));
    };
    push(labels_[i]);
    push(labels_[k]);
    MElem e;
    add_canonical(e, std::move(w), Scalar::one(f_), d_.pres);
    SVec r = from_normal(normalize(std::move(e), d_.pres));
    mul_memo_.emplace(key, r);
    return r;
  }

  SVec mul(const SVec& a, const SVec& b) {
    SVec out;
    for (const auto& [i, ca] : a)
      for (const auto& [j, cb] : b) addmul(out, ca * cb, mul(i, j));
    return out;
  }

  SVec unit() {
    SVec out;
    for (const auto& [a, c] : d_.pres.ring->unit()) add_term(out, intern(a, {}), c);
    return out;
  }

  // x as an element of H
  SVec letter(int x) {
    SVec out;
    for (const auto& [a, c] : d_.pres.ring->unit()) add_term(out, intern(a, {x}), c);
    return out;
  }

  SVec2 comult(int i) {
    auto it = comult_memo_.find(i);
    if (it != comult_memo_.end()) return it->second;
    const auto& [j, w] = labels_[i];
    SVec2 acc;
    for (const auto& [ab, c] : d_.pres.ring->comult(j))
      add_term(acc, {intern(ab.first, {}), intern(ab.second, {})}, c);
    for (int l : w) {
      SVec xel = letter(l);
      SVec2 next;
      for (const auto& [uv, c] : acc) {
        // (u(x)v)(x(x)1) = (-1)^{|v|} ux (x) v ; (u(x)v)(1(x)x) = u (x) vx
        Scalar sgn = parity(uv.second) == 1 ? -Scalar::one(f_) : Scalar::one(f_);
        for (const auto& [p, cp] : mul(unit_vec(uv.first, f_), xel))
          add_term(next, {p, uv.second}, c * cp * sgn);
        for (const auto& [q, cq] : mul(unit_vec(uv.second, f_), xel))
          add_term(next, {uv.first, q}, c * cq);
      }
      acc = std::move(next);
    }
    comult_memo_.emplace(i, acc);
    return acc;
  }

  Scalar counit(int i) {
    const auto& [j, w] = labels_[i];
    return w.empty() ? d_.pres.ring->counit(j) : Scalar::zero(f_);
  }

  SVec antipode(int i) {
    auto it = anti_memo_.find(i);
    if (it != anti_memo_.end()) return it->second;
    const auto& [j, w] = labels_[i];
    // S(a (x) u) = S(u) S(a); S on the letters is the signed reversal
    auto [sgn, rev] = tensor_antipode(w, d_.pres.xspace, f_);
    MElem e;
    for (const auto& [b, c] : d_.pres.ring->antipode(j)) {
      MWord mw;
      for (int l : rev) mw.push_back(x_factor(l));
      mw.push_back(j_factor(b));
      add_canonical(e, std::move(mw), sgn * c, d_.pres);
    }
    SVec r = from_normal(normalize(std::move(e), d_.pres));
    anti_memo_.emplace(i, r);
    return r;
  }

private:
  DHCPData& d_;
  FieldSpec f_;
  std::vector<std::pair<int, Word>> labels_;
  std::map<std::pair<int, Word>, int> index_;
  std::map<std::pair<int, int>, SVec> mul_memo_;
  std::map<int, SVec2> comult_memo_;
  std::map<int, SVec> anti_memo_;
};

// Kernel of the primitivity operator on the filtration <= bound part of
// H(J,V) for an enveloping J, computed through the normalize-backed view.
inline std::vector<SVec> truncated_primitive_basis(HView& view, DHCPData& d, int bound) {
  auto* pbw = dynamic_cast<PbwRing*>(d.pres.ring.get());
  if (!pbw) throw error(ErrKind::invalid_input, "truncated primitives need an enveloping J");
  const FieldSpec& f = d.field();
  int r = pbw->lie().dim();
  std::vector<Word> monos;
  Word cur(r, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r) {
      monos.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound);
  std::vector<int> cols;
  for (const auto& mo : monos) {
    int deg = 0;
    for (int k : mo) deg += k;
    int j = pbw->mono_index(mo);
    for (int wd = 0; wd + deg <= bound && wd <= d.dimV(); ++wd)
      for (const auto& w : increasing_words(d.dimV(), wd)) cols.push_back(view.intern(j, w));
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  SVec one = view.unit();
  SMat sys(0, (int)cols.size());
  std::map<std::pair<int, int>, int> rowidx;
  auto row_of = [&](std::pair<int, int> key) {
    auto it = rowidx.find(key);
    if (it != rowidx.end()) return it->second;
    int rr = (int)sys.rows.size();
    sys.rows.push_back(SVec{});
    rowidx.emplace(key, rr);
    return rr;
  };
  for (int ci = 0; ci < (int)cols.size(); ++ci) {
    int i = cols[ci];
    SVec2 expr = view.comult(i);
    for (const auto& [a, ca] : one) {
      add_term(expr, {a, i}, -ca);
      add_term(expr, {i, a}, -ca);
    }
    for (const auto& [ab, c] : expr) add_term(sys.rows[row_of(ab)], ci, c);
  }
  sys.cols = (int)cols.size();
  auto ker = kernel(sys, f);
  std::vector<SVec> out;
  for (const auto& v : ker) {
    SVec w;
    for (const auto& [ci, c] : v) add_term(w, cols[ci], c);
    out.push_back(w);
  }
  return out;
}

struct HResult {
  HopfAlgebra hopf;
  int dimJ = 0;
  std::vector<Word> wedges; // H basis index = j * wedges.size() + wedge index
  // J inclusion: a -> basis (a, empty); V inclusion via unit coefficients
  int index_of(int j, int wedge_idx) const { return j * (int)wedges.size() + wedge_idx; }
};

// Materialize H(J,V) for finite-dimensional J. Requires verify_dhcp and
// check_overlaps to have passed (call sites enforce).
inline HResult build_H(DHCPData& d) {
  if (!d.pres.ring->finite())
    throw error(ErrKind::invalid_input,
                "build_H materializes only finite-dimensional J; use HView for U(g)");
  const FieldSpec& f = d.field();
  HView view(d);
  int nj = d.pres.ring->dim();
  int nx = d.dimV();
  HResult out;
  out.dimJ = nj;
  for (int deg = 0; deg <= nx; ++deg)
    for (const auto& w : increasing_words(nx, deg)) out.wedges.push_back(w);
  // intern in the canonical order
  for (int j = 0; j < nj; ++j)
    for (const auto& w : out.wedges) view.intern(j, w);
  int dim = nj * (int)out.wedges.size();
  HopfAlgebra& h = out.hopf;
  h.field = f;
  std::vector<std::string> names;
  std::vector<int> par;
  for (int i = 0; i < dim; ++i) {
    names.push_back(view.name(i));
    par.push_back(view.parity(i));
  }
  h.space = SuperSpace(names, par);
  h.mult.assign(dim, std::vector<SVec>(dim));
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) h.mult[i][k] = view.mul(i, k);
  h.unit = view.unit();
  h.comult.assign(dim, SVec2{});
  for (int i = 0; i < dim; ++i) h.comult[i] = view.comult(i);
  h.counit.assign(dim, Scalar::zero(f));
  for (int i = 0; i < dim; ++i) h.counit[i] = view.counit(i);
  h.antipode.assign(dim, SVec{});
  for (int i = 0; i < dim; ++i) h.antipode[i] = view.antipode(i);
  if (view.dim() != dim)
    throw error(ErrKind::internal, "normal forms escaped the expected PBW basis");
  return out;
}

// ---------------------------------------------------------------------------
// recover_pair: H -> (underline H, V_H) with adjoint action and the
// super-commutator bracket.

struct RecoveredPair {
  DHCPData pair;
  std::vector<SVec> j_basis; // underline basis vectors in H
  std::vector<SVec> v_basis; // odd primitive vectors in H
};

inline RecoveredPair recover_pair(const HopfAlgebra& h) {
  auto cocom = verify_super_cocommutative(h);
  if (!cocom.pass)
    throw error(ErrKind::invalid_input,
                "recover_pair needs super-cocommutative input, witness " + cocom.witness);
  const FieldSpec& f = h.field;
  auto u = underline(h);
  RecoveredPair out;
  out.j_basis = u.j.basis;
  out.v_basis = u.vh;
  DHCPData& d = out.pair;
  d.pres.ring = std::make_shared<FiniteJRing>(u.j.sub);
  std::vector<std::string> xnames;
  for (size_t i = 0; i < u.vh.size(); ++i) xnames.push_back("v" + std::to_string(i));
  d.pres.xspace = SuperSpace(xnames, std::vector<int>(u.vh.size(), 1));
  d.pres.gen_action = u.action;
  // bracket: [u,v] = uv + vu for odd u,v, expressed over the underline basis
  Echelon jspan(f);
  for (const auto& v : u.j.basis) jspan.insert(v);
  int m = (int)u.vh.size();
  d.pres.bracket.assign(m, std::vector<SVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      SVec br = h.mul(u.vh[i], u.vh[j]);
      addmul(br, Scalar::one(f), h.mul(u.vh[j], u.vh[i]));
      auto c = jspan.coords(br);
      if (!c)
        throw error(ErrKind::internal, "odd-primitive bracket escapes underline(H)");
      d.pres.bracket[i][j] = *c;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Pair morphisms, normality and short exactness.

struct DHCPMorphism;
inline CheckReport verify_dhcp_morphism(DHCPMorphism& m);

struct DHCPMorphism {
  DHCPData* src = nullptr;
  DHCPData* dst = nullptr;
  SMat f; // on J basis coordinates (finite J only)
  SMat g; // on X coordinates
};

inline FiniteJRing& finite_ring(DHCPData& d) {
  auto* r = dynamic_cast<FiniteJRing*>(d.pres.ring.get());
  if (!r) throw error(ErrKind::invalid_input, "operation needs finite-dimensional J");
  return *r;
}

inline CheckReport verify_dhcp_morphism(DHCPMorphism& m) {
  CheckReport rep;
  DHCPData& s = *m.src;
  DHCPData& t = *m.dst;
  const FieldSpec& f = s.field();
  const HopfAlgebra& js = finite_ring(s).hopf();
  const HopfAlgebra& jt = finite_ring(t).hopf();
  MorphismData fm{&js, &jt, m.f};
  auto fr = verify_morphism(fm);
  rep.add("f-hopf-map", fr.all_pass());
  {
    // g(v <| a) = g(v) <| f(a)
    bool ok = true;
    std::string wit;
    for (int x = 0; x < s.dimV() && ok; ++x)
      for (int a = 0; a < js.dim() && ok; ++a) {
        SVec lhs = m.g.apply(s.pres.act(x, a), f);
        SVec rhs = act_of(t.pres, m.g.apply(unit_vec(x, f), f), m.f.apply(unit_vec(a, f), f));
        if (lhs != rhs) {
          ok = false;
          wit = "(" + s.pres.xspace.names[x] + "," + js.space.names[a] + ")";
        }
      }
    rep.add("g-equivariant", ok, wit);
  }
  {
    // f([u,v]) = [g(u), g(v)]'
    bool ok = true;
    std::string wit;
    for (int x = 0; x < s.dimV() && ok; ++x)
      for (int y = 0; y < s.dimV() && ok; ++y) {
        SVec lhs = m.f.apply(s.pres.bracket[x][y], f);
        SVec rhs = bracket_of(t.pres, m.g.apply(unit_vec(x, f), f),
                              m.g.apply(unit_vec(y, f), f));
        if (lhs != rhs) {
          ok = false;
          wit = "(" + s.pres.xspace.names[x] + "," + s.pres.xspace.names[y] + ")";
        }
      }
    rep.add("f-bracket-compatible", ok, wit);
  }
  return rep;
}

struct NormalityResult {
  bool normal = true;
  std::string failed_condition; // "(i)".."(iv)" with a witness
};

// Prop-5.2-style normality of an injective pair morphism.
inline NormalityResult check_morphism_normal(DHCPMorphism& m) {
  DHCPData& s = *m.src;
  DHCPData& t = *m.dst;
  const FieldSpec& f = s.field();
  const HopfAlgebra& js = finite_ring(s).hopf();
  const HopfAlgebra& jt = finite_ring(t).hopf();
  // injectivity preconditions
  {
    Echelon ef(f), eg(f);
    for (int a = 0; a < js.dim(); ++a) ef.insert(m.f.apply(unit_vec(a, f), f));
    for (int x = 0; x < s.dimV(); ++x) eg.insert(m.g.apply(unit_vec(x, f), f));
    if (ef.rank() != js.dim() || eg.rank() != s.dimV())
      throw error(ErrKind::invalid_input, "check_morphism_normal needs injective (f, g)");
  }
  Echelon fimg(f), gimg(f);
  for (int a = 0; a < js.dim(); ++a) fimg.insert(m.f.apply(unit_vec(a, f), f));
  for (int x = 0; x < s.dimV(); ++x) gimg.insert(m.g.apply(unit_vec(x, f), f));
  // (i) f(J1) is stable under the adjoint J2-action
  for (int x = 0; x < jt.dim(); ++x)
    for (const auto& y : fimg.basis()) {
      SVec adj;
      for (const auto& [x12, c] : jt.comult[x])
        addmul(adj, c, jt.mul(jt.mul(jt.antipode[x12.first], y), unit_vec(x12.second, f)));
      if (!fimg.member(adj))
        return {false, "(i) adjoint of " + jt.space.names[x] + " escapes f(J1)"};
    }
  // (ii) g(V1) is J2-stable
  for (const auto& v : gimg.basis())
    for (int a = 0; a < jt.dim(); ++a)
      if (!gimg.member(act_of(t.pres, v, unit_vec(a, f))))
        return {false, "(ii) g(V1) not stable under " + jt.space.names[a]};
  // (iii) [g(V1), V2] inside f(J1)
  for (const auto& v : gimg.basis())
    for (int y = 0; y < t.dimV(); ++y)
      if (!fimg.member(bracket_of(t.pres, v, unit_vec(y, f))))
        return {false, "(iii) [g(V1), " + t.pres.xspace.names[y] + "] escapes f(J1)"};
  // (iv) v <| f(a) - eps(a) v in g(V1)
  for (int a = 0; a < js.dim(); ++a)
    for (int y = 0; y < t.dimV(); ++y) {
      SVec r = act_of(t.pres, unit_vec(y, f), m.f.apply(unit_vec(a, f), f));
      add_term(r, y, -js.counit[a]);
      if (!gimg.member(r))
        return {false, "(iv) " + t.pres.xspace.names[y] + " <| f(" + js.space.names[a] +
                           ") - eps*v escapes g(V1)"};
    }
  return {};
}

// Round trip: recover_pair(build_H(d)) with the canonical identification;
// returns the verified morphism report plus bijectivity checks.
inline CheckReport dhcp_roundtrip(DHCPData& d) {
  CheckReport rep;
  const FieldSpec& f = d.field();
  auto H = build_H(d);
  rep.add("H-hopf-axioms", verify_hopf(H.hopf).all_pass());
  rep.add("H-super-cocommutative", verify_super_cocommutative(H.hopf).pass);
  auto r = recover_pair(H.hopf);
  rep.add("recovered-pair-valid", verify_dhcp(r.pair).all_pass());
  Echelon jspan(f), vspan(f);
  for (const auto& v : r.j_basis) jspan.insert(v);
  for (const auto& v : r.v_basis) vspan.insert(v);
  int nj = d.pres.ring->dim();
  bool dims_ok = finite_ring(r.pair).hopf().dim() == nj && (int)r.v_basis.size() == d.dimV();
  rep.add("recovered-dimensions", dims_ok);
  if (!dims_ok) return rep;
  DHCPMorphism iso;
  iso.src = &d;
  iso.dst = &r.pair;
  iso.f = SMat(nj, nj);
  bool coords_ok = true;
  for (int a = 0; a < nj && coords_ok; ++a) {
    auto c = jspan.coords(unit_vec(H.index_of(a, 0), f));
    if (!c) { coords_ok = false; break; }
    for (const auto& [k, v] : *c) iso.f.set(k, a, v);
  }
  iso.g = SMat(d.dimV(), d.dimV());
  for (int x = 0; x < d.dimV() && coords_ok; ++x) {
    SVec letter;
    for (const auto& [ju, cu] : d.pres.ring->unit())
      add_term(letter, H.index_of(ju, 1 + x), cu); // wedge index of the singleton {x}
    auto c = vspan.coords(letter);
    if (!c) { coords_ok = false; break; }
    for (const auto& [k, v] : *c) iso.g.set(k, x, v);
  }
  rep.add("canonical-map-into-recovered", coords_ok);
  if (!coords_ok) return rep;
  rep.add("iso-bijective",
          rank_of(iso.f.rows, f) == nj && rank_of(iso.g.rows, f) == d.dimV());
  auto mr = verify_dhcp_morphism(iso);
  rep.add("iso-pair-morphism", mr.all_pass());
  return rep;
}

// Short exactness of (J1,V1) -> (J2,V2) -> (J3,V3): the Hopf-algebra sequence
// and the vector-space sequence are both short exact.
inline bool check_short_exact_dhcp(DHCPMorphism& m1, DHCPMorphism& m2, std::string* why = nullptr) {
  auto fail = [&](const std::string& r) {
    if (why) *why = r;
    return false;
  };
  DHCPData& d1 = *m1.src;
  DHCPData& d2 = *m1.dst;
  DHCPData& d3 = *m2.dst;
  if (m2.src != m1.dst) return fail("morphisms not composable");
  const FieldSpec& f = d1.field();
  const HopfAlgebra& j1 = finite_ring(d1).hopf();
  const HopfAlgebra& j2 = finite_ring(d2).hopf();
  const HopfAlgebra& j3 = finite_ring(d3).hopf();
  if (!verify_dhcp_morphism(m1).all_pass() || !verify_dhcp_morphism(m2).all_pass())
    return fail("not pair morphisms");
  // V sequence: 0 -> V1 -> V2 -> V3 -> 0
  {
    Echelon im(f);
    for (int x = 0; x < d1.dimV(); ++x) im.insert(m1.g.apply(unit_vec(x, f), f));
    if (im.rank() != d1.dimV()) return fail("g1 not injective");
    Echelon img2(f);
    for (int x = 0; x < d2.dimV(); ++x) img2.insert(m2.g.apply(unit_vec(x, f), f));
    if (img2.rank() != d3.dimV()) return fail("g2 not surjective");
    // ker g2 = im g1
    SMat g2 = m2.g;
    g2.cols = d2.dimV();
    auto ker = kernel(g2, f);
    if ((int)ker.size() != d1.dimV()) return fail("dim ker g2 != dim V1");
    for (const auto& v : ker)
      if (!im.member(v)) return fail("ker g2 != im g1");
  }
  // J sequence: f1 injective and normal, f2 surjective, im f1 = J2^{co f2}
  {
    NormalityResult nr = check_morphism_normal(m1);
    if (!nr.normal) return fail("f1 image not normal: " + nr.failed_condition);
    Echelon im2(f);
    for (int a = 0; a < j2.dim(); ++a) im2.insert(m2.f.apply(unit_vec(a, f), f));
    if (im2.rank() != j3.dim()) return fail("f2 not surjective");
    // coinvariants: x with sum x_(1) (x) f2(x_(2)) = x (x) f2(1)
    SVec f2_unit = m2.f.apply(j2.unit, f);
    SMat sys(0, j2.dim());
    std::map<std::pair<int, int>, int> rowidx;
    auto row_of = [&](std::pair<int, int> key) {
      auto it = rowidx.find(key);
      if (it != rowidx.end()) return it->second;
      int r = (int)sys.rows.size();
      sys.rows.push_back(SVec{});
      rowidx.emplace(key, r);
      return r;
    };
    for (int x = 0; x < j2.dim(); ++x) {
      SVec2 expr;
      for (const auto& [ab, c] : j2.comult[x])
        for (const auto& [k, ck] : m2.f.apply(unit_vec(ab.second, f), f))
          add_term(expr, {ab.first, k}, c * ck);
      for (const auto& [k, ck] : f2_unit) add_term(expr, {x, k}, -ck);
      for (const auto& [ab, c] : expr) add_term(sys.rows[row_of(ab)], x, c);
    }
    sys.cols = j2.dim();
    auto coinv = kernel(sys, f);
    Echelon imf1(f);
    for (int a = 0; a < j1.dim(); ++a) imf1.insert(m1.f.apply(unit_vec(a, f), f));
    if ((int)coinv.size() != imf1.rank()) return fail("dim coinvariants != dim J1");
    for (const auto& v : coinv)
      if (!imf1.member(v)) return fail("im f1 != J2-coinvariants of f2");
  }
  return true;
}

} // namespace shopf
