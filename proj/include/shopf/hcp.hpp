// Harish-Chandra pairs with finite-dimensional C: the associated dual pair
// via the full linear dual, validation (comodule laws, dual-pair conditions,
// colinearity of the bracket), the affine side A(C,W) computed as a pairing
// annihilator inside the degree truncation of C (x) T_c(W), the psi'
// straightening isomorphism, the H-A Hopf pairing, the inverse functor
// A -> (Abar, W^A), and the beta round trip.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shopf/dhcp.hpp"

namespace shopf {

struct HCPData {
  HopfAlgebra C;                          // commutative, purely even
  SuperSpace W;                           // purely odd
  std::vector<SVec2> coaction;            // w_j -> sum w_i (x) c_k at key (i,k)
  std::vector<std::vector<SVec>> bracket; // [i][j]: element of C^* by dual coords

  int dimW() const { return W.dim(); }
  const FieldSpec& field() const { return C.field; }
};

// ---------------------------------------------------------------------------
// Associated dual pair: J = C^*, V = W^*, <v <| a, w> = sum <v,w_(0)><a,w_(1)>.

inline DHCPData associated_dhcp(const HCPData& h) {
  const FieldSpec& f = h.field();
  DHCPData d;
  d.pres.ring = std::make_shared<FiniteJRing>(dual(h.C));
  std::vector<std::string> xn;
  for (const auto& n : h.W.names) xn.push_back(n + "*");
  d.pres.xspace = SuperSpace(xn, std::vector<int>(h.dimW(), 1));
  int nc = h.C.dim(), nw = h.dimW();
  d.pres.gen_action.assign(nw, std::vector<SVec>(nc));
  for (int i = 0; i < nw; ++i)
    for (int k = 0; k < nc; ++k) {
      SVec out;
      for (int j = 0; j < nw; ++j) add_term(out, j, coeff(h.coaction[j], {i, k}, f));
      d.pres.gen_action[i][k] = out;
    }
  d.pres.bracket = h.bracket;
  return d;
}

// ---------------------------------------------------------------------------
// Validation.

// right adjoint coaction c -> sum c_(2) (x) S(c_(1)) c_(3) as a table
inline std::vector<SVec2> adjoint_coaction(const HopfAlgebra& c) {
  const FieldSpec& f = c.field;
  std::vector<SVec2> out(c.dim());
  for (int i = 0; i < c.dim(); ++i) {
    for (const auto& [ab, v] : c.comult[i])
      for (const auto& [bc, w] : c.comult[ab.second]) {
        // legs: (ab.first, bc.first, bc.second)
        SVec right = c.mul(c.antipode[ab.first], unit_vec(bc.second, f));
        for (const auto& [r, cr] : right) add_term(out[i], {bc.first, r}, v * w * cr);
      }
  }
  return out;
}

inline CheckReport verify_hcp(HCPData& h) {
  CheckReport rep;
  const FieldSpec& f = h.field();
  const HopfAlgebra& C = h.C;
  rep.add("C-purely-even", C.space.purely_even());
  {
    auto comm = verify_super_commutative(C);
    rep.add("C-commutative", comm.pass, comm.witness);
  }
  {
    auto hr = verify_hopf(C);
    rep.add("C-hopf-axioms", hr.all_pass());
  }
  {
    bool ok = true;
    for (int p : h.W.parity)
      if (p != 1) ok = false;
    rep.add("W-purely-odd", ok);
  }
  {
    // comodule laws: (id (x) eps) rho = id and coassociativity of rho
    bool ok = true;
    std::string wit;
    int nw = h.dimW();
    for (int j = 0; j < nw && ok; ++j) {
      SVec counit_side;
      for (const auto& [ik, v] : h.coaction[j]) add_term(counit_side, ik.first, v * C.counit[ik.second]);
      if (counit_side != unit_vec(j, f)) {
        ok = false;
        wit = "counit law at " + h.W.names[j];
      }
    }
    for (int j = 0; j < nw && ok; ++j) {
      // (rho (x) id) rho vs (id (x) Delta) rho, in W (x) C (x) C
      std::map<std::tuple<int, int, int>, Scalar> lhs, rhs;
      auto acc = [&](std::map<std::tuple<int, int, int>, Scalar>& m, std::tuple<int, int, int> k,
                     const Scalar& v) {
        auto it = m.find(k);
        if (it == m.end()) {
          if (!v.is_zero()) m.emplace(k, v);
        } else {
          it->second += v;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      for (const auto& [ik, v] : h.coaction[j])
        for (const auto& [i2k2, v2] : h.coaction[ik.first])
          acc(lhs, {i2k2.first, i2k2.second, ik.second}, v * v2);
      for (const auto& [ik, v] : h.coaction[j])
        for (const auto& [cc, v2] : C.comult[ik.second])
          acc(rhs, {ik.first, cc.first, cc.second}, v * v2);
      if (lhs != rhs) {
        ok = false;
        wit = "coassociativity law at " + h.W.names[j];
      }
    }
    rep.add("comodule-laws", ok, wit);
  }
  {
    auto d = associated_dhcp(h);
    auto dr = verify_dhcp(d);
    for (auto& e : dr.entries) rep.add("dual-pair " + e.name, e.pass, e.witness);
  }
  {
    // colinearity form of condition (a): the bracket V (x) V -> P(J) is left
    // C-colinear for the transposed coaction on V and the adjoint coaction
    // on P(J) (via P(J) = (C+/(C+)^2)^*).
    bool ok = true;
    std::string wit;
    try {
      auto J = dual(h.C);
      auto prim = primitive_vectors(J);
      Echelon pspan(f);
      for (const auto& v : prim) pspan.insert(v);
      int np = (int)prim.size();
      // C+ basis and (C+)^2
      SMat eps_row(1, C.dim());
      for (int i = 0; i < C.dim(); ++i) eps_row.set(0, i, C.counit[i]);
      auto cplus = kernel(eps_row, f);
      Echelon cplus2(f);
      for (const auto& a : cplus)
        for (const auto& b : cplus) cplus2.insert(C.mul(a, b));
      // Q = C+/(C+)^2 via representatives: C+ vectors reduced mod (C+)^2
      // pairing <h, q> = h(q-representative)
      auto pair_hq = [&](const SVec& hfun, const SVec& q) {
        Scalar s = Scalar::zero(f);
        for (const auto& [i, c] : q) s += c * coeff(hfun, i, f);
        return s;
      };
      // choose Q-representatives: C+ basis vectors independent mod (C+)^2
      std::vector<SVec> qrep;
      {
        Echelon acc(f);
        for (const auto& v : cplus2.basis()) acc.insert(v);
        for (const auto& v : cplus)
          if (acc.insert(v)) qrep.push_back(v);
      }
      if ((int)qrep.size() != np) {
        ok = false;
        wit = "dim P(C^*) != dim C+/(C+)^2";
      }
      // Gram and its invertibility
      SMat gram(np, (int)qrep.size());
      for (int t = 0; t < np && ok; ++t)
        for (size_t q = 0; q < qrep.size(); ++q) gram.set(t, (int)q, pair_hq(prim[t], qrep[q]));
      if (ok && rank(gram, f) != np) {
        ok = false;
        wit = "P(C^*) x C+/(C+)^2 pairing degenerate";
      }
      if (ok) {
        auto adj = adjoint_coaction(C);
        // rho_Q(q) = (pi_Q (x) id)(adj(q)): here we only need the pairing
        // values <h_t, rho_Q(q)> in C, i.e. apply h_t to the left leg
        // (primitives kill 1 and (C+)^2, so pi_Q is invisible to them)
        auto rho_paired = [&](const SVec& hfun, const SVec& q) {
          SVec out; // element of C
          for (const auto& [i, ci] : q)
            for (const auto& [lr, v] : adj[i]) add_term(out, lr.second, ci * v * coeff(hfun, lr.first, f));
          return out;
        };
        // lambda_P(h_t) = sum_s c_{ts} (x) h_s solving
        // sum_s c_{ts} <h_s, q> = <h_t, rho_Q(q)> with the Gram inverted
        // exactly, one C-coordinate at a time
        SMat gt((int)qrep.size(), np);
        for (int s = 0; s < np; ++s)
          for (size_t q = 0; q < qrep.size(); ++q) gt.set((int)q, s, gram.at(s, (int)q, f));
        auto lambda_P = [&](int t) {
          std::vector<SVec> R;
          for (const auto& q : qrep) R.push_back(rho_paired(prim[t], q));
          std::vector<SVec> cts(np); // cts[s] in C
          for (int m = 0; m < C.dim(); ++m) {
            std::vector<Scalar> rhs;
            for (size_t q = 0; q < qrep.size(); ++q) rhs.push_back(coeff(R[q], m, f));
            auto x = solve_linear(gt, rhs, f);
            if (!x) throw error(ErrKind::internal, "Gram system inconsistent");
            for (const auto& [s, v] : *x) add_term(cts[s], m, v);
          }
          return cts; // lambda_P(h_t) = sum_s cts[s] (x) h_s
        };
        // coaction legs on V: lambda_V(x_i) = sum_j c_{ij} (x) x_j with
        // rho(w_j) = sum_i w_i (x) c_{ij}
        auto cleg = [&](int i, int j) {
          SVec out;
          for (const auto& [ik, v] : h.coaction[j])
            if (ik.first == i) add_term(out, ik.second, v);
          return out;
        };
        int nw = h.dimW();
        for (int u = 0; u < nw && ok; ++u)
          for (int v = 0; v < nw && ok; ++v) {
            // lhs: lambda_P([u,v])
            auto coords = pspan.coords(h.bracket[u][v]);
            if (!coords) {
              ok = false;
              wit = "bracket value is not primitive";
              break;
            }
            std::vector<SVec> lhs(np); // per P-basis s: element of C
            for (const auto& [t, ct] : *coords) {
              auto cts = lambda_P(t);
              for (int s = 0; s < np; ++s) addmul(lhs[s], ct, cts[s]);
            }
            // rhs: sum_{j,l} c_{uj} c_{vl} (x) [x_j, x_l]
            std::vector<SVec> rhs(np);
            for (int j2 = 0; j2 < nw; ++j2)
              for (int l = 0; l < nw; ++l) {
                SVec cprod = C.mul(cleg(u, j2), cleg(v, l));
                if (cprod.empty()) continue;
                auto bc = pspan.coords(h.bracket[j2][l]);
                if (!bc) {
                  ok = false;
                  wit = "bracket value is not primitive";
                  break;
                }
                for (const auto& [s, cs] : *bc) addmul(rhs[s], cs, cprod);
              }
            if (ok && lhs != rhs) {
              ok = false;
              wit = "bracket not C-colinear at (" + h.W.names[u] + "*," + h.W.names[v] + "*)";
            }
          }
      }
    } catch (const error& e) {
      ok = false;
      wit = e.what();
    }
    rep.add("condition-(a)-colinear", ok, wit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The ambient truncation of C (x) T_c(W) and its graded structure maps.

struct AmbientA {
  const HCPData* h = nullptr;
  FieldSpec f;
  int N = 0; // degree bound
  std::vector<Word> words; // all words over W of degree <= N, by degree then lex
  std::map<Word, int> word_index;

  AmbientA(const HCPData& hcp, int bound) : h(&hcp), f(hcp.field()), N(bound) {
    for (int d = 0; d <= N; ++d)
      for (const auto& w : words_of_degree(hcp.dimW(), d)) {
        word_index[w] = (int)words.size();
        words.push_back(w);
      }
  }

  int dimC() const { return h->C.dim(); }
  int dim() const { return dimC() * (int)words.size(); }
  int index(int c, const Word& w) const { return word_index.at(w) * dimC() + c; }
  std::pair<int, Word> label(int idx) const { return {idx % dimC(), words[idx / dimC()]}; }
  int parity(int idx) const { return (int)(words[idx / dimC()].size()) % 2; }

  std::string name(int idx) const {
    auto [c, w] = label(idx);
    std::string cn = h->C.space.names[c];
    if (w.empty()) return cn;
    std::string wn;
    for (int l : w) wn += (wn.empty() ? "" : ".") + h->W.names[l];
    return cn == "1" ? wn : cn + "." + wn;
  }

  // coaction of a word: rho(w) = sum w' (x) c in (words of same degree) x C
  std::map<Word, SVec> word_coaction(const Word& w) const {
    std::map<Word, SVec> acc;
    acc[{}] = h->C.unit;
    for (int l : w) {
      std::map<Word, SVec> next;
      for (const auto& [pw, cv] : acc)
        for (const auto& [ik, v] : h->coaction[l]) {
          Word nw = pw;
          nw.push_back(ik.first);
          SVec prod = h->C.mul(cv, unit_vec(ik.second, f));
          auto it = next.find(nw);
          if (it == next.end()) next.emplace(nw, scaled(prod, v));
          else addmul(it->second, v, prod);
        }
      // prune zero C-legs
      for (auto it = next.begin(); it != next.end();)
        it->second.empty() ? it = next.erase(it) : ++it;
      acc = std::move(next);
    }
    return acc;
  }

  // graded product, components above N dropped
  SVec mul(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [ia, ca] : a)
      for (const auto& [ib, cb] : b) {
        auto [c1, w1] = label(ia);
        auto [c2, w2] = label(ib);
        if ((int)(w1.size() + w2.size()) > N) continue;
        SVec cprod = h->C.mult[c1][c2];
        if (cprod.empty()) continue;
        WordElem sh = shuffle_product(w1, w2, wspace(), f);
        for (const auto& [w, cw] : sh)
          for (const auto& [c, cc] : cprod) add_term(out, index(c, w), ca * cb * cw * cc);
      }
    return out;
  }

  SVec unit() const {
    SVec out;
    for (const auto& [c, v] : h->C.unit) add_term(out, index(c, {}), v);
    return out;
  }

  Scalar counit(const SVec& a) const {
    Scalar s = Scalar::zero(f);
    for (const auto& [i, c] : a) {
      auto [cc, w] = label(i);
      if (w.empty()) s += c * h->C.counit[cc];
    }
    return s;
  }

  // smash coproduct Delta(c (x) z) =
  //   sum (c_(1) (x) (z_(1))_(0)) (x) ((z_(1))_(1) c_(2) (x) z_(2))
  SVec2 comult(int idx) const {
    SVec2 out;
    auto [c, z] = label(idx);
    for (size_t cut = 0; cut <= z.size(); ++cut) {
      Word z1(z.begin(), z.begin() + cut), z2(z.begin() + cut, z.end());
      auto rho = word_coaction(z1);
      for (const auto& [z10, cleg] : rho)
        for (const auto& [cc, v] : h->C.comult[c]) {
          // left: c_(1) (x) z10 ; right: (cleg * c_(2)) (x) z2
          SVec rightC = h->C.mul(cleg, unit_vec(cc.second, f));
          for (const auto& [rc, rv] : rightC)
            add_term(out, {index(cc.first, z10), index(rc, z2)}, v * rv);
        }
    }
    return out;
  }

  // S(c (x) z) = sum S(c z_(1)) (x) S(z_(0))
  SVec antipode(int idx) const {
    SVec out;
    auto [c, z] = label(idx);
    auto rho = word_coaction(z);
    for (const auto& [z0, cleg] : rho) {
      auto [sgn, rev] = tensor_antipode(z0, wspace(), f);
      SVec inner = h->C.antipode_of(h->C.mul(unit_vec(c, f), cleg));
      for (const auto& [sc, sv] : inner) add_term(out, index(sc, rev), sgn * sv);
    }
    return out;
  }

  const SuperSpace& wspace() const { return h->W; }
};

// ---------------------------------------------------------------------------
// build_A.

struct AResult {
  HopfAlgebra hopf;            // structure constants in the psi'-echelon basis
  std::vector<SVec> embedding; // basis vectors in the ambient truncation
  std::shared_ptr<AmbientA> ambient;
  CheckReport restriction;     // the Lemma-4.21 restriction residual checks
  // basis index = wedge_index * dimC + c (image of the standard C (x) ^W basis)
  std::vector<Word> wedges;
  int index_of(int c, int wedge_idx) const { return wedge_idx * dimC + c; }
  int dimC = 0;
};

inline AResult build_A(HCPData& h) {
  const FieldSpec& f = h.field();
  auto val = verify_hcp(h);
  if (!val.all_pass()) {
    std::string wit;
    for (const auto& e : val.entries)
      if (!e.pass) wit += e.name + (e.witness.empty() ? "" : " (" + e.witness + ")") + "; ";
    throw error(ErrKind::invalid_input, "not a valid Harish-Chandra pair: " + wit);
  }
  AResult out;
  out.dimC = h.C.dim();
  int m = h.dimW();
  int N = m;
  // Elements of A(C,W) can have nonzero components above degree N when the
  // bracket is nonzero (the ideal relations are inhomogeneous). Degrees up to
  // N determine an element; degrees up to 2N determine the window of its
  // coproduct with both legs of degree <= N. The ambient store therefore
  // keeps components up to 2N, and the coproduct coefficients are solved on
  // the (<=N) x (<=N) window, where truncation is injective. With a zero
  // bracket the defining ideal is graded, components above N vanish, and the
  // N-window is already lossless.
  bool graded = true;
  for (const auto& row : h.bracket)
    for (const auto& v : row)
      if (!v.empty()) graded = false;
  out.ambient = std::make_shared<AmbientA>(h, graded ? N : 2 * N);
  AmbientA& amb = *out.ambient;
  auto d = associated_dhcp(h);
  if (!check_overlaps(d.pres).all_resolvable)
    throw error(ErrKind::internal, "valid pair with unresolvable overlaps");
  // Constraint rows: elements a.w - normalize(a.w) of the defining ideal,
  // paired degreewise against the ambient truncation. The pairing matches
  // J = C^* dual coordinates and V = W^* dual letters, so the row of an
  // H-word (a, u) is the ambient coordinate (a, u) itself.
  SMat rows(0, amb.dim());
  for (int deg = 0; deg <= amb.N; ++deg)
    for (const auto& w : words_of_degree(m, deg)) {
      bool increasing = true;
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] >= w[i + 1]) increasing = false;
      if (increasing) continue; // already normal: constraint is trivial
      for (int a = 0; a < amb.dimC(); ++a) {
        MWord mw;
        mw.push_back(j_factor(a));
        for (int l : w) mw.push_back(x_factor(l));
        MElem e;
        add_canonical(e, std::move(mw), Scalar::one(f), d.pres);
        NormalElement nf = normalize(std::move(e), d.pres);
        SVec row;
        add_term(row, amb.index(a, w), Scalar::one(f));
        for (const auto& [u, jv] : nf.terms)
          for (const auto& [b, c] : jv) add_term(row, amb.index(b, u), -c);
        rows.rows.push_back(std::move(row));
      }
    }
  rows.cols = amb.dim();
  auto ann = kernel(rows, f);
  int expected = h.C.dim() * (1 << m);
  if ((int)ann.size() != expected)
    throw error(ErrKind::internal,
                "annihilator dimension " + std::to_string(ann.size()) + " != dim C * 2^dim W = " +
                    std::to_string(expected));
  // psi' = id_C (x) pi: kill non-increasing words, wedge the increasing ones.
  for (int dgr = 0; dgr <= m; ++dgr)
    for (const auto& w : increasing_words(m, dgr)) out.wedges.push_back(w);
  std::map<Word, int> wedge_index;
  for (size_t i = 0; i < out.wedges.size(); ++i) wedge_index[out.wedges[i]] = (int)i;
  int dimA = expected;
  auto psi = [&](const SVec& v) {
    SVec img;
    for (const auto& [i, c] : v) {
      auto [cc, w] = amb.label(i);
      bool increasing = true;
      for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] >= w[k + 1]) increasing = false;
      if (!increasing) continue;
      add_term(img, wedge_index.at(w) * h.C.dim() + cc, c);
    }
    return img;
  };
  // invert psi' on the annihilator: solve for the basis mapping to the
  // standard C (x) ^(W) basis
  Echelon img_ech(f);
  std::vector<SVec> img_of;
  for (const auto& v : ann) img_of.push_back(psi(v));
  for (const auto& v : img_of)
    if (!img_ech.insert(v)) throw error(ErrKind::internal, "psi' degenerate on A(C,W)");
  out.embedding.assign(dimA, SVec{});
  for (int t = 0; t < dimA; ++t) {
    auto coords = img_ech.coords(unit_vec(t, f));
    if (!coords) throw error(ErrKind::internal, "psi' not surjective on A(C,W)");
    for (const auto& [k, c] : *coords) addmul(out.embedding[t], c, ann[k]);
  }
  // structure constants, with exact restriction checks
  Echelon span(f);
  for (const auto& v : out.embedding) span.insert(v);
  auto coords1 = [&](const SVec& v, const char* what) {
    auto c = span.coords(v);
    if (!c)
      throw error(ErrKind::internal, std::string("operation does not restrict to A(C,W): ") + what);
    return *c;
  };
  HopfAlgebra& A = out.hopf;
  A.field = f;
  std::vector<std::string> names;
  std::vector<int> par;
  for (int t = 0; t < dimA; ++t) {
    int wi = t / h.C.dim(), c = t % h.C.dim();
    std::string cn = h.C.space.names[c];
    const Word& w = out.wedges[wi];
    std::string wn;
    for (int l : w) wn += (wn.empty() ? "" : "^") + h.W.names[l];
    names.push_back(wn.empty() ? cn : (cn == "1" ? wn : cn + "." + wn));
    par.push_back((int)w.size() % 2);
  }
  A.space = SuperSpace(names, par);
  A.mult.assign(dimA, std::vector<SVec>(dimA));
  for (int s = 0; s < dimA; ++s)
    for (int t = 0; t < dimA; ++t)
      A.mult[s][t] = coords1(amb.mul(out.embedding[s], out.embedding[t]), "product");
  A.unit = coords1(amb.unit(), "unit");
  A.comult.assign(dimA, SVec2{});
  out.restriction.add("product-restricts", true);
  {
    // N-window machinery: truncation to degrees <= N is injective on A
    auto truncN = [&](const SVec& v) {
      SVec o;
      for (const auto& [i, c] : v)
        if ((int)amb.label(i).second.size() <= N) add_term(o, i, c);
      return o;
    };
    Echelon spanN(f);
    for (const auto& v : out.embedding)
      if (!spanN.insert(truncN(v)))
        throw error(ErrKind::internal, "degree-<=N truncation degenerate on A(C,W)");
    bool ok = true;
    for (int t = 0; t < dimA; ++t) {
      // (trunc_N (x) trunc_N) Delta, computed from components of degree <= 2N
      SVec2 dd;
      for (const auto& [i, c] : out.embedding[t])
        for (const auto& [lr, v] : amb.comult(i)) {
          if ((int)amb.label(lr.first).second.size() > N) continue;
          if ((int)amb.label(lr.second).second.size() > N) continue;
          add_term(dd, lr, c * v);
        }
      // leg-wise coordinates against the N-window images, with an exact
      // reconstruction check (the Lemma-4.21 restriction residual)
      std::map<int, SVec> by_right;
      for (const auto& [ab, c] : dd) add_term(by_right[ab.second], ab.first, c);
      std::map<int, SVec> left_coords; // right ambient index -> coords over A
      for (const auto& [r, left] : by_right) {
        auto lc = spanN.coords(left);
        if (!lc) { ok = false; break; }
        left_coords[r] = *lc;
      }
      if (!ok) break;
      std::map<int, SVec> by_leftA; // A index s -> right ambient vector
      for (const auto& [r, lc] : left_coords)
        for (const auto& [s, c] : lc) add_term(by_leftA[s], r, c);
      for (const auto& [s, rightvec] : by_leftA) {
        auto rc = spanN.coords(rightvec);
        if (!rc) { ok = false; break; }
        for (const auto& [u, c] : *rc) add_term(A.comult[t], {s, u}, c);
      }
      if (!ok) break;
      // exact reconstruction on the N-window: residual must vanish
      SVec2 rec;
      for (const auto& [su, c] : A.comult[t])
        for (const auto& [i, ci] : truncN(out.embedding[su.first]))
          for (const auto& [j, cj] : truncN(out.embedding[su.second]))
            add_term(rec, {i, j}, c * ci * cj);
      if (rec != dd) { ok = false; break; }
    }
    out.restriction.add("coproduct-restricts-residual-zero", ok);
    if (!ok)
      throw error(ErrKind::internal, "smash coproduct does not restrict to A(C,W)");
  }
  A.counit.assign(dimA, Scalar::zero(f));
  for (int t = 0; t < dimA; ++t) A.counit[t] = amb.counit(out.embedding[t]);
  A.antipode.assign(dimA, SVec{});
  {
    bool ok = true;
    for (int t = 0; t < dimA; ++t) {
      SVec sa;
      for (const auto& [i, c] : out.embedding[t]) addmul(sa, c, amb.antipode(i));
      auto sc = span.coords(sa);
      if (!sc) { ok = false; break; }
      A.antipode[t] = *sc;
    }
    out.restriction.add("antipode-restricts", ok);
    if (!ok) throw error(ErrKind::internal, "antipode does not restrict to A(C,W)");
  }
  return out;
}

// psi'_X as an explicit matrix on the chosen basis (the identity, by the
// echelon convention), with the superalgebra-map property and counit
// preservation verified against C (x) ^(W).
inline CheckReport psi_prime(const HCPData& h, const AResult& a) {
  CheckReport rep;
  const FieldSpec& f = h.field();
  int dimA = a.hopf.dim();
  rep.add("square-invertible", true, "psi'-echelon basis: matrix is the identity");
  {
    // product table must match the tensor-product algebra C (x) ^(W)
    bool ok = true;
    std::string wit;
    int nc = h.C.dim();
    std::map<Word, int> wedge_index;
    for (size_t i = 0; i < a.wedges.size(); ++i) wedge_index[a.wedges[i]] = (int)i;
    for (int s = 0; s < dimA && ok; ++s)
      for (int t = 0; t < dimA && ok; ++t) {
        int ws = s / nc, cs = s % nc, wt = t / nc, ct = t % nc;
        // (c (x) u)(c' (x) u') = cc' (x) u ^ u'  (C is even)
        SVec expect;
        Word cat = a.wedges[ws];
        cat.insert(cat.end(), a.wedges[wt].begin(), a.wedges[wt].end());
        auto nrm = wedge_normalize(cat, h.W, f);
        if (nrm) {
          const SVec& cprod = h.C.mult[cs][ct];
          for (const auto& [c, v] : cprod)
            add_term(expect, a.index_of(c, wedge_index.at(nrm->second)), v * nrm->first);
        }
        if (a.hopf.mult[s][t] != expect) {
          ok = false;
          wit = "(" + a.hopf.space.names[s] + ")(" + a.hopf.space.names[t] + ")";
        }
      }
    rep.add("superalgebra-map", ok, wit);
  }
  {
    // counit preserved and degree-0 part lands in C (x) 1
    bool ok = true;
    for (int t = 0; t < dimA && ok; ++t) {
      int wi = t / h.C.dim(), c = t % h.C.dim();
      Scalar expect = a.wedges[wi].empty() ? h.C.counit[c] : Scalar::zero(f);
      if (!(a.hopf.counit[t] == expect)) ok = false;
    }
    rep.add("counit-preserving", ok);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The H-A Hopf pairing.

struct HAPairing {
  SMat matrix; // rows = H basis, cols = A basis
  CheckReport laws;
  bool nondegenerate = false;
};

inline HAPairing pair_H_A(DHCPData& d, const HResult& H, const AResult& A) {
  const FieldSpec& f = d.field();
  HAPairing out;
  int nh = H.hopf.dim(), na = A.hopf.dim();
  out.matrix = SMat(nh, na);
  for (int i = 0; i < nh; ++i) {
    int a = i / (int)H.wedges.size();
    // recover (j, wedge) from the build_H index layout
    int widx = i % (int)H.wedges.size();
    const Word& u = H.wedges[widx];
    for (int t = 0; t < na; ++t) {
      Scalar s = Scalar::zero(f);
      for (const auto& [amb_i, c] : A.embedding[t]) {
        auto [cc, z] = A.ambient->label(amb_i);
        if (cc == a && z == u) s += c;
      }
      out.matrix.set(i, t, s);
    }
  }
  out.nondegenerate = rank(out.matrix, f) == std::min(nh, na) && nh == na;
  auto& rep = out.laws;
  auto pairing = [&](int i, int t) { return out.matrix.at(i, t, f); };
  {
    // <xy, a> = sum <x, a_(1)><y, a_(2)>
    bool ok = true;
    for (int i = 0; i < nh && ok; ++i)
      for (int j = 0; j < nh && ok; ++j)
        for (int t = 0; t < na && ok; ++t) {
          Scalar lhs = Scalar::zero(f);
          for (const auto& [k, c] : H.hopf.mult[i][j]) lhs += c * pairing(k, t);
          Scalar rhs = Scalar::zero(f);
          for (const auto& [uv, c] : A.hopf.comult[t])
            rhs += c * pairing(i, uv.first) * pairing(j, uv.second);
          if (lhs != rhs) ok = false;
        }
    rep.add("pairing-mult-vs-comult", ok);
  }
  {
    // <x, ab> = sum <x_(1), a><x_(2), b>
    bool ok = true;
    for (int i = 0; i < nh && ok; ++i)
      for (int s = 0; s < na && ok; ++s)
        for (int t = 0; t < na && ok; ++t) {
          Scalar lhs = Scalar::zero(f);
          for (const auto& [u, c] : A.hopf.mult[s][t]) lhs += c * pairing(i, u);
          Scalar rhs = Scalar::zero(f);
          for (const auto& [kl, c] : H.hopf.comult[i])
            rhs += c * pairing(kl.first, s) * pairing(kl.second, t);
          if (lhs != rhs) ok = false;
        }
    rep.add("pairing-comult-vs-mult", ok);
  }
  {
    // unit/counit laws and the antipode correspondence
    bool ok = true;
    for (int t = 0; t < na && ok; ++t) {
      Scalar lhs = Scalar::zero(f);
      for (const auto& [i, c] : H.hopf.unit) lhs += c * pairing(i, t);
      if (lhs != A.hopf.counit[t]) ok = false;
    }
    for (int i = 0; i < nh && ok; ++i) {
      Scalar lhs = Scalar::zero(f);
      for (const auto& [t, c] : A.hopf.unit) lhs += c * pairing(i, t);
      if (lhs != H.hopf.counit[i]) ok = false;
    }
    rep.add("pairing-units", ok);
    bool sok = true;
    for (int i = 0; i < nh && sok; ++i)
      for (int t = 0; t < na && sok; ++t) {
        Scalar lhs = Scalar::zero(f);
        for (const auto& [k, c] : H.hopf.antipode[i]) lhs += c * pairing(k, t);
        Scalar rhs = Scalar::zero(f);
        for (const auto& [u, c] : A.hopf.antipode[t]) rhs += c * pairing(i, u);
        if (lhs != rhs) sok = false;
      }
    rep.add("pairing-antipode", sok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// recover_hcp and beta_roundtrip.

struct RecoveredHCP {
  HCPData pair;
  QuotientHopf abar;           // A -> Abar data
  std::vector<int> wa_rep;     // odd coordinate positions representing W^A
  std::vector<SVec> wa_kill;   // basis of A_0^+ A_1 (the killed subspace)
};

inline RecoveredHCP recover_hcp(const HopfAlgebra& A) {
  auto comm = verify_super_commutative(A);
  if (!comm.pass)
    throw error(ErrKind::invalid_input,
                "recover_hcp needs super-commutative input, witness " + comm.witness);
  const FieldSpec& f = A.field;
  int n = A.dim();
  RecoveredHCP out;
  // I_A = A A_1
  std::vector<SVec> ideal;
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x)
      if (A.space.parity[x] == 1) ideal.push_back(A.mul(unit_vec(i, f), unit_vec(x, f)));
  for (int x = 0; x < n; ++x)
    if (A.space.parity[x] == 1) ideal.push_back(unit_vec(x, f));
  out.abar = quotient_hopf(A, ideal);
  // W^A = A_1 / A_0^+ A_1
  Echelon kill(f);
  for (int a = 0; a < n; ++a) {
    if (A.space.parity[a] != 0) continue;
    for (int x = 0; x < n; ++x) {
      if (A.space.parity[x] != 1) continue;
      // a in A_0^+: use a - eps(a) 1
      SVec ap = unit_vec(a, f);
      addmul(ap, -A.counit[a], A.unit);
      kill.insert(A.mul(ap, unit_vec(x, f)));
    }
  }
  out.wa_kill = kill.basis();
  std::vector<int> killpiv = kill.pivots();
  std::vector<bool> is_killpiv(n, false);
  for (int p : killpiv) is_killpiv[p] = true;
  for (int x = 0; x < n; ++x)
    if (A.space.parity[x] == 1 && !is_killpiv[x]) out.wa_rep.push_back(x);
  int nw = (int)out.wa_rep.size();
  // pi_W: odd part -> W^A coordinates
  auto pi_w = [&](const SVec& v) {
    SVec red = v;
    for (const auto& r : out.wa_kill) {
      Scalar c = coeff(red, r.begin()->first, f);
      if (!c.is_zero()) addmul(red, -c, r);
    }
    SVec o;
    for (int k = 0; k < nw; ++k) add_term(o, k, coeff(red, out.wa_rep[k], f));
    return o;
  };
  HCPData& h = out.pair;
  h.C = out.abar.quot;
  std::vector<std::string> wn;
  for (int k = 0; k < nw; ++k) wn.push_back("w" + std::to_string(k));
  h.W = SuperSpace(wn, std::vector<int>(nw, 1));
  // quotient projection pi: A -> Abar coordinates
  auto pi = [&](const SVec& v) {
    SVec red = v;
    for (const auto& r : out.abar.ideal) {
      Scalar c = coeff(red, r.begin()->first, f);
      if (!c.is_zero()) addmul(red, -c, r);
    }
    SVec o;
    for (size_t k = 0; k < out.abar.rep.size(); ++k) add_term(o, (int)k, coeff(red, out.abar.rep[k], f));
    return o;
  };
  // adjoint coaction a |-> sum a_(2) (x) S(abar_(1)) abar_(3), then project
  h.coaction.assign(nw, SVec2{});
  for (int k = 0; k < nw; ++k) {
    int x = out.wa_rep[k];
    SVec2 legs; // (middle A coordinate, Abar coordinate)
    for (const auto& [ab, v] : A.comult[x])
      for (const auto& [bc, w] : A.comult[ab.second]) {
        SVec right = out.abar.quot.mul(pi(A.antipode[ab.first]), pi(unit_vec(bc.second, f)));
        for (const auto& [r, cr] : right) add_term(legs, {bc.first, r}, v * w * cr);
      }
    // project the middle leg to W^A
    for (const auto& [mr, v] : legs) {
      SVec w = pi_w(unit_vec(mr.first, f));
      for (const auto& [i, ci] : w) add_term(h.coaction[k], {i, mr.second}, v * ci);
    }
  }
  // bracket via the dual: V_H = (W^A)^* inside H = A^*
  auto H = dual(A);
  auto prim = primitives(H);
  std::vector<SVec> vodd;
  for (size_t i = 0; i < prim.basis.size(); ++i)
    if (prim.parity[i] == 1) vodd.push_back(prim.basis[i]);
  if ((int)vodd.size() != nw)
    throw error(ErrKind::internal, "dim V_H != dim W^A");
  // Gram <f, w_k> = f(representative of w_k)
  SMat gram(nw, nw);
  for (int i = 0; i < nw; ++i)
    for (int k = 0; k < nw; ++k) gram.set(i, k, coeff(vodd[i], out.wa_rep[k], f));
  // dual basis v_k: combinations with <v_k, w_l> = delta
  // solve gram^T coordinates
  std::vector<SVec> vdual(nw);
  {
    Echelon ge(f);
    std::vector<SVec> grows;
    for (int i = 0; i < nw; ++i) {
      SVec row;
      for (int k = 0; k < nw; ++k) add_term(row, k, gram.at(i, k, f));
      grows.push_back(row);
      ge.insert(row);
    }
    if (ge.rank() != nw)
      throw error(ErrKind::internal, "V_H x W^A pairing degenerate");
    for (int k = 0; k < nw; ++k) {
      auto c = ge.coords(unit_vec(k, f));
      if (!c) throw error(ErrKind::internal, "V_H x W^A pairing not invertible");
      for (const auto& [i, ci] : *c) addmul(vdual[k], ci, vodd[i]);
    }
  }
  // bracket values: [v_k, v_l] = v_k v_l + v_l v_k in H = A^*, restricted to
  // functionals on Abar via the quotient representatives
  h.bracket.assign(nw, std::vector<SVec>(nw));
  for (int k = 0; k < nw; ++k)
    for (int l = 0; l < nw; ++l) {
      SVec br = H.mul(vdual[k], vdual[l]);
      addmul(br, Scalar::one(f), H.mul(vdual[l], vdual[k]));
      // must vanish on I_A
      for (const auto& r : out.abar.ideal) {
        Scalar s = Scalar::zero(f);
        for (const auto& [i, c] : r) s += c * coeff(br, i, f);
        if (!s.is_zero())
          throw error(ErrKind::internal, "recovered bracket does not kill A A_1");
      }
      SVec val; // functional on Abar by dual coordinates
      for (size_t t = 0; t < out.abar.rep.size(); ++t)
        add_term(val, (int)t, coeff(br, out.abar.rep[t], f));
      h.bracket[k][l] = val;
    }
  return out;
}

struct BetaResult {
  SMat matrix; // A coordinates -> model coordinates
  bool is_isomorphism = false;
  CheckReport checks;
};

// beta_A(a) = sum_n sum abar_(1) (x) pi^{(n)}(a_(2)), compared against the
// rebuilt model build_A(recover_hcp(A)).
inline BetaResult beta_roundtrip(const HopfAlgebra& A) {
  const FieldSpec& f = A.field;
  auto rec = recover_hcp(A);
  auto model = build_A(rec.pair);
  const AmbientA& amb = *model.ambient;
  int n = A.dim();
  int nw = (int)rec.wa_rep.size();
  auto pi = [&](const SVec& v) {
    SVec red = v;
    for (const auto& r : rec.abar.ideal) {
      Scalar c = coeff(red, r.begin()->first, f);
      if (!c.is_zero()) addmul(red, -c, r);
    }
    SVec o;
    for (size_t k = 0; k < rec.abar.rep.size(); ++k) add_term(o, (int)k, coeff(red, rec.abar.rep[k], f));
    return o;
  };
  auto pi_w = [&](const SVec& v) {
    SVec red = v;
    for (const auto& r : rec.wa_kill) {
      Scalar c = coeff(red, r.begin()->first, f);
      if (!c.is_zero()) addmul(red, -c, r);
    }
    SVec o;
    for (int k = 0; k < nw; ++k) add_term(o, k, coeff(red, rec.wa_rep[k], f));
    return o;
  };
  // varpi: A -> W^A (odd part, then the quotient)
  auto varpi = [&](const SVec& v) {
    SVec odd;
    for (const auto& [i, c] : v)
      if (A.space.parity[i] == 1) add_term(odd, i, c);
    return pi_w(odd);
  };
  // P_m(v) in T^m(W^A) as a map word -> scalar; P_0 = eps
  std::function<std::map<Word, Scalar>(const SVec&, int)> pm = [&](const SVec& v,
                                                                   int m) -> std::map<Word, Scalar> {
    std::map<Word, Scalar> out;
    if (m == 0) {
      Scalar e = A.counit_of(v);
      if (!e.is_zero()) out[{}] = e;
      return out;
    }
    // (varpi (x) P_{m-1}) Delta
    SVec2 d;
    for (const auto& [i, c] : v) addmul(d, c, A.comult[i]);
    std::map<int, SVec> by_left;
    for (const auto& [ab, c] : d) add_term(by_left[ab.first], ab.second, c);
    for (const auto& [l, rest] : by_left) {
      SVec wl = varpi(unit_vec(l, f));
      if (wl.empty()) continue;
      auto tail = pm(rest, m - 1);
      for (const auto& [tw, tc] : tail)
        for (const auto& [wk, wc] : wl) {
          Word word;
          word.push_back(wk);
          word.insert(word.end(), tw.begin(), tw.end());
          Scalar val = tc * wc;
          auto it = out.find(word);
          if (it == out.end()) {
            if (!val.is_zero()) out.emplace(word, val);
          } else {
            it->second += val;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
    return out;
  };
  BetaResult out;
  out.matrix = SMat(model.hopf.dim(), n);
  Echelon span(f);
  for (const auto& v : model.embedding) span.insert(v);
  for (int a = 0; a < n; ++a) {
    SVec amb_img;
    SVec2 d;
    addmul(d, Scalar::one(f), A.comult[a]);
    std::map<int, SVec> by_left;
    for (const auto& [ab, c] : d) add_term(by_left[ab.first], ab.second, c);
    for (const auto& [l, rest] : by_left) {
      SVec abar1 = pi(unit_vec(l, f));
      if (abar1.empty()) continue;
      for (int m = 0; m <= amb.N; ++m) {
        auto words = pm(rest, m);
        for (const auto& [w, wc] : words)
          for (const auto& [cb, cc] : abar1) add_term(amb_img, amb.index(cb, w), wc * cc);
      }
    }
    auto coords = span.coords(amb_img);
    if (!coords) {
      out.checks.add("beta-lands-in-A(C,W)", false, "image of " + A.space.names[a]);
      return out;
    }
    for (const auto& [t, c] : *coords) out.matrix.set(t, a, c);
  }
  out.checks.add("beta-lands-in-A(C,W)", true);
  bool inv = rank(out.matrix, f) == n && model.hopf.dim() == n;
  out.checks.add("beta-bijective", inv);
  MorphismData m{&A, &model.hopf, out.matrix};
  auto mr = verify_morphism(m);
  bool hopfmap = mr.all_pass();
  out.checks.add("beta-hopf-morphism", hopfmap);
  // antipode compatibility
  {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      SVec lhs = out.matrix.apply(A.antipode[a], f);
      SVec rhs = model.hopf.antipode_of(out.matrix.apply(unit_vec(a, f), f));
      if (lhs != rhs) ok = false;
    }
    out.checks.add("beta-antipode", ok);
  }
  out.is_isomorphism = inv && hopfmap && out.checks.all_pass();
  return out;
}

struct HCPMorphism {
  HCPData* src = nullptr;
  HCPData* dst = nullptr;
  SMat f; // on C coordinates
  SMat g; // on W coordinates
};

// the associated dual-pair morphism runs contravariantly
inline DHCPMorphism dualized(HCPMorphism& m, DHCPData& src_dual_of_dst, DHCPData& dst_dual_of_src) {
  DHCPMorphism dm;
  dm.src = &src_dual_of_dst;
  dm.dst = &dst_dual_of_src;
  dm.f = SMat(m.src->C.dim(), m.dst->C.dim());
  for (int r = 0; r < (int)m.f.rows.size(); ++r)
    for (const auto& [ccol, v] : m.f.rows[r]) dm.f.set(ccol, r, v);
  dm.g = SMat(m.src->dimW(), m.dst->dimW());
  for (int r = 0; r < (int)m.g.rows.size(); ++r)
    for (const auto& [ccol, v] : m.g.rows[r]) dm.g.set(ccol, r, v);
  return dm;
}

// Round trip 1: recover_hcp(build_A(h)) with the canonical identification
// (Abar representatives sit in the degree-0 block of the psi'-echelon basis,
// W^A representatives in the degree-1 blocks).
inline CheckReport hcp_roundtrip(HCPData& h) {
  CheckReport rep;
  const FieldSpec& f = h.field();
  auto A = build_A(h);
  rep.add("A-hopf-axioms", verify_hopf(A.hopf).all_pass());
  rep.add("A-super-commutative", verify_super_commutative(A.hopf).pass);
  auto rec = recover_hcp(A.hopf);
  rep.add("recovered-pair-valid", verify_hcp(rec.pair).all_pass());
  int nc = h.C.dim(), nw = h.dimW();
  bool dims = rec.abar.quot.dim() == nc && (int)rec.wa_rep.size() == nw;
  rep.add("recovered-dimensions", dims);
  if (!dims) return rep;
  SMat fmat(nc, nc);
  bool blocks = true;
  for (size_t k = 0; k < rec.abar.rep.size(); ++k) {
    if (rec.abar.rep[k] >= nc) blocks = false;
    else fmat.set(rec.abar.rep[k], (int)k, Scalar::one(f));
  }
  SMat gmat(nw, nw);
  for (size_t k = 0; k < rec.wa_rep.size() && blocks; ++k) {
    int idx = rec.wa_rep[k];
    int wi = idx / nc, c = idx % nc;
    if (wi < 1 || wi > nw) blocks = false;
    else gmat.set(wi - 1, (int)k, h.C.counit[c]);
  }
  rep.add("representatives-in-canonical-blocks", blocks);
  if (!blocks) return rep;
  rep.add("iso-bijective", rank_of(fmat.rows, f) == nc && rank_of(gmat.rows, f) == nw);
  HCPMorphism iso;
  iso.src = &rec.pair;
  iso.dst = &h;
  iso.f = fmat;
  iso.g = gmat;
  auto d_orig = associated_dhcp(h);
  auto d_rec = associated_dhcp(rec.pair);
  auto dm = dualized(iso, d_orig, d_rec);
  rep.add("iso-pair-morphism", verify_dhcp_morphism(dm).all_pass());
  MorphismData fm{&rec.abar.quot, &h.C, fmat};
  rep.add("iso-hopf-map-on-C", verify_morphism(fm).all_pass());
  return rep;
}

// ---------------------------------------------------------------------------
// Unipotence flags (irreducibility of A and of Abar).

struct UnipotenceFlags {
  bool a_irreducible = false;
  bool abar_irreducible = false;
};

inline UnipotenceFlags unipotence_check(const HopfAlgebra& A) {
  auto rec = recover_hcp(A);
  return {is_irreducible(A), is_irreducible(rec.abar.quot)};
}

// ---------------------------------------------------------------------------
// Conormality and short exactness at the pair level.

inline bool is_conormal_hopf_surjection(const HopfAlgebra& A2, const SMat& fmat,
                                        const HopfAlgebra& A3, std::string* why = nullptr) {
  const FieldSpec& f = A2.field;
  // kernel of f
  SMat m = fmat;
  m.cols = A2.dim();
  auto ker = kernel(m, f);
  Echelon kspan(f);
  for (const auto& v : ker) kspan.insert(v);
  auto adj = adjoint_coaction(A2);
  (void)A3;
  for (const auto& v : ker) {
    SVec2 image;
    for (const auto& [i, c] : v) addmul(image, c, adj[i]);
    // with Koszul sign on super-commutative A2 the adjoint coaction carries
    // (-1)^{|a1||a2|}; the corpus C-levels are purely even so the plain
    // adjoint suffices; for super inputs apply the sign
    std::map<int, SVec> by_right;
    for (const auto& [lr, c] : image) add_term(by_right[lr.second], lr.first, c);
    for (const auto& [r, left] : by_right) {
      (void)r;
      if (!kspan.member(left)) {
        if (why) *why = "kernel not costable under the adjoint coaction";
        return false;
      }
    }
  }
  return true;
}

// A(f,g) conormal iff f is conormal and the dualized H(f°, g*) is normal.
inline bool check_conormal(HCPMorphism& m, std::string* why = nullptr) {
  const FieldSpec& f = m.src->field();
  // f surjective?
  Echelon im(f);
  for (int c = 0; c < m.src->C.dim(); ++c) im.insert(m.f.apply(unit_vec(c, f), f));
  if (im.rank() != m.dst->C.dim()) {
    if (why) *why = "f not surjective";
    return false;
  }
  if (!is_conormal_hopf_surjection(m.src->C, m.f, m.dst->C, why)) return false;
  auto d_dst = associated_dhcp(*m.dst);
  auto d_src = associated_dhcp(*m.src);
  auto dm = dualized(m, d_dst, d_src);
  auto nr = check_morphism_normal(dm);
  if (!nr.normal) {
    if (why) *why = "dual morphism not normal: " + nr.failed_condition;
    return false;
  }
  return true;
}

inline bool check_short_exact_hcp(HCPMorphism& m1, HCPMorphism& m2, std::string* why = nullptr) {
  auto fail = [&](const std::string& r) {
    if (why) *why = r;
    return false;
  };
  const FieldSpec& f = m1.src->field();
  HCPData& h1 = *m1.src;
  HCPData& h2 = *m1.dst;
  HCPData& h3 = *m2.dst;
  if (m2.src != m1.dst) return fail("morphisms not composable");
  // the defining condition: the dualized morphisms are pair morphisms
  {
    auto d3 = associated_dhcp(h3);
    auto d2 = associated_dhcp(h2);
    auto d1 = associated_dhcp(h1);
    auto dm2 = dualized(m2, d3, d2);
    auto dm1 = dualized(m1, d2, d1);
    if (!verify_dhcp_morphism(dm2).all_pass() || !verify_dhcp_morphism(dm1).all_pass())
      return fail("not pair morphisms");
  }
  // W sequence short exact
  {
    Echelon im(f);
    for (int x = 0; x < h1.dimW(); ++x) im.insert(m1.g.apply(unit_vec(x, f), f));
    if (im.rank() != h1.dimW()) return fail("g1 not injective");
    Echelon im2(f);
    for (int x = 0; x < h2.dimW(); ++x) im2.insert(m2.g.apply(unit_vec(x, f), f));
    if (im2.rank() != h3.dimW()) return fail("g2 not surjective");
    SMat g2 = m2.g;
    g2.cols = h2.dimW();
    auto ker = kernel(g2, f);
    if ((int)ker.size() != h1.dimW()) return fail("dim ker g2 != dim W1");
    for (const auto& v : ker)
      if (!im.member(v)) return fail("ker g2 != im g1");
  }
  // C sequence short exact: f1 injective, f2 surjective conormal,
  // im f1 = coinvariants of f2
  {
    Echelon imf1(f);
    for (int c = 0; c < h1.C.dim(); ++c) imf1.insert(m1.f.apply(unit_vec(c, f), f));
    if (imf1.rank() != h1.C.dim()) return fail("f1 not injective");
    if (!check_conormal(m2, why)) return false;
    SVec f2_unit = m2.f.apply(h2.C.unit, f);
    SMat sys(0, h2.C.dim());
    std::map<std::pair<int, int>, int> rowidx;
    auto row_of = [&](std::pair<int, int> key) {
      auto it = rowidx.find(key);
      if (it != rowidx.end()) return it->second;
      int r = (int)sys.rows.size();
      sys.rows.push_back(SVec{});
      rowidx.emplace(key, r);
      return r;
    };
    for (int x = 0; x < h2.C.dim(); ++x) {
      SVec2 expr;
      for (const auto& [ab, c] : h2.C.comult[x])
        for (const auto& [k, ck] : m2.f.apply(unit_vec(ab.second, f), f))
          add_term(expr, {ab.first, k}, c * ck);
      for (const auto& [k, ck] : f2_unit) add_term(expr, {x, k}, -ck);
      for (const auto& [ab, c] : expr) add_term(sys.rows[row_of(ab)], x, c);
    }
    sys.cols = h2.C.dim();
    auto coinv = kernel(sys, f);
    if ((int)coinv.size() != h1.C.dim()) return fail("dim coinvariants != dim C1");
    for (const auto& v : coinv)
      if (!imf1.member(v)) return fail("im f1 != coinvariants of f2");
  }
  return true;
}

} // namespace shopf
