// Reduction engine for J-ring presentations: mixed words over a cocommutative
// Hopf algebra J and ordered odd generators X, the word order from the
// diamond-lemma termination argument, normalization under
//   (i)   x a  -> sum a_(1) (x <| a_(2))
//   (ii)  x y  -> -y x + [x, y]        (x > y)
//   (iii) x x  -> 1/2 [x, x]
// and exhaustive overlap-ambiguity resolution.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "shopf/hopf.hpp"

namespace shopf {

// ---------------------------------------------------------------------------
// J backends.

class JRing {
public:
  virtual ~JRing() = default;
  virtual const FieldSpec& field() const = 0;
  virtual int dim() const = 0; // interned-so-far for the enveloping backend
  virtual std::string name(int i) const = 0;
  virtual SVec mul(int i, int j) = 0;
  virtual SVec2 comult(int i) = 0;
  virtual Scalar counit(int i) = 0;
  virtual SVec antipode(int i) = 0;
  virtual SVec unit() const = 0;
  virtual bool finite() const = 0;
  virtual int degree(int i) const = 0;
  // basis elements rule (i) / overlap checks quantify over: the whole basis
  // for finite J, the Lie generators for an enveloping J
  virtual std::vector<int> generator_indices() const = 0;
  virtual bool is_primitive(const SVec& v) = 0;

  SVec mul(const SVec& a, const SVec& b) {
    SVec out;
    for (const auto& [i, ca] : a)
      for (const auto& [j, cb] : b) addmul(out, ca * cb, mul(i, j));
    return out;
  }
  SVec antipode_of(const SVec& a) {
    SVec out;
    for (const auto& [i, c] : a) addmul(out, c, antipode(i));
    return out;
  }
  Scalar counit_of(const SVec& a) {
    Scalar s = Scalar::zero(field());
    for (const auto& [i, c] : a) s += c * counit(i);
    return s;
  }
};

class FiniteJRing : public JRing {
public:
  using JRing::mul;

  explicit FiniteJRing(HopfAlgebra h) : h_(std::move(h)) {
    if (!h_.space.purely_even())
      throw error(ErrKind::invalid_input, "J must be an ordinary (purely even) Hopf algebra");
  }

  const HopfAlgebra& hopf() const { return h_; }

  const FieldSpec& field() const override { return h_.field; }
  int dim() const override { return h_.dim(); }
  std::string name(int i) const override { return h_.space.names[i]; }
  SVec mul(int i, int j) override { return h_.mult[i][j]; }
  SVec2 comult(int i) override { return h_.comult[i]; }
  Scalar counit(int i) override { return h_.counit[i]; }
  SVec antipode(int i) override { return h_.antipode[i]; }
  SVec unit() const override { return h_.unit; }
  bool finite() const override { return true; }
  int degree(int) const override { return 0; }
  std::vector<int> generator_indices() const override {
    std::vector<int> out(h_.dim());
    for (int i = 0; i < h_.dim(); ++i) out[i] = i;
    return out;
  }
  bool is_primitive(const SVec& v) override {
    SVec2 d = h_.comult_of(v);
    for (const auto& [a, ca] : h_.unit)
      for (const auto& [i, c] : v) {
        add_term(d, {a, i}, -ca * c);
        add_term(d, {i, a}, -ca * c);
      }
    return d.empty();
  }

private:
  HopfAlgebra h_;
};

// Purely even Lie algebra by structure constants.
struct LieAlgebra {
  FieldSpec field;
  std::vector<std::string> names;
  std::vector<std::vector<SVec>> bracket; // bracket[i][j] over the basis

  int dim() const { return (int)names.size(); }

  CheckReport validate() const {
    CheckReport rep;
    int n = dim();
    bool anti = true, jac = true;
    std::string wa, wj;
    for (int i = 0; i < n && anti; ++i)
      for (int j = 0; j < n && anti; ++j)
        if (bracket[i][j] != scaled(bracket[j][i], -Scalar::one(field))) {
          anti = false;
          wa = "(" + names[i] + "," + names[j] + ")";
        }
    auto br = [&](const SVec& a, const SVec& b) {
      SVec out;
      for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) addmul(out, ca * cb, bracket[i][j]);
      return out;
    };
    for (int i = 0; i < n && jac; ++i)
      for (int j = 0; j < n && jac; ++j)
        for (int k = 0; k < n && jac; ++k) {
          SVec s = br(bracket[i][j], unit_vec(k, field));
          addmul(s, Scalar::one(field), br(bracket[j][k], unit_vec(i, field)));
          addmul(s, Scalar::one(field), br(bracket[k][i], unit_vec(j, field)));
          if (!s.empty()) {
            jac = false;
            wj = "(" + names[i] + "," + names[j] + "," + names[k] + ")";
          }
        }
    rep.add("lie-antisymmetry", anti, wa);
    rep.add("lie-jacobi", jac, wj);
    return rep;
  }
};

// U(g) truncated at a total PBW degree; basis elements are interned exponent
// vectors in the generator order.
class PbwRing : public JRing {
public:
  using JRing::mul;

  PbwRing(LieAlgebra lie, int degree_cap) : lie_(std::move(lie)), cap_(degree_cap) {
    intern(Word(lie_.dim(), 0)); // unit
    for (int g = 0; g < lie_.dim(); ++g) {
      Word m(lie_.dim(), 0);
      m[g] = 1;
      gen_idx_.push_back(intern(m));
    }
  }

  const LieAlgebra& lie() const { return lie_; }
  int degree_cap() const { return cap_; }

  const FieldSpec& field() const override { return lie_.field; }
  int dim() const override { return (int)monos_.size(); }
  std::string name(int i) const override {
    const Word& m = monos_[i];
    std::string s;
    for (size_t g = 0; g < m.size(); ++g)
      for (int k = 0; k < m[g]; ++k) s += (s.empty() ? "" : ".") + lie_.names[g];
    return s.empty() ? "1" : s;
  }

  SVec mul(int i, int j) override {
    auto key = std::make_pair(i, j);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
    SVec acc = unit_vec(i, lie_.field);
    for (size_t g = 0; g < monos_[j].size(); ++g)
      for (int k = 0; k < monos_[j][(int)g]; ++k) acc = mul_by_gen(acc, (int)g);
    mul_memo_.emplace(key, acc);
    return acc;
  }

  SVec2 comult(int i) override {
    auto it = comult_memo_.find(i);
    if (it != comult_memo_.end()) return it->second;
    SVec2 acc;
    acc[{0, 0}] = Scalar::one(lie_.field);
    const Word& m = monos_[i];
    for (size_t g = 0; g < m.size(); ++g)
      for (int k = 0; k < m[(int)g]; ++k) {
        SVec2 next;
        for (const auto& [ab, c] : acc) {
          for (const auto& [l, cl] : mul_by_gen(unit_vec(ab.first, lie_.field), (int)g))
            add_term(next, {l, ab.second}, c * cl);
          for (const auto& [r, cr] : mul_by_gen(unit_vec(ab.second, lie_.field), (int)g))
            add_term(next, {ab.first, r}, c * cr);
        }
        acc = std::move(next);
      }
    comult_memo_.emplace(i, acc);
    return acc;
  }

  Scalar counit(int i) override {
    return i == 0 ? Scalar::one(lie_.field) : Scalar::zero(lie_.field);
  }

  SVec antipode(int i) override {
    auto it = anti_memo_.find(i);
    if (it != anti_memo_.end()) return it->second;
    // S(g1...gk) = (-1)^k gk...g1
    std::vector<int> gens;
    const Word& m = monos_[i];
    for (size_t g = 0; g < m.size(); ++g)
      for (int k = 0; k < m[(int)g]; ++k) gens.push_back((int)g);
    SVec acc = unit();
    for (auto rit = gens.rbegin(); rit != gens.rend(); ++rit) acc = mul_by_gen(acc, *rit);
    if (gens.size() % 2 == 1) acc = scaled(acc, -Scalar::one(lie_.field));
    anti_memo_.emplace(i, acc);
    return acc;
  }

  SVec unit() const override { return unit_vec(0, lie_.field); }
  bool finite() const override { return false; }
  int degree(int i) const override {
    int d = 0;
    for (int k : monos_[i]) d += k;
    return d;
  }
  std::vector<int> generator_indices() const override { return gen_idx_; }
  bool is_primitive(const SVec& v) override {
    for (const auto& [i, c] : v) {
      (void)c;
      if (degree(i) != 1) return false;
    }
    return true;
  }

  // index of the degree-1 monomial of generator g
  int generator(int g) const { return gen_idx_[g]; }

  // intern/look up a monomial by its exponent vector
  int mono_index(const Word& exps) { return intern(exps); }

  // expansion of a basis monomial as its generator sequence (increasing)
  std::vector<int> generator_sequence(int i) const {
    std::vector<int> out;
    for (size_t g = 0; g < monos_[i].size(); ++g)
      for (int k = 0; k < monos_[i][(int)g]; ++k) out.push_back((int)g);
    return out;
  }

private:
  int intern(const Word& m) {
    auto it = index_.find(m);
    if (it != index_.end()) return it->second;
    int d = 0;
    for (int k : m) d += k;
    if (d > cap_)
      throw error(ErrKind::invalid_input,
                  "PBW degree cap " + std::to_string(cap_) + " exceeded");
    int idx = (int)monos_.size();
    monos_.push_back(m);
    index_.emplace(m, idx);
    return idx;
  }

  // elem * e_g, straightening to the canonical increasing order
  SVec mul_by_gen(const SVec& elem, int g) {
    SVec out;
    for (const auto& [i, c] : elem) addmul(out, c, mono_times_gen(i, g));
    return out;
  }

  SVec mono_times_gen(int i, int g) {
    auto key = std::make_pair(i, g);
    auto it = mtg_memo_.find(key);
    if (it != mtg_memo_.end()) return it->second;
    const Word m = monos_[i];
    int t = -1;
    for (int u = (int)m.size() - 1; u >= 0; --u)
      if (m[u] > 0) { t = u; break; }
    SVec res;
    if (t <= g) {
      Word n = m;
      n[g] += 1;
      res = unit_vec(intern(n), lie_.field);
    } else {
      Word mp = m;
      mp[t] -= 1;
      int mpi = intern(mp);
      // m g = (m' g) t + m' [t, g]
      for (const auto& [j, c] : mono_times_gen(mpi, g)) addmul(res, c, mono_times_gen(j, t));
      for (const auto& [u, c] : lie_.bracket[t][g])
        addmul(res, c, mono_times_gen(mpi, u));
    }
    mtg_memo_.emplace(key, res);
    return res;
  }

  LieAlgebra lie_;
  int cap_;
  std::vector<Word> monos_;
  std::map<Word, int> index_;
  std::vector<int> gen_idx_;
  std::map<std::pair<int, int>, SVec> mtg_memo_;
  std::map<std::pair<int, int>, SVec> mul_memo_;
  std::map<int, SVec2> comult_memo_;
  std::map<int, SVec> anti_memo_;
};

// ---------------------------------------------------------------------------
// Presentations.

struct JPresentation {
  std::shared_ptr<JRing> ring;
  SuperSpace xspace; // ordered odd generators
  // generator action table: gen_action[x][g] = x <| g over X, where g runs
  // over ring->generator_indices() order
  std::vector<std::vector<SVec>> gen_action;
  // bracket[x][y]: value in J (SVec over J basis; degree <= 1 for enveloping)
  std::vector<std::vector<SVec>> bracket;

  int nx() const { return xspace.dim(); }

  // x <| (basis element a of J)
  SVec act(int x, int a) {
    if (ring->finite()) return gen_action[x][a];
    auto* pbw = dynamic_cast<PbwRing*>(ring.get());
    auto key = std::make_pair(x, a);
    auto it = act_memo_.find(key);
    if (it != act_memo_.end()) return it->second;
    SVec cur = unit_vec(x, ring->field());
    for (int g : pbw->generator_sequence(a)) {
      SVec next;
      for (const auto& [y, c] : cur) addmul(next, c, gen_action[y][g]);
      cur = std::move(next);
    }
    act_memo_.emplace(key, cur);
    return cur;
  }

  CheckReport validate() {
    CheckReport rep;
    const FieldSpec& f = ring->field();
    for (int p : xspace.parity)
      if (p != 1) throw error(ErrKind::invalid_input, "X generators must be odd");
    if (ring->finite()) {
      auto* fin = dynamic_cast<FiniteJRing*>(ring.get());
      auto cocom = verify_super_cocommutative(fin->hopf());
      rep.add("J-cocommutative", cocom.pass, cocom.witness);
    } else {
      auto* pbw = dynamic_cast<PbwRing*>(ring.get());
      rep.merge(pbw->lie().validate());
    }
    {
      bool ok = true;
      std::string wit;
      for (int x = 0; x < nx() && ok; ++x)
        for (int y = 0; y < nx() && ok; ++y)
          if (bracket[x][y] != bracket[y][x]) {
            ok = false;
            wit = "[" + xspace.names[x] + "," + xspace.names[y] + "] != [" + xspace.names[y] +
                  "," + xspace.names[x] + "]";
          }
      rep.add("bracket-symmetric", ok, wit);
    }
    {
      bool ok = true;
      std::string wit;
      for (int x = 0; x < nx() && ok; ++x)
        for (int y = 0; y < nx() && ok; ++y)
          if (!ring->is_primitive(bracket[x][y])) {
            ok = false;
            wit = "[" + xspace.names[x] + "," + xspace.names[y] + "] is not primitive in J";
          }
      rep.add("bracket-primitive", ok, wit);
    }
    {
      // right-module law; for an enveloping J this is the Lie-module law
      bool ok = true;
      std::string wit;
      if (ring->finite()) {
        int n = ring->dim();
        for (int x = 0; x < nx() && ok; ++x) {
          SVec vu;
          for (const auto& [a, c] : ring->unit())
            for (const auto& [y, d] : gen_action[x][a]) add_term(vu, y, c * d);
          if (vu != unit_vec(x, f)) {
            ok = false;
            wit = xspace.names[x] + " <| 1 != " + xspace.names[x];
          }
        }
        for (int x = 0; x < nx() && ok; ++x)
          for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
              SVec lhs;
              for (const auto& [y, c] : gen_action[x][a]) addmul(lhs, c, gen_action[y][b]);
              SVec rhs;
              for (const auto& [m, c] : ring->mul(a, b)) addmul(rhs, c, gen_action[x][m]);
              if (lhs != rhs) {
                ok = false;
                wit = "(" + xspace.names[x] + "," + ring->name(a) + "," + ring->name(b) + ")";
              }
            }
      } else {
        auto* pbw = dynamic_cast<PbwRing*>(ring.get());
        const LieAlgebra& lie = pbw->lie();
        for (int x = 0; x < nx() && ok; ++x)
          for (int a = 0; a < lie.dim() && ok; ++a)
            for (int b = 0; b < lie.dim() && ok; ++b) {
              // v <| [a,b] = (v <| a) <| b - (v <| b) <| a
              SVec lhs;
              for (const auto& [g, c] : lie.bracket[a][b]) addmul(lhs, c, gen_action[x][g]);
              SVec rhs;
              for (const auto& [y, c] : gen_action[x][a]) addmul(rhs, c, gen_action[y][b]);
              for (const auto& [y, c] : gen_action[x][b]) addmul(rhs, -c, gen_action[y][a]);
              if (lhs != rhs) {
                ok = false;
                wit = "(" + xspace.names[x] + "," + lie.names[a] + "," + lie.names[b] + ")";
              }
            }
      }
      rep.add("action-module-law", ok, wit);
    }
    return rep;
  }

private:
  std::map<std::pair<int, int>, SVec> act_memo_;
};

// ---------------------------------------------------------------------------
// Mixed words and the termination order.

// factor: (0, j) = J basis element, (1, x) = X letter
using Factor = std::pair<int, int>;
using MWord = std::vector<Factor>;
using MElem = std::map<MWord, Scalar>;

inline Factor j_factor(int i) { return {0, i}; }
inline Factor x_factor(int i) { return {1, i}; }

enum class Cmp { less, equal, greater, incomparable };

inline int inversions_of_x_subword(const MWord& w) {
  std::vector<int> xs;
  for (const auto& f : w)
    if (f.first == 1) xs.push_back(f.second);
  int inv = 0;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] > xs[j]) ++inv;
  return inv;
}

// The three-clause order: length, then the 0/1 sequence s(.) lexicographically
// (J symbols are 0 < 1 = X letters), then the mis-ordered-pair preorder on the
// X subwords (incomparable across different letter multisets).
inline Cmp word_order_cmp(const MWord& a, const MWord& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? Cmp::less : Cmp::greater;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? Cmp::less : Cmp::greater;
  std::map<int, int> ma, mb;
  for (const auto& f : a)
    if (f.first == 1) ++ma[f.second];
  for (const auto& f : b)
    if (f.first == 1) ++mb[f.second];
  if (ma != mb) return Cmp::incomparable;
  int ia = inversions_of_x_subword(a), ib = inversions_of_x_subword(b);
  if (ia == ib) return Cmp::equal;
  return ia < ib ? Cmp::less : Cmp::greater;
}

// total refinement of the order, for deterministic term selection
inline bool selection_less(const MWord& a, const MWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
  int ia = inversions_of_x_subword(a), ib = inversions_of_x_subword(b);
  if (ia != ib) return ia < ib;
  return a < b;
}

inline std::string mword_str(const MWord& w, const JPresentation& p) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& f : w) {
    if (!s.empty()) s += ".";
    s += f.first == 1 ? p.xspace.names[f.second] : p.ring->name(f.second);
  }
  return s;
}

inline std::string melem_str(const MElem& e, const JPresentation& p) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : e) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + mword_str(w, p);
  }
  return s;
}

// insert with adjacent J factors multiplied out
inline void add_canonical(MElem& dst, MWord w, const Scalar& c, JPresentation& p) {
  if (c.is_zero()) return;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].first == 0 && w[i + 1].first == 0) {
      SVec prod = p.ring->mul(w[i].second, w[i + 1].second);
      for (const auto& [k, v] : prod) {
        MWord nw;
        nw.reserve(w.size() - 1);
        nw.insert(nw.end(), w.begin(), w.begin() + i);
        nw.push_back(j_factor(k));
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        add_canonical(dst, std::move(nw), c * v, p);
      }
      return;
    }
  }
  auto it = dst.find(w);
  if (it == dst.end()) dst.emplace(std::move(w), c);
  else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

// Apply the applicable rule at position i of w; returns the replacement terms.
inline MElem apply_rule_at(const MWord& w, const Scalar& c, size_t i, JPresentation& p,
                           bool strict) {
  const FieldSpec& f = p.ring->field();
  MElem out;
  auto splice = [&](std::vector<Factor> mid) {
    MWord nw;
    nw.insert(nw.end(), w.begin(), w.begin() + i);
    nw.insert(nw.end(), mid.begin(), mid.end());
    nw.insert(nw.end(), w.begin() + i + 2, w.end());
    return nw;
  };
  if (w[i].first == 1 && w[i + 1].first == 0) {
    // (i): x a -> sum a_(1) (x <| a_(2))
    int x = w[i].second, a = w[i + 1].second;
    for (const auto& [a12, cc] : p.ring->comult(a))
      for (const auto& [y, d] : p.act(x, a12.second))
        add_canonical(out, splice({j_factor(a12.first), x_factor(y)}), c * cc * d, p);
  } else if (w[i].first == 1 && w[i + 1].first == 1 && w[i].second > w[i + 1].second) {
    // (ii): x y -> -y x + [x, y]
    int x = w[i].second, y = w[i + 1].second;
    add_canonical(out, splice({x_factor(y), x_factor(x)}), -c, p);
    for (const auto& [h, v] : p.bracket[x][y]) add_canonical(out, splice({j_factor(h)}), c * v, p);
  } else if (w[i].first == 1 && w[i + 1].first == 1 && w[i].second == w[i + 1].second) {
    // (iii): x x -> 1/2 [x, x]
    int x = w[i].second;
    for (const auto& [h, v] : p.bracket[x][x])
      add_canonical(out, splice({j_factor(h)}), c * v * half(f), p);
  } else {
    throw error(ErrKind::internal, "no rule applies at the requested position");
  }
  if (strict)
    for (const auto& [nw, nc] : out) {
      (void)nc;
      if (word_order_cmp(nw, w) != Cmp::less)
        throw error(ErrKind::internal,
                    "order violation: " + mword_str(nw, p) + " !< " + mword_str(w, p));
    }
  return out;
}

inline bool find_redex(const MWord& w, size_t& pos) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].first == 1 && w[i + 1].first == 0) { pos = i; return true; }
    if (w[i].first == 1 && w[i + 1].first == 1 && w[i].second >= w[i + 1].second) {
      pos = i;
      return true;
    }
  }
  return false;
}

// One rewriting step: leftmost applicable rule on the order-largest reducible
// term. Returns whether anything changed.
inline bool reduce_once(MElem& e, JPresentation& p, bool strict = false) {
  const MWord* best = nullptr;
  size_t best_pos = 0;
  for (const auto& [w, c] : e) {
    (void)c;
    size_t pos;
    if (!find_redex(w, pos)) continue;
    if (!best || selection_less(*best, w)) {
      best = &w;
      best_pos = pos;
    }
  }
  if (!best) return false;
  MWord w = *best;
  Scalar c = e.at(w);
  e.erase(w);
  MElem repl = apply_rule_at(w, c, best_pos, p, strict);
  for (const auto& [nw, nc] : repl) {
    auto it = e.find(nw);
    if (it == e.end()) e.emplace(nw, nc);
    else {
      it->second += nc;
      if (it->second.is_zero()) e.erase(it);
    }
  }
  return true;
}

// Normal form: left J-coefficients on strictly increasing X words.
struct NormalElement {
  std::map<Word, SVec> terms; // increasing X word -> element of J

  bool operator==(const NormalElement& o) const { return terms == o.terms; }

  bool is_zero() const { return terms.empty(); }

  NormalElement minus(const NormalElement& o, const FieldSpec& f) const {
    NormalElement out = *this;
    for (const auto& [w, v] : o.terms) {
      SVec cur = out.terms.count(w) ? out.terms[w] : SVec{};
      addmul(cur, -Scalar::one(f), v);
      if (cur.empty()) out.terms.erase(w);
      else out.terms[w] = cur;
    }
    return out;
  }
};

inline std::string normal_str(const NormalElement& n, const JPresentation& p) {
  if (n.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, v] : n.terms) {
    if (!s.empty()) s += " + ";
    std::string wn;
    for (int l : w) wn += (wn.empty() ? "" : "^") + p.xspace.names[l];
    s += "(" + vec_str(v, [&] {
           std::vector<std::string> jn;
           for (int i = 0; i < p.ring->dim(); ++i) jn.push_back(p.ring->name(i));
           return jn;
         }()) + ")" + (wn.empty() ? "" : "*" + wn);
  }
  return s;
}

inline NormalElement collect_normal(const MElem& e, JPresentation& p) {
  NormalElement out;
  const FieldSpec& f = p.ring->field();
  for (const auto& [w, c] : e) {
    SVec jpart;
    Word xword;
    size_t i = 0;
    if (!w.empty() && w[0].first == 0) {
      jpart = scaled(unit_vec(w[0].second, f), c);
      i = 1;
    } else {
      jpart = scaled(p.ring->unit(), c);
    }
    for (; i < w.size(); ++i) {
      if (w[i].first != 1)
        throw error(ErrKind::internal, "non-normal word in collect: " + mword_str(w, p));
      if (!xword.empty() && xword.back() >= w[i].second)
        throw error(ErrKind::internal, "non-increasing word in collect: " + mword_str(w, p));
      xword.push_back(w[i].second);
    }
    SVec cur = out.terms.count(xword) ? out.terms[xword] : SVec{};
    addmul(cur, Scalar::one(f), jpart);
    if (cur.empty()) out.terms.erase(xword);
    else out.terms[xword] = cur;
  }
  return out;
}

inline NormalElement normalize(MElem e, JPresentation& p, bool strict = false) {
  while (reduce_once(e, p, strict)) {
  }
  return collect_normal(e, p);
}

inline MElem melem_of(const NormalElement& n, JPresentation& p) {
  MElem out;
  for (const auto& [w, v] : n.terms)
    for (const auto& [a, c] : v) {
      MWord mw;
      mw.push_back(j_factor(a));
      for (int l : w) mw.push_back(x_factor(l));
      add_canonical(out, std::move(mw), c, p);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Overlap ambiguities (iv) x y a (x >= y) and (v) x y z (x >= y >= z).

struct OverlapItem {
  std::string word;
  bool resolvable = true;
  std::string difference; // rendered normal form of path1 - path2
};

struct OverlapReport {
  std::vector<OverlapItem> items;
  bool all_resolvable = true;
};

inline OverlapReport check_overlaps(JPresentation& p, bool strict = false) {
  OverlapReport rep;
  const FieldSpec& f = p.ring->field();
  auto resolve = [&](const MWord& w, size_t pos1, size_t pos2) {
    MElem e1 = apply_rule_at(w, Scalar::one(f), pos1, p, strict);
    MElem e2 = apply_rule_at(w, Scalar::one(f), pos2, p, strict);
    NormalElement n1 = normalize(std::move(e1), p, strict);
    NormalElement n2 = normalize(std::move(e2), p, strict);
    OverlapItem item;
    item.word = mword_str(w, p);
    NormalElement diff = n1.minus(n2, f);
    if (!diff.is_zero()) {
      item.resolvable = false;
      item.difference = normal_str(diff, p);
      rep.all_resolvable = false;
    }
    rep.items.push_back(std::move(item));
  };
  auto gens = p.ring->generator_indices();
  for (int x = 0; x < p.nx(); ++x)
    for (int y = 0; y <= x; ++y) {
      for (int a : gens) resolve({x_factor(x), x_factor(y), j_factor(a)}, 0, 1);
      for (int z = 0; z <= y; ++z) resolve({x_factor(x), x_factor(y), x_factor(z)}, 0, 1);
    }
  return rep;
}

} // namespace shopf
