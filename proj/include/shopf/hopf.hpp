// Finite-dimensional Hopf superalgebras by structure constants: exhaustive
// axiom verification with Koszul signs, duals, primitives, coradical, the
// Z/2 smash coproduct, and structural predicates.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shopf/linalg.hpp"

namespace shopf {

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string witness; // offending tuple and both sides, empty when pass
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
  void add(const std::string& name, bool pass, const std::string& witness = "") {
    entries.push_back({name, pass, witness});
  }
  void merge(const CheckReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
  }
};

struct SuperCoalgebra {
  FieldSpec field;
  SuperSpace space;
  std::vector<SVec2> comult;
  std::vector<Scalar> counit;

  int dim() const { return space.dim(); }

  SVec2 comult_of(const SVec& v) const {
    SVec2 out;
    for (const auto& [i, c] : v) addmul(out, c, comult[i]);
    return out;
  }
  Scalar counit_of(const SVec& v) const {
    Scalar s = Scalar::zero(field);
    for (const auto& [i, c] : v) s += c * counit[i];
    return s;
  }
};

struct HopfAlgebra {
  FieldSpec field;
  SuperSpace space;
  std::vector<std::vector<SVec>> mult; // mult[i][j] = e_i * e_j
  SVec unit;
  std::vector<SVec2> comult;
  std::vector<Scalar> counit;
  std::vector<SVec> antipode; // may be empty before solve_antipode

  int dim() const { return space.dim(); }
  bool has_antipode() const { return !antipode.empty(); }

  SVec mul(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [i, ca] : a)
      for (const auto& [j, cb] : b) addmul(out, ca * cb, mult[i][j]);
    return out;
  }

  SVec2 comult_of(const SVec& v) const {
    SVec2 out;
    for (const auto& [i, c] : v) addmul(out, c, comult[i]);
    return out;
  }

  Scalar counit_of(const SVec& v) const {
    Scalar s = Scalar::zero(field);
    for (const auto& [i, c] : v) s += c * counit[i];
    return s;
  }

  SVec antipode_of(const SVec& v) const {
    SVec out;
    for (const auto& [i, c] : v) addmul(out, c, antipode[i]);
    return out;
  }

  // product in H(x)H: (a(x)b)(a'(x)b') = (-1)^{|b||a'|} aa'(x)bb'
  SVec2 mul2(const SVec2& x, const SVec2& y) const {
    SVec2 out;
    for (const auto& [ij, c] : x)
      for (const auto& [kl, d] : y) {
        Scalar s = c * d;
        if (space.parity[ij.second] == 1 && space.parity[kl.first] == 1) s = -s;
        const SVec& left = mult[ij.first][kl.first];
        const SVec& right = mult[ij.second][kl.second];
        for (const auto& [a, ca] : left)
          for (const auto& [b, cb] : right) add_term(out, {a, b}, s * ca * cb);
      }
    return out;
  }

  SuperCoalgebra coalgebra() const { return SuperCoalgebra{field, space, comult, counit}; }

  std::string show(const SVec& v) const { return vec_str(v, space.names); }
  std::string show2(const SVec2& v) const {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [ij, c] : v) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + space.names[ij.first] + "(x)" + space.names[ij.second];
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// Axiom verification.

inline CheckReport verify_coalgebra(const SuperCoalgebra& c) {
  CheckReport rep;
  const FieldSpec& f = c.field;
  int n = c.dim();
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      std::map<std::tuple<int, int, int>, Scalar> lhs, rhs;
      auto acc = [&](std::map<std::tuple<int, int, int>, Scalar>& m,
                     const std::tuple<int, int, int>& k, const Scalar& v) {
        auto it = m.find(k);
        if (it == m.end()) {
          if (!v.is_zero()) m.emplace(k, v);
        } else {
          it->second += v;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      for (const auto& [ab, v] : c.comult[i]) {
        for (const auto& [a12, w] : c.comult[ab.first])
          acc(lhs, {a12.first, a12.second, ab.second}, v * w);
        for (const auto& [b12, w] : c.comult[ab.second])
          acc(rhs, {ab.first, b12.first, b12.second}, v * w);
      }
      if (lhs != rhs) {
        ok = false;
        wit = "basis " + c.space.names[i];
      }
    }
    rep.add("coassociativity", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      SVec l, r;
      for (const auto& [ab, v] : c.comult[i]) {
        add_term(l, ab.second, v * c.counit[ab.first]);
        add_term(r, ab.first, v * c.counit[ab.second]);
      }
      SVec want = unit_vec(i, f);
      if (l != want || r != want) {
        ok = false;
        wit = "basis " + c.space.names[i];
      }
    }
    rep.add("counit", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
      for (const auto& [ab, v] : c.comult[i]) {
        (void)v;
        if ((c.space.parity[ab.first] + c.space.parity[ab.second]) % 2 != c.space.parity[i]) {
          ok = false;
          wit = "comult of " + c.space.names[i] + " has parity-mixed term";
          break;
        }
      }
    rep.add("comult-parity", ok, wit);
  }
  return rep;
}

inline CheckReport verify_hopf(const HopfAlgebra& h) {
  CheckReport rep;
  const FieldSpec& f = h.field;
  int n = h.dim();

  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          SVec l = h.mul(h.mult[i][j], unit_vec(k, f));
          SVec r = h.mul(unit_vec(i, f), h.mult[j][k]);
          if (l != r) {
            ok = false;
            wit = "(" + h.space.names[i] + "," + h.space.names[j] + "," + h.space.names[k] +
                  "): " + h.show(l) + " vs " + h.show(r);
          }
        }
    rep.add("associativity", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      SVec e = unit_vec(i, f);
      if (h.mul(h.unit, e) != e || h.mul(e, h.unit) != e) {
        ok = false;
        wit = "basis " + h.space.names[i];
      }
    }
    rep.add("unit", ok, wit);
  }

  rep.merge(verify_coalgebra(h.coalgebra()));

  {
    bool ok = true;
    std::string wit;
    // Delta and eps are algebra maps; Delta(1) = 1(x)1
    SVec2 unit2;
    for (const auto& [a, ca] : h.unit)
      for (const auto& [b, cb] : h.unit) add_term(unit2, {a, b}, ca * cb);
    if (h.comult_of(h.unit) != unit2) {
      ok = false;
      wit = "Delta(1) != 1(x)1";
    }
    if (ok && !(h.counit_of(h.unit) == Scalar::one(f))) {
      ok = false;
      wit = "eps(1) != 1";
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        SVec2 l = h.comult_of(h.mult[i][j]);
        SVec2 r = h.mul2(h.comult[i], h.comult[j]);
        if (l != r) {
          ok = false;
          wit = "(" + h.space.names[i] + "," + h.space.names[j] + "): Delta(ab) = " + h.show2(l) +
                " vs Delta(a)Delta(b) = " + h.show2(r);
        }
        if (ok) {
          Scalar le = h.counit_of(h.mult[i][j]);
          Scalar re = h.counit[i] * h.counit[j];
          if (le != re) {
            ok = false;
            wit = "eps not multiplicative at (" + h.space.names[i] + "," + h.space.names[j] + ")";
          }
        }
      }
    rep.add("bialgebra-compatibility", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (!h.mult[i][j].empty()) {
          int pm = (h.space.parity[i] + h.space.parity[j]) % 2;
          for (const auto& [k, c] : h.mult[i][j]) {
            (void)c;
            if (h.space.parity[k] != pm) {
              ok = false;
              wit = "product " + h.space.names[i] + "*" + h.space.names[j] + " has parity-mixed term";
              break;
            }
          }
        }
    rep.add("mult-parity", ok, wit);
  }
  {
    bool ok = h.has_antipode();
    std::string wit = ok ? "" : "no antipode given/solved";
    for (int i = 0; i < n && ok; ++i) {
      SVec l, r;
      for (const auto& [ab, v] : h.comult[i]) {
        addmul(l, v, h.mul(h.antipode[ab.first], unit_vec(ab.second, f)));
        addmul(r, v, h.mul(unit_vec(ab.first, f), h.antipode[ab.second]));
      }
      SVec want = scaled(h.unit, h.counit[i]);
      if (l != want || r != want) {
        ok = false;
        wit = "basis " + h.space.names[i] + ": S*id = " + h.show(l) + ", id*S = " + h.show(r) +
              ", eps(x)1 = " + h.show(want);
      }
    }
    rep.add("antipode", ok, wit);
  }
  return rep;
}

struct PredicateResult {
  bool pass = true;
  std::string witness;
};

inline PredicateResult verify_super_commutative(const HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      SVec rhs = h.mult[j][i];
      Scalar s = (h.space.parity[i] == 1 && h.space.parity[j] == 1) ? -Scalar::one(f)
                                                                    : Scalar::one(f);
      if (h.mult[i][j] != scaled(rhs, s))
        return {false, "(" + h.space.names[i] + "," + h.space.names[j] + ")"};
    }
  return {};
}

inline PredicateResult verify_super_cocommutative(const HopfAlgebra& h) {
  for (int i = 0; i < h.dim(); ++i) {
    SVec2 sw;
    for (const auto& [ab, c] : h.comult[i]) {
      Scalar s = c;
      if (h.space.parity[ab.first] == 1 && h.space.parity[ab.second] == 1) s = -s;
      add_term(sw, {ab.second, ab.first}, s);
    }
    if (sw != h.comult[i]) return {false, "basis " + h.space.names[i]};
  }
  return {};
}

inline PredicateResult antipode_is_antimorphism(const HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      SVec lhs = h.antipode_of(h.mult[i][j]);
      Scalar s = (h.space.parity[i] == 1 && h.space.parity[j] == 1) ? -Scalar::one(f)
                                                                    : Scalar::one(f);
      SVec rhs = scaled(h.mul(h.antipode[j], h.antipode[i]), s);
      if (lhs != rhs) return {false, "(" + h.space.names[i] + "," + h.space.names[j] + ")"};
    }
  return {};
}

// Solve S as the convolution inverse of the identity; throws not_hopf when no
// solution exists.
inline void solve_antipode(HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  int n = h.dim();
  // variables s_{i,a} : S(e_a) = sum_i s_{i,a} e_i ; column index a*n + i
  SMat sys(0, n * n);
  std::vector<Scalar> rhs;
  int row = 0;
  for (int e = 0; e < n; ++e) {
    // sum_{(a,b) in Delta e} S(e_a) e_b = eps(e) 1, coordinatewise
    std::map<int, SVec> out_coord; // output coordinate -> linear form in s
    for (const auto& [ab, c] : h.comult[e])
      for (int i = 0; i < n; ++i) {
        // contribution of s_{i,a}: c * (e_i e_b)
        const SVec& prod = h.mult[i][ab.second];
        for (const auto& [k, pv] : prod) add_term(out_coord[k], ab.first * n + i, c * pv);
      }
    SVec want = scaled(h.unit, h.counit[e]);
    for (int k = 0; k < n; ++k) {
      auto it = out_coord.find(k);
      SVec rowvec = it == out_coord.end() ? SVec{} : it->second;
      Scalar b = coeff(want, k, f);
      if (rowvec.empty() && b.is_zero()) continue;
      sys.rows.push_back(rowvec);
      rhs.push_back(b);
      ++row;
    }
  }
  sys.cols = n * n;
  // Gaussian solve of sys * s = rhs
  std::vector<SVec> rows = sys.rows;
  std::vector<Scalar> b = rhs;
  std::vector<std::pair<int, int>> pivots; // (row, col)
  size_t rr = 0;
  for (int c = 0; c < sys.cols && rr < rows.size(); ++c) {
    size_t sel = rows.size();
    for (size_t r = rr; r < rows.size(); ++r)
      if (!coeff(rows[r], c, f).is_zero()) { sel = r; break; }
    if (sel == rows.size()) continue;
    std::swap(rows[rr], rows[sel]);
    std::swap(b[rr], b[sel]);
    Scalar inv = coeff(rows[rr], c, f).inverse();
    rows[rr] = scaled(rows[rr], inv);
    b[rr] = b[rr] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rr) continue;
      Scalar v = coeff(rows[r], c, f);
      if (!v.is_zero()) {
        addmul(rows[r], -v, rows[rr]);
        b[r] = b[r] - v * b[rr];
      }
    }
    pivots.push_back({(int)rr, c});
    ++rr;
  }
  for (size_t r = rr; r < rows.size(); ++r)
    if (!b[r].is_zero())
      throw error(ErrKind::not_hopf, "no antipode exists: convolution inverse unsolvable");
  // column a*n + i carries the coefficient of e_i in S(e_a); free vars are 0
  std::vector<SVec> anti(n);
  for (const auto& [r, c] : pivots)
    if (!b[r].is_zero()) anti[c / n][c % n] = b[r];
  h.antipode = std::move(anti);
}

// ---------------------------------------------------------------------------
// Duals (sign-free identification H* (x) H* = (H (x) H)*).

inline HopfAlgebra dual(const HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  int n = h.dim();
  HopfAlgebra d;
  d.field = f;
  std::vector<std::string> names;
  for (const auto& s : h.space.names) names.push_back(s + "*");
  d.space = SuperSpace(names, h.space.parity);
  d.mult.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar c = coeff(h.comult[k], {i, j}, f);
        if (!c.is_zero()) d.mult[i][j][k] = c;
      }
  d.unit.clear();
  for (int k = 0; k < n; ++k) add_term(d.unit, k, h.counit[k]);
  d.comult.assign(n, SVec2{});
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar c = coeff(h.mult[i][j], k, f);
        if (!c.is_zero()) add_term(d.comult[k], {i, j}, c);
      }
  d.counit.assign(n, Scalar::zero(f));
  for (int k = 0; k < n; ++k) d.counit[k] = coeff(h.unit, k, f);
  if (h.has_antipode()) {
    d.antipode.assign(n, SVec{});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar c = coeff(h.antipode[j], i, f);
        if (!c.is_zero()) d.antipode[i][j] = c;
      }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Primitives and the super-commutator bracket.

struct PrimitiveData {
  std::vector<SVec> basis;   // vectors in H, parity-homogeneous
  std::vector<int> parity;
  // bracket[i][j]: coordinates of [b_i, b_j] over `basis`
  std::vector<std::vector<SVec>> bracket;
};

inline SVec super_commutator(const HopfAlgebra& h, const SVec& u, const SVec& v, int pu, int pv) {
  SVec out = h.mul(u, v);
  Scalar s = (pu == 1 && pv == 1) ? Scalar::one(h.field) : -Scalar::one(h.field);
  addmul(out, s, h.mul(v, u));
  return out;
}

inline std::vector<SVec> primitive_vectors(const HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  int n = h.dim();
  // rows: coordinates of Delta(u) - 1(x)u - u(x)1 over H(x)H
  SMat sys(0, n);
  std::map<std::pair<int, int>, int> rowidx;
  auto row_of = [&](std::pair<int, int> key) {
    auto it = rowidx.find(key);
    if (it != rowidx.end()) return it->second;
    int r = (int)sys.rows.size();
    sys.rows.push_back(SVec{});
    rowidx.emplace(key, r);
    return r;
  };
  for (int j = 0; j < n; ++j) {
    SVec2 d = h.comult[j];
    for (const auto& [a, ca] : h.unit) add_term(d, {a, j}, -ca);
    for (const auto& [a, ca] : h.unit) add_term(d, {j, a}, -ca);
    for (const auto& [ab, c] : d) add_term(sys.rows[row_of(ab)], j, c);
  }
  sys.cols = n;
  return kernel(sys, f);
}

inline PrimitiveData primitives(const HopfAlgebra& h) {
  PrimitiveData p;
  p.basis = primitive_vectors(h);
  for (const auto& v : p.basis) p.parity.push_back(std::max(0, h.space.parity_of(v)));
  Echelon span(h.field);
  for (const auto& v : p.basis) span.insert(v);
  int m = (int)p.basis.size();
  p.bracket.assign(m, std::vector<SVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      SVec br = super_commutator(h, p.basis[i], p.basis[j], p.parity[i], p.parity[j]);
      auto c = span.coords(br);
      if (!c)
        throw error(ErrKind::internal, "primitive bracket does not close in P(H)");
      p.bracket[i][j] = *c;
    }
  return p;
}

// ---------------------------------------------------------------------------
// Radical / coradical. The Jacobson radical is the kernel of the trace form
// tr(L_{xy}) when char = 0 or p > dim (Dickson); over F_p a plain-commutative
// algebra falls back to the nilradical as the kernel of x -> x^{p^m}.

inline std::vector<SVec> algebra_radical(const HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  int n = h.dim();
  long p = f.characteristic();
  if (p == 0 || p > n) {
    std::vector<Scalar> tr(n, Scalar::zero(f));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) tr[k] += coeff(h.mult[k][i], i, f);
    SMat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar s = Scalar::zero(f);
        for (const auto& [k, c] : h.mult[i][j]) s += c * tr[k];
        b.set(i, j, s);
      }
    return kernel(b, f);
  }
  bool comm = true;
  for (int i = 0; i < n && comm; ++i)
    for (int j = 0; j < n && comm; ++j)
      if (h.mult[i][j] != h.mult[j][i]) comm = false;
  if (!comm)
    throw error(ErrKind::unsupported_characteristic,
                "radical needs char 0 or p > dim for a noncommutative algebra (p=" +
                    std::to_string(p) + ", dim=" + std::to_string(n) + ")");
  // commutative: nilradical = ker(x -> x^{p^m}), p^m >= dim; Frobenius is
  // F_p-linear here
  SMat frob(n, n);
  for (int i = 0; i < n; ++i) {
    SVec v = unit_vec(i, f);
    SVec acc = v;
    for (long k = 1; k < p; ++k) acc = h.mul(acc, v);
    for (const auto& [j, c] : acc) frob.set(j, i, c);
  }
  // frob is the matrix of x -> x^p acting on coordinates (columns = inputs);
  // iterate m times
  long pm = p;
  SMat fm = frob;
  while (pm < n) {
    fm = SMat::mul(frob, fm, f);
    pm *= p;
  }
  // kernel of the column-map: treat columns as the map's matrix
  SMat colmap(n, n);
  for (int r = 0; r < (int)fm.rows.size(); ++r)
    for (const auto& [c, v] : fm.rows[r]) colmap.set(r, c, v);
  return kernel(colmap, f);
}

// Dual algebra of a coalgebra (transpose of the comultiplication), as a
// HopfAlgebra with only the algebra part populated.
inline HopfAlgebra dual_algebra_of(const SuperCoalgebra& c) {
  const FieldSpec& f = c.field;
  int n = c.dim();
  HopfAlgebra a;
  a.field = f;
  std::vector<std::string> names;
  for (const auto& s : c.space.names) names.push_back(s + "*");
  a.space = SuperSpace(names, c.space.parity);
  a.mult.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar v = coeff(c.comult[k], {i, j}, f);
        if (!v.is_zero()) a.mult[i][j][k] = v;
      }
  for (int k = 0; k < n; ++k) add_term(a.unit, k, c.counit[k]);
  a.comult.assign(n, SVec2{});
  a.counit.assign(n, Scalar::zero(f));
  return a;
}

// Coradical of a finite-dimensional super-coalgebra: annihilator in C of the
// Jacobson radical of the dual algebra.
inline std::vector<SVec> coradical(const SuperCoalgebra& c) {
  auto rad = algebra_radical(dual_algebra_of(c));
  SMat rows((int)rad.size(), c.dim());
  for (size_t r = 0; r < rad.size(); ++r) rows.rows[r] = rad[r];
  auto basis = kernel(rows, c.field);
  // sanity: coradical is a super-subcoalgebra
  Echelon span(c.field);
  for (const auto& v : basis) span.insert(v);
  for (const auto& v : basis) {
    SVec2 d = c.comult_of(v);
    std::map<int, SVec> by_right;
    for (const auto& [ab, s] : d) add_term(by_right[ab.second], ab.first, s);
    for (auto& [j, left] : by_right) {
      (void)j;
      if (!span.member(left))
        throw error(ErrKind::internal, "coradical is not a subcoalgebra (left leg)");
    }
  }
  return basis;
}

inline bool is_irreducible(const SuperCoalgebra& c) { return coradical(c).size() == 1; }
inline bool is_irreducible(const HopfAlgebra& h) { return is_irreducible(h.coalgebra()); }
inline bool is_cosemisimple(const HopfAlgebra& h) {
  return (int)coradical(h.coalgebra()).size() == h.dim();
}
inline bool is_semisimple_algebra(const HopfAlgebra& h) { return algebra_radical(h).empty(); }
inline bool is_purely_even(const HopfAlgebra& h) { return h.space.purely_even(); }

// ---------------------------------------------------------------------------
// Smash coproduct by Z/2: the ordinary coalgebra on kZ2 (x) C with
// Delta(i (x) c) = sum (i (x) c_(1)) (x) ((|c_(1)|+i) (x) c_(2)).

inline SuperCoalgebra smash_coproduct_z2(const SuperCoalgebra& c) {
  const FieldSpec& f = c.field;
  int n = c.dim();
  std::vector<std::string> names;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < n; ++k)
      names.push_back(std::to_string(i) + "|" + c.space.names[k]);
  SuperCoalgebra out;
  out.field = f;
  out.space = SuperSpace(names, std::vector<int>(2 * n, 0));
  out.comult.assign(2 * n, SVec2{});
  out.counit.assign(2 * n, Scalar::zero(f));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < n; ++k) {
      int idx = i * n + k;
      out.counit[idx] = c.counit[k];
      for (const auto& [ab, v] : c.comult[k]) {
        int j = (c.space.parity[ab.first] + i) % 2;
        add_term(out.comult[idx], {i * n + ab.first, j * n + ab.second}, v);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Sub- and quotient Hopf algebras.

struct SubHopf {
  HopfAlgebra sub;
  std::vector<SVec> basis; // reduced echelon basis, vectors in the ambient H
};

inline SubHopf sub_hopf(const HopfAlgebra& h, const std::vector<SVec>& span_vectors,
                        const std::string& prefix = "s") {
  const FieldSpec& f = h.field;
  Echelon span(f);
  for (const auto& v : span_vectors) span.insert(v);
  std::vector<SVec> basis = span.basis();
  std::vector<int> piv = span.pivots();
  int m = (int)basis.size();
  // coordinates = entries at pivot positions (reduced basis has unit pivots)
  auto coords1 = [&](const SVec& v) {
    SVec c;
    for (int k = 0; k < m; ++k) add_term(c, k, coeff(v, piv[k], f));
    // verify v = sum c_k basis_k
    SVec rec;
    for (const auto& [k, s] : c) addmul(rec, s, basis[k]);
    if (rec != v) throw error(ErrKind::internal, "vector not in subspace");
    return c;
  };
  auto coords2 = [&](const SVec2& v) {
    SVec2 c;
    // read pivot entries on both legs, then verify exact reconstruction
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        Scalar s = coeff(v, {piv[k], piv[l]}, f);
        add_term(c, {k, l}, s);
      }
    SVec2 rec;
    for (const auto& [kl, s] : c)
      for (const auto& [a, ca] : basis[kl.first])
        for (const auto& [b, cb] : basis[kl.second]) add_term(rec, {a, b}, s * ca * cb);
    if (rec != v) throw error(ErrKind::internal, "tensor not in subspace(x)subspace");
    return c;
  };
  SubHopf out;
  out.basis = basis;
  HopfAlgebra& s = out.sub;
  s.field = f;
  std::vector<std::string> names;
  std::vector<int> par;
  for (int k = 0; k < m; ++k) {
    names.push_back(prefix + std::to_string(k));
    par.push_back(std::max(0, h.space.parity_of(basis[k])));
  }
  s.space = SuperSpace(names, par);
  s.mult.assign(m, std::vector<SVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.mult[i][j] = coords1(h.mul(basis[i], basis[j]));
  s.unit = coords1(h.unit);
  s.comult.assign(m, SVec2{});
  for (int k = 0; k < m; ++k) s.comult[k] = coords2(h.comult_of(basis[k]));
  s.counit.assign(m, Scalar::zero(f));
  for (int k = 0; k < m; ++k) s.counit[k] = h.counit_of(basis[k]);
  if (h.has_antipode()) {
    s.antipode.assign(m, SVec{});
    for (int k = 0; k < m; ++k) s.antipode[k] = coords1(h.antipode_of(basis[k]));
  }
  return out;
}

struct QuotientHopf {
  HopfAlgebra quot;
  std::vector<int> rep;      // quotient basis k -> ambient coordinate position
  std::vector<SVec> ideal;   // reduced ideal basis
};

// Quotient by the two-sided (verified) Hopf super-ideal spanned by `ideal`.
inline QuotientHopf quotient_hopf(const HopfAlgebra& h, const std::vector<SVec>& ideal_span) {
  const FieldSpec& f = h.field;
  int n = h.dim();
  Echelon ide(f);
  for (const auto& v : ideal_span) ide.insert(v);
  // closure under multiplication both sides
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SVec> cur = ide.basis();
    for (const auto& v : cur)
      for (int i = 0; i < n; ++i) {
        if (ide.insert(h.mul(unit_vec(i, f), v))) grew = true;
        if (ide.insert(h.mul(v, unit_vec(i, f)))) grew = true;
      }
  }
  std::vector<int> piv = ide.pivots();
  std::vector<bool> is_piv(n, false);
  for (int p : piv) is_piv[p] = true;
  QuotientHopf out;
  out.ideal = ide.basis();
  for (int i = 0; i < n; ++i)
    if (!is_piv[i]) out.rep.push_back(i);
  int m = (int)out.rep.size();
  std::map<int, int> pos; // ambient coordinate -> quotient index
  for (int k = 0; k < m; ++k) pos[out.rep[k]] = k;
  // pi: reduce mod ideal, then read complement coordinates
  auto pi = [&](const SVec& v) {
    SVec red = v;
    for (const auto& r : ide.basis()) {
      Scalar c = coeff(red, r.begin()->first, f);
      if (!c.is_zero()) addmul(red, -c, r);
    }
    SVec outv;
    for (const auto& [i, c] : red) {
      auto it = pos.find(i);
      if (it == pos.end()) throw error(ErrKind::internal, "quotient reduction failed");
      add_term(outv, it->second, c);
    }
    return outv;
  };
  // Hopf-ideal checks
  for (const auto& v : ide.basis()) {
    if (!h.counit_of(v).is_zero())
      throw error(ErrKind::invalid_input, "ideal is not contained in ker(eps)");
    if (h.has_antipode()) {
      SVec red = h.antipode_of(v);
      if (!ide.member(red)) throw error(ErrKind::invalid_input, "ideal not antipode-stable");
    }
    SVec2 d = h.comult_of(v);
    // (pi (x) pi)(Delta v) must vanish
    SVec2 img;
    for (const auto& [ab, c] : d) {
      SVec l = pi(unit_vec(ab.first, f));
      SVec r = pi(unit_vec(ab.second, f));
      for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) add_term(img, {a, b}, c * ca * cb);
    }
    if (!img.empty()) throw error(ErrKind::invalid_input, "ideal is not a coideal");
  }
  HopfAlgebra& q = out.quot;
  q.field = f;
  std::vector<std::string> names;
  std::vector<int> par;
  for (int k = 0; k < m; ++k) {
    names.push_back(h.space.names[out.rep[k]]);
    par.push_back(h.space.parity[out.rep[k]]);
  }
  q.space = SuperSpace(names, par);
  auto sigma = [&](int k) { return unit_vec(out.rep[k], f); };
  q.mult.assign(m, std::vector<SVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) q.mult[i][j] = pi(h.mul(sigma(i), sigma(j)));
  q.unit = pi(h.unit);
  q.comult.assign(m, SVec2{});
  for (int k = 0; k < m; ++k) {
    SVec2 d = h.comult_of(sigma(k));
    for (const auto& [ab, c] : d) {
      SVec l = pi(unit_vec(ab.first, f));
      SVec r = pi(unit_vec(ab.second, f));
      for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) add_term(q.comult[k], {a, b}, c * ca * cb);
    }
  }
  q.counit.assign(m, Scalar::zero(f));
  for (int k = 0; k < m; ++k) q.counit[k] = h.counit_of(sigma(k));
  if (h.has_antipode()) {
    q.antipode.assign(m, SVec{});
    for (int k = 0; k < m; ++k) q.antipode[k] = pi(h.antipode_of(sigma(k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// underline(H), odd primitives and the adjoint action (super-cocommutative H).

// Largest ordinary subcoalgebra underline(H) = Delta^{-1}(H_0 (x) H_0),
// computed as the kernel of Delta followed by the projection onto the
// components with an odd tensor leg, restricted to H_0.
inline std::vector<SVec> underline_vectors(const HopfAlgebra& h) {
  const FieldSpec& f = h.field;
  int n = h.dim();
  SMat sys(0, n);
  std::map<std::pair<int, int>, int> rowidx;
  for (int j = 0; j < n; ++j) {
    if (h.space.parity[j] == 1) {
      // odd basis vectors are excluded from the domain H_0: forced 0
      sys.rows.push_back(unit_vec(j, f));
      continue;
    }
    for (const auto& [ab, c] : h.comult[j]) {
      if (h.space.parity[ab.first] == 0 && h.space.parity[ab.second] == 0) continue;
      auto it = rowidx.find(ab);
      int r;
      if (it == rowidx.end()) {
        r = (int)sys.rows.size();
        sys.rows.push_back(SVec{});
        rowidx.emplace(ab, r);
      } else {
        r = it->second;
      }
      add_term(sys.rows[r], j, c);
    }
  }
  sys.cols = n;
  return kernel(sys, f);
}

struct UnderlineData {
  SubHopf j;                     // underline(H) as a Hopf algebra
  std::vector<SVec> vh;          // odd primitives, vectors in H
  // action[v][a]: coordinates over vh of vh[v] <| (basis a of underline)
  std::vector<std::vector<SVec>> action;
};

inline UnderlineData underline(const HopfAlgebra& h, const std::string& prefix = "j") {
  auto cocom = verify_super_cocommutative(h);
  if (!cocom.pass)
    throw error(ErrKind::invalid_input, "underline(H) needs super-cocommutative input, witness " +
                                            cocom.witness);
  const FieldSpec& f = h.field;
  UnderlineData out;
  out.j = sub_hopf(h, underline_vectors(h), prefix);
  auto prim = primitives(h);
  for (size_t i = 0; i < prim.basis.size(); ++i)
    if (prim.parity[i] == 1) out.vh.push_back(prim.basis[i]);
  Echelon vspan(f);
  for (const auto& v : out.vh) vspan.insert(v);
  out.action.assign(out.vh.size(), std::vector<SVec>(out.j.basis.size()));
  for (size_t v = 0; v < out.vh.size(); ++v)
    for (size_t a = 0; a < out.j.basis.size(); ++a) {
      // v <| a = sum S(a_(1)) v a_(2)
      SVec res;
      SVec2 da = h.comult_of(out.j.basis[a]);
      for (const auto& [a12, c] : da)
        addmul(res, c,
               h.mul(h.mul(h.antipode[a12.first], out.vh[v]), unit_vec(a12.second, f)));
      auto coords = vspan.coords(res);
      if (!coords)
        throw error(ErrKind::internal, "adjoint action does not preserve the odd primitives");
      out.action[v][a] = *coords;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms.

struct MorphismData {
  const HopfAlgebra* source = nullptr;
  const HopfAlgebra* target = nullptr;
  SMat matrix; // rows = target coordinates, columns = source coordinates

  SVec apply(const SVec& v) const { return matrix.apply(v, source->field); }
};

inline CheckReport verify_morphism(const MorphismData& m) {
  CheckReport rep;
  const HopfAlgebra& a = *m.source;
  const HopfAlgebra& b = *m.target;
  const FieldSpec& f = a.field;
  int n = a.dim();
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      SVec img = m.apply(unit_vec(i, f));
      int pi = -1;
      try {
        pi = b.space.parity_of(img);
      } catch (const error&) {
        ok = false;
      }
      if (ok && pi != -1 && pi != a.space.parity[i]) ok = false;
      if (!ok) wit = "basis " + a.space.names[i];
    }
    rep.add("parity-preserving", ok, wit);
  }
  {
    bool ok = m.apply(a.unit) == b.unit;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (m.apply(a.mult[i][j]) != b.mul(m.apply(unit_vec(i, f)), m.apply(unit_vec(j, f))))
          ok = false;
    rep.add("algebra-map", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      SVec2 lhs = b.comult_of(m.apply(unit_vec(i, f)));
      SVec2 rhs;
      for (const auto& [ab, c] : a.comult[i]) {
        SVec l = m.apply(unit_vec(ab.first, f));
        SVec r = m.apply(unit_vec(ab.second, f));
        for (const auto& [x, cx] : l)
          for (const auto& [y, cy] : r) add_term(rhs, {x, y}, c * cx * cy);
      }
      if (lhs != rhs) ok = false;
      if (ok && !(a.counit[i] == b.counit_of(m.apply(unit_vec(i, f))))) ok = false;
    }
    rep.add("coalgebra-map", ok);
  }
  return rep;
}

} // namespace shopf

