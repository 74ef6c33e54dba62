// Sparse super-linear algebra: super-spaces, sparse vectors/matrices over an
// exact field, reduced echelon forms, kernels, spans, quotients, Koszul
// symmetry and pairings.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shopf/scalar.hpp"

namespace shopf {

// Sparse vector keyed by basis index. Invariant: no explicit zeros.
using SVec = std::map<int, Scalar>;
// Sparse element of a tensor square, keyed by (left,right) basis indices.
using SVec2 = std::map<std::pair<int, int>, Scalar>;

inline void addmul(SVec& dst, const Scalar& c, const SVec& src) {
  if (c.is_zero()) return;
  for (const auto& [i, v] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      dst.emplace(i, c * v);
    } else {
      it->second += c * v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

inline void addmul(SVec2& dst, const Scalar& c, const SVec2& src) {
  if (c.is_zero()) return;
  for (const auto& [i, v] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      dst.emplace(i, c * v);
    } else {
      it->second += c * v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

inline void add_term(SVec& dst, int i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = dst.find(i);
  if (it == dst.end()) dst.emplace(i, c);
  else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

inline void add_term(SVec2& dst, std::pair<int, int> i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = dst.find(i);
  if (it == dst.end()) dst.emplace(i, c);
  else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

inline SVec scaled(const SVec& v, const Scalar& c) {
  SVec r;
  addmul(r, c, v);
  return r;
}

inline SVec unit_vec(int i, const FieldSpec& f) {
  SVec v;
  v.emplace(i, Scalar::one(f));
  return v;
}

inline Scalar coeff(const SVec& v, int i, const FieldSpec& f) {
  auto it = v.find(i);
  return it == v.end() ? Scalar::zero(f) : it->second;
}

inline Scalar coeff(const SVec2& v, std::pair<int, int> i, const FieldSpec& f) {
  auto it = v.find(i);
  return it == v.end() ? Scalar::zero(f) : it->second;
}

inline std::string vec_str(const SVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + (i < (int)names.size() ? names[i] : "e" + std::to_string(i));
  }
  return s;
}

// ---------------------------------------------------------------------------

struct SuperSpace {
  std::vector<std::string> names;
  std::vector<int> parity; // 0 or 1 per basis symbol

  SuperSpace() = default;
  SuperSpace(std::vector<std::string> n, std::vector<int> p)
      : names(std::move(n)), parity(std::move(p)) {
    if (names.size() != parity.size())
      throw error(ErrKind::invalid_input, "superspace: names/parity length mismatch");
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw error(ErrKind::invalid_input, "superspace: duplicate basis name " + names[i]);
  }

  int dim() const { return (int)names.size(); }

  int index(const std::string& n) const {
    for (int i = 0; i < dim(); ++i)
      if (names[i] == n) return i;
    throw error(ErrKind::schema, "unknown basis symbol '" + n + "'");
  }

  bool purely_even() const {
    return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
  }

  // Parity of a sparse vector if homogeneous, -1 for zero, throws if mixed.
  int parity_of(const SVec& v) const {
    int par = -1;
    for (const auto& [i, c] : v) {
      (void)c;
      if (par == -1) par = parity[i];
      else if (par != parity[i])
        throw error(ErrKind::invalid_input, "vector is not parity-homogeneous");
    }
    return par;
  }
};

// ---------------------------------------------------------------------------
// Row-sparse matrix; rows[r] maps column -> entry.

struct SMat {
  int cols = 0;
  std::vector<SVec> rows;

  SMat() = default;
  explicit SMat(int c) : cols(c) {}
  SMat(int r, int c) : cols(c), rows(r) {}

  int nrows() const { return (int)rows.size(); }

  void set(int r, int c, const Scalar& v) {
    if ((int)rows.size() <= r) rows.resize(r + 1);
    if (!v.is_zero()) rows[r][c] = v;
  }

  Scalar at(int r, int c, const FieldSpec& f) const {
    if (r >= (int)rows.size()) return Scalar::zero(f);
    return coeff(rows[r], c, f);
  }

  SVec apply(const SVec& v, const FieldSpec& f) const {
    // rows are output coordinates: out[r] = sum_c rows[r][c] * v[c]
    SVec out;
    for (int r = 0; r < (int)rows.size(); ++r) {
      Scalar s = Scalar::zero(f);
      for (const auto& [c, a] : rows[r]) {
        auto it = v.find(c);
        if (it != v.end()) s += a * it->second;
      }
      add_term(out, r, s);
    }
    return out;
  }

  static SMat mul(const SMat& a, const SMat& b, const FieldSpec& f) {
    SMat r((int)a.rows.size(), b.cols);
    for (int i = 0; i < (int)a.rows.size(); ++i)
      for (const auto& [k, av] : a.rows[i])
        if (k < (int)b.rows.size())
          for (const auto& [j, bv] : b.rows[k]) add_term(r.rows[i], j, av * bv);
    return r;
  }

  static SMat identity(int n, const FieldSpec& f) {
    SMat m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i][i] = Scalar::one(f);
    return m;
  }
};

// ---------------------------------------------------------------------------
// Incremental reduced echelon form with coordinate recovery. Inserted vectors
// are reduced against current rows (and rows against them), so the stored
// rows form a reduced basis of the span with strictly increasing pivots by
// insertion; coords() expresses a member in terms of the inserted vectors.

class Echelon {
public:
  explicit Echelon(const FieldSpec& f) : f_(f) {}

  // Returns true if v enlarged the span.
  bool insert(const SVec& v) {
    SVec red = v, comb;
    reduce(red, comb); // red = v - sum_j comb[j]*inserted[j]
    int self = ninserted_++;
    if (red.empty()) return false;
    // express the new row over inserted vectors: red = 1*v - comb
    SVec rowcomb = comb;
    for (auto& [j, c] : rowcomb) c = -c;
    add_term(rowcomb, self, Scalar::one(f_));
    // normalize pivot to 1
    Scalar inv = red.begin()->second.inverse();
    int piv = red.begin()->first;
    red = scaled(red, inv);
    rowcomb = scaled(rowcomb, inv);
    // back-eliminate the new pivot from existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
      Scalar c = coeff(rows_[k], piv, f_);
      if (!c.is_zero()) {
        addmul(rows_[k], -c, red);
        addmul(combs_[k], -c, rowcomb);
      }
    }
    // keep rows sorted by pivot
    size_t pos = 0;
    while (pos < rows_.size() && rows_[pos].begin()->first < piv) ++pos;
    rows_.insert(rows_.begin() + pos, red);
    combs_.insert(combs_.begin() + pos, rowcomb);
    return true;
  }

  bool member(const SVec& v) const {
    SVec red = v, comb;
    reduce(red, comb);
    return red.empty();
  }

  // Coordinates of v over the inserted vectors (by insertion index), if v is
  // in the span.
  std::optional<SVec> coords(const SVec& v) const {
    SVec red = v, comb;
    reduce(red, comb);
    if (!red.empty()) return std::nullopt;
    return comb;
  }

  int rank() const { return (int)rows_.size(); }
  const std::vector<SVec>& basis() const { return rows_; }

  std::vector<int> pivots() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(r.begin()->first);
    return p;
  }

private:
  // maintains red = (original v) - sum_j comb[j]*inserted[j]
  void reduce(SVec& v, SVec& comb) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      int piv = rows_[k].begin()->first;
      Scalar c = coeff(v, piv, f_);
      if (!c.is_zero()) {
        addmul(v, -c, rows_[k]);
        addmul(comb, c, combs_[k]);
      }
    }
  }

  FieldSpec f_;
  std::vector<SVec> rows_;   // reduced span basis, pivots increasing
  std::vector<SVec> combs_;  // rows_[k] = sum_j combs_[k][j] * inserted[j]
  int ninserted_ = 0;
};

inline int rank_of(const std::vector<SVec>& vecs, const FieldSpec& f) {
  Echelon e(f);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

// Kernel basis of M (as column vectors), in reduced column-echelon form:
// one vector per free column, with unit coordinate at that column and
// support otherwise only on pivot columns. Deterministic.
inline std::vector<SVec> kernel(const SMat& m, const FieldSpec& f) {
  // row-reduce a working copy
  std::vector<SVec> rows = m.rows;
  std::vector<int> pivot_col;
  size_t rr = 0;
  for (int c = 0; c < m.cols && rr < rows.size(); ++c) {
    size_t sel = rows.size();
    for (size_t r = rr; r < rows.size(); ++r)
      if (!coeff(rows[r], c, f).is_zero()) { sel = r; break; }
    if (sel == rows.size()) continue;
    std::swap(rows[rr], rows[sel]);
    Scalar inv = coeff(rows[rr], c, f).inverse();
    rows[rr] = scaled(rows[rr], inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rr) continue;
      Scalar v = coeff(rows[r], c, f);
      if (!v.is_zero()) addmul(rows[r], -v, rows[rr]);
    }
    pivot_col.push_back(c);
    ++rr;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<SVec> ker;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    SVec v;
    v[c] = Scalar::one(f);
    for (size_t r = 0; r < pivot_col.size(); ++r) {
      Scalar e = coeff(rows[r], c, f);
      if (!e.is_zero()) v[pivot_col[r]] = -e;
    }
    ker.push_back(std::move(v));
  }
  return ker;
}

inline int rank(const SMat& m, const FieldSpec& f) {
  Echelon e(f);
  for (const auto& r : m.rows) e.insert(r);
  return e.rank();
}

// Solve A x = b exactly; a particular solution with free variables set to 0,
// or nullopt when inconsistent.
inline std::optional<SVec> solve_linear(const SMat& a, const std::vector<Scalar>& b,
                                        const FieldSpec& f) {
  std::vector<SVec> rows = a.rows;
  std::vector<Scalar> rhs = b;
  rhs.resize(rows.size(), Scalar::zero(f));
  std::vector<std::pair<int, int>> piv; // (row, col)
  size_t rr = 0;
  for (int c = 0; c < a.cols && rr < rows.size(); ++c) {
    size_t sel = rows.size();
    for (size_t r = rr; r < rows.size(); ++r)
      if (!coeff(rows[r], c, f).is_zero()) { sel = r; break; }
    if (sel == rows.size()) continue;
    if (sel != rr) {
      std::swap(rows[rr], rows[sel]);
      std::swap(rhs[rr], rhs[sel]);
    }
    Scalar inv = coeff(rows[rr], c, f).inverse();
    rows[rr] = scaled(rows[rr], inv);
    rhs[rr] = rhs[rr] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rr) continue;
      Scalar v = coeff(rows[r], c, f);
      if (!v.is_zero()) {
        addmul(rows[r], -v, rows[rr]);
        rhs[r] = rhs[r] - v * rhs[rr];
      }
    }
    piv.push_back({(int)rr, c});
    ++rr;
  }
  for (size_t r = rr; r < rows.size(); ++r)
    if (!rhs[r].is_zero()) return std::nullopt;
  SVec x;
  for (const auto& [r, c] : piv) add_term(x, c, rhs[r]);
  return x;
}

// ---------------------------------------------------------------------------
// Pairings of super-vector spaces.

struct PairingData {
  SuperSpace left, right;
  SMat m; // m[i][j] = <left_i, right_j>
  FieldSpec field;

  PairingData() = default;
  PairingData(SuperSpace l, SuperSpace r, SMat mm, FieldSpec f)
      : left(std::move(l)), right(std::move(r)), m(std::move(mm)), field(f) {
    for (int i = 0; i < left.dim(); ++i)
      for (const auto& [j, v] : (i < (int)m.rows.size() ? m.rows[i] : SVec{})) {
        (void)v;
        if (left.parity[i] != right.parity[j])
          throw error(ErrKind::invalid_input,
                      "pairing of mismatched parities must vanish: <" + left.names[i] + ", " +
                          right.names[j] + ">");
      }
  }

  Scalar at(int i, int j) const { return m.at(i, j, field); }

  Scalar eval(const SVec& v, const SVec& w) const {
    Scalar s = Scalar::zero(field);
    for (const auto& [i, a] : v)
      for (const auto& [j, b] : w) s += a * b * at(i, j);
    return s;
  }

  static PairingData dual_bases(const SuperSpace& v, const SuperSpace& w, const FieldSpec& f) {
    if (v.dim() != w.dim())
      throw error(ErrKind::invalid_input, "dual-basis pairing needs equal dims");
    return PairingData(v, w, SMat::identity(v.dim(), f), f);
  }
};

inline SuperSpace tensor_space(const SuperSpace& v, const SuperSpace& w) {
  std::vector<std::string> names;
  std::vector<int> par;
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      names.push_back(v.names[i] + "(x)" + w.names[j]);
      par.push_back((v.parity[i] + w.parity[j]) % 2);
    }
  return SuperSpace(std::move(names), std::move(par));
}

// c_{V,W} : V(x)W -> W(x)V, v(x)w |-> (-1)^{|v||w|} w(x)v, as a sparse matrix
// on the tensor bases (row index in W(x)V, column index in V(x)W).
inline SMat koszul_swap(const SuperSpace& v, const SuperSpace& w, const FieldSpec& f) {
  int nv = v.dim(), nw = w.dim();
  SMat m(nw * nv, nv * nw);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nw; ++j) {
      Scalar s = Scalar::one(f);
      if (v.parity[i] == 1 && w.parity[j] == 1) s = -s;
      m.rows[j * nv + i][i * nw + j] = s;
    }
  return m;
}

// Tensor product of pairings: <v(x)z, w(x)u> = <v,w><z,u>.
inline PairingData tensor_pairing(const PairingData& p, const PairingData& q) {
  if (p.field != q.field) throw error(ErrKind::invalid_input, "pairing field mismatch");
  SuperSpace L = tensor_space(p.left, q.left);
  SuperSpace R = tensor_space(p.right, q.right);
  SMat m(L.dim(), R.dim());
  int nz = q.left.dim(), nu = q.right.dim();
  for (int i = 0; i < p.left.dim() && i < (int)p.m.rows.size(); ++i)
    for (const auto& [j, a] : p.m.rows[i])
      for (int k = 0; k < nz && k < (int)q.m.rows.size(); ++k)
        for (const auto& [l, b] : q.m.rows[k]) m.set(i * nz + k, j * nu + l, a * b);
  return PairingData(L, R, std::move(m), p.field);
}

// Basis of { w in W : <v_i, w> = 0 for all i } for a pairing on V x W.
inline std::vector<SVec> annihilator(const std::vector<SVec>& vectors, const PairingData& p) {
  SMat sys((int)vectors.size(), p.right.dim());
  for (size_t r = 0; r < vectors.size(); ++r)
    for (int j = 0; j < p.right.dim(); ++j) {
      Scalar s = Scalar::zero(p.field);
      for (const auto& [i, a] : vectors[r]) s += a * p.at(i, j);
      sys.set((int)r, j, s);
    }
  return kernel(sys, p.field);
}

// Q -> F_p componentwise reduction helpers (for the commute-with-reduction
// property tests).
inline SVec reduce_vec_mod(const SVec& v, const FieldSpec& fp) {
  SVec r;
  for (const auto& [i, c] : v) add_term(r, i, c.reduce_mod(fp));
  return r;
}

} // namespace shopf
