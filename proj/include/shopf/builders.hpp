// Constructors for the test corpus: group algebras and their function-algebra
// duals, exterior algebras.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "shopf/hopf.hpp"
#include "shopf/tensorword.hpp"

namespace shopf {

struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul; // mul[i][j] = index of g_i g_j
  int identity = 0;

  int order() const { return (int)names.size(); }

  void validate() const {
    int n = order();
    if ((int)mul.size() != n) throw error(ErrKind::invalid_input, "group table: bad size");
    for (const auto& row : mul) {
      if ((int)row.size() != n) throw error(ErrKind::invalid_input, "group table: bad row");
      for (int v : row)
        if (v < 0 || v >= n) throw error(ErrKind::invalid_input, "group table: bad entry");
    }
    for (int i = 0; i < n; ++i)
      if (mul[identity][i] != i || mul[i][identity] != i)
        throw error(ErrKind::invalid_input, "group table: identity fails");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
            throw error(ErrKind::invalid_input, "group table: not associative");
    for (int i = 0; i < n; ++i) inverse(i); // throws when missing
  }

  int inverse(int i) const {
    for (int j = 0; j < order(); ++j)
      if (mul[i][j] == identity) return j;
    throw error(ErrKind::invalid_input, "group table: no inverse for " + names[i]);
  }

  static GroupTable cyclic(int n) {
    GroupTable g;
    for (int i = 0; i < n; ++i) g.names.push_back("g" + std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    return g;
  }

  // S3 as permutations of {0,1,2}; element names encode one-line notation.
  static GroupTable s3() {
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    GroupTable g;
    for (const auto& p : perms)
      g.names.push_back("p" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    int n = (int)perms.size();
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::array<int, 3> comp;
        for (int t = 0; t < 3; ++t) comp[t] = perms[i][perms[j][t]];
        for (int k = 0; k < n; ++k)
          if (perms[k] == comp) g.mul[i][j] = k;
      }
    return g;
  }
};

inline HopfAlgebra group_algebra(const GroupTable& g, const FieldSpec& f) {
  g.validate();
  int n = g.order();
  HopfAlgebra h;
  h.field = f;
  h.space = SuperSpace(g.names, std::vector<int>(n, 0));
  h.mult.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.mult[i][j] = unit_vec(g.mul[i][j], f);
  h.unit = unit_vec(g.identity, f);
  h.comult.assign(n, SVec2{});
  for (int i = 0; i < n; ++i) h.comult[i][{i, i}] = Scalar::one(f);
  h.counit.assign(n, Scalar::one(f));
  h.antipode.assign(n, SVec{});
  for (int i = 0; i < n; ++i) h.antipode[i] = unit_vec(g.inverse(i), f);
  return h;
}

inline HopfAlgebra function_algebra(const GroupTable& g, const FieldSpec& f) {
  g.validate();
  int n = g.order();
  HopfAlgebra h;
  h.field = f;
  std::vector<std::string> names;
  for (const auto& s : g.names) names.push_back("e_" + s);
  h.space = SuperSpace(names, std::vector<int>(n, 0));
  h.mult.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i) h.mult[i][i] = unit_vec(i, f);
  for (int i = 0; i < n; ++i) add_term(h.unit, i, Scalar::one(f));
  h.comult.assign(n, SVec2{});
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.mul[i][j] == k) h.comult[k][{i, j}] = Scalar::one(f);
  h.counit.assign(n, Scalar::zero(f));
  h.counit[g.identity] = Scalar::one(f);
  h.antipode.assign(n, SVec{});
  for (int i = 0; i < n; ++i) h.antipode[i] = unit_vec(g.inverse(i), f);
  return h;
}

// Exterior algebra on n odd generators, basis indexed by subsets in
// lexicographic word order (empty word = 1).
struct ExteriorBasis {
  int n = 0;
  std::vector<Word> words; // strictly increasing words, index -> word
  std::map<Word, int> index;

  explicit ExteriorBasis(int n_) : n(n_) {
    for (int d = 0; d <= n; ++d)
      for (const auto& w : increasing_words(n, d)) {
        index[w] = (int)words.size();
        words.push_back(w);
      }
  }
};

inline HopfAlgebra exterior_algebra(int n, const FieldSpec& f, const std::string& gen = "x") {
  ExteriorBasis eb(n);
  std::vector<std::string> gnames;
  for (int i = 0; i < n; ++i) gnames.push_back(gen + std::to_string(i + 1));
  SuperSpace gens(gnames, std::vector<int>(n, 1));
  int dim = (int)eb.words.size();
  HopfAlgebra h;
  h.field = f;
  std::vector<std::string> names;
  std::vector<int> par;
  for (const auto& w : eb.words) {
    names.push_back(w.empty() ? "1" : word_str(w, gens));
    par.push_back((int)w.size() % 2);
  }
  h.space = SuperSpace(names, par);
  h.mult.assign(dim, std::vector<SVec>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Word cat = eb.words[i];
      cat.insert(cat.end(), eb.words[j].begin(), eb.words[j].end());
      auto nrm = wedge_normalize(cat, gens, f);
      if (nrm) h.mult[i][j][eb.index.at(nrm->second)] = nrm->first;
    }
  h.unit = unit_vec(0, f);
  // coproduct: generators primitive, extended multiplicatively
  h.comult.assign(dim, SVec2{});
  for (int i = 0; i < dim; ++i) {
    SVec2 acc;
    acc[{0, 0}] = Scalar::one(f);
    for (int l : eb.words[i]) {
      int li = eb.index.at(Word{l});
      SVec2 dg;
      dg[{0, li}] = Scalar::one(f);
      dg[{li, 0}] = Scalar::one(f);
      acc = h.mul2(acc, dg);
    }
    h.comult[i] = acc;
  }
  h.counit.assign(dim, Scalar::zero(f));
  h.counit[0] = Scalar::one(f);
  h.antipode.assign(dim, SVec{});
  for (int i = 0; i < dim; ++i) {
    // S = (-1)^d on degree d: the reversal sign cancels against re-sorting
    int d = (int)eb.words[i].size();
    h.antipode[i][i] = (d % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
  }
  return h;
}

} // namespace shopf
