// Degree-truncated free structures on a super space: the tensor algebra with
// its shuffle coproduct, the tensor coalgebra with its shuffle product,
// wedge words, and the canonical determinant pairing.
//
// Shuffle signs are the Koszul signs of the shuffle permutation on the word's
// letters; for purely odd letters (the Harish-Chandra pair situation) this is
// the ordinary sign of the permutation. On the coalgebra side the running
// index tau has tau^{-1} an i-shuffle, and sgn tau = sgn tau^{-1}.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shopf/linalg.hpp"

namespace shopf {

using Word = std::vector<int>; // letter indices into a SuperSpace basis
using WordElem = std::map<Word, Scalar>;
using WordPairElem = std::map<std::pair<Word, Word>, Scalar>;

inline int word_parity(const Word& w, const SuperSpace& space) {
  int p = 0;
  for (int l : w) p += space.parity[l];
  return p & 1;
}

inline std::string word_str(const Word& w, const SuperSpace& space) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ".";
    s += space.names[l];
  }
  return s;
}

inline void add_word(WordElem& dst, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = dst.find(w);
  if (it == dst.end()) dst.emplace(w, c);
  else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

inline void add_word(WordPairElem& dst, const Word& a, const Word& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = dst.find(key);
  if (it == dst.end()) dst.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

// All i-element position subsets of {0..n-1}; the i-shuffles of S_{n,i} are in
// bijection with these (positions taken by the first block).
inline const std::vector<std::vector<int>>& position_subsets(int n, int i) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> memo;
  auto key = std::make_pair(n, i);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (int k = start; k <= n - (i - (int)cur.size()); ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return memo.emplace(key, std::move(out)).first->second;
}

// Koszul sign of interleaving two blocks of letters into the positions given
// by `first_pos` (positions of the first block, increasing): product of
// (-1)^{|a||b|} over crossing pairs (a from block one, b from block two, b
// ends up left of a).
inline Scalar interleave_sign(const Word& block1, const Word& block2,
                              const std::vector<int>& first_pos, const SuperSpace& space,
                              const FieldSpec& f) {
  int n = (int)block1.size() + (int)block2.size();
  std::vector<bool> in_first(n, false);
  for (int p : first_pos) in_first[p] = true;
  size_t i1 = 0, i2 = 0;
  int odd2 = 0; // odd letters of block2 placed so far
  Scalar sign = Scalar::one(f);
  for (int p = 0; p < n; ++p) {
    if (in_first[p]) {
      if (space.parity[block1[i1]] == 1 && (odd2 & 1)) sign = -sign;
      ++i1;
    } else {
      if (space.parity[block2[i2]] == 1) ++odd2;
      ++i2;
    }
  }
  return sign;
}

// Interleave the two blocks into the given first-block positions.
inline Word interleave(const Word& block1, const Word& block2, const std::vector<int>& first_pos) {
  int n = (int)block1.size() + (int)block2.size();
  Word out(n);
  std::vector<bool> in_first(n, false);
  for (int p : first_pos) in_first[p] = true;
  size_t i1 = 0, i2 = 0;
  for (int p = 0; p < n; ++p) out[p] = in_first[p] ? block1[i1++] : block2[i2++];
  return out;
}

// Shuffle coproduct on T(V): Delta(w) = sum over i and i-shuffles sigma of
// (Koszul sign) (first block)(x)(second block); single letters are primitive.
inline WordPairElem shuffle_coproduct(const Word& w, const SuperSpace& space, const FieldSpec& f) {
  WordPairElem out;
  int n = (int)w.size();
  for (int i = 0; i <= n; ++i) {
    for (const auto& pos : position_subsets(n, i)) {
      Word left, right;
      std::vector<bool> in_left(n, false);
      for (int p : pos) in_left[p] = true;
      for (int p = 0; p < n; ++p) (in_left[p] ? left : right).push_back(w[p]);
      // sign: unshuffle w into (left, right); equals the Koszul sign of
      // interleaving left into its original positions
      Scalar s = interleave_sign(left, right, pos, space, f);
      add_word(out, left, right, s);
    }
  }
  return out;
}

// Shuffle product on T_c(W): all interleavings of the two words keeping each
// block's internal order, with Koszul signs.
inline WordElem shuffle_product(const Word& a, const Word& b, const SuperSpace& space,
                                const FieldSpec& f) {
  WordElem out;
  int n = (int)a.size() + (int)b.size();
  for (const auto& pos : position_subsets(n, (int)a.size())) {
    Scalar s = interleave_sign(a, b, pos, space, f);
    add_word(out, interleave(a, b, pos), s);
  }
  return out;
}

inline WordElem shuffle_product(const WordElem& a, const WordElem& b, const SuperSpace& space,
                                const FieldSpec& f) {
  WordElem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      WordElem t = shuffle_product(wa, wb, space, f);
      for (const auto& [w, c] : t) add_word(out, w, ca * cb * c);
    }
  return out;
}

// Deconcatenation coproduct on T_c(W) (no signs).
inline WordPairElem deconcat_coproduct(const Word& w, const FieldSpec& f) {
  WordPairElem out;
  for (size_t i = 0; i <= w.size(); ++i)
    add_word(out, Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()), Scalar::one(f));
  return out;
}

// Antipode of T(V) (shuffle coproduct) and of T_c(W) (shuffle product): on a
// word, (-1)^n times the Koszul-signed reversal.
inline std::pair<Scalar, Word> tensor_antipode(const Word& w, const SuperSpace& space,
                                               const FieldSpec& f) {
  Word rev(w.rbegin(), w.rend());
  int odd = 0;
  for (int l : w) odd += space.parity[l];
  // reversal = odd*(odd-1)/2 transpositions of odd letters mod signs
  long swaps = (long)odd * (odd - 1) / 2;
  Scalar s = (swaps % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
  if (w.size() % 2 == 1) s = -s;
  return {s, rev};
}

// Sort odd letters with the sign of the permutation; repeated letter gives 0.
inline std::optional<std::pair<Scalar, Word>> wedge_normalize(const Word& letters,
                                                              const SuperSpace& space,
                                                              const FieldSpec& f) {
  for (int l : letters)
    if (space.parity[l] != 1)
      throw error(ErrKind::invalid_input,
                  "wedge words take odd generators only, got even '" + space.names[l] + "'");
  Word w = letters;
  Scalar sign = Scalar::one(f);
  for (size_t i = 0; i + 1 < w.size(); ++i)
    for (size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return std::nullopt;
  return std::make_pair(sign, w);
}

// Wedge elements: sparse over strictly increasing words.
using WedgeElem = std::map<Word, Scalar>;

inline void add_wedge(WedgeElem& dst, const Word& letters, const Scalar& c, const SuperSpace& space,
                      const FieldSpec& f) {
  auto nrm = wedge_normalize(letters, space, f);
  if (!nrm) return;
  auto it = dst.find(nrm->second);
  Scalar v = c * nrm->first;
  if (it == dst.end()) {
    if (!v.is_zero()) dst.emplace(nrm->second, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) dst.erase(it);
  }
}

inline WedgeElem wedge_product(const WedgeElem& a, const WedgeElem& b, const SuperSpace& space,
                               const FieldSpec& f) {
  WedgeElem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word cat = wa;
      cat.insert(cat.end(), wb.begin(), wb.end());
      add_wedge(out, cat, ca * cb, space, f);
    }
  return out;
}

// det(<v_i, w_j>) by expansion over permutations (degrees stay <= 5 here).
inline Scalar wedge_word_pairing(const Word& u, const Word& z, const PairingData& p) {
  const FieldSpec& f = p.field;
  if (u.size() != z.size()) return Scalar::zero(f);
  int n = (int)u.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Scalar total = Scalar::zero(f);
  do {
    long inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Scalar term = (inv % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
    for (int i = 0; i < n; ++i) term *= p.at(u[i], z[perm[i]]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// <v_1^...^v_n, w_1^...^w_n> extended bilinearly; degree mismatch gives 0.
inline Scalar canonical_pairing(const WedgeElem& u, const WedgeElem& z, const PairingData& p) {
  Scalar total = Scalar::zero(p.field);
  for (const auto& [wu, cu] : u)
    for (const auto& [wz, cz] : z) total += cu * cz * wedge_word_pairing(wu, wz, p);
  return total;
}

// Letterwise pairing <v_1(x)...(x)v_n, w_1(x)...(x)w_n> = prod <v_i, w_i>,
// the (nondegenerate) pairing between T(V) and T_c(W).
inline Scalar word_pairing(const Word& x, const Word& z, const PairingData& p) {
  if (x.size() != z.size()) return Scalar::zero(p.field);
  Scalar s = Scalar::one(p.field);
  for (size_t i = 0; i < x.size(); ++i) s *= p.at(x[i], z[i]);
  return s;
}

inline Scalar pairing_T_Tc(const WordElem& x, const WordElem& z, const PairingData& p) {
  Scalar total = Scalar::zero(p.field);
  for (const auto& [wx, cx] : x)
    for (const auto& [wz, cz] : z) total += cx * cz * word_pairing(wx, wz, p);
  return total;
}

// All words of the given degree over a basis of size m, lexicographic.
inline std::vector<Word> words_of_degree(int m, int deg) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if ((int)cur.size() == deg) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l < m; ++l) {
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::vector<Word> increasing_words(int m, int deg) {
  std::vector<Word> out;
  for (const auto& pos : position_subsets(m, deg)) out.push_back(pos);
  return out;
}

} // namespace shopf
