#include <catch2/catch_amalgamated.hpp>

#include "shopf/tensorword.hpp"

using namespace shopf;

namespace {
const FieldSpec Q = FieldSpec::Q();

SuperSpace odd_space(int n) {
  std::vector<std::string> names;
  std::vector<int> par;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i + 1));
    par.push_back(1);
  }
  return SuperSpace(names, par);
}

// cop with the Koszul swap applied to the legs
WordPairElem swap_legs(const WordPairElem& e, const SuperSpace& space, const FieldSpec& f) {
  WordPairElem out;
  for (const auto& [ab, c] : e) {
    Scalar s = c;
    if (word_parity(ab.first, space) == 1 && word_parity(ab.second, space) == 1) s = -s;
    add_word(out, ab.second, ab.first, s);
  }
  return out;
}
} // namespace

TEST_CASE("shuffle coproduct small cases") {
  SuperSpace V = odd_space(3);
  SECTION("single letters are primitive") {
    auto d = shuffle_coproduct({0}, V, Q);
    REQUIRE(d.size() == 2);
    REQUIRE(d.at({Word{}, Word{0}}).is_one());
    REQUIRE(d.at({Word{0}, Word{}}).is_one());
  }
  SECTION("degree two: 1(x)v1v2 + v1(x)v2 - v2(x)v1 + v1v2(x)1") {
    auto d = shuffle_coproduct({0, 1}, V, Q);
    REQUIRE(d.size() == 4);
    REQUIRE(d.at({Word{}, Word{0, 1}}).is_one());
    REQUIRE(d.at({Word{0}, Word{1}}).is_one());
    REQUIRE(d.at({Word{1}, Word{0}}) == -Scalar::one(Q));
    REQUIRE(d.at({Word{0, 1}, Word{}}).is_one());
  }
}

TEST_CASE("shuffle coproduct is coassociative and super-cocommutative") {
  auto check = [&](const SuperSpace& V, int maxdeg) {
    for (int deg = 0; deg <= maxdeg; ++deg) {
      for (const auto& w : words_of_degree(V.dim(), deg)) {
        auto d = shuffle_coproduct(w, V, Q);
        std::map<std::tuple<Word, Word, Word>, Scalar> lhs, rhs;
        for (const auto& [ab, c] : d) {
          for (const auto& [a1a2, c2] : shuffle_coproduct(ab.first, V, Q)) {
            auto key = std::make_tuple(a1a2.first, a1a2.second, ab.second);
            Scalar v = c * c2;
            auto it = lhs.find(key);
            if (it == lhs.end()) lhs.emplace(key, v);
            else {
              it->second += v;
              if (it->second.is_zero()) lhs.erase(it);
            }
          }
          for (const auto& [b1b2, c2] : shuffle_coproduct(ab.second, V, Q)) {
            auto key = std::make_tuple(ab.first, b1b2.first, b1b2.second);
            Scalar v = c * c2;
            auto it = rhs.find(key);
            if (it == rhs.end()) rhs.emplace(key, v);
            else {
              it->second += v;
              if (it->second.is_zero()) rhs.erase(it);
            }
          }
        }
        REQUIRE(lhs == rhs);
        REQUIRE(d == swap_legs(d, V, Q));
      }
    }
  };
  check(odd_space(3), 5);
  // mixed parities keep the Koszul-signed laws
  check(SuperSpace({"a", "x", "y"}, {0, 1, 1}), 4);
}

TEST_CASE("shuffle product") {
  SuperSpace W = odd_space(3);
  SECTION("single letters") {
    auto p = shuffle_product(Word{0}, Word{1}, W, Q);
    REQUIRE(p.size() == 2);
    REQUIRE(p.at({0, 1}).is_one());
    REQUIRE(p.at({1, 0}) == -Scalar::one(Q));
    REQUIRE(shuffle_product(Word{0}, Word{0}, W, Q).empty()); // w.w = 0
  }
  SECTION("empty word is the unit") {
    auto p = shuffle_product(Word{}, Word{0, 1}, W, Q);
    REQUIRE(p.size() == 1);
    REQUIRE(p.at({0, 1}).is_one());
  }
  SECTION("associative and super-commutative degreewise") {
    for (const auto& a : words_of_degree(3, 2))
      for (const auto& b : words_of_degree(3, 1))
        for (const auto& c : words_of_degree(3, 2)) {
          WordElem ea{{a, Scalar::one(Q)}}, eb{{b, Scalar::one(Q)}}, ec{{c, Scalar::one(Q)}};
          auto ab_c = shuffle_product(shuffle_product(ea, eb, W, Q), ec, W, Q);
          auto a_bc = shuffle_product(ea, shuffle_product(eb, ec, W, Q), W, Q);
          REQUIRE(ab_c == a_bc);
          auto ab = shuffle_product(ea, eb, W, Q);
          auto ba = shuffle_product(eb, ea, W, Q);
          Scalar sgn = (word_parity(a, W) == 1 && word_parity(b, W) == 1) ? -Scalar::one(Q)
                                                                          : Scalar::one(Q);
          WordElem ba_signed;
          for (const auto& [w, cc] : ba) add_word(ba_signed, w, cc * sgn);
          REQUIRE(ab == ba_signed);
        }
  }
}

TEST_CASE("wedge normalize") {
  SuperSpace V = odd_space(3);
  SECTION("transposition flips the sign") {
    auto r = wedge_normalize({1, 0}, V, Q);
    REQUIRE(r);
    REQUIRE(r->first == -Scalar::one(Q));
    REQUIRE(r->second == Word{0, 1});
  }
  SECTION("repeated letter vanishes") { REQUIRE_FALSE(wedge_normalize({0, 0}, V, Q)); }
  SECTION("3-cycle has sign +1") {
    auto r = wedge_normalize({2, 0, 1}, V, Q);
    REQUIRE(r);
    REQUIRE(r->first.is_one());
    REQUIRE(r->second == Word{0, 1, 2});
  }
  SECTION("even letters are rejected") {
    SuperSpace M({"a", "x"}, {0, 1});
    REQUIRE_THROWS_AS(wedge_normalize({0, 1}, M, Q), error);
  }
}

TEST_CASE("canonical determinant pairing") {
  SuperSpace V = odd_space(2);
  SuperSpace Vd({"w1", "w2"}, {1, 1});
  auto p = PairingData::dual_bases(V, Vd, Q);
  WedgeElem e12{{Word{0, 1}, Scalar::one(Q)}};
  SECTION("identity and swap") {
    WedgeElem f12{{Word{0, 1}, Scalar::one(Q)}};
    REQUIRE(canonical_pairing(e12, f12, p).is_one());
    WedgeElem f21;
    add_wedge(f21, {1, 0}, Scalar::one(Q), Vd, Q);
    REQUIRE(canonical_pairing(e12, f21, p) == -Scalar::one(Q));
  }
  SECTION("degree mismatch gives zero") {
    WedgeElem f1{{Word{0}, Scalar::one(Q)}};
    REQUIRE(canonical_pairing(e12, f1, p).is_zero());
  }
  SECTION("Gram matrix is the identity in every degree, dim 5") {
    SuperSpace V5 = odd_space(5);
    SuperSpace W5({"w1", "w2", "w3", "w4", "w5"}, {1, 1, 1, 1, 1});
    auto p5 = PairingData::dual_bases(V5, W5, Q);
    for (int deg = 0; deg <= 5; ++deg) {
      auto rows = increasing_words(5, deg);
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) {
          Scalar g = wedge_word_pairing(rows[i], rows[j], p5);
          REQUIRE(g == (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
        }
    }
  }
}

TEST_CASE("T(V) x T_c(W) pairing is a Hopf pairing degreewise") {
  SuperSpace V = odd_space(3);
  SuperSpace W({"w1", "w2", "w3"}, {1, 1, 1});
  auto p = PairingData::dual_bases(V, W, Q);

  SECTION("letterwise formula and unit") {
    REQUIRE(word_pairing({0, 1}, {0, 1}, p).is_one());
    REQUIRE(word_pairing({0, 1}, {1, 0}, p).is_zero());
    REQUIRE(word_pairing({}, {}, p).is_one());
  }

  SECTION("product against deconcatenation, degrees <= 4") {
    for (int dx = 0; dx <= 2; ++dx)
      for (int dy = 0; dy <= 2; ++dy)
        for (const auto& x : words_of_degree(3, dx))
          for (const auto& y : words_of_degree(3, dy))
            for (const auto& a : words_of_degree(3, dx + dy)) {
              Word xy = x;
              xy.insert(xy.end(), y.begin(), y.end());
              Scalar lhs = word_pairing(xy, a, p);
              Scalar rhs = Scalar::zero(Q);
              for (const auto& [a12, c] : deconcat_coproduct(a, Q))
                rhs += c * word_pairing(x, a12.first, p) * word_pairing(y, a12.second, p);
              REQUIRE(lhs == rhs);
            }
  }

  SECTION("shuffle coproduct against shuffle product, degrees <= 4") {
    for (int da = 0; da <= 2; ++da)
      for (int db = 0; db <= 2; ++db)
        for (const auto& a : words_of_degree(3, da))
          for (const auto& b : words_of_degree(3, db))
            for (const auto& x : words_of_degree(3, da + db)) {
              WordElem ab = shuffle_product(a, b, W, Q);
              Scalar lhs = Scalar::zero(Q);
              for (const auto& [w, c] : ab) lhs += c * word_pairing(x, w, p);
              Scalar rhs = Scalar::zero(Q);
              for (const auto& [x12, c] : shuffle_coproduct(x, V, Q))
                rhs += c * word_pairing(x12.first, a, p) * word_pairing(x12.second, b, p);
              REQUIRE(lhs == rhs);
            }
  }

  SECTION("antipodes correspond under the pairing") {
    for (int d = 0; d <= 4; ++d)
      for (const auto& x : words_of_degree(3, d))
        for (const auto& a : words_of_degree(3, d)) {
          auto [sx, rx] = tensor_antipode(x, V, Q);
          auto [sa, ra] = tensor_antipode(a, W, Q);
          REQUIRE(sx * word_pairing(rx, a, p) == sa * word_pairing(x, ra, p));
        }
  }
}
