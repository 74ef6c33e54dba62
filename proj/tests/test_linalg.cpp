#include <catch2/catch_amalgamated.hpp>

#include "shopf/linalg.hpp"

using namespace shopf;

namespace {
const FieldSpec Q = FieldSpec::Q();

SMat from_dense(const std::vector<std::vector<long>>& rows, const FieldSpec& f) {
  SMat m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.set((int)r, (int)c, Scalar::of_long(f, rows[r][c]));
  return m;
}
} // namespace

TEST_CASE("kernel basics") {
  SECTION("identity has empty kernel") {
    REQUIRE(kernel(SMat::identity(3, Q), Q).empty());
  }
  SECTION("zero matrix has full kernel") {
    SMat z(3, 3);
    auto k = kernel(z, Q);
    REQUIRE(k.size() == 3);
  }
  SECTION("[[1,1],[1,1]] has kernel spanned by (1,-1)") {
    auto k = kernel(from_dense({{1, 1}, {1, 1}}, Q), Q);
    REQUIRE(k.size() == 1);
    REQUIRE(coeff(k[0], 1, Q).is_one());
    REQUIRE(coeff(k[0], 0, Q) == -Scalar::one(Q));
  }
  SECTION("rank + nullity = columns, and M*v = 0 exactly") {
    SMat m = from_dense({{2, 4, 6, 1}, {1, 2, 3, 0}, {0, 0, 0, 5}}, Q);
    auto k = kernel(m, Q);
    REQUIRE(rank(m, Q) + (int)k.size() == m.cols);
    for (const auto& v : k) REQUIRE(m.apply(v, Q).empty());
    // extending the kernel by pivot columns reaches full column rank
    Echelon e(Q);
    for (const auto& v : k) e.insert(v);
    for (int c = 0; c < m.cols; ++c) e.insert(unit_vec(c, Q));
    REQUIRE(e.rank() == m.cols);
  }
}

TEST_CASE("echelon coords") {
  Echelon e(Q);
  SVec a = unit_vec(0, Q), b = unit_vec(1, Q);
  SVec ab = a;
  addmul(ab, Scalar::of_long(Q, 2), b);
  REQUIRE(e.insert(a));
  REQUIRE(e.insert(ab));
  REQUIRE_FALSE(e.insert(scaled(b, Scalar::of_long(Q, 7))));
  auto c = e.coords(b);
  REQUIRE(c.has_value());
  // b = -1/2 * a + 1/2 * ab
  REQUIRE(coeff(*c, 0, Q).str() == "-1/2");
  REQUIRE(coeff(*c, 1, Q).str() == "1/2");
  REQUIRE_FALSE(e.coords(unit_vec(2, Q)).has_value());
}

TEST_CASE("koszul swap") {
  SuperSpace V({"v0", "v1"}, {0, 1});
  SuperSpace W({"w0", "w1"}, {0, 1});
  SMat c_vw = koszul_swap(V, W, Q);
  SMat c_wv = koszul_swap(W, V, Q);

  SECTION("even-even has sign +1, odd-odd -1") {
    // v0 (x) w0 -> +  w0 (x) v0
    REQUIRE(c_vw.at(0 * 2 + 0, 0 * 2 + 0, Q).is_one());
    // v1 (x) w1 -> -  w1 (x) v1
    REQUIRE(c_vw.at(1 * 2 + 1, 1 * 2 + 1, Q) == -Scalar::one(Q));
  }
  SECTION("swap twice is the identity") {
    SMat prod = SMat::mul(c_wv, c_vw, Q);
    SMat id = SMat::identity(4, Q);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) REQUIRE(prod.at(i, j, Q) == id.at(i, j, Q));
  }
}

TEST_CASE("tensor pairing") {
  SuperSpace V({"v0", "v1"}, {0, 1});
  SuperSpace W({"w0", "w1"}, {0, 1});
  auto p = PairingData::dual_bases(V, W, Q);

  SECTION("pairing with mismatched parities is rejected") {
    SMat bad(2, 2);
    bad.set(0, 1, Scalar::one(Q));
    REQUIRE_THROWS_AS(PairingData(V, W, bad, Q), error);
  }
  SECTION("dual bases tensor to the identity") {
    auto t = tensor_pairing(p, p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        REQUIRE(t.at(i, j) == (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
  }
  SECTION("Koszul-compatibility identity, brute force on a 2|2 example") {
    // <c_{Z,V}(z(x)v), w(x)u> = <z(x)v, c_{U,W}(u(x)w)>, where the left side
    // uses the tensor pairing (V(x)Z) x (W(x)U) and the right side pairs the
    // Z-leg against the U-leg and the V-leg against the W-leg.
    SuperSpace Z({"z0", "z1"}, {0, 1});
    SuperSpace U({"u0", "u1"}, {0, 1});
    SMat qm(2, 2);
    qm.set(0, 0, Scalar::of_long(Q, 3));
    qm.set(1, 1, Scalar::of_long(Q, -2));
    PairingData q(Z, U, qm, Q);
    auto t_vw_zu = tensor_pairing(p, q);   // (V(x)Z) x (W(x)U)
    SMat c_zv = koszul_swap(Z, V, Q);      // Z(x)V -> V(x)Z
    SMat c_uw = koszul_swap(U, W, Q);      // U(x)W -> W(x)U
    for (int z = 0; z < 2; ++z)
      for (int v = 0; v < 2; ++v)
        for (int u = 0; u < 2; ++u)
          for (int w = 0; w < 2; ++w) {
            SVec zv = unit_vec(z * 2 + v, Q);
            Scalar lhs = t_vw_zu.eval(c_zv.apply(zv, Q), unit_vec(w * 2 + u, Q));
            Scalar rhs = Scalar::zero(Q);
            for (const auto& [wu, s] : c_uw.apply(unit_vec(u * 2 + w, Q), Q)) {
              int wp = wu / 2, up = wu % 2; // component w'(x)u' of c_{U,W}(u(x)w)
              rhs += s * q.at(z, up) * p.at(v, wp);
            }
            REQUIRE(lhs == rhs);
          }
  }
}

TEST_CASE("annihilator") {
  SuperSpace V({"e1", "e2"}, {0, 0});
  auto p = PairingData::dual_bases(V, V, Q);
  SECTION("empty list gives the full space") {
    REQUIRE(annihilator({}, p).size() == 2);
  }
  SECTION("spanning set against nondegenerate pairing gives zero") {
    REQUIRE(annihilator({unit_vec(0, Q), unit_vec(1, Q)}, p).empty());
  }
  SECTION("single vector case") {
    auto a = annihilator({unit_vec(0, Q)}, p);
    REQUIRE(a.size() == 1);
    REQUIRE(coeff(a[0], 1, Q).is_one());
  }
}

TEST_CASE("computation over Q reduced mod p matches computation over F_p") {
  auto F5 = FieldSpec::Fp(5);
  // chosen so ranks and pivot positions agree over Q and over F_5
  std::vector<std::vector<long>> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 4}};
  SMat mq = from_dense(rows, Q);
  SMat mp = from_dense(rows, F5);
  auto kq = kernel(mq, Q);
  auto kp = kernel(mp, F5);
  REQUIRE(kq.size() == kp.size());
  for (size_t i = 0; i < kq.size(); ++i) REQUIRE(reduce_vec_mod(kq[i], F5) == kp[i]);
}
