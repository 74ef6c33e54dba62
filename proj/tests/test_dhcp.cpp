#include <catch2/catch_amalgamated.hpp>

#include "shopf/corpus.hpp"
#include "shopf/dhcp.hpp"

using namespace shopf;

namespace {
const FieldSpec Q = FieldSpec::Q();

} // namespace

TEST_CASE("verify_dhcp") {
  SECTION("the Z/2 sign pair passes all conditions") {
    auto d = corpus::dhcp_z2(Q);
    REQUIRE(verify_dhcp(d).all_pass());
  }
  SECTION("the (U(kh), kv) pair fails (a) with witness (v,v,h) and (c)") {
    auto d = corpus::dhcp_broken_c(Q);
    auto rep = verify_dhcp(d);
    REQUIRE_FALSE(rep.all_pass());
    auto* a = rep.find("condition-(a)");
    REQUIRE(a);
    REQUIRE_FALSE(a->pass);
    REQUIRE(a->witness.find("(v,v,h)") != std::string::npos);
    auto* c = rep.find("condition-(c)");
    REQUIRE(c);
    REQUIRE_FALSE(c->pass);
    auto* b = rep.find("condition-(b)");
    REQUIRE(b->pass);
  }
  SECTION("gl(1|1) and osp(1|2) pairs pass") {
    for (auto L : {corpus::gl11(Q), corpus::osp12(Q)}) {
      REQUIRE(L.validate().all_pass());
      auto d = from_lie_superalgebra(L);
      REQUIRE(verify_dhcp(d).all_pass());
    }
  }
  SECTION("char-p pair with nonzero bracket passes") {
    auto F3 = FieldSpec::Fp(3);
    auto d = corpus::dhcp_charp(F3);
    REQUIRE(verify_dhcp(d).all_pass());
  }
}

TEST_CASE("from_lie_superalgebra") {
  SECTION("purely even abelian input gives V = 0") {
    LieSuperAlgebra L;
    L.field = Q;
    L.space = SuperSpace({"a", "b"}, {0, 0});
    L.bracket.assign(2, std::vector<SVec>(2));
    auto d = from_lie_superalgebra(L);
    REQUIRE(d.dimV() == 0);
    REQUIRE(verify_dhcp(d).all_pass());
  }
  SECTION("char 3 is rejected with the documented rationale") {
    auto F3 = FieldSpec::Fp(3);
    auto L = corpus::gl11(F3);
    try {
      from_lie_superalgebra(L);
      FAIL("expected a char-3 rejection");
    } catch (const error& e) {
      REQUIRE(e.kind == ErrKind::unsupported_characteristic);
    }
  }
  SECTION("a Jacobi failure is rejected with a witness") {
    auto L = corpus::gl11(Q);
    L.bracket[2][3].clear();
    L.bracket[2][3][0] = Scalar::one(Q); // [x,y] = a only: breaks Jacobi
    L.bracket[3][2] = L.bracket[2][3];
    REQUIRE_FALSE(L.validate().all_pass());
    REQUIRE_THROWS_AS(from_lie_superalgebra(L), error);
  }
}

TEST_CASE("build_H") {
  SECTION("trivial pair gives the exterior algebra") {
    auto d = corpus::dhcp_trivial(Q);
    REQUIRE(verify_dhcp(d).all_pass());
    REQUIRE(check_overlaps(d.pres).all_resolvable);
    auto H = build_H(d);
    REQUIRE(H.hopf.dim() == 2);
    REQUIRE(verify_hopf(H.hopf).all_pass());
    auto e = exterior_algebra(1, Q);
    REQUIRE(H.hopf.mult == e.mult);
    REQUIRE(H.hopf.comult == e.comult);
  }
  SECTION("Z/2 sign pair: dim 4, xg = -gx, x primitive, S(x) = -x") {
    auto d = corpus::dhcp_z2(Q);
    auto H = build_H(d);
    REQUIRE(H.hopf.dim() == 4);
    REQUIRE(verify_hopf(H.hopf).all_pass());
    REQUIRE(verify_super_cocommutative(H.hopf).pass);
    int g = H.index_of(1, 0), x = H.index_of(0, 1), gx = H.index_of(1, 1);
    REQUIRE(H.hopf.mult[x][g] == scaled(unit_vec(gx, Q), -Scalar::one(Q)));
    REQUIRE(H.hopf.mult[g][x] == unit_vec(gx, Q));
    SVec2 dx = H.hopf.comult[x];
    REQUIRE(dx.size() == 2);
    REQUIRE(coeff(dx, {H.index_of(0, 0), x}, Q).is_one());
    REQUIRE(coeff(dx, {x, H.index_of(0, 0)}, Q).is_one());
    REQUIRE(H.hopf.antipode[x] == scaled(unit_vec(x, Q), -Scalar::one(Q)));
    REQUIRE_FALSE(verify_super_commutative(H.hopf).pass);
  }
  SECTION("dim H = dim J * 2^{dim V} and the wedge words are J-free") {
    auto F5 = FieldSpec::Fp(5);
    std::vector<DHCPData> pairs;
    pairs.push_back(corpus::dhcp_z2(Q));
    pairs.push_back(corpus::dhcp_z2_2d(Q));
    pairs.push_back(corpus::dhcp_charp(F5));
    for (auto& d : pairs) {
      REQUIRE(verify_dhcp(d).all_pass());
      REQUIRE(check_overlaps(d.pres).all_resolvable);
      auto H = build_H(d);
      int nj = d.pres.ring->dim();
      REQUIRE(H.hopf.dim() == nj * (1 << d.dimV()));
      // rank check: products a * x_{i1} * ... * x_{in} computed by repeated
      // multiplication span all of H
      const FieldSpec& f = d.field();
      auto wedge_pos = [&](const Word& w) {
        for (size_t k = 0; k < H.wedges.size(); ++k)
          if (H.wedges[k] == w) return (int)k;
        FAIL("missing wedge");
        return -1;
      };
      Echelon span(f);
      for (int a = 0; a < nj; ++a)
        for (const auto& w : H.wedges) {
          SVec prod = unit_vec(H.index_of(a, 0), f);
          for (int l : w) {
            SVec letter;
            for (const auto& [ju, cu] : d.pres.ring->unit())
              add_term(letter, H.index_of(ju, wedge_pos(Word{l})), cu);
            prod = H.hopf.mul(prod, letter);
          }
          span.insert(prod);
        }
      REQUIRE(span.rank() == H.hopf.dim());
    }
  }
  SECTION("char-p pair with nonzero bracket: [x,x] = 2 x^2 in H") {
    auto F3 = FieldSpec::Fp(3);
    auto d = corpus::dhcp_charp(F3);
    auto H = build_H(d);
    REQUIRE(H.hopf.dim() == 6);
    REQUIRE(verify_hopf(H.hopf).all_pass());
    int x = H.index_of(0, 1);
    SVec two_x2 = scaled(H.hopf.mult[x][x], Scalar::of_long(F3, 2));
    SVec br = unit_vec(H.index_of(1, 0), F3); // delta_1 . empty wedge
    REQUIRE(two_x2 == br);
  }
}

TEST_CASE("recover_pair") {
  SECTION("exterior algebra recovers the trivial pair") {
    auto h = exterior_algebra(1, Q);
    auto r = recover_pair(h);
    REQUIRE(finite_ring(r.pair).hopf().dim() == 1);
    REQUIRE(r.pair.dimV() == 1);
    REQUIRE(r.pair.pres.bracket[0][0].empty());
    REQUIRE(verify_dhcp(r.pair).all_pass());
  }
  SECTION("purely even input gives V = 0") {
    auto h = group_algebra(GroupTable::cyclic(3), Q);
    auto r = recover_pair(h);
    REQUIRE(r.pair.dimV() == 0);
    REQUIRE(finite_ring(r.pair).hopf().dim() == 3);
  }
  SECTION("round trip on the Z/2 pair produces a pair isomorphism") {
    auto d = corpus::dhcp_z2(Q);
    auto H = build_H(d);
    auto r = recover_pair(H.hopf);
    REQUIRE(verify_dhcp(r.pair).all_pass());
    const FieldSpec& f = Q;
    Echelon jspan(f), vspan(f);
    for (const auto& v : r.j_basis) jspan.insert(v);
    for (const auto& v : r.v_basis) vspan.insert(v);
    int nj = d.pres.ring->dim();
    DHCPMorphism iso;
    iso.src = &d;
    iso.dst = &r.pair;
    iso.f = SMat(finite_ring(r.pair).hopf().dim(), nj);
    for (int a = 0; a < nj; ++a) {
      auto c = jspan.coords(unit_vec(H.index_of(a, 0), f));
      REQUIRE(c);
      for (const auto& [k, v] : *c) iso.f.set(k, a, v);
    }
    iso.g = SMat((int)r.v_basis.size(), d.dimV());
    for (int x = 0; x < d.dimV(); ++x) {
      SVec letter;
      for (const auto& [ju, cu] : d.pres.ring->unit())
        add_term(letter, H.index_of(ju, 1), cu); // wedge index 1 = {x}
      auto c = vspan.coords(letter);
      REQUIRE(c);
      for (const auto& [k, v] : *c) iso.g.set(k, x, v);
    }
    REQUIRE(verify_dhcp_morphism(iso).all_pass());
    REQUIRE(rank_of(iso.f.rows, f) == nj);
    REQUIRE(rank_of(iso.g.rows, f) == d.dimV());
    REQUIRE(finite_ring(r.pair).hopf().dim() == nj);
    REQUIRE((int)r.v_basis.size() == d.dimV());
  }
}

TEST_CASE("normality and short exactness") {
  const FieldSpec& f = Q;
  SECTION("identity morphism is normal") {
    auto d = corpus::dhcp_z2(Q);
    DHCPMorphism id;
    id.src = &d;
    id.dst = &d;
    id.f = SMat::identity(2, f);
    id.g = SMat::identity(1, f);
    REQUIRE(verify_dhcp_morphism(id).all_pass());
    auto nr = check_morphism_normal(id);
    REQUIRE(nr.normal);
  }
  SECTION("(kZ/2, 0) inside (kZ/2, kx) violates condition (iv)") {
    auto d2 = corpus::dhcp_z2(Q);
    DHCPData d1;
    d1.pres.ring = d2.pres.ring;
    d1.pres.xspace = SuperSpace({}, {});
    DHCPMorphism inc;
    inc.src = &d1;
    inc.dst = &d2;
    inc.f = SMat::identity(2, f);
    inc.g = SMat(1, 0);
    auto nr = check_morphism_normal(inc);
    REQUIRE_FALSE(nr.normal);
    REQUIRE(nr.failed_condition.find("(iv)") != std::string::npos);
  }
  SECTION("(kZ/2, 0) -> (kZ/2, kx) -> (k, kx) is short exact") {
    // trivial action on the middle pair, so that the quotient map of pairs
    // is equivariant
    auto d2 = corpus::dhcp_z2(Q);
    d2.pres.gen_action[0][1] = unit_vec(0, f);
    DHCPData d1;
    d1.pres.ring = d2.pres.ring;
    d1.pres.xspace = SuperSpace({}, {});
    DHCPData d3 = corpus::dhcp_trivial(Q);
    DHCPMorphism m1, m2;
    m1.src = &d1;
    m1.dst = &d2;
    m1.f = SMat::identity(2, f);
    m1.g = SMat(1, 0);
    m2.src = &d2;
    m2.dst = &d3;
    m2.f = SMat(1, 2);
    m2.f.set(0, 0, Scalar::one(f));
    m2.f.set(0, 1, Scalar::one(f));
    m2.g = SMat::identity(1, f);
    std::string why;
    bool ok = check_short_exact_dhcp(m1, m2, &why);
    INFO(why);
    REQUIRE(ok);
  }
  SECTION("broken surjectivity on V3 is rejected") {
    auto d2 = corpus::dhcp_z2(Q);
    DHCPData d1;
    d1.pres.ring = std::make_shared<FiniteJRing>(group_algebra(GroupTable::cyclic(1), f));
    d1.pres.xspace = SuperSpace({}, {});
    auto d3 = corpus::dhcp_z2(Q);
    DHCPMorphism m1, m2;
    m1.src = &d1;
    m1.dst = &d2;
    m1.f = SMat(2, 1);
    m1.f.set(0, 0, Scalar::one(f));
    m1.g = SMat(1, 0);
    m2.src = &d2;
    m2.dst = &d3;
    m2.f = SMat::identity(2, f);
    m2.g = SMat(1, 1); // zero map on V
    std::string why;
    REQUIRE_FALSE(check_short_exact_dhcp(m1, m2, &why));
  }
}

TEST_CASE("Kostant-style spot check at char 0") {
  SECTION("gl(1|1)") {
    auto L = corpus::gl11(Q);
    auto d = from_lie_superalgebra(L, 9);
    HView view(d);
    auto prim = truncated_primitive_basis(view, d, 4);
    REQUIRE(prim.size() == 4);
    auto* pbw = dynamic_cast<PbwRing*>(d.pres.ring.get());
    Echelon span(Q);
    for (const auto& v : prim) span.insert(v);
    for (int g = 0; g < 2; ++g)
      REQUIRE(span.member(unit_vec(view.intern(pbw->generator(g), {}), Q)));
    for (int x = 0; x < 2; ++x) REQUIRE(span.member(unit_vec(view.intern(0, {x}), Q)));
  }
  SECTION("osp(1|2)") {
    auto L = corpus::osp12(Q);
    auto d = from_lie_superalgebra(L, 9);
    HView view(d);
    auto prim = truncated_primitive_basis(view, d, 4);
    REQUIRE(prim.size() == 5);
    auto* pbw = dynamic_cast<PbwRing*>(d.pres.ring.get());
    Echelon span(Q);
    for (const auto& v : prim) span.insert(v);
    for (int g = 0; g < 3; ++g)
      REQUIRE(span.member(unit_vec(view.intern(pbw->generator(g), {}), Q)));
    for (int x = 0; x < 2; ++x) REQUIRE(span.member(unit_vec(view.intern(0, {x}), Q)));
  }
}
