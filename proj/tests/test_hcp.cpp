#include <catch2/catch_amalgamated.hpp>

#include "shopf/corpus.hpp"
#include "shopf/hcp.hpp"

using namespace shopf;

namespace {
const FieldSpec Q = FieldSpec::Q();

// explicit pair isomorphism recovered -> original, checked through the duals
void require_recover_iso(RecoveredHCP& rec, HCPData& orig) {
  const FieldSpec& f = orig.field();
  // C-side: Abar representative -> its C coordinate (all reps live in the
  // wedge-empty block of the psi'-echelon basis)
  int nc = orig.C.dim();
  REQUIRE(rec.abar.quot.dim() == nc);
  SMat fmat(nc, nc);
  for (size_t k = 0; k < rec.abar.rep.size(); ++k) {
    REQUIRE(rec.abar.rep[k] < nc); // degree-0 block comes first
    fmat.set(rec.abar.rep[k], (int)k, Scalar::one(f));
  }
  // W-side: representative (c, {l}) -> eps(c) w_l
  int nw = orig.dimW();
  REQUIRE((int)rec.wa_rep.size() == nw);
  SMat gmat(nw, nw);
  for (size_t k = 0; k < rec.wa_rep.size(); ++k) {
    int idx = rec.wa_rep[k];
    int wi = idx / nc, c = idx % nc;
    // wedge index wi must be a singleton {l}: singletons are indices 1..nw
    REQUIRE(wi >= 1);
    REQUIRE(wi <= nw);
    gmat.set(wi - 1, (int)k, orig.C.counit[c]);
  }
  REQUIRE(rank_of(fmat.rows, f) == nc);
  REQUIRE(rank_of(gmat.rows, f) == nw);
  HCPMorphism iso;
  iso.src = &rec.pair;
  iso.dst = &orig;
  iso.f = fmat;
  iso.g = gmat;
  auto d_orig = associated_dhcp(orig);
  auto d_rec = associated_dhcp(rec.pair);
  auto dm = dualized(iso, d_orig, d_rec);
  REQUIRE(verify_dhcp_morphism(dm).all_pass());
  // and f is a Hopf algebra isomorphism Abar -> C
  MorphismData fm{&rec.abar.quot, &orig.C, fmat};
  REQUIRE(verify_morphism(fm).all_pass());
}
} // namespace

TEST_CASE("associated_dhcp") {
  SECTION("sign coaction gives the sign action") {
    auto h = corpus::hcp_z2(Q);
    auto d = associated_dhcp(h);
    REQUIRE(verify_dhcp(d).all_pass());
    // x <| gamma_1 = -x (the nonidentity grouplike of the dual group algebra)
    REQUIRE(d.pres.gen_action[0][1] == scaled(unit_vec(0, Q), -Scalar::one(Q)));
    REQUIRE(d.pres.gen_action[0][0] == unit_vec(0, Q));
  }
  SECTION("trivial coaction gives the trivial action") {
    auto h = corpus::hcp_trivial(Q);
    auto d = associated_dhcp(h);
    REQUIRE(verify_dhcp(d).all_pass());
    REQUIRE(d.pres.gen_action[0][0] == unit_vec(0, Q));
  }
}

TEST_CASE("verify_hcp") {
  SECTION("valid pairs pass") {
    auto h1 = corpus::hcp_z2(Q);
    REQUIRE(verify_hcp(h1).all_pass());
    auto h2 = corpus::hcp_trivial(Q);
    REQUIRE(verify_hcp(h2).all_pass());
    auto F3 = FieldSpec::Fp(3);
    auto h3 = corpus::hcp_charp(F3);
    REQUIRE(verify_hcp(h3).all_pass());
    auto h4 = corpus::hcp_s3(Q);
    REQUIRE(verify_hcp(h4).all_pass());
  }
  SECTION("non-coassociative coaction fails the comodule laws") {
    auto h = corpus::hcp_broken_coaction(Q);
    auto rep = verify_hcp(h);
    REQUIRE_FALSE(rep.all_pass());
    auto* e = rep.find("comodule-laws");
    REQUIRE(e);
    REQUIRE_FALSE(e->pass);
  }
  SECTION("non-colinear bracket fails condition (a) in its colinear form") {
    auto F3 = FieldSpec::Fp(3);
    auto h = corpus::hcp_broken_colinear(F3);
    auto rep = verify_hcp(h);
    REQUIRE_FALSE(rep.all_pass());
    auto* e = rep.find("condition-(a)-colinear");
    REQUIRE(e);
    REQUIRE_FALSE(e->pass);
    auto* a = rep.find("dual-pair condition-(a)");
    REQUIRE(a);
    REQUIRE_FALSE(a->pass);
  }
}

TEST_CASE("build_A") {
  SECTION("trivial pair gives the exterior algebra") {
    auto h = corpus::hcp_trivial(Q);
    auto A = build_A(h);
    REQUIRE(A.hopf.dim() == 2);
    REQUIRE(verify_hopf(A.hopf).all_pass());
    REQUIRE(verify_super_commutative(A.hopf).pass);
    auto e = exterior_algebra(1, Q);
    REQUIRE(A.hopf.mult == e.mult);
    REQUIRE(A.hopf.comult == e.comult);
  }
  SECTION("Z/2 pair: dim 4, all axioms, restriction residual zero") {
    auto h = corpus::hcp_z2(Q);
    auto A = build_A(h);
    REQUIRE(A.hopf.dim() == 4);
    REQUIRE(verify_hopf(A.hopf).all_pass());
    REQUIRE(verify_super_commutative(A.hopf).pass);
    REQUIRE(A.restriction.all_pass());
  }
  SECTION("char-p pairs with nonzero bracket") {
    for (long p : {3L, 5L}) {
      auto Fp = FieldSpec::Fp(p);
      auto h = corpus::hcp_charp(Fp);
      auto A = build_A(h);
      REQUIRE(A.hopf.dim() == 2 * (int)p);
      REQUIRE(verify_hopf(A.hopf).all_pass());
      REQUIRE(verify_super_commutative(A.hopf).pass);
      REQUIRE(A.restriction.all_pass());
    }
  }
  SECTION("dim A = dim C * 2^{dim W} across the corpus") {
    auto F3 = FieldSpec::Fp(3);
    std::vector<HCPData> corpus = {corpus::hcp_trivial(Q),    corpus::hcp_z2(Q),
                                   corpus::hcp_z2_2d(Q),      corpus::hcp_s3(Q),
                                   corpus::hcp_trivial_3w(Q), corpus::hcp_charp(F3)};
    for (auto& h : corpus) {
      auto A = build_A(h);
      REQUIRE(A.hopf.dim() == h.C.dim() * (1 << h.dimW()));
    }
  }
  SECTION("three odd generators give the rank-8 exterior algebra") {
    auto h = corpus::hcp_trivial_3w(Q);
    auto A = build_A(h);
    REQUIRE(A.hopf.dim() == 8);
    REQUIRE(verify_hopf(A.hopf).all_pass());
    auto e = exterior_algebra(3, Q, "w");
    REQUIRE(A.hopf.mult == e.mult);
    REQUIRE(A.hopf.comult == e.comult);
  }
  SECTION("a coinvariant vector forces a nonzero odd primitive in A") {
    auto F3 = FieldSpec::Fp(3);
    std::vector<HCPData> with_coinv = {corpus::hcp_trivial(Q), corpus::hcp_z2_2d(Q),
                                       corpus::hcp_charp(F3)};
    for (auto& h : with_coinv) {
      auto A = build_A(h);
      auto prim = primitives(A.hopf);
      bool has_odd = false;
      for (size_t i = 0; i < prim.basis.size(); ++i)
        if (prim.parity[i] == 1) has_odd = true;
      REQUIRE(has_odd);
    }
  }
}

TEST_CASE("psi_prime") {
  auto F3 = FieldSpec::Fp(3);
  std::vector<HCPData> corpus = {corpus::hcp_trivial(Q), corpus::hcp_z2(Q),
                                 corpus::hcp_z2_2d(Q), corpus::hcp_charp(F3)};
  for (auto& h : corpus) {
    auto A = build_A(h);
    auto rep = psi_prime(h, A);
    INFO(h.C.space.names[0]);
    REQUIRE(rep.all_pass());
  }
}

TEST_CASE("pair_H_A") {
  SECTION("trivial pair: 2x2, invertible") {
    auto h = corpus::hcp_trivial(Q);
    auto d = associated_dhcp(h);
    auto H = build_H(d);
    auto A = build_A(h);
    auto P = pair_H_A(d, H, A);
    REQUIRE(P.nondegenerate);
    REQUIRE(P.laws.all_pass());
  }
  SECTION("Z/2 pair: 4x4 of full rank with all Hopf-pairing laws") {
    auto h = corpus::hcp_z2(Q);
    auto d = associated_dhcp(h);
    auto H = build_H(d);
    auto A = build_A(h);
    auto P = pair_H_A(d, H, A);
    REQUIRE(P.nondegenerate);
    REQUIRE(P.laws.all_pass());
    REQUIRE(rank(P.matrix, Q) == 4);
  }
  SECTION("char-p pair with nonzero bracket") {
    auto F3 = FieldSpec::Fp(3);
    auto h = corpus::hcp_charp(F3);
    auto d = associated_dhcp(h);
    auto H = build_H(d);
    auto A = build_A(h);
    auto P = pair_H_A(d, H, A);
    REQUIRE(P.nondegenerate);
    REQUIRE(P.laws.all_pass());
  }
}

TEST_CASE("recover_hcp") {
  SECTION("exterior algebra gives the trivial pair") {
    auto a = exterior_algebra(1, Q);
    auto rec = recover_hcp(a);
    REQUIRE(rec.pair.C.dim() == 1);
    REQUIRE(rec.pair.dimW() == 1);
    REQUIRE(rec.pair.bracket[0][0].empty());
    REQUIRE(verify_hcp(rec.pair).all_pass());
  }
  SECTION("purely even input gives W = 0") {
    auto a = function_algebra(GroupTable::s3(), Q);
    auto rec = recover_hcp(a);
    REQUIRE(rec.pair.dimW() == 0);
    REQUIRE(rec.pair.C.dim() == 6);
  }
  SECTION("round trip recover_hcp(build_A(h)) = h up to isomorphism") {
    auto F3 = FieldSpec::Fp(3);
    std::vector<HCPData> corpus = {corpus::hcp_trivial(Q), corpus::hcp_z2(Q),
                                   corpus::hcp_z2_2d(Q), corpus::hcp_charp(F3)};
    for (auto& h : corpus) {
      auto A = build_A(h);
      auto rec = recover_hcp(A.hopf);
      REQUIRE(verify_hcp(rec.pair).all_pass());
      require_recover_iso(rec, h);
    }
  }
}

TEST_CASE("beta_roundtrip") {
  SECTION("exterior algebras") {
    for (int n : {1, 2}) {
      auto a = exterior_algebra(n, Q);
      auto b = beta_roundtrip(a);
      INFO("n = " << n);
      REQUIRE(b.checks.all_pass());
      REQUIRE(b.is_isomorphism);
    }
  }
  SECTION("the Z/2 smash example is a verified isomorphism") {
    auto h = corpus::hcp_z2(Q);
    auto A = build_A(h);
    auto b = beta_roundtrip(A.hopf);
    REQUIRE(b.checks.all_pass());
    REQUIRE(b.is_isomorphism);
  }
  SECTION("char-p example with nonzero bracket") {
    auto F3 = FieldSpec::Fp(3);
    auto h = corpus::hcp_charp(F3);
    auto A = build_A(h);
    auto b = beta_roundtrip(A.hopf);
    REQUIRE(b.checks.all_pass());
    REQUIRE(b.is_isomorphism);
  }
  SECTION("purely even function algebra reduces to the identity on C") {
    auto a = function_algebra(GroupTable::cyclic(3), Q);
    auto b = beta_roundtrip(a);
    REQUIRE(b.is_isomorphism);
  }
}

TEST_CASE("unipotence flags") {
  SECTION("exterior algebra: (true, true)") {
    auto flags = unipotence_check(exterior_algebra(1, Q));
    REQUIRE(flags.a_irreducible);
    REQUIRE(flags.abar_irreducible);
  }
  SECTION("Z/2 smash: (false, false)") {
    auto h = corpus::hcp_z2(Q);
    auto A = build_A(h);
    auto flags = unipotence_check(A.hopf);
    REQUIRE_FALSE(flags.a_irreducible);
    REQUIRE_FALSE(flags.abar_irreducible);
  }
  SECTION("char-p local example: (true, true)") {
    auto F5 = FieldSpec::Fp(5);
    auto h = corpus::hcp_charp(F5);
    auto A = build_A(h);
    auto flags = unipotence_check(A.hopf);
    REQUIRE(flags.a_irreducible);
    REQUIRE(flags.abar_irreducible);
  }
  SECTION("flags agree across the corpus") {
    auto F5 = FieldSpec::Fp(5);
    std::vector<HopfAlgebra> As;
    {
      auto h = corpus::hcp_trivial(Q);
      As.push_back(build_A(h).hopf);
    }
    {
      auto h = corpus::hcp_z2_2d(Q);
      As.push_back(build_A(h).hopf);
    }
    {
      auto h = corpus::hcp_charp(F5);
      As.push_back(build_A(h).hopf);
    }
    As.push_back(exterior_algebra(2, Q));
    As.push_back(function_algebra(GroupTable::cyclic(2), Q));
    for (const auto& a : As) {
      auto flags = unipotence_check(a);
      REQUIRE(flags.a_irreducible == flags.abar_irreducible);
    }
  }
}

TEST_CASE("conormality and short exactness at the pair level") {
  const FieldSpec& f = Q;
  SECTION("identity sequence is exact") {
    auto h2 = corpus::hcp_z2(Q);
    HCPData h1;
    h1.C = group_algebra(GroupTable::cyclic(1), f);
    h1.W = SuperSpace({}, {});
    auto h3 = corpus::hcp_z2(Q);
    // (k, 0) -> (C, W) -> (C, W) with the identity second map is short exact
    HCPMorphism m1, m2;
    m1.src = &h1;
    m1.dst = &h2;
    m1.f = SMat(2, 1);
    m1.f.set(0, 0, Scalar::one(f)); // unit of C = e0 + e1
    m1.f.set(1, 0, Scalar::one(f));
    m1.g = SMat(1, 0);
    m2.src = &h2;
    m2.dst = &h3;
    m2.f = SMat::identity(2, f);
    m2.g = SMat::identity(1, f);
    std::string why;
    bool ok = check_short_exact_hcp(m1, m2, &why);
    INFO(why);
    REQUIRE(ok);
  }
  SECTION("quotient by the coinvariant line is conormal (odd-primitive setup)") {
    auto h2 = corpus::hcp_z2_2d(Q);
    HCPData h3;
    h3.C = h2.C;
    h3.W = SuperSpace({"w2"}, {1});
    h3.coaction.assign(1, SVec2{});
    h3.coaction[0][{0, 0}] = Scalar::one(f);
    h3.coaction[0][{0, 1}] = -Scalar::one(f);
    h3.bracket.assign(1, std::vector<SVec>(1));
    HCPMorphism m;
    m.src = &h2;
    m.dst = &h3;
    m.f = SMat::identity(2, f);
    m.g = SMat(1, 2);
    m.g.set(0, 1, Scalar::one(f)); // kill the coinvariant w1, keep w2
    std::string why;
    bool ok = check_conormal(m, &why);
    INFO(why);
    REQUIRE(ok);
  }
  SECTION("broken surjectivity is rejected") {
    auto h2 = corpus::hcp_z2(Q);
    auto h3 = corpus::hcp_z2(Q);
    HCPData h1;
    h1.C = group_algebra(GroupTable::cyclic(1), f);
    h1.W = SuperSpace({}, {});
    HCPMorphism m1, m2;
    m1.src = &h1;
    m1.dst = &h2;
    m1.f = SMat(2, 1);
    m1.f.set(0, 0, Scalar::one(f));
    m1.f.set(1, 0, Scalar::one(f));
    m1.g = SMat(1, 0);
    m2.src = &h2;
    m2.dst = &h3;
    m2.f = SMat::identity(2, f);
    m2.g = SMat(1, 1); // zero on W
    std::string why;
    REQUIRE_FALSE(check_short_exact_hcp(m1, m2, &why));
  }
}
