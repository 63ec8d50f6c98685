#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include <random>

#include "../src/realization.hpp"

using namespace cdgl;

namespace {

Presentation sphere_L() {
  Presentation L(4);
  L.add_generator("v", 1);
  return L;
}

Presentation two_gen_L() {
  Presentation L(4);
  L.add_generator("v", 1);
  L.add_generator("w", 1);
  return L;
}

// dq = [p,p]: a target with a genuinely nonzero differential.
Presentation pq_L() {
  Presentation L(4);
  int32_t p = L.add_generator("p", 1);
  int32_t q = L.add_generator("q", 3);
  L.set_differential(q, L.bracket(lie_gen(p), lie_gen(p)));
  return L;
}

// One Maurer-Cartan-ready generator: dm is the image of the level-0 vertex
// differential under a0 -> m, so the vertex simplex at m is valid by design.
Presentation mc_L() {
  Presentation L(4);
  int32_t m = L.add_generator("m", -1);
  const Model& M0 = realization_model(0, 4);
  L.set_differential(m, apply_images(M0.P, L, {lie_gen(m)}, M0.P.differential(0)));
  return L;
}

bool eq_simplex(const Presentation& L, const RealizationSimplex& a,
                const RealizationSimplex& b) {
  if (a.level != b.level || a.images.size() != b.images.size()) return false;
  for (size_t g = 0; g < a.images.size(); ++g)
    if (!L.equal(a.images[g], b.images[g])) return false;
  return true;
}

int32_t long_gen(int n, int truncation) {
  std::vector<int> t(n + 1);
  for (int i = 0; i <= n; ++i) t[i] = i;
  return realization_model(n, truncation).gen(t);
}

}  // namespace

TEST_CASE("model tower is shared and capped at level 4") {
  CHECK(realization_model(2, 4).P.truncation() == 4);
  CHECK(realization_model(3, 4).P.truncation() == 4);
  CHECK(realization_model(4, 4).P.truncation() == 3);
  CHECK(realization_model(4, 4).modified);
  CHECK_FALSE(realization_model(3, 4).modified);
  CHECK(&realization_model(3, 4) == &realization_model(3, 4));
  CHECK_THROWS_AS(realization_model(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(realization_model(-1, 4), std::invalid_argument);
}

TEST_CASE("simplex validation") {
  Presentation L = sphere_L();
  for (int n = 0; n <= 4; ++n) {
    RealizationSimplex b = basepoint(L, n);
    CHECK(b.level == n);
    CHECK(validate_simplex(L, n, b.images).empty());
  }

  // A level-2 simplex may send the long generator anywhere in degree 1.
  const Model& M2 = realization_model(2, 4);
  std::vector<LieElement> imgs(M2.P.size());
  imgs[long_gen(2, 4)] = lie_gen(L.id("v"));
  CHECK(validate_simplex(L, 2, imgs).empty());
  RealizationSimplex s = make_simplex(L, 2, imgs);
  CHECK(L.equal(evaluate(L, s, lie_gen(long_gen(2, 4))), lie_gen(L.id("v"))));

  // Wrong image count, wrong degree.
  CHECK_THROWS_AS(validate_simplex(L, 2, {}), std::invalid_argument);
  std::vector<LieElement> bad(M2.P.size());
  bad[M2.P.id("a01")] = lie_gen(L.id("v"));
  CHECK_THROWS_AS(validate_simplex(L, 2, bad), std::invalid_argument);

  // dq = [p,p] forces the second witness image: the long generator alone is
  // not a morphism, and the failure names it.
  Presentation P = pq_L();
  const Model& M4 = realization_model(4, 4);
  std::vector<LieElement> part(M4.P.size());
  part[long_gen(4, 4)] = lie_gen(P.id("q"));
  std::vector<std::string> fails = validate_simplex(P, 4, part);
  REQUIRE(fails.size() == 1);
  CHECK(fails[0] == "a01234");
  CHECK_THROWS_AS(make_simplex(P, 4, part), std::invalid_argument);
  part[M4.P.id("a1234")] = P.apply_d(lie_gen(P.id("q")));
  CHECK(validate_simplex(P, 4, part).empty());
}

TEST_CASE("faces, degeneracies, and s0-degenerate simplices") {
  Presentation L = mc_L();
  REQUIRE_FALSE(L.check_d_squared());
  RealizationSimplex v0 = make_simplex(L, 0, {lie_gen(L.id("m"))});

  RealizationSimplex e = degeneracy(L, 0, v0);
  CHECK(e.level == 1);
  const Model& M1 = realization_model(1, 4);
  CHECK(L.equal(e.images[M1.P.id("a0")], lie_gen(L.id("m"))));
  CHECK(L.equal(e.images[M1.P.id("a1")], lie_gen(L.id("m"))));
  CHECK(e.images[M1.P.id("a01")].empty());
  CHECK(eq_simplex(L, face(L, 0, e), v0));
  CHECK(eq_simplex(L, face(L, 1, e), v0));
  CHECK(s0_degenerate(L, e));
  CHECK_FALSE(s0_degenerate(L, v0));

  // s0 s0 = s1 s0, and the face/degeneracy exchange rules.
  RealizationSimplex t00 = degeneracy(L, 0, e);
  RealizationSimplex t10 = degeneracy(L, 1, e);
  CHECK(eq_simplex(L, t00, t10));
  CHECK(eq_simplex(L, face(L, 0, t10), degeneracy(L, 0, face(L, 0, e))));
  CHECK(eq_simplex(L, face(L, 2, t00), degeneracy(L, 0, face(L, 1, e))));
  for (int i = 0; i <= 1; ++i) {
    CHECK(eq_simplex(L, face(L, i, degeneracy(L, i, e)), e));
    CHECK(eq_simplex(L, face(L, i + 1, degeneracy(L, i, e)), e));
  }

  CHECK_THROWS_AS(face(L, 0, v0), std::invalid_argument);
  CHECK_THROWS_AS(face(L, 2, e), std::invalid_argument);
  CHECK_THROWS_AS(degeneracy(L, 2, e), std::invalid_argument);
}

TEST_CASE("witnesses and the homotopy map rho") {
  Presentation L = sphere_L();
  LieElement v = lie_gen(L.id("v"));

  RealizationSimplex wit = surjectivity_witness(L, v);
  CHECK(wit.level == 2);
  LieElement top = wit.images[long_gen(2, 4)];
  LieElement mv = v;
  CHECK(L.equal(top, mv.scale(rat(-1))));  // (-1)^1 v
  HomologyClass c = rho(L, wit);
  CHECK(c.degree == 1);
  CHECK(L.equal(c.representative, v));
  CHECK(same_class(L, c, HomologyClass{1, v}));
  CHECK_FALSE(s0_degenerate(L, wit));
  for (int i = 0; i <= 2; ++i)
    CHECK(eq_simplex(L, face(L, i, wit), basepoint(L, 1)));

  // rho(witness(x)) = [x] on spanning sets in degrees 1..3.
  for (const Presentation& T : {sphere_L(), two_gen_L()}) {
    for (int d = 1; d <= 3; ++d) {
      for (const Tree& t : T.space_basis(d)) {
        LieElement x = lie(t);
        RealizationSimplex w = surjectivity_witness(T, x);
        CHECK(w.level == d + 1);
        CHECK(same_class(T, rho(T, w), HomologyClass{d, x}));
      }
    }
  }

  // A boundary witnesses the zero class.
  Presentation P = pq_L();
  LieElement pp = P.apply_d(lie_gen(P.id("q")));
  RealizationSimplex wb = surjectivity_witness(P, pp);
  CHECK(wb.level == 3);
  CHECK(same_class(P, rho(P, wb), HomologyClass{2, {}}));
  CHECK_FALSE(same_class(P, HomologyClass{1, lie_gen(P.id("p"))}, HomologyClass{1, {}}));

  // Witness of a degree-3 element lives at level 4 and pins both images.
  RealizationSimplex wq = surjectivity_witness(P, lie_gen(P.id("q")));
  CHECK(wq.level == 4);
  LieElement mq = lie_gen(P.id("q"));
  CHECK(P.equal(wq.images[long_gen(4, 4)], mq.scale(rat(-1))));
  // q is not a cycle, so it represents no homology class.
  CHECK_THROWS_AS(rho(P, wq), std::invalid_argument);

  // Zero with a degree hint is the basepoint.
  RealizationSimplex z = surjectivity_witness(L, {}, 2);
  CHECK(eq_simplex(L, z, basepoint(L, 3)));

  CHECK_THROWS_AS(surjectivity_witness(mc_L(), {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(surjectivity_witness(L, {}), std::invalid_argument);
  CHECK_THROWS_AS(surjectivity_witness(L, v, 2), std::invalid_argument);
  Presentation T2 = two_gen_L();
  LieElement mixed = lie_gen(T2.id("v"));
  mixed.add(T2.bracket(lie_gen(T2.id("v")), lie_gen(T2.id("w"))), rat(1));
  CHECK_THROWS_AS(surjectivity_witness(T2, mixed), std::invalid_argument);
  LieElement deg4 = T2.bracket(lie_gen(T2.id("v")),
                               T2.bracket(lie_gen(T2.id("v")),
                                          T2.bracket(lie_gen(T2.id("v")),
                                                     lie_gen(T2.id("w")))));
  CHECK_THROWS_AS(surjectivity_witness(T2, deg4), std::invalid_argument);
}

TEST_CASE("homotopy tables") {
  std::vector<HomotopyRow> rows = homotopy_table(sphere_L(), 2, 4);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 2);
  CHECK(rows[0].dim == 1);
  CHECK(rows[1].n == 3);
  CHECK(rows[1].dim == 1);
  CHECK(rows[2].n == 4);
  CHECK(rows[2].dim == 0);
  for (const HomotopyRow& r : rows) CHECK_FALSE(r.bch_group);

  std::vector<HomotopyRow> one = homotopy_table(sphere_L(), 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].dim == 0);
  CHECK(one[0].bch_group);

  std::vector<HomotopyRow> two = homotopy_table(two_gen_L(), 2, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0].dim == 2);
  CHECK(two[1].dim == 3);

  Presentation U(4);
  U.add_generator("u", 2);
  std::vector<HomotopyRow> three = homotopy_table(U, 3, 3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].dim == 1);

  std::vector<HomotopyRow> pq = homotopy_table(pq_L(), 2, 4);
  REQUIRE(pq.size() == 3);
  CHECK(pq[0].dim == 1);  // p survives
  CHECK(pq[1].dim == 0);  // [p,p] is the boundary of q
  CHECK(pq[2].dim == 0);  // q is not a cycle

  CHECK_THROWS_AS(homotopy_table(sphere_L(), 0, 2), std::invalid_argument);
}

TEST_CASE("phi: leaves, interning, and vanishing") {
  Presentation L = sphere_L();
  LieElement v = lie_gen(L.id("v"));
  PhiTower T(L);

  RealizationSimplex wit = surjectivity_witness(L, v);
  int g = T.intern(wit);
  REQUIRE(g >= 0);
  CHECK(T.intern(wit) == g);
  CHECK(T.intern(surjectivity_witness(L, v)) == g);
  LieElement twice = v;
  CHECK(T.intern(surjectivity_witness(L, twice.scale(rat(2)))) != g);

  // A degeneracy is zero in the tower; the basepoint too.
  CHECK(T.intern(degeneracy(L, 0, wit)) == -1);
  CHECK(T.intern(basepoint(L, 2)) == -1);

  // Leaf value (-1)^n * top image recovers x, bracket words at level 1 vanish.
  CHECK(L.equal(T.phi(1, lie_gen(g)), v));
  LieElement br = T.formal(1).bracket(lie_gen(g), lie_gen(g));
  CHECK_FALSE(br.empty());
  CHECK(T.phi(1, br).empty());

  // Phi(witness(x)) = x over basis elements of degrees 1..3.
  for (const Presentation& P : {sphere_L(), two_gen_L()}) {
    PhiTower tower(P);
    for (int d = 1; d <= 3; ++d) {
      for (const Tree& t : P.space_basis(d)) {
        LieElement x = lie(t);
        int id = tower.intern(surjectivity_witness(P, x));
        REQUIRE(id >= 0);
        CHECK(P.equal(tower.phi(d, lie_gen(id)), x));
      }
    }
  }
}

TEST_CASE("phi: a pinned nontrivial zeroth face") {
  Presentation P = pq_L();
  LieElement q = lie_gen(P.id("q"));
  LieElement pp = P.apply_d(q);
  PhiTower T(P);
  int g = T.intern(surjectivity_witness(P, q));
  REQUIRE(g >= 0);

  // Witnesses are normalized: every positive formal face vanishes.
  for (int i = 1; i <= 3; ++i) CHECK(T.face_formal(3, i, lie_gen(g)).empty());

  // The zeroth face carries dq through one BCH factor.
  LieElement lhs = T.phi(2, T.face_formal(3, 0, lie_gen(g)));
  LieElement rhs = P.apply_d(T.phi(3, lie_gen(g)));
  CHECK(P.equal(rhs, pp));
  CHECK(P.equal(lhs, rhs));
}

TEST_CASE("phi: seeded chain-map and Lie-morphism suite") {
  std::mt19937 rng(20260816);
  auto coeff = [&](bool nonzero) {
    int c = static_cast<int>(rng() % 5) - 2;
    if (nonzero && c == 0) c = 1;
    return rat(c);
  };
  int cases = 0;

  Presentation L = two_gen_L();
  LieElement v = lie_gen(L.id("v")), w = lie_gen(L.id("w"));
  PhiTower T(L);
  auto wit1 = [&](const Rat& a, const Rat& b) {
    LieElement x = v;
    x.scale(a).add(w, b);
    return T.intern(surjectivity_witness(L, x));
  };
  for (int it = 0; it < 15; ++it) {
    int g1 = wit1(coeff(true), coeff(false));
    int g2 = wit1(coeff(false), coeff(true));
    LieElement o1 = lie_gen(g1, coeff(true));
    o1.add(lie_gen(g2), coeff(false));
    LieElement o2 = lie_gen(g2, coeff(true));
    o2.add(T.formal(1).bracket(lie_gen(g1), lie_gen(g2)), coeff(false));

    LieElement big = T.shuffle_bracket(1, o1, 1, o2);
    CHECK(L.equal(T.phi(2, big), L.bracket(T.phi(1, o1), T.phi(1, o2))));
    ++cases;
    CHECK(L.equal(T.phi(1, T.face_formal(2, 0, big)), L.apply_d(T.phi(2, big))));
    ++cases;
  }

  Presentation P = pq_L();
  LieElement p = lie_gen(P.id("p")), q = lie_gen(P.id("q"));
  LieElement pp = P.apply_d(q);
  PhiTower S(P);
  for (int it = 0; it < 10; ++it) {
    LieElement x1 = p;
    int a1 = S.intern(surjectivity_witness(P, x1.scale(coeff(true))));
    LieElement x2 = pp;
    int a2 = S.intern(surjectivity_witness(P, x2.scale(coeff(true))));
    LieElement x3 = q;
    x3.scale(coeff(true));
    int a3 = S.intern(surjectivity_witness(P, x3));

    // Chain map on level 2 (leaves are witnesses of cycles).
    LieElement o2 = lie_gen(a2, coeff(true));
    CHECK(P.equal(S.phi(1, S.face_formal(2, 0, o2)), P.apply_d(S.phi(2, o2))));
    ++cases;

    // Chain map on level 3, where both sides are nonzero.
    LieElement o3 = lie_gen(a3, coeff(true));
    LieElement lhs = S.phi(2, S.face_formal(3, 0, o3));
    LieElement rhs = P.apply_d(S.phi(3, o3));
    CHECK_FALSE(rhs.empty());
    CHECK(P.equal(lhs, rhs));
    ++cases;

    // Lie morphism across levels 1 and 2.
    LieElement o1 = lie_gen(a1, coeff(true));
    LieElement big = S.shuffle_bracket(1, o1, 2, o2);
    CHECK(P.equal(S.phi(3, big), P.bracket(S.phi(1, o1), S.phi(2, o2))));
    ++cases;
  }
  CHECK(cases >= 50);
}
