#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include <random>

#include "../src/simplicial.hpp"

using namespace cdgl;

namespace {

TElem outer(const VElem& a, const VElem& b) {
  TElem out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) out.emplace(TPair{ta, tb}, ca * cb);
  return out;
}

void add_into(TElem& dst, const TElem& src, const Rat& c) {
  for (const auto& [p, v] : src) {
    auto it = dst.find(p);
    if (it == dst.end()) {
      if (!is_zero(c * v)) dst.emplace(p, c * v);
    } else {
      it->second += c * v;
      if (is_zero(it->second)) dst.erase(it);
    }
  }
}

std::vector<int> random_monotone_map(std::mt19937& rng, int domain, int range) {
  std::vector<int> psi(domain);
  int cur = static_cast<int>(rng() % 2);
  for (int v = 0; v < domain; ++v) {
    psi[v] = std::min(cur, range - 1);
    cur += static_cast<int>(rng() % 2);
  }
  return psi;
}

}  // namespace

TEST_CASE("shuffle enumeration with signs") {
  auto s11 = shuffles(1, 1);
  REQUIRE(s11.size() == 2);
  CHECK(s11[0].mu == std::vector<int>{0});
  CHECK(s11[0].sign == 1);
  CHECK(s11[1].mu == std::vector<int>{1});
  CHECK(s11[1].sign == -1);

  auto s03 = shuffles(0, 3);
  REQUIRE(s03.size() == 1);
  CHECK(s03[0].mu.empty());
  CHECK(s03[0].nu == std::vector<int>{0, 1, 2});
  CHECK(s03[0].sign == 1);

  // parity table for (2,1), checked by hand against the three permutations
  // [0,1|2], [0,2|1], [1,2|0] of S3
  auto s21 = shuffles(2, 1);
  REQUIRE(s21.size() == 3);
  CHECK(s21[0].sign == 1);
  CHECK(s21[1].sign == -1);
  CHECK(s21[2].sign == 1);

  CHECK(shuffles(2, 2).size() == 6);
  CHECK(shuffles(3, 1).size() == 4);
}

TEST_CASE("normalized chains of the tetrahedron have nondegenerate ranks") {
  SimplicialSpace V({{0, 1, 2, 3}});
  CHECK(V.normalized_basis(0).size() == 4);
  CHECK(V.normalized_basis(1).size() == 6);
  CHECK(V.normalized_basis(2).size() == 4);
  CHECK(V.normalized_basis(3).size() == 1);
  CHECK(V.normalized_basis(4).size() == 0);
  CHECK(V.basis(1).size() == 10);
}

TEST_CASE("boundary squares to zero and restricts to d0 on normalized chains") {
  std::mt19937 rng(7);
  SimplicialSpace V({{0, 1, 2, 3}, {2, 3, 4}});
  for (int level = 1; level <= 3; ++level) {
    VElem x;
    for (const auto& t : V.basis(level))
      axpy(x, rat(static_cast<int>(rng() % 5) - 2), VElem{{t, rat(1)}});
    VElem bx = boundary(x, level);
    CHECK(boundary(bx, level - 1).empty());

    VElem nx = random_normalized(V, level, rng);
    CHECK(boundary(nx, level) == apply_face(nx, 0));
    VElem bn = boundary(nx, level);
    for (int i = 1; i <= level - 1; ++i) CHECK(apply_face(bn, i).empty());
  }
}

TEST_CASE("shuffle product closed form in bidegree (1,1)") {
  SimplicialSpace I({{0, 1}});
  VElem a{{VTuple{0, 1}, rat(1)}};
  TElem nab = ez_nabla(a, 1, a, 1);
  TElem expected;
  expected.emplace(TPair{VTuple{0, 1, 1}, VTuple{0, 0, 1}}, rat(1));
  expected.emplace(TPair{VTuple{0, 0, 1}, VTuple{0, 1, 1}}, rat(-1));
  CHECK(nab == expected);
}

TEST_CASE("front-back decomposition fixes level zero") {
  TElem x{{TPair{VTuple{2}, VTuple{2}}, rat(3)}};
  auto aw = aw_delta(x, 0);
  REQUIRE(aw.size() == 1);
  CHECK(aw.at(0) == x);
}

TEST_CASE("retraction, chain maps, and naturality on seeded instances") {
  std::mt19937 rng(20260816);
  int done = 0, attempts = 0;
  while (done < 120 && attempts < 3000) {
    ++attempts;
    SimplicialSpace V = random_complex(rng, 6, 3);
    SimplicialSpace W = random_complex(rng, 6, 3);
    int n = static_cast<int>(rng() % 4);
    int m = static_cast<int>(rng() % (5 - n));
    VElem a = random_normalized(V, n, rng);
    VElem b = random_normalized(W, m, rng);
    if (a.empty() || b.empty()) continue;
    ++done;

    TElem nab = ez_nabla(a, n, b, m);
    auto aw = aw_delta(nab, n + m);

    // retraction: after normalizing the factors, the only surviving
    // component is (n,m), equal to a ⊗ b; the raw composite may differ only
    // by terms with a degenerate factor, all killed by the projector
    std::map<int, TElem> expected;
    expected.emplace(n, outer(a, b));
    CHECK(normalize_project(aw, n + m) == expected);

    // the projector fixes normalized elements and its output is killed by
    // every positive face on either factor
    CHECK(normalize_project(a, n) == a);
    for (const auto& [k, comp] : normalize_project(aw, n + m)) {
      for (int i = 1; i <= k; ++i) {
        TElem im;
        for (const auto& [p, c] : comp)
          add_into(im, TElem{{TPair{tuple_face(p.first, i), p.second}, c}}, rat(1));
        CHECK(im.empty());
      }
      for (int i = 1; i <= n + m - k; ++i) {
        TElem im;
        for (const auto& [p, c] : comp)
          add_into(im, TElem{{TPair{p.first, tuple_face(p.second, i)}, c}}, rat(1));
        CHECK(im.empty());
      }
    }

    // nabla is a chain map into the diagonal complex
    TElem lhs = tensor_boundary(nab, n + m);
    TElem rhs = ez_nabla(boundary(a, n), n - 1 >= 0 ? n - 1 : 0, b, m);
    if (n == 0) rhs.clear();
    TElem rhs2 = ez_nabla(a, n, boundary(b, m), m > 0 ? m - 1 : 0);
    if (m > 0) add_into(rhs, rhs2, (n % 2 == 0) ? rat(1) : rat(-1));
    CHECK(lhs == rhs);

    // delta is a chain map out of it
    if (n + m > 0) {
      auto left = aw_delta(tensor_boundary(nab, n + m), n + m - 1);
      std::map<int, TElem> right;
      for (const auto& [k, comp] : aw) {
        if (k > 0) {
          TElem t;
          for (const auto& [p, c] : comp)
            for (int i = 0; i <= k; ++i)
              add_into(t, TElem{{TPair{tuple_face(p.first, i), p.second}, c}},
                       (i % 2 == 0) ? rat(1) : rat(-1));
          if (!t.empty()) add_into(right[k - 1], t, rat(1));
        }
        if (n + m - k > 0) {
          TElem t;
          for (const auto& [p, c] : comp)
            for (int i = 0; i <= n + m - k; ++i)
              add_into(t, TElem{{TPair{p.first, tuple_face(p.second, i)}, c}},
                       (i % 2 == 0) ? rat(1) : rat(-1));
          if (!t.empty()) add_into(right[k], t, (k % 2 == 0) ? rat(1) : rat(-1));
        }
      }
      for (auto it = right.begin(); it != right.end();)
        it = it->second.empty() ? right.erase(it) : std::next(it);
      CHECK(left == right);
    }

    // naturality under a monotone vertex map applied to both factors
    std::vector<int> psi = random_monotone_map(rng, 6, 6);
    CHECK(apply_vertex_map(nab, psi) ==
          ez_nabla(apply_vertex_map(a, psi), n, apply_vertex_map(b, psi), m));
    auto aw_nat = aw_delta(apply_vertex_map(nab, psi), n + m);
    std::map<int, TElem> aw_mapped;
    for (const auto& [k, comp] : aw) {
      TElem t = apply_vertex_map(comp, psi);
      if (!t.empty()) aw_mapped.emplace(k, std::move(t));
    }
    CHECK(aw_nat == aw_mapped);
  }
  CHECK(done >= 120);
}
