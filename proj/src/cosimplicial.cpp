#include "cosimplicial.hpp"

#include <functional>
#include <stdexcept>

namespace cdgl {

namespace {

std::string tuple_name(const std::vector<int>& t) {
  std::string s = "a";
  for (int v : t) s += std::to_string(v);
  return s;
}

std::vector<std::vector<int>> all_tuples(int n) {
  std::vector<std::vector<int>> out;
  for (int len = 1; len <= n + 1; ++len) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
      }
      for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

LieElement mc_differential(int32_t a) {
  return lie(node(leaf(a), leaf(a)), rat(-1, 2));
}

// Linear parts of the stored differentials, as a derivation image table.
std::vector<LieElement> linear_images(const Presentation& P) {
  std::vector<LieElement> lin(P.size());
  for (int32_t g = 0; g < P.size(); ++g) lin[g] = length_part(P.differential(g), 1);
  return lin;
}

// Solves d_{a0}Γ = ω̃ over a span of generators, subject to the codegeneracy
// conditions σ_i(Γ_k) = 0 for k ≥ 2: without them the equation alone leaves
// free cycles and a particular solution need not extend to a cosimplicial map.
struct TopSolver {
  const Model& m;
  const Model& prev;
  int32_t a0;
  std::vector<LieElement> lin;
  std::vector<std::vector<LieElement>> sig;

  // Stacked row space: block 0 holds the expansion of an element of the model,
  // block 1+i the expansion of its σ_i image one level down.
  using SKey = std::pair<int, Word>;

  TopSolver(const Model& model, const Model& previous)
      : m(model), prev(previous), a0(model.gen({0})), lin(linear_images(model.P)) {
    for (int i = 0; i <= prev.level; ++i) sig.push_back(codegeneracy_images(m, prev, i));
  }

  LieElement twisted(const LieElement& x) const {
    LieElement r = m.P.apply_d(x);
    r.add(m.P.bracket(lie_gen(a0), x));
    return r;
  }
  LieElement d1(const LieElement& x) const { return m.P.derive(lin, x, -1); }

  SVec<SKey> stacked(const LieElement& main, const LieElement& arg) const {
    SVec<SKey> out;
    for (const auto& [w, c] : m.P.expand(main).terms) out.emplace(SKey{0, w}, c);
    for (int i = 0; i < static_cast<int>(sig.size()); ++i) {
      LieElement im = apply_images(m.P, prev.P, sig[i], arg);
      for (const auto& [w, c] : prev.P.expand(im).terms) out.emplace(SKey{1 + i, w}, c);
    }
    return out;
  }

  // Γ_k for k = from_k..N against the residual of ω̃ after `fixed`, length by
  // length; a failed length falls back to one joint solve of the remainder.
  std::vector<GammaStep> solve(const LieElement& omega, const std::vector<int32_t>& sub,
                               int deg, const LieElement& fixed, int from_k) const {
    int N = m.P.truncation();
    std::vector<GammaStep> steps;
    LieElement total = fixed;
    for (int k = from_k; k <= N; ++k) {
      LieElement resid = omega;
      resid.add(twisted(total), rat(-1));
      LieElement rk = length_part(resid, k);
      const BasisBlock& blk = m.P.basis(k, deg, sub);
      Echelon<SKey> ech;
      for (int j = 0; j < static_cast<int>(blk.monomials.size()); ++j) {
        LieElement mono = lie(blk.monomials[j]);
        ech.insert(stacked(d1(mono), mono), j);
      }
      if (auto sol = ech.solve(stacked(rk, {}))) {
        GammaStep step{k, "triangular", {}};
        for (const auto& [j, c] : *sol) step.value.add(blk.monomials[j], c);
        total.add(step.value);
        steps.push_back(std::move(step));
        continue;
      }
      // Joint solve of all remaining lengths at once.
      Echelon<SKey> big;
      std::vector<std::pair<int, int>> cols;
      for (int kk = k; kk <= N; ++kk) {
        const BasisBlock& b = m.P.basis(kk, deg, sub);
        for (int j = 0; j < static_cast<int>(b.monomials.size()); ++j) {
          LieElement mono = lie(b.monomials[j]);
          big.insert(stacked(twisted(mono), mono), static_cast<int>(cols.size()));
          cols.emplace_back(kk, j);
        }
      }
      LieElement rhs = omega;
      rhs.add(twisted(total), rat(-1));
      auto sol = big.solve(stacked(rhs, {}));
      if (!sol) throw std::logic_error("top differential: no solution over the subspace");
      std::map<int, LieElement> per_len;
      for (const auto& [tag, c] : *sol) {
        auto [kk, j] = cols[tag];
        per_len[kk].add(m.P.basis(kk, deg, sub).monomials[j], c);
      }
      for (int kk = k; kk <= N; ++kk) steps.push_back({kk, "joint", per_len[kk]});
      break;
    }
    return steps;
  }
};

}  // namespace

LieElement Model::gamma() const {
  LieElement g;
  for (const auto& s : trace) g.add(s.value);
  return g;
}

Model build_simplex_model(int n, int N, bool modified) {
  if (n < 0) throw std::invalid_argument("negative simplicial level");
  if (N < 1) throw std::invalid_argument("truncation must be positive");
  if (n != 4) modified = false;

  Model m;
  m.level = n;
  m.modified = modified;
  m.P = Presentation(N);
  for (const auto& t : all_tuples(n)) {
    int32_t id = m.P.add_generator(tuple_name(t), static_cast<int>(t.size()) - 2);
    m.ids.emplace(t, id);
    m.tuples.push_back(t);
  }
  for (int v = 0; v <= n; ++v) {
    int32_t a = m.gen({v});
    m.P.set_differential(a, mc_differential(a));
  }
  if (n == 0) return m;

  if (n == 1) {
    // d a01 = [a01, a1] + Σ_{k≥0} B_k/k! · ad_{a01}^k (a1 − a0)
    int32_t a0 = m.gen({0}), a1 = m.gen({1}), a01 = m.gen({0, 1});
    LieElement d01 = m.P.bracket(lie_gen(a01), lie_gen(a1));
    auto B = bernoulli(N - 1);
    LieElement cur = lie_gen(a1);
    cur.add(lie_gen(a0), rat(-1));
    Rat kfact(1);
    for (int k = 0; k <= N - 1; ++k) {
      if (k > 0) {
        cur = m.P.bracket(lie_gen(a01), cur);
        kfact *= k;
      }
      d01.add(cur, B[k] / kfact);
    }
    m.P.set_differential(a01, d01);
    return m;
  }

  // Non-top generators inherit their differential through the coface at the
  // smallest missing index.
  const Model& prev = simplex_model(n - 1, N, false);
  std::vector<std::vector<LieElement>> cof(n + 1);
  for (int j = 0; j <= n; ++j) {
    cof[j].resize(prev.P.size());
    for (int32_t g = 0; g < prev.P.size(); ++g) {
      std::vector<int> t;
      for (int v : prev.tuples[g]) t.push_back(v < j ? v : v + 1);
      cof[j][g] = lie_gen(m.gen(t));
    }
  }
  for (int32_t g = 0; g < m.P.size(); ++g) {
    const auto& t = m.tuples[g];
    if (static_cast<int>(t.size()) == n + 1 || t.size() == 1) continue;
    int j = 0;
    for (int v : t) {
      if (v == j) ++j;
      else if (v > j) break;
    }
    std::vector<int> tp;
    for (int v : t) tp.push_back(v < j ? v : v - 1);
    m.P.set_differential(
        g, apply_images(prev.P, m.P, cof[j], prev.P.differential(prev.gen(tp))));
  }

  // Top generator: d a_{0..n} = (−1)^n a_{0..n−1} − Γ − [a0, a_{0..n}] with
  // d_{a0}Γ = (−1)^n d_{a0}(a_{0..n−1}), solved over the horn span (over all
  // non-top generators when n = 2, where the horn span cannot contain ω̃).
  std::vector<int> top_t, face_t;
  for (int v = 0; v <= n; ++v) top_t.push_back(v);
  for (int v = 0; v < n; ++v) face_t.push_back(v);
  int32_t top = m.gen(top_t), face = m.gen(face_t);
  Rat sn = (n % 2 != 0) ? rat(-1) : rat(1);

  TopSolver solver(m, prev);
  LieElement omega = solver.twisted(lie_gen(face));
  omega.scale(sn);

  std::vector<int32_t> sub;
  for (int32_t g = 0; g < m.P.size(); ++g) {
    if (g == top || (n >= 3 && g == face)) continue;
    sub.push_back(g);
  }

  LieElement gamma1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> t;
    for (int v = 0; v <= n; ++v)
      if (v != i) t.push_back(v);
    gamma1.add(leaf(m.gen(t)), (i % 2 == 0) ? rat(-1) : rat(1));
  }
  {
    LieElement r1 = solver.d1(gamma1);
    r1.add(length_part(omega, 1), rat(-1));
    LieElement arg = gamma1;
    arg.add(lie_gen(face), -sn);
    if (!solver.stacked(r1, arg).empty())
      throw std::logic_error("boundary linear part does not satisfy the length-1 conditions");
  }
  m.trace.push_back({1, "pinned", gamma1});

  int deg = n - 2;
  if (n == 4) {
    auto head = solver.solve(omega, sub, deg, gamma1, 2);
    // the length-2 step first, alone, so the correction can be applied to it
    GammaStep g2 = head.front();
    Tree self = node(leaf(m.gen({2, 3, 4})), leaf(m.gen({2, 3, 4})));
    auto it = g2.value.terms.find(self);
    m.top_coefficient = (it == g2.value.terms.end()) ? rat(0) : it->second;
    if (modified) {
      LieElement corr = horn_correction(m);
      if (!m.P.is_zero(solver.d1(corr)))
        throw std::logic_error("correction cycle is not d1-closed");
      m.lambda = -*m.top_coefficient;
      g2.value.add(corr, *m.lambda);
      g2.path = "modified";
      m.trace.push_back(g2);
      LieElement fixed = gamma1;
      fixed.add(g2.value);
      for (auto& s : solver.solve(omega, sub, deg, fixed, 3)) m.trace.push_back(s);
    } else {
      for (auto& s : head) m.trace.push_back(s);
    }
  } else {
    for (auto& s : solver.solve(omega, sub, deg, gamma1, 2)) m.trace.push_back(s);
  }

  LieElement gamma_total = m.gamma();
  {
    LieElement resid = solver.twisted(gamma_total);
    resid.add(omega, rat(-1));
    if (!m.P.is_zero(resid)) throw std::logic_error("solved correction fails its equation");
    LieElement arg = gamma_total;
    arg.add(lie_gen(face), -sn);
    for (const auto& table : solver.sig)
      if (!prev.P.is_zero(apply_images(m.P, prev.P, table, arg)))
        throw std::logic_error("solved correction fails a codegeneracy condition");
  }
  LieElement dtop = lie_gen(face, sn);
  dtop.add(gamma_total, rat(-1));
  dtop.add(m.P.bracket(lie_gen(m.gen({0})), lie_gen(top)), rat(-1));
  m.P.set_differential(top, dtop);
  return m;
}

const Model& simplex_model(int n, int N, bool modified) {
  if (n != 4) modified = false;
  static std::map<std::tuple<int, int, bool>, Model> cache;
  auto key = std::make_tuple(n, N, modified);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_simplex_model(n, N, modified)).first;
  return it->second;
}

LieElement horn_correction(const Model& L4) {
  auto g = [&](std::vector<int> t) { return lie_gen(L4.gen(t)); };
  LieElement e = g({2, 4});
  e.add(g({2, 3}), rat(-1));
  e.add(g({3, 4}), rat(-1));
  LieElement out = L4.P.bracket(e, g({0, 2, 3, 4}));
  out.scale(rat(2));
  auto add = [&](std::vector<int> s, std::vector<int> t, Rat c) {
    out.add(L4.P.bracket(g(s), g(t)), c);
  };
  add({0, 2, 3}, {0, 2, 3}, rat(-1));
  add({0, 2, 3}, {0, 2, 4}, rat(2));
  add({0, 2, 3}, {0, 3, 4}, rat(-2));
  add({0, 2, 4}, {0, 2, 4}, rat(-1));
  add({0, 2, 4}, {0, 3, 4}, rat(2));
  add({0, 3, 4}, {0, 3, 4}, rat(-1));
  add({2, 3, 4}, {2, 3, 4}, rat(1));
  return out;
}

std::vector<LieElement> coface_images(const Model& src, const Model& dst, int i) {
  if (src.level + 1 != dst.level || i < 0 || i > dst.level)
    throw std::invalid_argument("coface out of range");
  std::vector<LieElement> out(src.P.size());
  for (int32_t g = 0; g < src.P.size(); ++g) {
    std::vector<int> t;
    for (int v : src.tuples[g]) t.push_back(v < i ? v : v + 1);
    out[g] = lie_gen(dst.gen(t));
  }
  return out;
}

std::vector<LieElement> codegeneracy_images(const Model& src, const Model& dst, int i) {
  if (src.level - 1 != dst.level || i < 0 || i > dst.level)
    throw std::invalid_argument("codegeneracy out of range");
  std::vector<LieElement> out(src.P.size());
  for (int32_t g = 0; g < src.P.size(); ++g) {
    std::vector<int> t;
    for (int v : src.tuples[g]) t.push_back(v <= i ? v : v - 1);
    bool strict = true;
    for (size_t k = 1; k < t.size(); ++k)
      if (t[k - 1] >= t[k]) strict = false;
    if (strict) out[g] = lie_gen(dst.gen(t));
  }
  return out;
}

Json model_to_json(const Model& m) {
  Json j = presentation_to_json(m.P);
  Json trace = Json::array();
  for (const auto& s : m.trace)
    trace.push_back(Json{{"length", s.length},
                         {"path", s.path},
                         {"value", element_to_json(m.P, s.value)}});
  j["trace"] = trace;
  return j;
}

}  // namespace cdgl
