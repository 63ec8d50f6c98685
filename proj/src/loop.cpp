#include "loop.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "../vendor/json.hpp"

namespace cdgl {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int FiniteSimplicialSet::id(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int FiniteSimplicialSet::simplex_dim(const Simplex& x) const {
  return dims_[x.core] + static_cast<int>(x.word.size());
}

std::string FiniteSimplicialSet::name(const Simplex& x) const {
  std::ostringstream os;
  for (int j : x.word) os << 's' << j << ' ';
  os << names_[x.core];
  return os.str();
}

Simplex FiniteSimplicialSet::degeneracy(const Simplex& x, int i) const {
  // s_i s_j = s_{j+1} s_i for i <= j keeps the word strictly decreasing
  Simplex out = x;
  size_t p = 0;
  while (p < out.word.size() && i <= out.word[p]) {
    ++out.word[p];
    ++p;
  }
  out.word.insert(out.word.begin() + p, i);
  return out;
}

Simplex FiniteSimplicialSet::face(const Simplex& x, int i) const {
  std::vector<int> outer;
  int k = i;
  for (size_t p = 0; p < x.word.size(); ++p) {
    int j = x.word[p];
    if (k < j) {
      outer.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
    } else if (k == j || k == j + 1) {
      outer.insert(outer.end(), x.word.begin() + p + 1, x.word.end());
      return Simplex{x.core, std::move(outer)};
    } else {
      outer.push_back(j);  // d_i s_j = s_j d_{i-1}
      --k;
    }
  }
  Simplex r = faces_[x.core][k];
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) r = degeneracy(r, *it);
  return r;
}

bool FiniteSimplicialSet::s0_degenerate(const Simplex& x) {
  return !x.word.empty() && x.word.back() == 0;
}

std::vector<Simplex> FiniteSimplicialSet::simplices(int q) const {
  std::vector<Simplex> out;
  for (int c = 0; c < core_count(); ++c) {
    int cd = dims_[c];
    if (cd > q) continue;
    // strictly decreasing words of length q-cd, entry t from the end at most
    // cd+t (the dimension it is applied in)
    std::vector<int> word(q - cd);
    auto rec = [&](auto&& self, int pos, int low) -> void {
      if (pos < 0) {
        out.push_back(Simplex{c, word});
        return;
      }
      int t = static_cast<int>(word.size()) - 1 - pos;
      for (int j = low; j <= cd + t; ++j) {
        word[pos] = j;
        self(self, pos - 1, j + 1);
      }
    };
    rec(rec, static_cast<int>(word.size()) - 1, 0);
  }
  return out;
}

FiniteSimplicialSet FiniteSimplicialSet::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    bad(std::string("simplicial set: ") + e.what());
  }
  if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
    bad("simplicial set: expected an object with a \"simplices\" array");

  FiniteSimplicialSet X;
  for (const Json& s : j["simplices"]) {
    if (!s.is_object() || !s.contains("id") || !s.contains("dim"))
      bad("simplicial set: each simplex needs \"id\" and \"dim\"");
    std::string name = s["id"].get<std::string>();
    if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
      bad("simplicial set: id \"" + name + "\" is empty or contains whitespace");
    if (X.by_name_.count(name)) bad("simplicial set: duplicate id \"" + name + "\"");
    int d = s["dim"].get<int>();
    if (d < 0) bad("simplicial set: negative dimension for \"" + name + "\"");
    X.by_name_.emplace(name, X.core_count());
    X.names_.push_back(name);
    X.dims_.push_back(d);
    X.dim_ = std::max(X.dim_, d);
  }
  if (j.contains("dims") && j["dims"].get<int>() != X.dim_)
    bad("simplicial set: \"dims\" does not match the top simplex dimension");

  X.faces_.resize(X.core_count());
  int idx = 0;
  for (const Json& s : j["simplices"]) {
    int c = idx++;
    int d = X.dims_[c];
    if (d == 0) continue;
    if (!s.contains("faces") || !s["faces"].is_array() ||
        static_cast<int>(s["faces"].size()) != d + 1)
      bad("simplicial set: \"" + X.names_[c] + "\" needs " + std::to_string(d + 1) +
          " faces");
    for (const Json& f : s["faces"]) {
      std::istringstream is(f.get<std::string>());
      std::vector<std::string> tokens;
      for (std::string tok; is >> tok;) tokens.push_back(tok);
      if (tokens.empty()) bad("simplicial set: empty face entry in \"" + X.names_[c] + "\"");
      int t = X.id(tokens.back());
      if (t < 0) bad("simplicial set: unknown id \"" + tokens.back() + "\"");
      Simplex cur{t, {}};
      for (auto it = tokens.rbegin() + 1; it != tokens.rend(); ++it) {
        if (it->size() < 2 || (*it)[0] != 's') bad("simplicial set: bad token \"" + *it + "\"");
        int k = -1;
        try {
          size_t used = 0;
          k = std::stoi(it->substr(1), &used);
          if (used + 1 != it->size()) k = -1;
        } catch (const std::exception&) {
        }
        if (k < 0 || k > X.simplex_dim(cur))
          bad("simplicial set: degeneracy \"" + *it + "\" out of range in face of \"" +
              X.names_[c] + "\"");
        cur = X.degeneracy(cur, k);
      }
      if (X.simplex_dim(cur) != d - 1)
        bad("simplicial set: face of \"" + X.names_[c] + "\" has the wrong dimension");
      X.faces_[c].push_back(std::move(cur));
    }
  }

  int vertices = 0, edges = 0;
  for (int d : X.dims_) {
    vertices += d == 0;
    edges += d == 1;
  }
  if (vertices != 1 || edges != 0)
    bad("simplicial set is not reduced: it must have exactly one simplex in "
        "dimensions 0 and 1");

  for (int c = 0; c < X.core_count(); ++c) {
    if (X.dims_[c] < 2) continue;
    Simplex x{c, {}};
    for (int i = 0; i < X.dims_[c]; ++i)
      for (int jj = i + 1; jj <= X.dims_[c]; ++jj)
        if (!(X.face(X.face(x, jj), i) == X.face(X.face(x, i), jj - 1)))
          bad("simplicial set: face identities fail on \"" + X.names_[c] + "\"");
  }
  return X;
}

LoopLie::LoopLie(const FiniteSimplicialSet& X, int N, int levels) : trunc_(N) {
  if (N < 1) bad("truncation must be at least 1");
  if (levels < 0) bad("levels must be non-negative");

  for (int n = 0; n <= levels; ++n) {
    Presentation P(N);
    std::vector<Simplex> gs;
    for (const Simplex& x : X.simplices(n + 1)) {
      if (FiniteSimplicialSet::s0_degenerate(x)) continue;
      P.add_generator(X.name(x), 0);
      gs.push_back(x);
    }
    pres_.push_back(std::move(P));
    gens_.push_back(std::move(gs));
  }

  auto gen_elem = [&](int n, const Simplex& x) -> LieElement {
    if (FiniteSimplicialSet::s0_degenerate(x)) return {};
    return lie_gen(pres_[n].id(X.name(x)));
  };

  faces_.resize(levels + 1);
  degens_.resize(levels + 1);
  for (int n = 0; n <= levels; ++n) {
    if (n >= 1) {
      faces_[n].resize(n + 1);
      for (int g = 0; g < static_cast<int>(gens_[n].size()); ++g) {
        const Simplex& x = gens_[n][g];
        for (int i = 1; i <= n; ++i)
          faces_[n][i].push_back(gen_elem(n - 1, X.face(x, i + 1)));
        LieElement a = gen_elem(n - 1, X.face(x, 0)).negate();
        LieElement b = gen_elem(n - 1, X.face(x, 1));
        if (a.empty())
          faces_[n][0].push_back(std::move(b));
        else if (b.empty())
          faces_[n][0].push_back(std::move(a));
        else
          faces_[n][0].push_back(bch(pres_[n - 1], a, b));
      }
    }
    if (n + 1 <= levels) {
      degens_[n].resize(n + 1);
      for (const Simplex& x : gens_[n])
        for (int i = 0; i <= n; ++i)
          degens_[n][i].push_back(gen_elem(n + 1, X.degeneracy(x, i + 1)));
    }
  }
}

const std::vector<LieElement>& LoopLie::face_images(int n, int i) const {
  return faces_.at(n).at(i);
}

const std::vector<LieElement>& LoopLie::degeneracy_images(int n, int i) const {
  return degens_.at(n).at(i);
}

LieElement LoopLie::face(int n, int i, const LieElement& x) const {
  return apply_images(pres_.at(n), pres_.at(n - 1), face_images(n, i), x);
}

LieElement LoopLie::degeneracy(int n, int i, const LieElement& x) const {
  return apply_images(pres_.at(n), pres_.at(n + 1), degeneracy_images(n, i), x);
}

const std::vector<LieElement>& LoopLie::normalized(int n) const {
  auto it = normalized_.find(n);
  if (it != normalized_.end()) return it->second;
  const Presentation& P = pres_.at(n);
  std::vector<Tree> monos = P.space_basis(0);
  std::vector<LieElement> out;
  if (n == 0) {
    for (const Tree& t : monos) out.push_back(lie(t));
  } else {
    Echelon<std::pair<int, Word>> ech;
    for (int jj = 0; jj < static_cast<int>(monos.size()); ++jj) {
      SVec<std::pair<int, Word>> col;
      LieElement e = lie(monos[jj]);
      for (int i = 1; i <= n; ++i) {
        TensorPoly im = pres_[n - 1].expand(face(n, i, e));
        for (const auto& [w, c] : im.terms) col.emplace(std::make_pair(i, w), c);
      }
      SVec<int> dep;
      if (!ech.insert(std::move(col), jj, &dep)) {
        LieElement kv = lie(monos[jj]);
        for (const auto& [tag, c] : dep) kv.add(monos[tag], -c);
        out.push_back(std::move(kv));
      }
    }
  }
  return normalized_.emplace(n, std::move(out)).first->second;
}

LieElement LoopLie::shuffle_bracket(int n, const LieElement& a, int m,
                                    const LieElement& b) const {
  const Presentation& target = pres_.at(n + m);
  LieElement out;
  for (const Shuffle& sh : shuffles(n, m)) {
    LieElement sa = a;
    int la = n;
    for (int i : sh.nu) sa = degeneracy(la++, i, sa);
    LieElement sb = b;
    int lb = m;
    for (int i : sh.mu) sb = degeneracy(lb++, i, sb);
    out.add(target.bracket(sa, sb), rat(sh.sign));
  }
  return target.truncate(out);
}

std::vector<int> lambda_homology(const FiniteSimplicialSet& X, int N, int lo,
                                 int hi) {
  if (lo < 1 || hi < lo) bad("homology range must satisfy 1 <= lo <= hi");
  LoopLie L(X, N, hi + 1);
  // rank of d̄₀ restricted to the normalized subspace of each level
  std::vector<int> rank(hi + 2, 0);
  for (int n = 1; n <= hi + 1; ++n) {
    Echelon<Word> ech;
    int tag = 0;
    for (const LieElement& v : L.normalized(n))
      ech.insert(L.level(n - 1).expand(L.face(n, 0, v)).terms, tag++);
    rank[n] = static_cast<int>(ech.rank());
  }
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n)
    dims.push_back(static_cast<int>(L.normalized(n).size()) - rank[n] - rank[n + 1]);
  return dims;
}

}  // namespace cdgl
