#include "simplicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cdgl {

namespace {

template <class K>
void add_term(SVec<K>& dst, const K& k, const Rat& c) {
  if (is_zero(c)) return;
  auto it = dst.find(k);
  if (it == dst.end()) {
    dst.emplace(k, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) dst.erase(it);
  }
}

}  // namespace

std::vector<Shuffle> shuffles(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative shuffle type");
  std::vector<Shuffle> out;
  std::vector<int> mu(n);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == n) {
      Shuffle s;
      s.mu = mu;
      std::vector<char> in(n + m, 0);
      for (int v : mu) in[v] = 1;
      for (int v = 0; v < n + m; ++v)
        if (!in[v]) s.nu.push_back(v);
      int inv = 0;
      for (int a : s.mu)
        for (int b : s.nu)
          if (a > b) ++inv;
      s.sign = (inv % 2 == 0) ? 1 : -1;
      out.push_back(std::move(s));
      return;
    }
    for (int v = start; v <= m + k; ++v) {
      mu[k] = v;
      rec(v + 1, k + 1);
    }
  };
  rec(0, 0);
  return out;
}

VTuple tuple_face(const VTuple& t, int i) {
  VTuple r = t;
  r.erase(r.begin() + i);
  return r;
}

VTuple tuple_degen(const VTuple& t, int i) {
  VTuple r = t;
  r.insert(r.begin() + i, t[i]);
  return r;
}

VElem apply_face(const VElem& x, int i) {
  VElem out;
  for (const auto& [t, c] : x) add_term(out, tuple_face(t, i), c);
  return out;
}

VElem apply_degen(const VElem& x, int i) {
  VElem out;
  for (const auto& [t, c] : x) add_term(out, tuple_degen(t, i), c);
  return out;
}

VElem boundary(const VElem& x, int n) {
  VElem out;
  if (n == 0) return out;
  for (int i = 0; i <= n; ++i) axpy(out, (i % 2 == 0) ? rat(1) : rat(-1), apply_face(x, i));
  return out;
}

TElem tensor_boundary(const TElem& x, int n) {
  TElem out;
  if (n == 0) return out;
  for (int i = 0; i <= n; ++i) {
    Rat s = (i % 2 == 0) ? rat(1) : rat(-1);
    for (const auto& [p, c] : x)
      add_term(out, TPair{tuple_face(p.first, i), tuple_face(p.second, i)}, s * c);
  }
  return out;
}

SimplicialSpace::SimplicialSpace(std::set<std::vector<int>> faces) {
  // close under nonempty subsets
  for (const auto& f : faces) {
    int sz = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << sz); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < sz; ++b)
        if (mask & (1 << b)) sub.push_back(f[b]);
      faces_.insert(std::move(sub));
    }
  }
}

const std::vector<VTuple>& SimplicialSpace::basis(int level) const {
  auto it = basis_.find(level);
  if (it != basis_.end()) return it->second;
  std::vector<VTuple> out;
  std::vector<int> verts;
  for (const auto& f : faces_)
    if (f.size() == 1) verts.push_back(f[0]);
  VTuple cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == level + 1) {
      std::vector<int> support;
      for (int v : cur)
        if (support.empty() || support.back() != v) support.push_back(v);
      if (faces_.count(support)) out.push_back(cur);
      return;
    }
    for (size_t j = start; j < verts.size(); ++j) {
      cur.push_back(verts[j]);
      rec(j);
      cur.pop_back();
    }
  };
  rec(0);
  return basis_.emplace(level, std::move(out)).first->second;
}

const std::vector<VElem>& SimplicialSpace::normalized_basis(int level) const {
  auto it = normalized_.find(level);
  if (it != normalized_.end()) return it->second;
  const std::vector<VTuple>& B = basis(level);
  std::vector<VElem> out;
  if (level == 0) {
    for (const auto& t : B) out.push_back(VElem{{t, rat(1)}});
  } else {
    Echelon<std::pair<int, VTuple>> ech;
    for (int j = 0; j < static_cast<int>(B.size()); ++j) {
      SVec<std::pair<int, VTuple>> col;
      for (int i = 1; i <= level; ++i) col.emplace(std::make_pair(i, tuple_face(B[j], i)), rat(1));
      SVec<int> dep;
      if (!ech.insert(std::move(col), j, &dep)) {
        VElem kv{{B[j], rat(1)}};
        for (const auto& [tag, c] : dep) add_term(kv, B[tag], -c);
        out.push_back(std::move(kv));
      }
    }
  }
  return normalized_.emplace(level, std::move(out)).first->second;
}

TElem ez_nabla(const VElem& a, int n, const VElem& b, int m) {
  TElem out;
  for (const auto& sh : shuffles(n, m)) {
    VElem sa = a;
    for (int i : sh.nu) sa = apply_degen(sa, i);
    VElem sb = b;
    for (int i : sh.mu) sb = apply_degen(sb, i);
    Rat s = rat(sh.sign);
    for (const auto& [ta, ca] : sa)
      for (const auto& [tb, cb] : sb) add_term(out, TPair{ta, tb}, s * ca * cb);
  }
  return out;
}

std::map<int, TElem> aw_delta(const TElem& x, int n) {
  std::map<int, TElem> out;
  for (int k = 0; k <= n; ++k) {
    TElem comp;
    for (const auto& [p, c] : x) {
      VTuple front = p.first;
      front.resize(k + 1);
      VTuple back(p.second.begin() + k, p.second.end());
      add_term(comp, TPair{std::move(front), std::move(back)}, c);
    }
    if (!comp.empty()) out.emplace(k, std::move(comp));
  }
  return out;
}

VElem normalize_project(const VElem& x, int n) {
  VElem y = x;
  for (int i = n; i >= 1; --i) axpy(y, rat(-1), apply_degen(apply_face(y, i), i - 1));
  return y;
}

std::map<int, TElem> normalize_project(const std::map<int, TElem>& comps, int n) {
  std::map<int, TElem> out;
  for (const auto& [k, comp] : comps) {
    TElem proj;
    for (const auto& [p, c] : comp) {
      VElem f = normalize_project(VElem{{p.first, rat(1)}}, k);
      VElem b = normalize_project(VElem{{p.second, rat(1)}}, n - k);
      for (const auto& [tf, cf] : f)
        for (const auto& [tb, cb] : b) add_term(proj, TPair{tf, tb}, c * cf * cb);
    }
    if (!proj.empty()) out.emplace(k, std::move(proj));
  }
  return out;
}

VElem apply_vertex_map(const VElem& x, const std::vector<int>& psi) {
  VElem out;
  for (const auto& [t, c] : x) {
    VTuple r;
    for (int v : t) r.push_back(psi.at(v));
    add_term(out, r, c);
  }
  return out;
}

TElem apply_vertex_map(const TElem& x, const std::vector<int>& psi) {
  TElem out;
  for (const auto& [p, c] : x) {
    VTuple r1, r2;
    for (int v : p.first) r1.push_back(psi.at(v));
    for (int v : p.second) r2.push_back(psi.at(v));
    add_term(out, TPair{std::move(r1), std::move(r2)}, c);
  }
  return out;
}

SimplicialSpace random_complex(std::mt19937& rng, int max_vertices, int max_dim) {
  int nv = 2 + static_cast<int>(rng() % (max_vertices - 1));
  int nfaces = 1 + static_cast<int>(rng() % 3);
  std::set<std::vector<int>> faces;
  for (int f = 0; f < nfaces; ++f) {
    int sz = 1 + static_cast<int>(rng() % (max_dim + 1));
    std::set<int> pick;
    while (static_cast<int>(pick.size()) < std::min(sz, nv)) pick.insert(static_cast<int>(rng() % nv));
    faces.emplace(pick.begin(), pick.end());
  }
  return SimplicialSpace(std::move(faces));
}

VElem random_normalized(const SimplicialSpace& V, int level, std::mt19937& rng) {
  VElem out;
  for (const auto& kv : V.normalized_basis(level)) {
    int c = static_cast<int>(rng() % 7) - 3;
    axpy(out, rat(c), kv);
  }
  return out;
}

}  // namespace cdgl
