#include "lie.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cdgl {

namespace {

Rat parity_sign(long long e) { return (e % 2 != 0) ? rat(-1) : rat(1); }

Rat factorial(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

size_t subtree_end(const Tree& t, size_t i) {
  if (t[i] >= 0) return i + 1;
  size_t mid = subtree_end(t, i + 1);
  return subtree_end(t, mid);
}

}  // namespace

Tree leaf(int32_t g) { return Tree{g}; }

Tree node(const Tree& left, const Tree& right) {
  Tree t;
  t.reserve(1 + left.size() + right.size());
  t.push_back(-1);
  t.insert(t.end(), left.begin(), left.end());
  t.insert(t.end(), right.begin(), right.end());
  return t;
}

bool is_leaf(const Tree& t) { return t.size() == 1 && t[0] >= 0; }

std::pair<Tree, Tree> children(const Tree& t) {
  size_t mid = subtree_end(t, 1);
  return {Tree(t.begin() + 1, t.begin() + mid), Tree(t.begin() + mid, t.end())};
}

int leaf_count(const Tree& t) {
  int n = 0;
  for (int32_t v : t)
    if (v >= 0) ++n;
  return n;
}

void collect_leaves(const Tree& t, Word& out) {
  for (int32_t v : t)
    if (v >= 0) out.push_back(v);
}

LieElement& LieElement::add(const Tree& t, const Rat& c) {
  if (is_zero(c)) return *this;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
  return *this;
}

LieElement& LieElement::add(const LieElement& other, const Rat& c) {
  for (const auto& [t, v] : other.terms) add(t, c * v);
  return *this;
}

LieElement& LieElement::scale(const Rat& c) {
  if (is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [t, v] : terms) v *= c;
  return *this;
}

LieElement lie(const Tree& t, const Rat& c) {
  LieElement x;
  x.add(t, c);
  return x;
}

LieElement lie_gen(int32_t g, const Rat& c) { return lie(leaf(g), c); }

LieElement length_part(const LieElement& x, int k) {
  LieElement out;
  for (const auto& [t, c] : x.terms)
    if (leaf_count(t) == k) out.add(t, c);
  return out;
}

TensorPoly& TensorPoly::add(const Word& w, const Rat& c) {
  if (is_zero(c)) return *this;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
  return *this;
}

TensorPoly& TensorPoly::add(const TensorPoly& other, const Rat& c) {
  for (const auto& [w, v] : other.terms) add(w, c * v);
  return *this;
}

TensorPoly& TensorPoly::scale(const Rat& c) {
  if (is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b, int max_len) {
  TensorPoly out;
  for (const auto& [wa, ca] : a.terms) {
    if (static_cast<int>(wa.size()) > max_len) continue;
    for (const auto& [wb, cb] : b.terms) {
      if (static_cast<int>(wa.size() + wb.size()) > max_len) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

int Presentation::add_generator(const std::string& name, int degree) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate generator " + name);
  int32_t id = static_cast<int32_t>(gens_.size());
  gens_.push_back({name, degree});
  diff_.emplace_back();
  by_name_.emplace(name, id);
  return id;
}

void Presentation::set_differential(int32_t g, LieElement dg) {
  diff_[g] = truncate(dg);
}

int Presentation::id(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Presentation::degree(const Tree& t) const {
  int d = 0;
  for (int32_t v : t)
    if (v >= 0) d += gens_[v].degree;
  return d;
}

std::optional<int> Presentation::degree(const LieElement& x) const {
  std::optional<int> d;
  for (const auto& [t, c] : x.terms) {
    int dt = degree(t);
    if (!d) d = dt;
    else if (*d != dt) return std::nullopt;
  }
  return d;
}

TensorPoly Presentation::expand(const Tree& t) const {
  auto it = expand_cache_.find(t);
  if (it != expand_cache_.end()) return it->second;
  TensorPoly out;
  if (leaf_count(t) <= truncation_) {
    if (is_leaf(t)) {
      out.add(Word{t[0]}, rat(1));
    } else {
      auto [l, r] = children(t);
      TensorPoly el = expand(l);
      TensorPoly er = expand(r);
      out.add(tensor_mul(el, er, truncation_));
      // [u,v] = u⊗v − (−1)^{|u||v|} v⊗u
      out.add(tensor_mul(er, el, truncation_),
              parity_sign(1LL + (long long)degree(l) * degree(r)));
    }
  }
  expand_cache_.emplace(t, out);
  return out;
}

TensorPoly Presentation::expand(const LieElement& x) const {
  TensorPoly out;
  for (const auto& [t, c] : x.terms) out.add(expand(t), c);
  return out;
}

bool Presentation::is_zero(const LieElement& x) const { return expand(x).empty(); }

bool Presentation::equal(const LieElement& x, const LieElement& y) const {
  TensorPoly e = expand(x);
  e.add(expand(y), rat(-1));
  return e.empty();
}

LieElement Presentation::truncate(const LieElement& x) const {
  LieElement out;
  for (const auto& [t, c] : x.terms)
    if (leaf_count(t) <= truncation_) out.add(t, c);
  return out;
}

LieElement Presentation::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out;
  for (const auto& [s, cs] : x.terms) {
    int ls = leaf_count(s);
    for (const auto& [t, ct] : y.terms) {
      if (ls + leaf_count(t) > truncation_) continue;
      out.add(node(s, t), cs * ct);
    }
  }
  return out;
}

LieElement Presentation::derive(const std::vector<LieElement>& images, const Tree& t,
                                int op_degree) const {
  if (is_leaf(t)) return truncate(images[t[0]]);
  auto [l, r] = children(t);
  // D[u,v] = [Du, v] + (−1)^{δ|u|} [u, Dv]
  LieElement out = bracket(derive(images, l, op_degree), lie(r));
  out.add(bracket(lie(l), derive(images, r, op_degree)),
          parity_sign((long long)op_degree * degree(l)));
  return out;
}

LieElement Presentation::derive(const std::vector<LieElement>& images,
                                const LieElement& x, int op_degree) const {
  LieElement out;
  for (const auto& [t, c] : x.terms) out.add(derive(images, t, op_degree), c);
  return out;
}

LieElement Presentation::apply_d(const LieElement& x) const {
  return derive(diff_, x, -1);
}

std::optional<Tree> Presentation::check_d_squared() const {
  for (int32_t g = 0; g < size(); ++g)
    if (!is_zero(apply_d(diff_[g]))) return leaf(g);
  return std::nullopt;
}

int Presentation::min_gen_degree() const {
  int m = 0;
  for (const auto& g : gens_) m = std::min(m, g.degree);
  return m;
}

int Presentation::max_gen_degree() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.degree);
  return m;
}

const BasisBlock& Presentation::basis(int k, int deg,
                                      const std::vector<int32_t>& subset) const {
  std::vector<int32_t> ids = subset;
  if (ids.empty())
    for (int32_t g = 0; g < size(); ++g) ids.push_back(g);
  std::sort(ids.begin(), ids.end(), [&](int32_t a, int32_t b) {
    if (gens_[a].degree != gens_[b].degree) return gens_[a].degree < gens_[b].degree;
    return gens_[a].name < gens_[b].name;
  });
  BasisKey key{k, deg, ids};
  auto it = basis_cache_.find(key);
  if (it != basis_cache_.end()) return it->second;

  BasisBlock blk;
  if (k >= 1 && k <= truncation_ && !ids.empty()) {
    int lo = gens_[ids.front()].degree;  // ids sorted by degree
    int hi = gens_[ids.back()].degree;
    int tag = 0;
    std::vector<int32_t> seq;
    // Left-normed monomials [..[[g1,g2],g3]..,gk] over all id sequences in
    // lexicographic order, filtered by total degree; independent expansions
    // are kept. Degree-sum pruning only.
    std::function<void(int)> rec = [&](int dsum) {
      int rem = k - static_cast<int>(seq.size());
      if (rem == 0) {
        if (dsum != deg) return;
        Tree t = leaf(seq[0]);
        for (size_t i = 1; i < seq.size(); ++i) t = node(t, leaf(seq[i]));
        TensorPoly e = expand(t);
        if (e.empty()) return;
        if (blk.echelon.insert(std::move(e.terms), tag)) {
          blk.monomials.push_back(t);
          blk.tag_to_pos.push_back(static_cast<int>(blk.monomials.size()) - 1);
        } else {
          blk.tag_to_pos.push_back(-1);
        }
        ++tag;
        return;
      }
      if (dsum + rem * lo > deg || dsum + rem * hi < deg) return;
      for (int32_t g : ids) {
        seq.push_back(g);
        rec(dsum + gens_[g].degree);
        seq.pop_back();
      }
    };
    rec(0);
  }
  return basis_cache_.emplace(std::move(key), std::move(blk)).first->second;
}

std::vector<Tree> Presentation::space_basis(int deg,
                                            const std::vector<int32_t>& subset) const {
  std::vector<Tree> out;
  for (int k = 1; k <= truncation_; ++k) {
    const auto& blk = basis(k, deg, subset);
    out.insert(out.end(), blk.monomials.begin(), blk.monomials.end());
  }
  return out;
}

std::optional<std::vector<Rat>> Presentation::coords(
    const LieElement& x, int deg, const std::vector<int32_t>& subset) const {
  TensorPoly e = expand(x);
  std::map<int, SVec<Word>> by_len;
  for (const auto& [w, c] : e.terms) by_len[static_cast<int>(w.size())][w] = c;

  std::vector<Rat> out;
  std::vector<size_t> offsets(truncation_ + 2, 0);
  for (int k = 1; k <= truncation_; ++k) {
    offsets[k] = out.size();
    out.resize(out.size() + basis(k, deg, subset).monomials.size(), rat(0));
  }
  for (auto& [len, part] : by_len) {
    if (len < 1 || len > truncation_) return std::nullopt;
    const auto& blk = basis(len, deg, subset);
    auto sol = blk.echelon.solve(std::move(part));
    if (!sol) return std::nullopt;
    for (const auto& [tag, c] : *sol) {
      int pos = blk.tag_to_pos[tag];
      if (pos < 0) return std::nullopt;
      out[offsets[len] + pos] = c;
    }
  }
  return out;
}

namespace {

LieElement apply_images_tree(const Presentation& dst,
                             const std::vector<LieElement>& images, const Tree& t) {
  if (is_leaf(t)) return dst.truncate(images[t[0]]);
  auto [l, r] = children(t);
  LieElement il = apply_images_tree(dst, images, l);
  if (il.empty()) return il;
  return dst.bracket(il, apply_images_tree(dst, images, r));
}

}  // namespace

LieElement apply_images(const Presentation& src, const Presentation& dst,
                        const std::vector<LieElement>& images, const LieElement& x) {
  (void)src;
  LieElement out;
  for (const auto& [t, c] : x.terms) out.add(apply_images_tree(dst, images, t), c);
  return out;
}

bool images_homogeneous(const Presentation& P, const std::vector<LieElement>& images,
                        int op_degree) {
  for (int32_t g = 0; g < P.size(); ++g)
    for (const auto& [t, c] : images[g].terms)
      if (P.degree(t) != P.gen(g).degree + op_degree) return false;
  return true;
}

Presentation twist(const Presentation& P, const LieElement& a) {
  Presentation Q(P.truncation());
  for (int32_t g = 0; g < P.size(); ++g)
    Q.add_generator(P.gen(g).name, P.gen(g).degree);
  for (int32_t g = 0; g < P.size(); ++g) {
    LieElement dg = P.differential(g);
    dg.add(P.bracket(a, lie_gen(g)));
    Q.set_differential(g, dg);
  }
  return Q;
}

bool is_maurer_cartan(const Presentation& P, const LieElement& a) {
  for (const auto& [t, c] : a.terms)
    if (P.degree(t) != -1) return false;
  LieElement mc = P.apply_d(a);
  mc.add(P.bracket(a, a), rat(1, 2));
  return P.is_zero(mc);
}

namespace {

TensorPoly tensor_exp(const TensorPoly& x, int max_len) {
  TensorPoly out;
  out.add(Word{}, rat(1));
  TensorPoly pow = out;
  for (int m = 1; m <= max_len; ++m) {
    pow = tensor_mul(pow, x, max_len);
    if (pow.empty()) break;
    out.add(pow, Rat(1) / factorial(m));
  }
  return out;
}

TensorPoly tensor_log(const TensorPoly& e, int max_len) {
  TensorPoly u = e;
  u.add(Word{}, rat(-1));  // e = 1 + u with u of positive length
  TensorPoly out;
  TensorPoly pow;
  pow.add(Word{}, rat(1));
  for (int m = 1; m <= max_len; ++m) {
    pow = tensor_mul(pow, u, max_len);
    if (pow.empty()) break;
    out.add(pow, parity_sign(m + 1) / m);
  }
  return out;
}

std::vector<int32_t> support(const LieElement& x, const LieElement& y) {
  std::vector<int32_t> ids;
  for (const auto* e : {&x, &y})
    for (const auto& [t, c] : e->terms)
      for (int32_t v : t)
        if (v >= 0) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

LieElement bch(const Presentation& P, const LieElement& x, const LieElement& y) {
  for (const auto* e : {&x, &y})
    for (const auto& [t, c] : e->terms)
      if (P.degree(t) != 0) throw std::invalid_argument("bch needs degree-0 input");
  int N = P.truncation();
  TensorPoly ex = tensor_exp(P.expand(x), N);
  TensorPoly ey = tensor_exp(P.expand(y), N);
  TensorPoly z = tensor_log(tensor_mul(ex, ey, N), N);
  std::vector<int32_t> sup = support(x, y);

  LieElement out;
  std::map<int, SVec<Word>> by_len;
  for (const auto& [w, c] : z.terms) by_len[static_cast<int>(w.size())][w] = c;
  for (auto& [len, part] : by_len) {
    int deg = P.degree(part.begin()->first);
    const auto& blk = P.basis(len, deg, sup);
    auto sol = blk.echelon.solve(std::move(part));
    if (!sol) throw std::logic_error("bch: non-primitive logarithm");
    for (const auto& [tag, c] : *sol) out.add(blk.monomials[blk.tag_to_pos[tag]], c);
  }
  return out;
}

LieElement bch_dynkin(const Presentation& P, const LieElement& x, const LieElement& y) {
  int N = P.truncation();
  LieElement total;
  std::vector<std::pair<int, int>> blocks;  // (r_i, s_i), never (0,0)
  // log(e^x e^y) = Σ_k (−1)^{k−1}/k Σ [x^{r_1} y^{s_1} ⋯ x^{r_k} y^{s_k}] /
  //                (m · Π r_i! s_i!),   m = Σ (r_i + s_i),
  // with the right-normed bracketing [w_1, [w_2, [..., w_m]]].
  std::function<void(int)> rec = [&](int m) {
    if (!blocks.empty()) {
      std::vector<const LieElement*> word;
      for (auto [r, s] : blocks) {
        for (int i = 0; i < r; ++i) word.push_back(&x);
        for (int i = 0; i < s; ++i) word.push_back(&y);
      }
      LieElement acc = *word.back();
      for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
        acc = P.bracket(*word[i], acc);
      Rat denom = rat(m) * rat(static_cast<int>(blocks.size()));
      for (auto [r, s] : blocks) denom *= factorial(r) * factorial(s);
      total.add(acc, parity_sign(blocks.size() + 1) / denom);
    }
    for (int w = 1; m + w <= N; ++w)
      for (int r = 0; r <= w; ++r) {
        blocks.push_back({r, w - r});
        rec(m + w);
        blocks.pop_back();
      }
  };
  rec(0);
  return total;
}

std::vector<HomologySummary> homology(const Presentation& P, int lo, int hi) {
  std::vector<HomologySummary> out;
  for (int d = lo; d <= hi; ++d) {
    HomologySummary h;
    h.degree = d;

    auto sb = P.space_basis(d);
    Echelon<Word> dmat;
    std::vector<SVec<int>> kernels;
    for (int tag = 0; tag < static_cast<int>(sb.size()); ++tag) {
      TensorPoly e = P.expand(P.apply_d(lie(sb[tag])));
      SVec<int> dep;
      if (!dmat.insert(std::move(e.terms), tag, &dep)) {
        SVec<int> k;
        k[tag] = rat(1);
        axpy(k, rat(-1), dep);
        kernels.push_back(std::move(k));
      }
    }

    Echelon<Word> work;
    auto sb1 = P.space_basis(d + 1);
    for (int tag = 0; tag < static_cast<int>(sb1.size()); ++tag) {
      TensorPoly e = P.expand(P.apply_d(lie(sb1[tag])));
      if (!e.empty()) work.insert(std::move(e.terms), -1 - tag);
    }
    for (const auto& k : kernels) {
      LieElement rep;
      for (const auto& [pos, c] : k) rep.add(sb[pos], c);
      if (work.insert(P.expand(rep).terms, static_cast<int>(h.representatives.size())))
        h.representatives.push_back(std::move(rep));
    }
    h.dim = static_cast<int>(h.representatives.size());

    for (int dd = d - 1; dd <= d + 1 && !h.truncation_warning; ++dd)
      for (const Tree& t : P.space_basis(dd))
        if (leaf_count(t) == P.truncation()) {
          h.truncation_warning = true;
          break;
        }
    out.push_back(std::move(h));
  }
  return out;
}

Subcomplex component(const Presentation& P, const LieElement& a) {
  Presentation Pa = twist(P, a);
  Subcomplex out;
  int hi = std::max(0, Pa.max_gen_degree()) * Pa.truncation();
  for (int d = 0; d <= hi; ++d) {
    auto sb = Pa.space_basis(d);
    if (sb.empty()) continue;
    std::vector<LieElement> vecs;
    if (d > 0) {
      for (const auto& t : sb) vecs.push_back(lie(t));
    } else {
      Echelon<Word> dmat;
      for (int tag = 0; tag < static_cast<int>(sb.size()); ++tag) {
        TensorPoly e = Pa.expand(Pa.apply_d(lie(sb[tag])));
        SVec<int> dep;
        if (!dmat.insert(std::move(e.terms), tag, &dep)) {
          LieElement v = lie(sb[tag]);
          for (const auto& [pos, c] : dep) v.add(sb[pos], -c);
          vecs.push_back(std::move(v));
        }
      }
    }
    if (!vecs.empty()) out.basis.emplace(d, std::move(vecs));
  }
  return out;
}

std::vector<Rat> bernoulli(int m) {
  std::vector<Rat> b(m + 1, rat(0));
  b[0] = rat(1);
  for (int n = 1; n <= m; ++n) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
      acc += Rat(binom) * b[j];
    }
    b[n] = -acc / Rat(n + 1);
  }
  return b;
}

}  // namespace cdgl
