#include "realization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "linear.hpp"
#include "simplicial.hpp"

namespace cdgl {
namespace {

int model_truncation(int n, int truncation) {
  return n == 4 ? std::min(truncation, 3) : truncation;
}

std::vector<int> full_tuple(int n) {
  std::vector<int> t(n + 1);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

// Terms of bracket length at most `window`.
LieElement window_part(const LieElement& x, int window) {
  LieElement out;
  for (int k = 1; k <= window; ++k) out.add(length_part(x, k), rat(1));
  return out;
}

}  // namespace

const Model& realization_model(int n, int truncation) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("the model tower covers levels 0 through 4");
  return simplex_model(n, model_truncation(n, truncation), n == 4);
}

std::vector<std::string> validate_simplex(const Presentation& L, int n,
                                          const std::vector<LieElement>& images) {
  const Model& M = realization_model(n, L.truncation());
  if (static_cast<int>(images.size()) != M.P.size())
    throw std::invalid_argument("level " + std::to_string(n) + " needs " +
                                std::to_string(M.P.size()) + " generator images");
  for (int32_t g = 0; g < M.P.size(); ++g) {
    if (images[g].empty()) continue;
    auto deg = L.degree(images[g]);
    if (!deg || *deg != M.P.gen(g).degree)
      throw std::invalid_argument("image of " + M.P.gen(g).name +
                                  " is not homogeneous of degree " +
                                  std::to_string(M.P.gen(g).degree));
  }
  // A target word of length <= window only receives model words of length
  // <= window, so the comparison over the shared window is exact.
  int window = std::min(M.P.truncation(), L.truncation());
  std::vector<std::string> bad;
  for (int32_t g = 0; g < M.P.size(); ++g) {
    LieElement diff = apply_images(M.P, L, images, M.P.differential(g));
    diff.add(L.apply_d(images[g]), rat(-1));
    if (!L.is_zero(window_part(diff, window))) bad.push_back(M.P.gen(g).name);
  }
  return bad;
}

RealizationSimplex make_simplex(const Presentation& L, int n,
                                std::vector<LieElement> images) {
  for (auto& x : images) x = L.truncate(x);
  std::vector<std::string> bad = validate_simplex(L, n, images);
  if (!bad.empty()) {
    std::string msg = "not a morphism; the differential condition fails on";
    for (const std::string& name : bad) msg += " " + name;
    throw std::invalid_argument(msg);
  }
  RealizationSimplex s;
  s.level = n;
  s.images = std::move(images);
  return s;
}

RealizationSimplex basepoint(const Presentation& L, int n) {
  const Model& M = realization_model(n, L.truncation());
  RealizationSimplex s;
  s.level = n;
  s.images.resize(M.P.size());
  return s;
}

LieElement evaluate(const Presentation& L, const RealizationSimplex& s,
                    const LieElement& x) {
  const Model& M = realization_model(s.level, L.truncation());
  return apply_images(M.P, L, s.images, x);
}

namespace {

RealizationSimplex precompose(const Presentation& L, const RealizationSimplex& s,
                              int level, const std::vector<LieElement>& gen_images) {
  const Model& from = realization_model(s.level, L.truncation());
  std::vector<LieElement> imgs(gen_images.size());
  for (size_t g = 0; g < gen_images.size(); ++g)
    imgs[g] = apply_images(from.P, L, s.images, gen_images[g]);
  if (!validate_simplex(L, level, imgs).empty())
    throw std::logic_error("simplicial operator broke the morphism property");
  RealizationSimplex out;
  out.level = level;
  out.images = std::move(imgs);
  return out;
}

}  // namespace

RealizationSimplex face(const Presentation& L, int i, const RealizationSimplex& s) {
  if (s.level < 1) throw std::invalid_argument("level-0 simplices have no faces");
  if (i < 0 || i > s.level) throw std::invalid_argument("face index out of range");
  const Model& up = realization_model(s.level, L.truncation());
  const Model& down = realization_model(s.level - 1, L.truncation());
  return precompose(L, s, s.level - 1, coface_images(down, up, i));
}

RealizationSimplex degeneracy(const Presentation& L, int i,
                              const RealizationSimplex& s) {
  if (i < 0 || i > s.level)
    throw std::invalid_argument("degeneracy index out of range");
  const Model& up = realization_model(s.level + 1, L.truncation());
  const Model& down = realization_model(s.level, L.truncation());
  return precompose(L, s, s.level + 1, codegeneracy_images(up, down, i));
}

bool s0_degenerate(const Presentation& L, const RealizationSimplex& s) {
  if (s.level == 0) return false;
  RealizationSimplex t = degeneracy(L, 0, face(L, 0, s));
  for (size_t g = 0; g < s.images.size(); ++g) {
    LieElement diff = t.images[g];
    diff.add(s.images[g], rat(-1));
    if (!L.is_zero(diff)) return false;
  }
  return true;
}

HomologyClass rho(const Presentation& L, const RealizationSimplex& s) {
  if (s.level < 1) throw std::invalid_argument("rho needs a simplex of level >= 1");
  const Model& M = realization_model(s.level, L.truncation());
  LieElement rep = s.images[M.gen(full_tuple(s.level))];
  if ((s.level - 1) % 2 != 0) rep.negate();
  if (!L.is_zero(L.apply_d(rep)))
    throw std::invalid_argument("the long-generator image is not a cycle");
  HomologyClass c;
  c.degree = s.level - 1;
  c.representative = std::move(rep);
  return c;
}

bool same_class(const Presentation& L, const HomologyClass& a,
                const HomologyClass& b) {
  if (a.degree != b.degree) return false;
  LieElement diff = a.representative;
  diff.add(b.representative, rat(-1));
  if (L.is_zero(diff)) return true;
  Echelon<Word> boundaries;
  int tag = 0;
  for (const Tree& t : L.space_basis(a.degree + 1))
    boundaries.insert(L.expand(L.apply_d(lie(t))).terms, tag++);
  return boundaries.contains(L.expand(diff).terms);
}

std::vector<HomotopyRow> homotopy_table(const Presentation& L, int lo, int hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("need 1 <= lo <= hi");
  std::vector<HomotopyRow> rows;
  for (const HomologySummary& h : homology(L, lo - 1, hi - 1)) {
    HomotopyRow row;
    row.n = h.degree + 1;
    row.dim = h.dim;
    row.bch_group = row.n == 1;
    rows.push_back(row);
  }
  return rows;
}

RealizationSimplex surjectivity_witness(const Presentation& L, const LieElement& x,
                                        int degree) {
  for (int32_t g = 0; g < L.size(); ++g)
    if (L.gen(g).degree < 1)
      throw std::invalid_argument("the target must be simply connected");
  LieElement xt = L.truncate(x);
  int n = degree;
  if (xt.empty()) {
    if (n < 1) throw std::invalid_argument("a zero element needs an explicit degree");
  } else {
    std::optional<int> d = L.degree(xt);
    if (!d) throw std::invalid_argument("the element must be homogeneous");
    if (n >= 0 && n != *d)
      throw std::invalid_argument("requested degree does not match the element");
    n = *d;
    if (n < 1) throw std::invalid_argument("witnesses need degree >= 1");
  }
  const Model& M = realization_model(n + 1, L.truncation());
  std::vector<LieElement> imgs(M.P.size());
  Rat sign = rat(n % 2 == 0 ? 1 : -1);
  LieElement top = xt;
  imgs[M.gen(full_tuple(n + 1))] = top.scale(sign);
  LieElement dx = L.apply_d(xt);
  std::vector<int> tail(n + 1);
  std::iota(tail.begin(), tail.end(), 1);
  imgs[M.gen(tail)] = dx.scale(sign);
  return make_simplex(L, n + 1, std::move(imgs));
}

PhiTower::PhiTower(const Presentation& L) : L_(&L) {}

PhiTower::Level& PhiTower::level_at(int n) {
  if (n < 0) throw std::invalid_argument("formal levels start at 0");
  while (static_cast<int>(levels_.size()) <= n)
    levels_.emplace_back(L_->truncation());
  return levels_[n];
}

const Presentation& PhiTower::formal(int n) { return level_at(n).P; }

const RealizationSimplex& PhiTower::leaf(int n, int id) {
  return level_at(n).leaves.at(id);
}

int PhiTower::intern(const RealizationSimplex& s) {
  if (s.level < 1)
    throw std::invalid_argument("the tower is generated by simplices of level >= 1");
  if (s0_degenerate(*L_, s)) return -1;
  Level& lv = level_at(s.level - 1);
  std::vector<std::map<Word, Rat>> key;
  key.reserve(s.images.size());
  for (const LieElement& x : s.images) key.push_back(L_->expand(x).terms);
  auto it = lv.index.find(key);
  if (it != lv.index.end()) return it->second;
  int id = lv.P.add_generator("g" + std::to_string(lv.leaves.size()), 0);
  lv.leaves.push_back(s);
  lv.index.emplace(std::move(key), id);
  return id;
}

int PhiTower::intern_face(int n, int g, int j) {
  std::tuple<int, int, int> key{n, g, j};
  auto it = face_id_.find(key);
  if (it != face_id_.end()) return it->second;
  int id = intern(face(*L_, j, level_at(n).leaves.at(g)));
  face_id_.emplace(key, id);
  return id;
}

int PhiTower::intern_degen(int n, int g, int j) {
  std::tuple<int, int, int> key{n, g, j};
  auto it = degen_id_.find(key);
  if (it != degen_id_.end()) return it->second;
  int id = intern(degeneracy(*L_, j, level_at(n).leaves.at(g)));
  degen_id_.emplace(key, id);
  return id;
}

LieElement PhiTower::face_formal(int n, int i, const LieElement& x) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face out of range");
  Level& src = level_at(n);
  Level& dst = level_at(n - 1);
  auto interned = [&](int g, int j) -> LieElement {
    int id = intern_face(n, g, j);
    return id >= 0 ? lie_gen(id) : LieElement{};
  };
  std::vector<LieElement> imgs(src.P.size());
  for (int32_t g = 0; g < src.P.size(); ++g) {
    if (i >= 1) {
      imgs[g] = interned(g, i + 1);
    } else {
      LieElement a = interned(g, 0).negate();
      LieElement b = interned(g, 1);
      if (a.empty())
        imgs[g] = std::move(b);
      else if (b.empty())
        imgs[g] = std::move(a);
      else
        imgs[g] = bch(dst.P, a, b);
    }
  }
  return apply_images(src.P, dst.P, imgs, x);
}

LieElement PhiTower::degeneracy_formal(int n, int i, const LieElement& x) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("degeneracy out of range");
  Level& dst = level_at(n + 1);
  Level& src = level_at(n);
  std::vector<LieElement> imgs(src.P.size());
  for (int32_t g = 0; g < src.P.size(); ++g) {
    int id = intern_degen(n, g, i + 1);
    if (id >= 0) imgs[g] = lie_gen(id);
  }
  return apply_images(src.P, dst.P, imgs, x);
}

LieElement PhiTower::shuffle_bracket(int n, const LieElement& a, int m,
                                     const LieElement& b) {
  const Presentation& target = formal(n + m);
  LieElement out;
  for (const Shuffle& sh : shuffles(n, m)) {
    LieElement sa = a;
    int la = n;
    for (int i : sh.nu) sa = degeneracy_formal(la++, i, sa);
    LieElement sb = b;
    int lb = m;
    for (int i : sh.mu) sb = degeneracy_formal(lb++, i, sb);
    out.add(target.bracket(sa, sb), rat(sh.sign));
  }
  return target.truncate(out);
}

LieElement PhiTower::phi(int n, const LieElement& x) {
  LieElement out;
  for (const auto& [t, c] : x.terms) out.add(phi_tree(n, t), c);
  return L_->truncate(out);
}

LieElement PhiTower::phi_tree(int n, const Tree& t) {
  std::pair<int, Tree> key{n, t};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  LieElement val;
  if (is_leaf(t)) {
    const RealizationSimplex& s = level_at(n).leaves.at(t.front());
    const Model& M = realization_model(n + 1, L_->truncation());
    val = s.images[M.gen(full_tuple(n + 1))];
    if (n % 2 != 0) val.negate();
  } else if (n != 1) {
    // Front-face/back-face expansion of a bracket; length-2 words and longer
    // at level 1 are sent to 0.
    auto [a, b] = children(t);
    for (int k = 0; k <= n; ++k) {
      LieElement fa = lie(a);
      for (int i = n; i > k; --i) fa = face_formal(i, i, fa);
      LieElement fb = lie(b);
      for (int j = 0; j < k; ++j) fb = face_formal(n - j, 0, fb);
      val.add(L_->bracket(phi(k, fa), phi(n - k, fb)), rat(1));
    }
    val = L_->truncate(val);
  }
  memo_.emplace(std::move(key), val);
  return val;
}

}  // namespace cdgl
