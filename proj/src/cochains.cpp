#include "cochains.hpp"

#include <algorithm>
#include <stdexcept>

#include "linear.hpp"

namespace cdgl {
namespace {

std::string render_tree(const Presentation& L, const Tree& t) {
  if (is_leaf(t)) return L.gen(t.front()).name;
  auto [a, b] = children(t);
  return "[" + render_tree(L, a) + "," + render_tree(L, b) + "]";
}

}  // namespace

CPoly& CPoly::add(const CMono& m, const Rat& c) {
  if (is_zero(c)) return *this;
  auto [it, fresh] = terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
  return *this;
}

CPoly& CPoly::add(const CPoly& other, const Rat& c) {
  for (const auto& [m, v] : other.terms) add(m, v * c);
  return *this;
}

CPoly& CPoly::scale(const Rat& c) {
  if (is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

int CdgaPresentation::id(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int CdgaPresentation::add_generator(const std::string& name, int degree,
                                    std::string dual) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate generator " + name);
  int32_t id = static_cast<int32_t>(gens_.size());
  gens_.push_back({name, degree, std::move(dual)});
  diff_.emplace_back();
  by_name_.emplace(name, id);
  return id;
}

void CdgaPresentation::set_differential(int32_t g, CPoly dg) {
  diff_.at(g) = std::move(dg);
}

int CdgaPresentation::degree(const CMono& m) const {
  int d = 0;
  for (int32_t g : m) d += gens_.at(g).degree;
  return d;
}

CPoly CdgaPresentation::mul(const CMono& a, const CMono& b) const {
  CMono out;
  out.reserve(a.size() + b.size());
  int sign = 1;
  size_t i = 0, j = 0;
  int rest = 0;  // parity of the total degree of a[i..]
  for (size_t k = 0; k < a.size(); ++k) rest ^= gens_[a[k]].degree & 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      rest ^= gens_[a[i]].degree & 1;
      out.push_back(a[i++]);
    } else {
      if ((gens_[b[j]].degree & 1) && rest) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  for (size_t k = 1; k < out.size(); ++k)
    if (out[k] == out[k - 1] && (gens_[out[k]].degree & 1)) return {};
  CPoly r;
  r.add(out, rat(sign));
  return r;
}

CPoly CdgaPresentation::mul(const CPoly& a, const CPoly& b) const {
  CPoly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) out.add(mul(ma, mb), ca * cb);
  return out;
}

CPoly CdgaPresentation::apply_d(const CPoly& x) const {
  CPoly out;
  for (const auto& [m, c] : x.terms) {
    int prefix = 0;  // parity of the degree left of position i
    for (size_t i = 0; i < m.size(); ++i) {
      CPoly head, tail;
      head.add(CMono(m.begin(), m.begin() + i), rat(1));
      tail.add(CMono(m.begin() + i + 1, m.end()), rat(1));
      out.add(mul(head, mul(diff_[m[i]], tail)), prefix ? -c : c);
      prefix ^= gens_[m[i]].degree & 1;
    }
  }
  return out;
}

std::vector<CMono> CdgaPresentation::monomial_basis(int deg) const {
  std::vector<CMono> out;
  CMono cur;
  // Generators in ascending id order; ids are assigned by ascending degree,
  // so the remaining minimum degree only grows.
  auto rec = [&](auto&& self, int32_t from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int32_t g = from; g < size(); ++g) {
      int d = gens_[g].degree;
      if (d > remaining) continue;
      if ((d & 1) && !cur.empty() && cur.back() == g) continue;
      cur.push_back(g);
      self(self, g, remaining - d);
      cur.pop_back();
    }
  };
  if (deg >= 0) rec(rec, 0, deg);
  return out;
}

CdgaPresentation ce(const Presentation& L, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  int min_deg = 0;
  for (int32_t g = 0; g < L.size(); ++g) {
    if (L.gen(g).degree < 1)
      throw std::invalid_argument(
          "generator " + L.gen(g).name +
          " has degree < 1: some degree below the cap is infinite-dimensional");
    min_deg = min_deg == 0 ? L.gen(g).degree : std::min(min_deg, L.gen(g).degree);
  }

  CdgaPresentation A(cap);
  if (L.size() == 0) return A;  // the ground field
  // Words longer than the truncation could still land in degrees <= cap.
  A.set_truncation_warning((L.truncation() + 1) * min_deg <= cap);

  // Dual generators for L-degrees 1..cap, cochain degree one higher.
  std::vector<std::vector<Tree>> basis(cap + 1);
  std::vector<std::vector<int32_t>> dual(cap + 1);
  for (int d = 1; d <= cap; ++d) {
    basis[d] = L.space_basis(d);
    for (size_t i = 0; i < basis[d].size(); ++i)
      dual[d].push_back(A.add_generator(
          "c" + std::to_string(d + 1) + "_" + std::to_string(i), d + 1,
          render_tree(L, basis[d][i])));
  }

  // d1: dual to the differential of L. d2: dual to the bracket as a sum over
  // ordered pairs of basis elements with weight (-1)^(|first|+1); collapsed
  // onto unordered pairs, an off-diagonal pair contributes twice and the
  // diagonal once, which is exactly what the graded Jacobi identity needs to
  // cancel d2 squared. Differentials of the top-degree generators leave the
  // modeled window and stay zero.
  for (int d = 1; d < cap; ++d) {
    std::vector<CPoly> dg(basis[d].size());
    for (size_t j = 0; j < basis[d + 1].size(); ++j) {
      LieElement de = L.apply_d(lie(basis[d + 1][j]));
      if (L.is_zero(de)) continue;
      auto cs = L.coords(de, d);
      if (!cs) throw std::logic_error("differential is not homogeneous");
      for (size_t i = 0; i < basis[d].size(); ++i)
        dg[i].add(CMono{dual[d + 1][j]}, -(*cs)[i]);
    }
    for (int a = 1; 2 * a <= d; ++a) {
      int b = d - a;
      Rat kappa = rat((a + 1) % 2 == 0 ? 1 : -1);
      for (size_t r = 0; r < basis[a].size(); ++r) {
        size_t s0 = a == b ? r : 0;
        for (size_t s = s0; s < basis[b].size(); ++s) {
          LieElement br = L.bracket(lie(basis[a][r]), lie(basis[b][s]));
          if (L.is_zero(br)) continue;
          auto cs = L.coords(br, d);
          if (!cs) throw std::logic_error("bracket is not homogeneous");
          CMono mono{dual[a][r], dual[b][s]};
          std::sort(mono.begin(), mono.end());
          Rat weight = (a == b && r == s) ? kappa : 2 * kappa;
          for (size_t i = 0; i < basis[d].size(); ++i)
            dg[i].add(mono, weight * (*cs)[i]);
        }
      }
    }
    for (size_t i = 0; i < basis[d].size(); ++i)
      A.set_differential(dual[d][i], std::move(dg[i]));
  }

  // d^2 vanishes on every generator whose differential window is complete.
  for (int32_t g = 0; g < A.size(); ++g) {
    if (A.gen(g).degree > cap - 1) continue;
    if (!A.apply_d(A.differential(g)).empty())
      throw std::logic_error("d^2 != 0 on " + A.gen(g).name);
  }
  return A;
}

int cdga_rank(const CdgaPresentation& A, int deg) {
  Echelon<CMono> images;
  int tag = 0;
  for (const CMono& m : A.monomial_basis(deg)) {
    CPoly one;
    one.add(m, rat(1));
    images.insert(A.apply_d(one).terms, tag++);
  }
  return static_cast<int>(images.rank());
}

std::vector<int> cdga_cohomology(const CdgaPresentation& A, int cap) {
  if (cap < 0 || cap > A.cap())
    throw std::invalid_argument("cohomology cap exceeds the modeled window");
  std::vector<int> dims(cap + 1, 0);
  int prev_rank = 0;
  for (int d = 0; d <= cap; ++d) {
    int n = static_cast<int>(A.monomial_basis(d).size());
    int r = cdga_rank(A, d);
    dims[d] = n - r - prev_rank;
    prev_rank = r;
  }
  return dims;
}

Json cdga_to_json(const CdgaPresentation& A) {
  Json gens = Json::array();
  for (int32_t g = 0; g < A.size(); ++g) {
    Json jg;
    jg["name"] = A.gen(g).name;
    jg["degree"] = A.gen(g).degree;
    jg["dual"] = A.gen(g).dual;
    gens.push_back(jg);
  }
  Json diff = Json::object();
  for (int32_t g = 0; g < A.size(); ++g) {
    Json terms = Json::array();
    for (const auto& [m, c] : A.differential(g).terms) {
      Json names = Json::array();
      for (int32_t f : m) names.push_back(A.gen(f).name);
      terms.push_back(Json::array(
          {c.get_num().get_str(), c.get_den().get_str(), names}));
    }
    diff[A.gen(g).name] = terms;
  }
  Json j;
  j["cap"] = A.cap();
  j["truncation_warning"] = A.truncation_warning();
  j["generators"] = gens;
  j["differential"] = diff;
  return j;
}

CdgaPresentation cdga_from_json(const Json& j) {
  CdgaPresentation A(j.at("cap").get<int>());
  A.set_truncation_warning(j.at("truncation_warning").get<bool>());
  for (const Json& jg : j.at("generators"))
    A.add_generator(jg.at("name").get<std::string>(), jg.at("degree").get<int>(),
                    jg.at("dual").get<std::string>());
  for (const Json& jg : j.at("generators")) {
    const std::string name = jg.at("name").get<std::string>();
    CPoly dg;
    for (const Json& term : j.at("differential").at(name)) {
      CMono m;
      for (const Json& f : term.at(2)) {
        int g = A.id(f.get<std::string>());
        if (g < 0) throw std::invalid_argument("unknown generator " + f.get<std::string>());
        m.push_back(g);
      }
      std::sort(m.begin(), m.end());
      dg.add(m, rat_from_strings(term.at(0).get<std::string>(),
                                 term.at(1).get<std::string>()));
    }
    A.set_differential(A.id(name), std::move(dg));
  }
  return A;
}

}  // namespace cdgl
