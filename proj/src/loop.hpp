// Finite reduced simplicial sets and the simplicial free complete Lie algebra
// of the loop construction.
//
// A simplex is a nondegenerate core plus a canonical degeneracy word
// s_{w₀}s_{w₁}… with w strictly decreasing (outermost first); faces and
// degeneracies act through the simplicial identities. Level n of the loop
// algebra is the free complete Lie algebra on the (n+1)-simplices that are
// not s₀-degenerate, with all generators in degree 0. Its faces and
// degeneracies are d̄ᵢ = d_{i+1}, s̄ᵢ = s_{i+1} on generators, except
// d̄₀x = (−d₀x) ∗ (d₁x), the Baker–Campbell–Hausdorff product of the images.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lie.hpp"
#include "simplicial.hpp"

namespace cdgl {

struct Simplex {
  int core = 0;
  std::vector<int> word;

  bool operator<(const Simplex& o) const {
    if (core != o.core) return core < o.core;
    return word < o.word;
  }
  bool operator==(const Simplex& o) const { return core == o.core && word == o.word; }
};

class FiniteSimplicialSet {
 public:
  // Parses {"dims": d, "simplices": [{"id", "dim", "faces": [...]}, …]} where
  // each face entry is a whitespace-separated degeneracy word ending in a
  // simplex id, outermost operator first ("s1 s0 v"). Rejects non-reduced
  // input and tabulated faces that break the simplicial identities.
  static FiniteSimplicialSet parse(const std::string& text);

  int dim() const { return dim_; }
  int core_count() const { return static_cast<int>(names_.size()); }
  const std::string& core_name(int c) const { return names_[c]; }
  int core_dim(int c) const { return dims_[c]; }
  int id(const std::string& name) const;

  int simplex_dim(const Simplex& x) const;
  std::string name(const Simplex& x) const;
  Simplex degeneracy(const Simplex& x, int i) const;
  Simplex face(const Simplex& x, int i) const;
  // Word ends in s₀, i.e. the simplex lies in the image of s₀.
  static bool s0_degenerate(const Simplex& x);
  // All dimension-q simplices, degenerate ones included, in canonical order.
  std::vector<Simplex> simplices(int q) const;

 private:
  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<int> dims_;
  std::vector<std::vector<Simplex>> faces_;  // per core of dimension >= 1
  std::map<std::string, int> by_name_;
};

class LoopLie {
 public:
  // Levels 0..levels inclusive, each truncated at word length N.
  LoopLie(const FiniteSimplicialSet& X, int N, int levels);

  int levels() const { return static_cast<int>(pres_.size()) - 1; }
  int truncation() const { return trunc_; }
  const Presentation& level(int n) const { return pres_[n]; }
  const std::vector<Simplex>& gens(int n) const { return gens_[n]; }

  // Generator images of d̄ᵢ : 𝕃_n → 𝕃_{n−1} and s̄ᵢ : 𝕃_n → 𝕃_{n+1}.
  const std::vector<LieElement>& face_images(int n, int i) const;
  const std::vector<LieElement>& degeneracy_images(int n, int i) const;
  LieElement face(int n, int i, const LieElement& x) const;
  LieElement degeneracy(int n, int i, const LieElement& x) const;

  // Basis of ⋂_{i≥1} ker d̄ᵢ at level n.
  const std::vector<LieElement>& normalized(int n) const;
  // Shuffle bracket of levels n and m, landing in level n+m.
  LieElement shuffle_bracket(int n, const LieElement& a, int m,
                             const LieElement& b) const;

 private:
  int trunc_ = 0;
  std::vector<Presentation> pres_;
  std::vector<std::vector<Simplex>> gens_;
  std::vector<std::vector<std::vector<LieElement>>> faces_;   // [n][i]
  std::vector<std::vector<std::vector<LieElement>>> degens_;  // [n][i]
  mutable std::map<int, std::vector<LieElement>> normalized_;
};

// Dimensions of H_lo..H_hi of the normalized chain complex (N𝕃, d̄₀).
std::vector<int> lambda_homology(const FiniteSimplicialSet& X, int N, int lo,
                                 int hi);

}  // namespace cdgl
