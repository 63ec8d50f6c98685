// Simplices of the realization of a complete dgl, the homotopy-group data of
// the realization, and the comparison morphism Φ on formal bracket words of
// simplices.
//
// A level-n simplex of ⟨L⟩ is a dgl morphism 𝔏ₙ → L, recorded as the vector of
// generator images (indexed like the model's generator table) and validated
// against both differentials word length by word length. Level-4 models are
// built at word length at most 3, so identities involving them are checked
// over that shorter window; faces, degeneracies, evaluation of single
// generators, and the homotopy map ρ are linear in the images and do not
// depend on the window at all.
//
// Φ sends a formal Lie word of level-n simplices to L: a single simplex goes
// to (−1)ⁿ times its image of the long generator, words of length ≥ 2 at
// level 1 vanish, and a bracket ⟦α,β⟧ unfolds through the front-face/back-face
// decomposition Σₖ [Φ(d_{k+1}⋯dₙ α), Φ(d₀ᵏ β)], where d₀ on the simplex side
// is the group-like face −d₀x ∗ d₁x.
#pragma once

#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cosimplicial.hpp"
#include "lie.hpp"

namespace cdgl {

// A point of ⟨L⟩ₙ: images of the generators of the level-n model, in the
// model's generator order. Zero elements stand for generators sent to 0.
struct RealizationSimplex {
  int level = 0;
  std::vector<LieElement> images;
};

// Shared level-n model at the given truncation; level 4 is capped at word
// length 3 and carries the corrected differential.
const Model& realization_model(int n, int truncation);

// Names of generators whose differential condition fails (empty = morphism).
// Throws std::invalid_argument on shape or degree mismatches.
std::vector<std::string> validate_simplex(const Presentation& L, int n,
                                          const std::vector<LieElement>& images);

// Validated constructor; throws std::invalid_argument listing the failures.
RealizationSimplex make_simplex(const Presentation& L, int n,
                                std::vector<LieElement> images);

// The constant simplex at 0.
RealizationSimplex basepoint(const Presentation& L, int n);

// Image of an arbitrary model element under the morphism.
LieElement evaluate(const Presentation& L, const RealizationSimplex& s,
                    const LieElement& x);

// Simplicial structure: precomposition with the cofaces δᵢ and codegeneracies
// σᵢ of the model tower. Results are re-validated (std::logic_error if the
// morphism property were ever lost). Degeneracies above level 4 are rejected.
RealizationSimplex face(const Presentation& L, int i, const RealizationSimplex& s);
RealizationSimplex degeneracy(const Presentation& L, int i, const RealizationSimplex& s);

// Whether s is the degeneracy of its own 0-th face.
bool s0_degenerate(const Presentation& L, const RealizationSimplex& s);

struct HomologyClass {
  int degree = 0;
  LieElement representative;  // a cycle of L
};

// ρ: πₙ⟨L⟩ → H_{n−1}(L) on a level-n simplex: (−1)^{n−1} times the class of
// the image of the long generator.
HomologyClass rho(const Presentation& L, const RealizationSimplex& s);

// Equality in homology: degrees agree and the difference is a boundary.
bool same_class(const Presentation& L, const HomologyClass& a, const HomologyClass& b);

struct HomotopyRow {
  int n = 0;          // homotopy degree
  int dim = 0;        // dim πₙ⟨L⟩ = dim H_{n−1}(L)
  bool bch_group = false;  // group law is Baker–Campbell–Hausdorff (n = 1)
};

// πₙ⟨L⟩ for n in [lo, hi], lo ≥ 1. Dimensions may carry the truncation caveat
// of the underlying homology computation; rows are in increasing n.
std::vector<HomotopyRow> homotopy_table(const Presentation& L, int lo, int hi);

// For simply connected L and a homogeneous cycle-or-not x of degree n ≥ 1, the
// level-(n+1) simplex sending the long generator to (−1)ⁿx, its 0-th-vertex-
// deleting face to (−1)ⁿdx, and every other generator to 0. For x = 0 pass the
// intended degree. ρ of the result is the class of x.
RealizationSimplex surjectivity_witness(const Presentation& L, const LieElement& x,
                                        int degree = -1);

// Formal bracket words of simplices and the morphism Φ into the target.
//
// Level n of the tower is a free complete Lie algebra on one degree-0
// generator per interned level-(n+1) simplex; faces, degeneracies, and the
// shuffle bracket act on it exactly as in the loop construction, with the
// 0-th face taking Baker–Campbell–Hausdorff products of interned faces.
class PhiTower {
 public:
  explicit PhiTower(const Presentation& L);

  const Presentation& target() const { return *L_; }

  // Generator id of s in the level-(s.level − 1) formal algebra, interning it
  // on first sight; −1 when s is s₀-degenerate (such simplices are zero here).
  int intern(const RealizationSimplex& s);

  const Presentation& formal(int n);
  const RealizationSimplex& leaf(int n, int id);

  // Φ on a formal level-n element; values land in the target.
  LieElement phi(int n, const LieElement& x);

  // d̄ᵢ: level n → n − 1 (i = 0 is the group-like face) and s̄ᵢ: level n → n + 1.
  LieElement face_formal(int n, int i, const LieElement& x);
  LieElement degeneracy_formal(int n, int i, const LieElement& x);

  // λ-bracket of a level-n and a level-m element, landing in level n + m.
  LieElement shuffle_bracket(int n, const LieElement& a, int m, const LieElement& b);

 private:
  struct Level {
    Presentation P;
    std::vector<RealizationSimplex> leaves;
    std::map<std::vector<std::map<Word, Rat>>, int> index;  // expanded images → id
    explicit Level(int truncation) : P(truncation) {}
  };

  Level& level_at(int n);
  LieElement phi_tree(int n, const Tree& t);
  int intern_face(int n, int g, int j);   // simplicial face j of leaf g
  int intern_degen(int n, int g, int j);  // simplicial degeneracy j of leaf g

  const Presentation* L_;
  std::deque<Level> levels_;  // element references stay valid as levels appear
  std::map<std::pair<int, Tree>, LieElement> memo_;
  std::map<std::tuple<int, int, int>, int> face_id_, degen_id_;
};

}  // namespace cdgl
