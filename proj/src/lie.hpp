// Complete graded Lie algebras over Q, truncated by bracket length.
//
// Elements are rational combinations of bracket monomials (binary trees whose
// leaves are generators). Equality is decided through the canonical embedding
// into the tensor algebra: [u,v] = u⊗v − (−1)^{|u||v|} v⊗u, applied
// recursively and truncated beyond the configured word length.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linear.hpp"
#include "rational.hpp"

namespace cdgl {

struct Generator {
  std::string name;
  int degree = 0;
};

// Bracket monomial, preorder: -1 marks an internal node, entries >= 0 are
// generator ids. [[x,y],z] = {-1, -1, x, y, z}.
using Tree = std::vector<int32_t>;
// Tensor word of generator ids.
using Word = std::vector<int32_t>;

Tree leaf(int32_t g);
Tree node(const Tree& left, const Tree& right);
bool is_leaf(const Tree& t);
std::pair<Tree, Tree> children(const Tree& t);
int leaf_count(const Tree& t);
void collect_leaves(const Tree& t, Word& out);

struct LieElement {
  std::map<Tree, Rat> terms;

  bool empty() const { return terms.empty(); }
  LieElement& add(const Tree& t, const Rat& c);
  LieElement& add(const LieElement& other, const Rat& c = Rat(1));
  LieElement& scale(const Rat& c);
  LieElement& negate() { return scale(rat(-1)); }
};

LieElement lie(const Tree& t, const Rat& c = Rat(1));
LieElement lie_gen(int32_t g, const Rat& c = Rat(1));
// Terms of bracket length exactly k.
LieElement length_part(const LieElement& x, int k);

struct TensorPoly {
  std::map<Word, Rat> terms;

  bool empty() const { return terms.empty(); }
  TensorPoly& add(const Word& w, const Rat& c);
  TensorPoly& add(const TensorPoly& other, const Rat& c = Rat(1));
  TensorPoly& scale(const Rat& c);
};

// Product in the tensor algebra, words longer than max_len dropped.
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b, int max_len);

struct BasisBlock {
  std::vector<Tree> monomials;
  Echelon<Word> echelon;         // rows: reduced expansions of the monomials
  std::vector<int> tag_to_pos;   // insertion tag -> index into monomials
};

struct HomologySummary {
  int degree = 0;
  int dim = 0;
  std::vector<LieElement> representatives;
  bool truncation_warning = false;
};

struct Subcomplex {
  // Per degree: elements spanning the kernel of [a,-] restriction in degree 0
  // and the whole graded piece elsewhere.
  std::map<int, std::vector<LieElement>> basis;
};

class Presentation {
 public:
  explicit Presentation(int truncation = 4) : truncation_(truncation) {}

  int add_generator(const std::string& name, int degree);
  void set_differential(int32_t g, LieElement dg);
  int id(const std::string& name) const;  // -1 when absent
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int32_t g) const { return gens_[g]; }
  const LieElement& differential(int32_t g) const { return diff_[g]; }
  int truncation() const { return truncation_; }

  // Degree of a tree or word (Tree and Word share the representation;
  // internal-node markers carry no degree).
  int degree(const Tree& t) const;
  // Common degree of all terms; nullopt for 0 or inhomogeneous input.
  std::optional<int> degree(const LieElement& x) const;

  TensorPoly expand(const Tree& t) const;
  TensorPoly expand(const LieElement& x) const;
  bool is_zero(const LieElement& x) const;
  bool equal(const LieElement& x, const LieElement& y) const;

  LieElement truncate(const LieElement& x) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // Extends generator images as a derivation of the given operator degree.
  LieElement derive(const std::vector<LieElement>& images, const Tree& t,
                    int op_degree) const;
  LieElement derive(const std::vector<LieElement>& images, const LieElement& x,
                    int op_degree) const;

  LieElement apply_d(const LieElement& x) const;
  // Returns a tree witnessing d²(g) != 0, if any.
  std::optional<Tree> check_d_squared() const;

  // Monomial basis in bracket length k and the given degree, over the subset
  // of generators (all when empty). Deterministic; cached.
  const BasisBlock& basis(int k, int deg, const std::vector<int32_t>& subset = {}) const;
  // Basis of the whole degree-deg piece: blocks concatenated by length.
  std::vector<Tree> space_basis(int deg, const std::vector<int32_t>& subset = {}) const;
  // Coordinates of x in space_basis(deg); nullopt if x is inhomogeneous of
  // another degree (cannot happen for well-formed input).
  std::optional<std::vector<Rat>> coords(const LieElement& x, int deg,
                                         const std::vector<int32_t>& subset = {}) const;

  int min_gen_degree() const;
  int max_gen_degree() const;

 private:
  struct BasisKey {
    int k;
    int deg;
    std::vector<int32_t> subset;
    bool operator<(const BasisKey& o) const {
      if (k != o.k) return k < o.k;
      if (deg != o.deg) return deg < o.deg;
      return subset < o.subset;
    }
  };

  int truncation_;
  std::vector<Generator> gens_;
  std::vector<LieElement> diff_;
  std::map<std::string, int32_t> by_name_;
  mutable std::map<BasisKey, BasisBlock> basis_cache_;
  mutable std::map<Tree, TensorPoly> expand_cache_;
};

// Morphism determined by generator images (x_i in target, one per source
// generator); brackets are re-evaluated and truncated in the target.
LieElement apply_images(const Presentation& src, const Presentation& dst,
                        const std::vector<LieElement>& images, const LieElement& x);

// True when every image is homogeneous of degree |g| + op_degree.
bool images_homogeneous(const Presentation& P, const std::vector<LieElement>& images,
                        int op_degree);

// d_a = d + [a, -] for a of degree -1.
Presentation twist(const Presentation& P, const LieElement& a);
bool is_maurer_cartan(const Presentation& P, const LieElement& a);

// Baker–Campbell–Hausdorff product of degree-0 elements, exact modulo brackets
// of length > truncation. Computed through exp/log in the tensor algebra.
LieElement bch(const Presentation& P, const LieElement& x, const LieElement& y);
// Same product from Dynkin's explicit summation; used to cross-check bch.
LieElement bch_dynkin(const Presentation& P, const LieElement& x, const LieElement& y);

std::vector<HomologySummary> homology(const Presentation& P, int lo, int hi);

// Connected component of the Maurer–Cartan point a: the twisted complex
// restricted to non-negative degrees, with degree 0 cut down to the kernel of
// the twisted differential.
Subcomplex component(const Presentation& P, const LieElement& a);

// B_0 .. B_m with B_1 = -1/2.
std::vector<Rat> bernoulli(int m);

}  // namespace cdgl
