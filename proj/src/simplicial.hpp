// Simplicial vector spaces over ordered complexes, shuffles, and the
// Eilenberg-Zilber / Alexander-Whitney maps between C(V) ⊗ C(W) and C(V ⊗ W),
// where V ⊗ W is the levelwise tensor with diagonal faces.
#pragma once

#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "linear.hpp"

namespace cdgl {

// An (n,m)-shuffle: complementary increasing sequences mu (size n), nu
// (size m) covering {0..n+m-1}; sign is the parity of [mu, nu].
struct Shuffle {
  std::vector<int> mu, nu;
  int sign = 1;
};
std::vector<Shuffle> shuffles(int n, int m);

// Level-q basis vectors are weakly increasing vertex tuples of size q+1.
using VTuple = std::vector<int>;

VTuple tuple_face(const VTuple& t, int i);
VTuple tuple_degen(const VTuple& t, int i);

using VElem = SVec<VTuple>;
using TPair = std::pair<VTuple, VTuple>;
using TElem = SVec<TPair>;

VElem apply_face(const VElem& x, int i);
VElem apply_degen(const VElem& x, int i);
// Simplicial boundary Σ (−1)^i d_i of a level-n element.
VElem boundary(const VElem& x, int n);
// Diagonal boundary Σ (−1)^i (d_i ⊗ d_i) on the levelwise tensor.
TElem tensor_boundary(const TElem& x, int n);

// The free simplicial vector space on an ordered simplicial complex: faces are
// strictly increasing tuples closed under subsets, level-q basis all weakly
// increasing tuples supported on a face.
class SimplicialSpace {
 public:
  explicit SimplicialSpace(std::set<std::vector<int>> faces);
  SimplicialSpace(std::initializer_list<std::vector<int>> faces)
      : SimplicialSpace(std::set<std::vector<int>>(faces)) {}

  const std::vector<VTuple>& basis(int level) const;
  // Basis of NV_level = ∩_{i≥1} ker d_i.
  const std::vector<VElem>& normalized_basis(int level) const;

 private:
  std::set<std::vector<int>> faces_;
  mutable std::map<int, std::vector<VTuple>> basis_;
  mutable std::map<int, std::vector<VElem>> normalized_;
};

// ∇(α ⊗ β) = Σ ε_{μ,ν} s_ν α ⊗ s_μ β over (n,m)-shuffles, level n+m.
TElem ez_nabla(const VElem& a, int n, const VElem& b, int m);
// Δ of a level-n tensor: component k is (front k-face) ⊗ (back (n−k)-face).
std::map<int, TElem> aw_delta(const TElem& x, int n);

// Projection of a level-n element onto NV along the degenerate subspace,
// (1 − s₀d₁)⋯(1 − s_{n−1}d_n) applied top index first. Restricting Δ to the
// normalized complexes means following it with this projector on both
// factors; the raw front/back formula leaves factor-degenerate terms behind.
VElem normalize_project(const VElem& x, int n);
std::map<int, TElem> normalize_project(const std::map<int, TElem>& comps, int n);

// Monotone vertex maps induce simplicial maps; used for naturality checks.
VElem apply_vertex_map(const VElem& x, const std::vector<int>& psi);
TElem apply_vertex_map(const TElem& x, const std::vector<int>& psi);

// Seeded instances for the retraction/chain-map checks.
SimplicialSpace random_complex(std::mt19937& rng, int max_vertices, int max_dim);
VElem random_normalized(const SimplicialSpace& V, int level, std::mt19937& rng);

}  // namespace cdgl
