// Lawrence–Sullivan models of the standard simplices and the cosimplicial
// structure connecting them.
//
// The model of the n-simplex is free complete on generators a_{i0…ip}, one per
// nonempty subset of {0..n}, with |a_{i0…ip}| = p − 1. Vertices are
// Maurer–Cartan points, the linear part of d is the desuspended simplicial
// boundary, and cofaces/codegeneracies commute with d. The differential of the
// top generator is
//   d a_{0…n} = (−1)^n a_{0…n−1} − Γ − [a_0, a_{0…n}]
// with Γ solved length-by-length from d_{a_0}Γ = (−1)^n d_{a_0}(a_{0…n−1}).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie.hpp"
#include "serialize.hpp"

namespace cdgl {

struct GammaStep {
  int length = 0;
  std::string path;  // "pinned" | "triangular" | "modified" | "joint"
  LieElement value;
};

struct Model {
  int level = 0;
  bool modified = false;
  Presentation P{4};
  std::vector<std::vector<int>> tuples;     // generator id -> index tuple
  std::map<std::vector<int>, int32_t> ids;  // index tuple -> generator id
  std::vector<GammaStep> trace;             // solved Γ per word length (level ≥ 2)
  // Level 4: coefficient of [a234,a234] in Γ₂ before any modification, and the
  // multiplier λ used when the degree-2 correction cycle is added.
  std::optional<Rat> top_coefficient;
  std::optional<Rat> lambda;

  int32_t gen(const std::vector<int>& t) const { return ids.at(t); }
  LieElement gamma() const;
};

// Deterministic construction; throws std::invalid_argument for n < 0.
Model build_simplex_model(int n, int truncation, bool modified = false);
// Memoized access. `modified` only affects level 4 (removes the [a234,a234]
// term from the top differential via the correction cycle).
const Model& simplex_model(int n, int truncation, bool modified = false);

// The closed length-2, degree-2 element over the horn of the 4-simplex whose
// [a234,a234] coefficient is +1 and whose linear differential vanishes.
LieElement horn_correction(const Model& L4);

// Generator images of the i-th coface (src.level + 1 == dst.level) or
// codegeneracy (src.level − 1 == dst.level), as a Lie morphism image table.
std::vector<LieElement> coface_images(const Model& src, const Model& dst, int i);
std::vector<LieElement> codegeneracy_images(const Model& src, const Model& dst, int i);

// Presentation JSON plus the solver trace.
Json model_to_json(const Model& m);

}  // namespace cdgl
