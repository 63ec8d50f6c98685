// Chevalley–Eilenberg cochains of a truncated dgl and their cohomology.
//
// 𝒞*(L) is free graded-commutative on generators dual to the degree-wise
// basis of L, shifted up by one; the differential is the sum of the dual of
// d_L and the dual of the bracket, extended as an odd derivation. d² = 0 is
// asserted on every generator whose differential window is fully modeled.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lie.hpp"
#include "serialize.hpp"

namespace cdgl {

// Commutative monomial: generator ids, ascending; odd generators at most once.
using CMono = std::vector<int32_t>;

struct CPoly {
  std::map<CMono, Rat> terms;

  bool empty() const { return terms.empty(); }
  CPoly& add(const CMono& m, const Rat& c);
  CPoly& add(const CPoly& other, const Rat& c = Rat(1));
  CPoly& scale(const Rat& c);
};

struct CdgaGenerator {
  std::string name;
  int degree = 0;    // cochain degree, = 1 + degree of the dual basis element
  std::string dual;  // rendering of the L-basis monomial this is dual to
};

class CdgaPresentation {
 public:
  explicit CdgaPresentation(int cap) : cap_(cap) {}

  int cap() const { return cap_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const CdgaGenerator& gen(int32_t g) const { return gens_[g]; }
  const CPoly& differential(int32_t g) const { return diff_[g]; }
  int id(const std::string& name) const;  // -1 when absent
  // Whether word-length truncation of the source may hide basis elements or
  // structure constants below the cap.
  bool truncation_warning() const { return warning_; }

  int add_generator(const std::string& name, int degree, std::string dual);
  void set_differential(int32_t g, CPoly dg);
  void set_truncation_warning(bool w) { warning_ = w; }

  int degree(const CMono& m) const;
  // Product of monomials with Koszul signs; zero on repeated odd generators.
  CPoly mul(const CMono& a, const CMono& b) const;
  CPoly mul(const CPoly& a, const CPoly& b) const;
  CPoly apply_d(const CPoly& x) const;
  // All monomials of the given cochain degree, ascending; {} is degree 0.
  std::vector<CMono> monomial_basis(int deg) const;

 private:
  int cap_;
  bool warning_ = false;
  std::vector<CdgaGenerator> gens_;
  std::vector<CPoly> diff_;
  std::map<std::string, int32_t> by_name_;
};

// Cochains of L carrying degrees up to cap + 1 (duals of L-degrees 1..cap).
// Generators of L must all have degree >= 1; otherwise some degree of L below
// the cap is infinite-dimensional and the input is rejected.
CdgaPresentation ce(const Presentation& L, int cap);

// dim H^0..H^cap by exact elimination; cap must not exceed the cap of A.
std::vector<int> cdga_cohomology(const CdgaPresentation& A, int cap);

// Rank of d on the degree-deg monomial basis (elimination detail, exposed for
// the Euler-characteristic sanity identity).
int cdga_rank(const CdgaPresentation& A, int deg);

Json cdga_to_json(const CdgaPresentation& A);
CdgaPresentation cdga_from_json(const Json& j);

}  // namespace cdgl
