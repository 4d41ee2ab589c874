#pragma once

// Finite abelian groups Z/d1 x ... x Z/dk, their symmetric bicharacters, and
// the braidability obstruction for non elementary abelian 2-groups.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ngc/cyclo.hpp"

namespace ngc {

/// Exponent vector, one residue per invariant factor.
struct GroupElement {
  std::vector<int> exponents;

  auto operator<=>(const GroupElement&) const = default;
};

class GroupSpec {
 public:
  explicit GroupSpec(std::vector<int> invariant_factors);

  static GroupSpec elementary_2(int rank) { return GroupSpec(std::vector<int>(static_cast<std::size_t>(rank), 2)); }

  const std::vector<int>& factors() const noexcept { return factors_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const noexcept { return order_; }
  bool is_elementary_2() const noexcept { return elementary_2_; }

  /// All elements in lexicographic order of exponent vectors.
  std::vector<GroupElement> elements() const;
  /// Position of `g` in elements().
  int index_of(const GroupElement& g) const;
  GroupElement element(int index) const;

  GroupElement identity() const;
  GroupElement generator(int i) const;
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, int k) const;
  int element_order(const GroupElement& g) const;

  /// Generator indices with nonzero exponent, increasing. Elementary-2 groups only.
  std::vector<int> decompose(const GroupElement& g) const;

  /// Digit string such as "011"; comma separated if some factor exceeds 10.
  std::string key(const GroupElement& g) const;
  GroupElement parse_key(const std::string& key) const;

  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

 private:
  void check(const GroupElement& g) const;

  std::vector<int> factors_;
  int order_ = 1;
  bool elementary_2_ = true;
};

/// Conductor used for a group throughout the pipeline: 8|G|.
int default_conductor(const GroupSpec& group);

/// Bilinear form χ(g,h) = ζ_M^{Σ g_i h_j gram_ij}. The gram exponents must make
/// χ well defined on the quotient, i.e. d_i·gram_ij ≡ 0 ≡ d_j·gram_ij (mod M).
class Bicharacter {
 public:
  Bicharacter(GroupSpec group, FieldPtr field, std::vector<std::vector<int>> gram_exponents);

  /// χ(g,h) = (-1)^{gᵀBh} on an elementary-2 group, in conductor 8|G|.
  static Bicharacter from_binary(const GroupSpec& group, const std::vector<std::vector<int>>& b);

  const GroupSpec& group() const noexcept { return group_; }
  const FieldPtr& field() const noexcept { return field_; }
  int conductor() const noexcept { return field_->conductor(); }
  const std::vector<std::vector<int>>& gram() const noexcept { return gram_; }

  /// Exponent of χ(g,h) as a power of ζ_M, in [0, M).
  int exponent(const GroupElement& g, const GroupElement& h) const;
  RootOfUnity value(const GroupElement& g, const GroupElement& h) const;

  /// The 0/1 matrix B when every value is ±1 on an elementary-2 group.
  std::optional<std::vector<std::vector<int>>> binary_gram() const;

 private:
  GroupSpec group_;
  FieldPtr field_;
  std::vector<std::vector<int>> gram_;
};

CycloNum chi_eval(const Bicharacter& chi, const GroupElement& g, const GroupElement& h);

struct FormChecks {
  bool symmetric = false;
  bool nondegenerate = false;
  bool diag_trivial = false;
};

/// Nondegeneracy and the diagonal are decided by exhaustive scans over G.
FormChecks form_checks(const Bicharacter& chi);

/// All symmetric nondegenerate forms on (Z/2)^n, 1 ≤ n ≤ 4. Candidates are
/// scanned in increasing order of the bitmask over the upper triangle
/// (row-major, bit 0 = entry (0,0)).
std::vector<Bicharacter> enumerate_forms(int rank);

/// Identity gram matrix.
Bicharacter diagonal_form(int rank);
/// Orthogonal sum of hyperbolic planes [[0,1],[1,0]]; rank must be even.
Bicharacter hyperbolic_form(int rank);

struct ObstructionWitness {
  enum class Kind { OddOrder, EvenOrder };
  Kind kind = Kind::OddOrder;
  /// Element a whose order is not 1 or 2.
  GroupElement element;
  int order = 0;
  /// a (odd case) or a² (even case): nontrivial, yet χ(·, b) ≡ 1 on it.
  GroupElement trivialized;
  /// Human readable deduction, one step per line.
  std::vector<std::string> chain;
};

struct Obstruction {
  bool braidable = false;
  std::optional<ObstructionWitness> witness;
};

/// A near-group category over G admits a braiding only if G is elementary
/// abelian 2. Returns the offending element otherwise.
Obstruction braidability_obstruction(const GroupSpec& group);

}  // namespace ngc
