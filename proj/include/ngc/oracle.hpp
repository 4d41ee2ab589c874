#pragma once

// Brute-force re-derivation of all braidings of a small near-group category.
//
// Every σ unknown ranges over the M roots of unity of the working field. The
// constraints are the entries of both hexagon diagrams for every triple of
// simples, expanded symbolically in the unknowns; no reduced equation and no
// realization formula is used. The search assigns unknowns in a fixed order
// and checks each constraint as soon as its last unknown is assigned.

#include <string>
#include <utility>
#include <vector>

#include "ngc/braiding.hpp"

namespace ngc {

/// coeff · Π σ_var^power
struct Monomial {
  CycloNum coeff;
  std::vector<std::pair<int, int>> powers;  // (var, power), sorted by var
};

/// Σ terms = 0, one per matrix entry of a hexagon diagram.
struct HexagonConstraint {
  std::array<SimpleLabel, 3> triple;
  bool inverse = false;
  int row = 0;
  int col = 0;
  std::vector<Monomial> terms;
  std::vector<int> vars;  // sorted
  int trigger = -1;       // position in the search order of the last variable
};

struct SearchSpace {
  int conductor = 0;
  /// Unknowns in assignment order (SigmaLayout numbering).
  std::vector<int> order;
  std::vector<HexagonConstraint> constraints;
};

/// σ₁(a) then σ₀(a,·) for each a, then σ₂, then σ₃.
std::vector<int> default_search_order(const SigmaLayout& layout);

SearchSpace build_search_space(const MonoidalPtr& cat);

struct OracleStats {
  long nodes = 0;
  int constraints = 0;
  int search_survivors = 0;
};

struct OracleResult {
  std::vector<BraidingData> solutions;
  OracleStats stats;
};

/// Largest group order the search accepts.
inline constexpr int kOracleMaxOrder = 4;

/// All σ assignments in roots of unity satisfying both hexagons. Throws
/// SearchSpaceOverflow when |G| > kOracleMaxOrder.
OracleResult brute_force_braidings(const MonoidalPtr& cat, int threads = 1);

struct OracleComparison {
  bool equal = false;
  int oracle_count = 0;
  int constructed_count = 0;
  std::vector<BraidingData> only_in_oracle;
  std::vector<BraidingData> only_in_constructed;
  OracleStats stats;

  std::string summary() const;
};

/// Set equality of σ tables between the search and enumerate_braidings. A
/// category that admits no braiding contributes the empty constructed set.
OracleComparison oracle_compare(const MonoidalPtr& cat, int threads = 1);

}  // namespace ngc
