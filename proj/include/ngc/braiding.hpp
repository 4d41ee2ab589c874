#pragma once

// Braidings on near-group categories: realization from (δ₁,…,δₙ,ε), extraction
// of those invariants, two independent hexagon verifiers, enumeration, twists,
// and root-of-unity order bounds.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ngc/hexagon.hpp"
#include "ngc/monoidal.hpp"

namespace ngc {

struct BraidingParams {
  std::vector<int> delta;
  int epsilon = 1;

  friend bool operator==(const BraidingParams&, const BraidingParams&) = default;
  std::string to_string() const;
};

/// All 2^{n+1} tuples: δ lexicographic with +1 before -1, then ε = +1, -1.
std::vector<BraidingParams> all_params(int rank);

/// σ tables indexed by lexicographic element index. Values are not required to
/// be roots of unity here so that tampered input can still be verified.
class BraidingData {
 public:
  BraidingData(MonoidalPtr parent, std::vector<CycloNum> sigma0, std::vector<CycloNum> sigma1,
               std::vector<CycloNum> sigma2, std::vector<CycloNum> sigma3);

  /// Inverse of variables(), using SigmaLayout numbering.
  static BraidingData from_variables(MonoidalPtr parent, const std::vector<CycloNum>& values);

  const MonoidalData& parent() const noexcept { return *parent_; }
  const MonoidalPtr& parent_ptr() const noexcept { return parent_; }

  const CycloNum& sigma0(int a, int b) const { return sigma0_[static_cast<std::size_t>(a * parent_->order() + b)]; }
  const CycloNum& sigma1(int a) const { return sigma1_[static_cast<std::size_t>(a)]; }
  const CycloNum& sigma2(int a) const { return sigma2_[static_cast<std::size_t>(a)]; }
  const CycloNum& sigma3(int a) const { return sigma3_[static_cast<std::size_t>(a)]; }

  std::vector<CycloNum> variables() const;
  /// Copy with one SigmaLayout variable replaced.
  BraidingData with_value(int var, CycloNum value) const;

  bool all_roots_of_unity() const;

  /// Exact equality of all four tables.
  friend bool operator==(const BraidingData& a, const BraidingData& b);

 private:
  MonoidalPtr parent_;
  std::vector<CycloNum> sigma0_;
  std::vector<CycloNum> sigma1_;
  std::vector<CycloNum> sigma2_;
  std::vector<CycloNum> sigma3_;
};

struct TwistData {
  std::vector<CycloNum> theta_g;
  CycloNum theta_m;
};

/// Builds σ₀ = χ, σ₁ = σ₂ from generator values δᵢ√χ(gᵢ,gᵢ), and
/// σ₃(1) = ε√(τΣσ₁), σ₃(g) = σ₃(1)σ₁(g)χ(g,g), with principal square roots.
/// Throws NotBraidable or NotAnEvenPowerRoot.
BraidingData construct_braiding(const MonoidalPtr& cat, const BraidingParams& params);

/// δᵢ = σ₁(gᵢ)/√χ(gᵢ,gᵢ), ε = σ₃(1)/√(τΣσ₁). Throws NonUnitInvariant.
BraidingParams extract_invariants(const BraidingData& b);

struct ReducedFailure {
  int equation = 0;  // 1..10
  std::string witness;
};

struct ReducedReport {
  bool passed = true;
  std::vector<ReducedFailure> failures;
  bool equation_holds(int equation) const;
};

/// Exhaustive check of the ten reduced hexagon equations, numbered as in the
/// README (1–5 from the hexagon for c, 6–10 from the one for c^{-1}).
ReducedReport verify_hexagons_reduced(const BraidingData& b);

/// Plain-text statement of reduced equation k, 1 ≤ k ≤ 10.
std::string reduced_equation(int k);

struct HexagonFailure {
  std::array<SimpleLabel, 3> triple;
  bool inverse = false;
  BlockMatrix lhs;
  BlockMatrix rhs;
};

struct DirectReport {
  bool passed = true;
  int diagrams_checked = 0;
  std::vector<HexagonFailure> failures;
};

/// Both hexagons for every triple of simples by composing associator and
/// braiding blocks. Reuses `system` when given (it must belong to b's parent).
DirectReport verify_hexagons_direct(const BraidingData& b, const HexagonSystem* system = nullptr, int threads = 1);

/// Both sides of the forward (m,m,m) hexagon as composed by the direct verifier.
std::pair<BlockMatrix, BlockMatrix> mmm_hexagon_sides(const BraidingData& b);

struct EnumeratedBraiding {
  BraidingParams params;
  BraidingData data;
};

/// Every braiding, each checked with the direct verifier before it is
/// returned. Throws NotBraidable with the obstruction when G is not
/// elementary abelian 2.
std::vector<EnumeratedBraiding> enumerate_braidings(const MonoidalPtr& cat, int threads = 1);

struct TwistCheck {
  bool multiplicative = false;  // θ_{gh} = θ_g θ_h
  bool from_sigma1 = false;     // θ_g = σ₁(g)²
  bool balances_m = false;      // θ_g = θ_m² σ₃(g)²
  bool passed() const { return multiplicative && from_sigma1 && balances_m; }
};

TwistCheck check_twist(const BraidingData& b, const TwistData& t);

/// θ_g = σ₁(g)², θ_m = ±1/σ₃(1); + first.
std::vector<TwistData> compute_twists(const BraidingData& b);

struct RootOrderReport {
  int max_order = 0;
  int bound = 0;          // 8|G|
  int refined_bound = 0;  // 4|G|
  bool within_bound = false;
  /// χ(g,g) = 1 for all g and every order divides 4|G|.
  bool refined = false;
};

/// Throws Error if some σ value is not a root of unity.
RootOrderReport root_order_report(const BraidingData& b);

struct DeterminantCheck {
  CycloNum det_a;
  CycloNum det_s2;
  CycloNum det_s3;
  bool holds = false;  // det(A)·det(S₂) = det(S₃)²
};

DeterminantCheck determinant_identity(const BraidingData& b);

/// Exact determinant by Gaussian elimination over Q(ζ_M).
CycloNum determinant(std::vector<std::vector<CycloNum>> matrix);

}  // namespace ngc
