#pragma once

// Near-group monoidal data (G, χ, τ) in a fixed normal basis: fusion rules,
// associator blocks, and an exhaustive pentagon verifier.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ngc/block_matrix.hpp"
#include "ngc/cyclo.hpp"
#include "ngc/group.hpp"

namespace ngc {

class MonoidalData {
 public:
  /// τ = tau_sign / √|G|. Requires χ symmetric and nondegenerate and |G| a
  /// power of two (so that √|G| exists in conductor 8|G|).
  MonoidalData(GroupSpec group, Bicharacter chi, int tau_sign);

  /// Copy with τ replaced and not validated, for probing the verifiers.
  MonoidalData with_unchecked_tau(CycloNum tau) const;

  const GroupSpec& group() const noexcept { return group_; }
  const Bicharacter& chi() const noexcept { return chi_; }
  const CycloNum& tau() const noexcept { return tau_; }
  int tau_sign() const noexcept { return tau_sign_; }
  const FieldPtr& field() const noexcept { return chi_.field(); }
  int conductor() const noexcept { return chi_.conductor(); }
  int order() const noexcept { return group_.order(); }

  /// All simples: group elements in lexicographic order, then m.
  std::vector<SimpleLabel> simples() const;

  // Index-level group operations (indices into group().elements()).
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// Exponent of χ(a,b) in [0, M).
  int chi_exp(int a, int b) const { return chi_exp_[idx(a, b)]; }
  CycloNum chi(int a, int b) const { return CycloNum::root(field(), chi_exp(a, b)); }
  CycloNum chi_inv(int a, int b) const { return CycloNum::root(field(), -chi_exp(a, b)); }
  CycloNum one() const { return CycloNum::integer(field(), 1); }

  /// Simple summands of x ⊗ y in lexicographic order (multiplicity free).
  std::vector<SimpleLabel> fuse(SimpleLabel x, SimpleLabel y) const;

  /// Entry of α_{a,b,c}: (ab)c → a(bc) between the summand d reached through
  /// e ∈ ab on the source side and through f ∈ bc on the target side.
  CycloNum associator_entry(SimpleLabel a, SimpleLabel b, SimpleLabel c, SimpleLabel e, SimpleLabel f,
                            SimpleLabel d) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(order()) + static_cast<std::size_t>(b); }

  GroupSpec group_;
  Bicharacter chi_;
  int tau_sign_;
  CycloNum tau_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> chi_exp_;
};

using MonoidalPtr = std::shared_ptr<const MonoidalData>;

MonoidalPtr build_monoidal(const GroupSpec& group, const Bicharacter& chi, int tau_sign);

/// Multiplicities of x ⊗ y over simples() order (length |G| + 1).
std::vector<int> fusion_product(const MonoidalData& cat, SimpleLabel x, SimpleLabel y);

// --- fusion-tree machinery --------------------------------------------------

/// Every labelling of `shape`, sorted by (summand, fusion path). Copy indices
/// number the entries sharing a summand.
Basis tree_basis(const MonoidalData& cat, const Shape& shape);

/// Path from the root: 0 = left child, 1 = right child.
using NodePath = std::vector<int>;

const Shape& subshape(const Shape& shape, const NodePath& path);
/// ((A B) C) → (A (B C)) at `path`.
Shape associated_shape(const Shape& shape, const NodePath& path);
/// (A B) → (B A) at `path`.
Shape swapped_shape(const Shape& shape, const NodePath& path);

/// The associator acting on the node at `path`, identity elsewhere.
BlockMatrix associate_move(const MonoidalData& cat, const Shape& shape, const NodePath& path);

/// α_{x,y,z}: (xy)z → x(yz).
BlockMatrix associator_blocks(const MonoidalData& cat, SimpleLabel x, SimpleLabel y, SimpleLabel z);

/// The matrix (τχ(a,b))_{a,b} as a map m(mm) → (mm)m.
BlockMatrix associator_mmm_inverse(const MonoidalData& cat);

struct PentagonFailure {
  std::array<SimpleLabel, 4> quadruple;
  BlockMatrix via_two_steps;
  BlockMatrix via_three_steps;
};

struct PentagonReport {
  bool passed = false;
  int quadruples_checked = 0;
  bool inverse_identity = false;
  std::optional<PentagonFailure> first_failure;
};

/// Checks both pentagon paths ((wx)y)z → w(x(yz)) for every quadruple of
/// simples, and α_{m,m,m} · (τχ(a,b)) = I. `threads` ≤ 1 runs serially.
PentagonReport verify_pentagon(const MonoidalData& cat, int threads = 1);

std::string label_name(const MonoidalData& cat, SimpleLabel s);

}  // namespace ngc
