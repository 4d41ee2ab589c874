#pragma once

// Hexagon diagrams built from fusion-tree moves.
//
// Each diagram is stored as a template whose braiding entries refer to σ
// variables instead of numbers, so the same structure can be evaluated on a
// complete braiding (direct verification) or on a partial assignment (the
// brute-force search).

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ngc/block_matrix.hpp"
#include "ngc/monoidal.hpp"

namespace ngc {

/// Flat numbering of the unknowns σ₀(a,b), σ₁(a), σ₂(a), σ₃(a).
class SigmaLayout {
 public:
  explicit SigmaLayout(int order) : n_(order) {}

  int order() const noexcept { return n_; }
  int count() const noexcept { return n_ * n_ + 3 * n_; }

  int sigma0(int a, int b) const noexcept { return a * n_ + b; }
  int sigma1(int a) const noexcept { return n_ * n_ + a; }
  int sigma2(int a) const noexcept { return n_ * n_ + n_ + a; }
  int sigma3(int a) const noexcept { return n_ * n_ + 2 * n_ + a; }

  /// The variable holding the braiding x⊗y → y⊗x on summand d.
  int braiding_variable(SimpleLabel x, SimpleLabel y, SimpleLabel d) const;

  /// 0..3 for σ₀..σ₃.
  int kind(int var) const noexcept;
  std::string name(const MonoidalData& cat, int var) const;

 private:
  int n_;
};

/// coeff · σ_var^{±1}; var < 0 means the constant coeff.
struct Term {
  CycloNum coeff;
  int var = -1;
  bool inverse = false;
};

/// Braiding acting on the node at `path`: c_{A,B} or, when `inverse`, c_{B,A}^{-1}.
BasicBlockMatrix<Term> braid_move(const MonoidalData& cat, const SigmaLayout& layout, const Shape& shape,
                                  const NodePath& path, bool inverse);

struct HexagonTemplate {
  std::array<SimpleLabel, 3> triple;
  /// false: the hexagon for c; true: the one for c^{-1}.
  bool inverse = false;
  /// Steps applied first to last; both sides map (xy)z → y(zx).
  std::vector<BasicBlockMatrix<Term>> lhs;
  std::vector<BasicBlockMatrix<Term>> rhs;
};

HexagonTemplate make_hexagon_template(const MonoidalData& cat, const SigmaLayout& layout, SimpleLabel x,
                                      SimpleLabel y, SimpleLabel z, bool inverse);

class HexagonSystem {
 public:
  /// Two hexagons for every triple of simples, triples in lexicographic order.
  explicit HexagonSystem(MonoidalPtr cat);

  const MonoidalData& monoidal() const noexcept { return *cat_; }
  const MonoidalPtr& monoidal_ptr() const noexcept { return cat_; }
  const SigmaLayout& layout() const noexcept { return layout_; }
  const std::vector<HexagonTemplate>& templates() const noexcept { return templates_; }

 private:
  MonoidalPtr cat_;
  SigmaLayout layout_;
  std::vector<HexagonTemplate> templates_;
};

/// Composite of `steps` with every σ variable replaced by values[var].
SparseMatrix<CycloNum> evaluate_side(const std::vector<BasicBlockMatrix<Term>>& steps,
                                     std::span<const CycloNum> values);

/// Same composite with its bases attached.
BlockMatrix evaluate_side_block(const std::vector<BasicBlockMatrix<Term>>& steps, std::span<const CycloNum> values);

bool same_entries(const SparseMatrix<CycloNum>& a, const SparseMatrix<CycloNum>& b);

}  // namespace ngc
