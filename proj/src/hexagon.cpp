#include "ngc/hexagon.hpp"

#include <map>

namespace ngc {

int SigmaLayout::braiding_variable(SimpleLabel x, SimpleLabel y, SimpleLabel d) const {
  if (!x.is_m() && !y.is_m()) return sigma0(x.element(), y.element());
  if (!x.is_m()) return sigma1(x.element());
  if (!y.is_m()) return sigma2(y.element());
  return sigma3(d.element());
}

int SigmaLayout::kind(int var) const noexcept {
  if (var < n_ * n_) return 0;
  return 1 + (var - n_ * n_) / n_;
}

std::string SigmaLayout::name(const MonoidalData& cat, int var) const {
  const auto key = [&](int e) { return cat.group().key(cat.group().element(e)); };
  switch (kind(var)) {
    case 0:
      return "sigma0(" + key(var / n_) + "," + key(var % n_) + ")";
    case 1:
      return "sigma1(" + key(var - sigma1(0)) + ")";
    case 2:
      return "sigma2(" + key(var - sigma2(0)) + ")";
    default:
      return "sigma3(" + key(var - sigma3(0)) + ")";
  }
}

namespace {

FusionTree& node_at(FusionTree& tree, const NodePath& path) {
  FusionTree* cur = &tree;
  for (int step : path) cur = &cur->children[static_cast<std::size_t>(step)];
  return *cur;
}

BasicBlockMatrix<Term> lift(const BlockMatrix& m) {
  return m.map([](const CycloNum& v) { return Term{v, -1, false}; });
}

}  // namespace

BasicBlockMatrix<Term> braid_move(const MonoidalData& cat, const SigmaLayout& layout, const Shape& shape,
                                  const NodePath& path, bool inverse) {
  Basis source = tree_basis(cat, shape);
  Basis target = tree_basis(cat, swapped_shape(shape, path));
  std::map<std::vector<int>, int> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i].tree.key(), static_cast<int>(i));

  BasicBlockMatrix<Term> out(source, target);
  for (std::size_t col = 0; col < source.size(); ++col) {
    FusionTree tree = source[col].tree;
    FusionTree& node = node_at(tree, path);
    const SimpleLabel a = node.children[0].label;
    const SimpleLabel b = node.children[1].label;
    std::swap(node.children[0], node.children[1]);
    const int row = target_index.at(tree.key());
    const int var = inverse ? layout.braiding_variable(b, a, node.label) : layout.braiding_variable(a, b, node.label);
    out.entries().add(row, static_cast<int>(col), Term{cat.one(), var, inverse});
  }
  return out;
}

HexagonTemplate make_hexagon_template(const MonoidalData& cat, const SigmaLayout& layout, SimpleLabel x,
                                      SimpleLabel y, SimpleLabel z, bool inverse) {
  const Shape s0 = Shape::join(Shape::join(Shape::single(x), Shape::single(y)), Shape::single(z));
  HexagonTemplate t;
  t.triple = {x, y, z};
  t.inverse = inverse;

  // (xy)z → x(yz) → (yz)x → y(zx)
  const Shape s1 = associated_shape(s0, {});
  const Shape s2 = swapped_shape(s1, {});
  t.lhs.push_back(lift(associate_move(cat, s0, {})));
  t.lhs.push_back(braid_move(cat, layout, s1, {}, inverse));
  t.lhs.push_back(lift(associate_move(cat, s2, {})));

  // (xy)z → (yx)z → y(xz) → y(zx)
  const Shape t1 = swapped_shape(s0, {0});
  const Shape t2 = associated_shape(t1, {});
  t.rhs.push_back(braid_move(cat, layout, s0, {0}, inverse));
  t.rhs.push_back(lift(associate_move(cat, t1, {})));
  t.rhs.push_back(braid_move(cat, layout, t2, {1}, inverse));
  return t;
}

HexagonSystem::HexagonSystem(MonoidalPtr cat) : cat_(std::move(cat)), layout_(cat_->order()) {
  const auto simples = cat_->simples();
  for (const auto x : simples) {
    for (const auto y : simples) {
      for (const auto z : simples) {
        for (const bool inverse : {false, true}) {
          templates_.push_back(make_hexagon_template(*cat_, layout_, x, y, z, inverse));
        }
      }
    }
  }
}

namespace {

CycloNum term_value(const Term& t, std::span<const CycloNum> values) {
  if (t.var < 0) return t.coeff;
  const CycloNum& v = values[static_cast<std::size_t>(t.var)];
  if (t.coeff.is_one()) return t.inverse ? v.inverse() : v;
  return t.coeff * (t.inverse ? v.inverse() : v);
}

}  // namespace

SparseMatrix<CycloNum> evaluate_side(const std::vector<BasicBlockMatrix<Term>>& steps,
                                     std::span<const CycloNum> values) {
  const auto zero = [](const CycloNum& x) { return x.is_zero(); };
  const auto eval = [&](const Term& t) { return term_value(t, values); };
  SparseMatrix<CycloNum> acc = steps.front().entries().map(eval);
  for (std::size_t i = 1; i < steps.size(); ++i) acc = steps[i].entries().map(eval).multiply(acc, zero);
  return acc;
}

BlockMatrix evaluate_side_block(const std::vector<BasicBlockMatrix<Term>>& steps, std::span<const CycloNum> values) {
  return BlockMatrix(steps.front().source(), steps.back().target(), evaluate_side(steps, values));
}

bool same_entries(const SparseMatrix<CycloNum>& a, const SparseMatrix<CycloNum>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r) {
    auto ia = a.row(r).begin();
    auto ib = b.row(r).begin();
    const auto ea = a.row(r).end();
    const auto eb = b.row(r).end();
    while (true) {
      while (ia != ea && ia->second.is_zero()) ++ia;
      while (ib != eb && ib->second.is_zero()) ++ib;
      if (ia == ea || ib == eb) {
        if (ia != ea || ib != eb) return false;
        break;
      }
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

}  // namespace ngc
