#include "ngc/monoidal.hpp"

#include <map>
#include <sstream>

#include "ngc/errors.hpp"
#include "ngc/parallel.hpp"

namespace ngc {

MonoidalData::MonoidalData(GroupSpec group, Bicharacter chi, int tau_sign)
    : group_(std::move(group)), chi_(std::move(chi)), tau_sign_(tau_sign), tau_(chi_.field()) {
  if (tau_sign != 1 && tau_sign != -1) throw InvalidForm("tau sign must be +1 or -1");
  if (!(chi_.group() == group_)) throw InvalidForm("bicharacter is defined on a different group");
  if (chi_.conductor() != default_conductor(group_)) {
    throw InvalidForm("bicharacter conductor " + std::to_string(chi_.conductor()) + " differs from 8|G| = " +
                      std::to_string(default_conductor(group_)));
  }
  const auto checks = form_checks(chi_);
  if (!checks.symmetric) throw InvalidForm("bicharacter is not symmetric");
  if (!checks.nondegenerate) throw InvalidForm("bicharacter is degenerate");

  const CycloNum root = sqrt_group_order(field(), order());
  tau_ = root.inverse().scaled(mpq_class(tau_sign));
  if (!(tau_ * tau_ == CycloNum::rational(field(), mpq_class(1, order())))) {
    throw Error("tau^2 != 1/|G|");
  }

  const auto elems = group_.elements();
  const auto n = static_cast<std::size_t>(order());
  mul_.resize(n * n);
  chi_exp_.resize(n * n);
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv_[a] = group_.index_of(group_.inverse(elems[a]));
    for (std::size_t b = 0; b < n; ++b) {
      mul_[a * n + b] = group_.index_of(group_.multiply(elems[a], elems[b]));
      chi_exp_[a * n + b] = chi_.exponent(elems[a], elems[b]);
    }
  }
}

MonoidalData MonoidalData::with_unchecked_tau(CycloNum tau) const {
  if (tau.conductor() != conductor()) throw ConductorMismatch("tau lives in a different field");
  MonoidalData out(*this);
  out.tau_ = std::move(tau);
  return out;
}

std::vector<SimpleLabel> MonoidalData::simples() const {
  std::vector<SimpleLabel> out;
  for (int g = 0; g < order(); ++g) out.push_back(SimpleLabel::group(g));
  out.push_back(SimpleLabel::m());
  return out;
}

std::vector<SimpleLabel> MonoidalData::fuse(SimpleLabel x, SimpleLabel y) const {
  if (x.is_m() && y.is_m()) {
    std::vector<SimpleLabel> out;
    for (int g = 0; g < order(); ++g) out.push_back(SimpleLabel::group(g));
    return out;
  }
  if (x.is_m() || y.is_m()) return {SimpleLabel::m()};
  return {SimpleLabel::group(mul(x.element(), y.element()))};
}

CycloNum MonoidalData::associator_entry(SimpleLabel a, SimpleLabel b, SimpleLabel c, SimpleLabel e, SimpleLabel f,
                                        SimpleLabel d) const {
  const bool am = a.is_m();
  const bool bm = b.is_m();
  const bool cm = c.is_m();
  if (!am && bm && !cm) return chi(a.element(), c.element());  // α_{a,m,b} = χ(a,b)
  if (am && !bm && cm) return chi(b.element(), d.element());   // α_{m,a,m} = ⊕_d χ(a,d)
  if (am && bm && cm) {
    // α_{m,m,m} = (τ χ(e,f)^{-1})_{e,f}
    CycloNum out = tau_;
    out *= chi_inv(e.element(), f.element());
    return out;
  }
  return one();
}

MonoidalPtr build_monoidal(const GroupSpec& group, const Bicharacter& chi, int tau_sign) {
  return std::make_shared<const MonoidalData>(group, chi, tau_sign);
}

std::vector<int> fusion_product(const MonoidalData& cat, SimpleLabel x, SimpleLabel y) {
  std::vector<int> mult(static_cast<std::size_t>(cat.order()) + 1, 0);
  for (const auto s : cat.fuse(x, y)) {
    ++mult[s.is_m() ? static_cast<std::size_t>(cat.order()) : static_cast<std::size_t>(s.element())];
  }
  return mult;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FusionTree> labellings(const MonoidalData& cat, const Shape& shape) {
  if (shape.is_leaf()) return {FusionTree{*shape.leaf, {}}};
  const auto left = labellings(cat, shape.children[0]);
  const auto right = labellings(cat, shape.children[1]);
  std::vector<FusionTree> out;
  for (const auto& l : left) {
    for (const auto& r : right) {
      for (const auto d : cat.fuse(l.label, r.label)) out.push_back(FusionTree{d, {l, r}});
    }
  }
  return out;
}

FusionTree& node_at(FusionTree& tree, const NodePath& path) {
  FusionTree* cur = &tree;
  for (int step : path) {
    if (cur->is_leaf()) throw Error("node path descends past a leaf");
    cur = &cur->children[static_cast<std::size_t>(step)];
  }
  return *cur;
}

Shape& shape_at(Shape& shape, const NodePath& path) {
  Shape* cur = &shape;
  for (int step : path) {
    if (cur->is_leaf()) throw Error("node path descends past a leaf");
    cur = &cur->children[static_cast<std::size_t>(step)];
  }
  return *cur;
}

std::map<std::vector<int>, int> index_basis(const Basis& basis) {
  std::map<std::vector<int>, int> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i].tree.key(), static_cast<int>(i));
  return out;
}

}  // namespace

Basis tree_basis(const MonoidalData& cat, const Shape& shape) {
  auto trees = labellings(cat, shape);
  std::vector<std::pair<std::vector<int>, FusionTree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) {
    auto k = t.key();
    keyed.emplace_back(std::move(k), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Basis out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) {
    const int copy = (!out.empty() && out.back().summand == t.label) ? out.back().copy + 1 : 0;
    const SimpleLabel summand = t.label;
    out.push_back(BasisEntry{summand, copy, std::move(t)});
  }
  return out;
}

const Shape& subshape(const Shape& shape, const NodePath& path) {
  const Shape* cur = &shape;
  for (int step : path) {
    if (cur->is_leaf()) throw Error("node path descends past a leaf");
    cur = &cur->children[static_cast<std::size_t>(step)];
  }
  return *cur;
}

Shape associated_shape(const Shape& shape, const NodePath& path) {
  Shape out = shape;
  Shape& node = shape_at(out, path);
  if (node.is_leaf() || node.children[0].is_leaf()) throw Error("associator needs a node of the form ((A B) C)");
  Shape ab = std::move(node.children[0]);
  Shape c = std::move(node.children[1]);
  node = Shape::join(std::move(ab.children[0]), Shape::join(std::move(ab.children[1]), std::move(c)));
  return out;
}

Shape swapped_shape(const Shape& shape, const NodePath& path) {
  Shape out = shape;
  Shape& node = shape_at(out, path);
  if (node.is_leaf()) throw Error("braiding needs a node of the form (A B)");
  std::swap(node.children[0], node.children[1]);
  return out;
}

BlockMatrix associate_move(const MonoidalData& cat, const Shape& shape, const NodePath& path) {
  Basis source = tree_basis(cat, shape);
  Basis target = tree_basis(cat, associated_shape(shape, path));
  const auto target_index = index_basis(target);
  BlockMatrix out(source, target);

  for (std::size_t col = 0; col < source.size(); ++col) {
    FusionTree tree = source[col].tree;
    FusionTree& node = node_at(tree, path);
    const FusionTree ab = node.children[0];
    const FusionTree c = node.children[1];
    const FusionTree& a = ab.children[0];
    const FusionTree& b = ab.children[1];
    const SimpleLabel d = node.label;
    for (const auto f : cat.fuse(b.label, c.label)) {
      const auto outs = cat.fuse(a.label, f);
      if (std::find(outs.begin(), outs.end(), d) == outs.end()) continue;
      node = FusionTree{d, {a, FusionTree{f, {b, c}}}};
      const int row = target_index.at(tree.key());
      out.entries().add(row, static_cast<int>(col), cat.associator_entry(a.label, b.label, c.label, ab.label, f, d));
    }
  }
  return out;
}

BlockMatrix associator_blocks(const MonoidalData& cat, SimpleLabel x, SimpleLabel y, SimpleLabel z) {
  const Shape s = Shape::join(Shape::join(Shape::single(x), Shape::single(y)), Shape::single(z));
  return associate_move(cat, s, {});
}

BlockMatrix associator_mmm_inverse(const MonoidalData& cat) {
  const auto m = SimpleLabel::m();
  const Shape left = Shape::join(Shape::join(Shape::single(m), Shape::single(m)), Shape::single(m));
  const Shape right = Shape::join(Shape::single(m), Shape::join(Shape::single(m), Shape::single(m)));
  Basis source = tree_basis(cat, right);
  Basis target = tree_basis(cat, left);
  BlockMatrix out(source, target);
  for (std::size_t r = 0; r < target.size(); ++r) {
    const int e = target[r].tree.children[0].label.element();
    for (std::size_t c = 0; c < source.size(); ++c) {
      const int f = source[c].tree.children[1].label.element();
      CycloNum v = cat.tau();
      v *= cat.chi(e, f);
      out.entries().add(static_cast<int>(r), static_cast<int>(c), std::move(v));
    }
  }
  return out;
}

PentagonReport verify_pentagon(const MonoidalData& cat, int threads) {
  const auto simples = cat.simples();
  const std::size_t s = simples.size();
  const std::size_t total = s * s * s * s;

  std::vector<std::optional<PentagonFailure>> failures(total);
  parallel_for(total, threads, [&](std::size_t i) {
    const std::array<SimpleLabel, 4> q{simples[i / (s * s * s)], simples[(i / (s * s)) % s], simples[(i / s) % s],
                                       simples[i % s]};
    const Shape start = Shape::join(
        Shape::join(Shape::join(Shape::single(q[0]), Shape::single(q[1])), Shape::single(q[2])), Shape::single(q[3]));

    // ((wx)y)z → (wx)(yz) → w(x(yz))
    const BlockMatrix a1 = associate_move(cat, start, {});
    const Shape mid = associated_shape(start, {});
    const BlockMatrix a2 = associate_move(cat, mid, {});
    const BlockMatrix two = compose(a2, a1);

    // ((wx)y)z → (w(xy))z → w((xy)z) → w(x(yz))
    const BlockMatrix b1 = associate_move(cat, start, {0});
    const Shape s1 = associated_shape(start, {0});
    const BlockMatrix b2 = associate_move(cat, s1, {});
    const Shape s2 = associated_shape(s1, {});
    const BlockMatrix b3 = associate_move(cat, s2, {1});
    const BlockMatrix three = compose(b3, compose(b2, b1));

    if (!(two == three)) failures[i] = PentagonFailure{q, two, three};
  });

  PentagonReport report;
  report.quadruples_checked = static_cast<int>(total);
  for (auto& f : failures) {
    if (f) {
      report.first_failure = std::move(f);
      break;
    }
  }

  const auto m = SimpleLabel::m();
  const BlockMatrix alpha = associator_blocks(cat, m, m, m);
  const BlockMatrix product = compose(alpha, associator_mmm_inverse(cat));
  report.inverse_identity = product == identity_matrix(cat.field(), alpha.target());

  report.passed = !report.first_failure && report.inverse_identity;
  return report;
}

std::string label_name(const MonoidalData& cat, SimpleLabel s) {
  if (s.is_m()) return "m";
  return cat.group().key(cat.group().element(s.element()));
}

}  // namespace ngc
