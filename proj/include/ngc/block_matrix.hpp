#pragma once

// Morphisms between iterated tensor products of simples.
//
// An iterated product such as (m m) m decomposes into simple summands, one per
// labelling of its fusion tree. A BlockMatrix is a sparse matrix whose rows are
// indexed by the target basis and whose columns are indexed by the source basis.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngc/cyclo.hpp"
#include "ngc/errors.hpp"

namespace ngc {

/// Either a group element (by lexicographic index) or the noninvertible m.
class SimpleLabel {
 public:
  SimpleLabel() = default;
  static SimpleLabel group(int element_index) { return SimpleLabel(element_index); }
  static SimpleLabel m() { return SimpleLabel(-1); }

  bool is_m() const noexcept { return element_ < 0; }
  /// Element index; only meaningful when !is_m().
  int element() const noexcept { return element_; }

  friend bool operator==(SimpleLabel, SimpleLabel) = default;
  /// Group elements in lexicographic order, then m.
  friend std::strong_ordering operator<=>(SimpleLabel a, SimpleLabel b) {
    if (a.is_m() || b.is_m()) return (a.is_m() ? 1 : 0) <=> (b.is_m() ? 1 : 0);
    return a.element_ <=> b.element_;
  }

 private:
  explicit SimpleLabel(int e) : element_(e) {}
  int element_ = 0;
};

/// Parenthesised product of simples with no intermediate labels.
struct Shape {
  std::optional<SimpleLabel> leaf;
  std::vector<Shape> children;

  static Shape single(SimpleLabel s) { return Shape{s, {}}; }
  static Shape join(Shape left, Shape right) { return Shape{std::nullopt, {std::move(left), std::move(right)}}; }
  bool is_leaf() const noexcept { return leaf.has_value(); }
};

/// A Shape with every node labelled by a simple; the root label is the summand.
struct FusionTree {
  SimpleLabel label;
  std::vector<FusionTree> children;

  bool is_leaf() const noexcept { return children.empty(); }

  /// Pre-order (arity, label) encoding; orders trees by root label first.
  std::vector<int> key() const {
    std::vector<int> out;
    out.push_back(label.is_m() ? 1 << 30 : label.element());
    append(out);
    return out;
  }

  friend bool operator==(const FusionTree& a, const FusionTree& b) { return a.key() == b.key(); }

 private:
  void append(std::vector<int>& out) const {
    out.push_back(static_cast<int>(children.size()));
    out.push_back(label.is_m() ? 1 << 30 : label.element());
    for (const auto& c : children) c.append(out);
  }
};

/// Basis vector of an iterated product: its simple summand, the copy index of
/// that summand, and the fusion path that produced it.
struct BasisEntry {
  SimpleLabel summand;
  int copy = 0;
  FusionTree tree;

  friend bool operator==(const BasisEntry& a, const BasisEntry& b) {
    return a.summand == b.summand && a.copy == b.copy && a.tree == b.tree;
  }
};

using Basis = std::vector<BasisEntry>;

/// Row-major sparse matrix; each row holds (column, value) pairs sorted by column.
template <class T>
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<int, T>>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {}

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  const Row& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }

  /// Adds `value` into entry (r, c).
  void add(int r, int c, T value) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      if constexpr (requires { it->second + value; }) {
        it->second = it->second + value;
      } else {
        throw Error("duplicate sparse matrix entry");
      }
    } else {
      row.insert(it, {c, std::move(value)});
    }
  }

  const T* find(int r, int c) const {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  template <class F>
  auto map(F&& f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
    SparseMatrix<decltype(f(std::declval<const T&>()))> out(rows(), cols_);
    for (int r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : row(r)) out.add(r, c, f(v));
    }
    return out;
  }

  /// this · rhs
  template <class Zero>
  SparseMatrix multiply(const SparseMatrix& rhs, Zero&& is_zero) const {
    if (cols_ != rhs.rows()) throw Error("sparse matrix dimension mismatch");
    SparseMatrix out(rows(), rhs.cols());
    for (int r = 0; r < rows(); ++r) {
      std::vector<std::pair<int, T>> acc;
      for (const auto& [k, a] : row(r)) {
        for (const auto& [c, b] : rhs.row(k)) {
          T prod = a * b;
          auto it = std::find_if(acc.begin(), acc.end(), [c = c](const auto& e) { return e.first == c; });
          if (it == acc.end()) {
            acc.emplace_back(c, std::move(prod));
          } else {
            it->second = it->second + prod;
          }
        }
      }
      std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      auto& out_row = out.rows_[static_cast<std::size_t>(r)];
      for (auto& e : acc) {
        if (!is_zero(e.second)) out_row.push_back(std::move(e));
      }
    }
    return out;
  }

 private:
  template <class>
  friend class SparseMatrix;

  int cols_ = 0;
  std::vector<Row> rows_;
};

/// Sparse matrix between two ordered bases of decomposed iterated products.
template <class T>
class BasicBlockMatrix {
 public:
  BasicBlockMatrix() = default;
  BasicBlockMatrix(Basis source, Basis target)
      : source_(std::move(source)),
        target_(std::move(target)),
        entries_(static_cast<int>(target_.size()), static_cast<int>(source_.size())) {}
  BasicBlockMatrix(Basis source, Basis target, SparseMatrix<T> entries)
      : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.rows() != static_cast<int>(target_.size()) || entries_.cols() != static_cast<int>(source_.size())) {
      throw Error("block matrix dimensions do not match its bases");
    }
  }

  const Basis& source() const noexcept { return source_; }
  const Basis& target() const noexcept { return target_; }
  const SparseMatrix<T>& entries() const noexcept { return entries_; }
  SparseMatrix<T>& entries() noexcept { return entries_; }
  int rows() const noexcept { return entries_.rows(); }
  int cols() const noexcept { return entries_.cols(); }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    return BasicBlockMatrix<U>(source_, target_, entries_.map(std::forward<F>(f)));
  }

 private:
  Basis source_;
  Basis target_;
  SparseMatrix<T> entries_;
};

using BlockMatrix = BasicBlockMatrix<CycloNum>;

/// `after ∘ before`; the inner bases must match exactly, in order.
template <class T, class Zero>
BasicBlockMatrix<T> compose(const BasicBlockMatrix<T>& after, const BasicBlockMatrix<T>& before, Zero&& is_zero) {
  if (!(after.source() == before.target())) throw Error("cannot compose block matrices: inner bases differ");
  return BasicBlockMatrix<T>(before.source(), after.target(),
                             after.entries().multiply(before.entries(), std::forward<Zero>(is_zero)));
}

inline BlockMatrix compose(const BlockMatrix& after, const BlockMatrix& before) {
  return compose(after, before, [](const CycloNum& x) { return x.is_zero(); });
}

/// Same bases and identical nonzero entries.
bool operator==(const BlockMatrix& a, const BlockMatrix& b);

BlockMatrix identity_matrix(const FieldPtr& field, const Basis& basis);

/// Dense rendering for diagnostics.
std::string to_string(const BlockMatrix& m);
std::string to_string(const BasisEntry& e);

}  // namespace ngc
