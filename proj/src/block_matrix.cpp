#include "ngc/block_matrix.hpp"

#include <sstream>

namespace ngc {

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  for (int r = 0; r < a.rows(); ++r) {
    std::vector<std::pair<int, const CycloNum*>> ra;
    std::vector<std::pair<int, const CycloNum*>> rb;
    for (const auto& [c, v] : a.entries().row(r)) {
      if (!v.is_zero()) ra.emplace_back(c, &v);
    }
    for (const auto& [c, v] : b.entries().row(r)) {
      if (!v.is_zero()) rb.emplace_back(c, &v);
    }
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (ra[i].first != rb[i].first || !(*ra[i].second == *rb[i].second)) return false;
    }
  }
  return true;
}

BlockMatrix identity_matrix(const FieldPtr& field, const Basis& basis) {
  BlockMatrix out(basis, basis);
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) out.entries().add(i, i, CycloNum::integer(field, 1));
  return out;
}

namespace {

void render(std::ostream& os, const FusionTree& t) {
  if (t.is_leaf()) {
    os << (t.label.is_m() ? std::string("m") : "g" + std::to_string(t.label.element()));
    return;
  }
  os << "(";
  render(os, t.children[0]);
  os << " ";
  render(os, t.children[1]);
  os << ")->" << (t.label.is_m() ? std::string("m") : "g" + std::to_string(t.label.element()));
}

}  // namespace

std::string to_string(const BasisEntry& e) {
  std::ostringstream os;
  render(os, e.tree);
  os << "#" << e.copy;
  return os.str();
}

std::string to_string(const BlockMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << " [";
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "") << "[";
    for (int c = 0; c < m.cols(); ++c) {
      const CycloNum* v = m.entries().find(r, c);
      os << (c ? ", " : "") << (v ? v->to_string() : "0");
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace ngc
