#include "ngc/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ngc/errors.hpp"
#include "ngc/parallel.hpp"

namespace ngc {

namespace {

using Poly = std::vector<Monomial>;

void normalize(Poly& p) {
  std::map<std::vector<std::pair<int, int>>, std::size_t> seen;
  Poly out;
  for (auto& m : p) {
    if (m.coeff.is_zero()) continue;
    auto [it, fresh] = seen.emplace(m.powers, out.size());
    if (fresh) {
      out.push_back(std::move(m));
    } else {
      out[it->second].coeff += m.coeff;
    }
  }
  std::erase_if(out, [](const Monomial& m) { return m.coeff.is_zero(); });
  p = std::move(out);
}

Monomial times(const Monomial& m, const Term& t) {
  Monomial out{m.coeff * t.coeff, m.powers};
  if (t.var < 0) return out;
  const int power = t.inverse ? -1 : 1;
  auto it = std::lower_bound(out.powers.begin(), out.powers.end(), t.var,
                             [](const auto& e, int v) { return e.first < v; });
  if (it != out.powers.end() && it->first == t.var) {
    it->second += power;
    if (it->second == 0) out.powers.erase(it);
  } else {
    out.powers.insert(it, {t.var, power});
  }
  return out;
}

// Symbolic composite of the steps: entry (r, c) as a polynomial in the σ unknowns.
std::vector<std::map<int, Poly>> expand(const std::vector<BasicBlockMatrix<Term>>& steps, const FieldPtr& field) {
  const auto& first = steps.front().entries();
  std::vector<std::map<int, Poly>> acc(static_cast<std::size_t>(first.rows()));
  for (int r = 0; r < first.rows(); ++r) {
    for (const auto& [c, t] : first.row(r)) {
      acc[static_cast<std::size_t>(r)][c].push_back(times(Monomial{CycloNum::integer(field, 1), {}}, t));
    }
  }
  for (std::size_t s = 1; s < steps.size(); ++s) {
    const auto& step = steps[s].entries();
    std::vector<std::map<int, Poly>> next(static_cast<std::size_t>(step.rows()));
    for (int r = 0; r < step.rows(); ++r) {
      for (const auto& [k, t] : step.row(r)) {
        for (const auto& [c, poly] : acc[static_cast<std::size_t>(k)]) {
          auto& dst = next[static_cast<std::size_t>(r)][c];
          for (const auto& m : poly) dst.push_back(times(m, t));
        }
      }
    }
    for (auto& row : next) {
      for (auto& [c, poly] : row) normalize(poly);
    }
    acc = std::move(next);
  }
  return acc;
}

bool holds(const HexagonConstraint& h, const std::vector<int>& exps, const FieldPtr& field) {
  CycloNum sum(field);
  for (const auto& m : h.terms) {
    long e = 0;
    for (const auto& [v, p] : m.powers) e += static_cast<long>(p) * exps[static_cast<std::size_t>(v)];
    sum += m.coeff * CycloNum::root(field, e);
  }
  return sum.is_zero();
}

}  // namespace

std::vector<int> default_search_order(const SigmaLayout& layout) {
  std::vector<int> order;
  const int n = layout.order();
  for (int a = 0; a < n; ++a) {
    order.push_back(layout.sigma1(a));
    for (int b = 0; b < n; ++b) order.push_back(layout.sigma0(a, b));
  }
  for (int a = 0; a < n; ++a) order.push_back(layout.sigma2(a));
  for (int a = 0; a < n; ++a) order.push_back(layout.sigma3(a));
  return order;
}

SearchSpace build_search_space(const MonoidalPtr& cat) {
  if (cat->order() > kOracleMaxOrder) {
    throw SearchSpaceOverflow("brute-force search supports |G| <= " + std::to_string(kOracleMaxOrder) + ", got " +
                              std::to_string(cat->order()));
  }
  const HexagonSystem system(cat);
  SearchSpace space;
  space.conductor = cat->conductor();
  space.order = default_search_order(system.layout());
  std::vector<int> position(space.order.size());
  for (std::size_t i = 0; i < space.order.size(); ++i) position[static_cast<std::size_t>(space.order[i])] = static_cast<int>(i);

  for (const auto& t : system.templates()) {
    auto lhs = expand(t.lhs, cat->field());
    const auto rhs = expand(t.rhs, cat->field());
    for (std::size_t r = 0; r < lhs.size(); ++r) {
      for (const auto& [c, poly] : rhs[r]) {
        auto& dst = lhs[r][c];
        for (const auto& m : poly) dst.push_back(Monomial{-m.coeff, m.powers});
      }
      for (auto& [c, poly] : lhs[r]) {
        normalize(poly);
        if (poly.empty()) continue;
        HexagonConstraint h{t.triple, t.inverse, static_cast<int>(r), c, std::move(poly), {}, -1};
        for (const auto& m : h.terms) {
          for (const auto& [v, p] : m.powers) h.vars.push_back(v);
        }
        std::sort(h.vars.begin(), h.vars.end());
        h.vars.erase(std::unique(h.vars.begin(), h.vars.end()), h.vars.end());
        for (int v : h.vars) h.trigger = std::max(h.trigger, position[static_cast<std::size_t>(v)]);
        space.constraints.push_back(std::move(h));
      }
    }
  }
  return space;
}

OracleResult brute_force_braidings(const MonoidalPtr& cat, int threads) {
  const SearchSpace space = build_search_space(cat);
  const FieldPtr field = cat->field();
  const int m = space.conductor;
  const std::size_t depth = space.order.size();

  OracleResult result;
  result.stats.constraints = static_cast<int>(space.constraints.size());

  std::vector<int> zero_exps(depth, 0);
  std::vector<std::vector<const HexagonConstraint*>> at(depth);
  for (const auto& h : space.constraints) {
    if (h.trigger < 0) {
      // constant entry: no unknown can repair it
      if (!holds(h, zero_exps, field)) return result;
      continue;
    }
    at[static_cast<std::size_t>(h.trigger)].push_back(&h);
  }

  struct Partition {
    std::vector<std::vector<int>> found;
    long nodes = 0;
  };
  std::vector<Partition> parts(static_cast<std::size_t>(m));

  parallel_for(static_cast<std::size_t>(m), threads, [&](std::size_t first) {
    Partition& part = parts[first];
    std::vector<int> exps(depth, 0);
    const auto search = [&](auto&& self, std::size_t level) -> void {
      if (level == depth) {
        part.found.push_back(exps);
        return;
      }
      const int var = space.order[level];
      const int lo = level == 0 ? static_cast<int>(first) : 0;
      const int hi = level == 0 ? static_cast<int>(first) + 1 : m;
      for (int e = lo; e < hi; ++e) {
        ++part.nodes;
        exps[static_cast<std::size_t>(var)] = e;
        bool ok = true;
        for (const auto* h : at[level]) {
          if (!holds(*h, exps, field)) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, level + 1);
      }
      exps[static_cast<std::size_t>(var)] = 0;
    };
    search(search, 0);
  });

  const HexagonSystem system(cat);
  for (auto& part : parts) {
    result.stats.nodes += part.nodes;
    for (const auto& exps : part.found) {
      ++result.stats.search_survivors;
      std::vector<CycloNum> values;
      values.reserve(exps.size());
      for (int e : exps) values.push_back(CycloNum::root(field, e));
      BraidingData b = BraidingData::from_variables(cat, values);
      if (verify_hexagons_direct(b, &system).passed) result.solutions.push_back(std::move(b));
    }
  }
  return result;
}

std::string OracleComparison::summary() const {
  std::ostringstream os;
  os << "oracle: " << (equal ? "sets equal" : "sets differ") << " (" << oracle_count << " = " << constructed_count
     << ")";
  if (!equal) {
    os << "; " << only_in_oracle.size() << " only in oracle, " << only_in_constructed.size()
       << " only in construction";
  }
  return os.str();
}

OracleComparison oracle_compare(const MonoidalPtr& cat, int threads) {
  OracleComparison out;
  auto found = brute_force_braidings(cat, threads);
  out.stats = found.stats;

  std::vector<BraidingData> constructed;
  if (braidability_obstruction(cat->group()).braidable) {
    for (auto& e : enumerate_braidings(cat, threads)) constructed.push_back(std::move(e.data));
  }
  out.oracle_count = static_cast<int>(found.solutions.size());
  out.constructed_count = static_cast<int>(constructed.size());

  const auto contains = [](const std::vector<BraidingData>& set, const BraidingData& b) {
    return std::any_of(set.begin(), set.end(), [&](const BraidingData& x) { return x == b; });
  };
  for (const auto& b : found.solutions) {
    if (!contains(constructed, b)) out.only_in_oracle.push_back(b);
  }
  for (const auto& b : constructed) {
    if (!contains(found.solutions, b)) out.only_in_constructed.push_back(b);
  }
  out.equal = out.only_in_oracle.empty() && out.only_in_constructed.empty() && out.oracle_count == out.constructed_count;
  return out;
}

}  // namespace ngc
