#include "ngc/braiding.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ngc/errors.hpp"
#include "ngc/parallel.hpp"

namespace ngc {

std::string BraidingParams::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < delta.size(); ++i) os << (i ? "," : "") << (delta[i] > 0 ? "+" : "-");
  os << (delta.empty() ? "" : ";") << (epsilon > 0 ? "+" : "-") << ")";
  return os.str();
}

std::vector<BraidingParams> all_params(int rank) {
  std::vector<BraidingParams> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    BraidingParams p;
    for (int i = 0; i < rank; ++i) p.delta.push_back(((mask >> (rank - 1 - i)) & 1u) ? -1 : 1);
    for (const int eps : {1, -1}) {
      p.epsilon = eps;
      out.push_back(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BraidingData::BraidingData(MonoidalPtr parent, std::vector<CycloNum> sigma0, std::vector<CycloNum> sigma1,
                           std::vector<CycloNum> sigma2, std::vector<CycloNum> sigma3)
    : parent_(std::move(parent)),
      sigma0_(std::move(sigma0)),
      sigma1_(std::move(sigma1)),
      sigma2_(std::move(sigma2)),
      sigma3_(std::move(sigma3)) {
  const auto n = static_cast<std::size_t>(parent_->order());
  if (sigma0_.size() != n * n || sigma1_.size() != n || sigma2_.size() != n || sigma3_.size() != n) {
    throw Error("sigma tables do not match the group order");
  }
  for (const auto* table : {&sigma0_, &sigma1_, &sigma2_, &sigma3_}) {
    for (const auto& v : *table) {
      if (v.conductor() != parent_->conductor()) throw ConductorMismatch("sigma value in the wrong field");
    }
  }
}

BraidingData BraidingData::from_variables(MonoidalPtr parent, const std::vector<CycloNum>& values) {
  const SigmaLayout layout(parent->order());
  if (static_cast<int>(values.size()) != layout.count()) throw Error("wrong number of sigma variables");
  const auto n = parent->order();
  const auto at = [&](int v) { return values[static_cast<std::size_t>(v)]; };
  std::vector<CycloNum> s0, s1, s2, s3;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) s0.push_back(at(layout.sigma0(a, b)));
  }
  for (int a = 0; a < n; ++a) {
    s1.push_back(at(layout.sigma1(a)));
    s2.push_back(at(layout.sigma2(a)));
    s3.push_back(at(layout.sigma3(a)));
  }
  return BraidingData(std::move(parent), std::move(s0), std::move(s1), std::move(s2), std::move(s3));
}

std::vector<CycloNum> BraidingData::variables() const {
  std::vector<CycloNum> out;
  out.reserve(sigma0_.size() + 3 * sigma1_.size());
  out.insert(out.end(), sigma0_.begin(), sigma0_.end());
  out.insert(out.end(), sigma1_.begin(), sigma1_.end());
  out.insert(out.end(), sigma2_.begin(), sigma2_.end());
  out.insert(out.end(), sigma3_.begin(), sigma3_.end());
  return out;
}

BraidingData BraidingData::with_value(int var, CycloNum value) const {
  auto vars = variables();
  vars.at(static_cast<std::size_t>(var)) = std::move(value);
  return from_variables(parent_, vars);
}

bool BraidingData::all_roots_of_unity() const {
  for (const auto& v : variables()) {
    if (!as_root_of_unity(v)) return false;
  }
  return true;
}

bool operator==(const BraidingData& a, const BraidingData& b) {
  return a.parent_->conductor() == b.parent_->conductor() && a.sigma0_ == b.sigma0_ && a.sigma1_ == b.sigma1_ &&
         a.sigma2_ == b.sigma2_ && a.sigma3_ == b.sigma3_;
}

// ---------------------------------------------------------------------------

namespace {

std::string element_key(const MonoidalData& cat, int e) { return cat.group().key(cat.group().element(e)); }

std::vector<int> generator_indices(const MonoidalData& cat) {
  std::vector<int> out;
  for (int i = 0; i < cat.group().rank(); ++i) out.push_back(cat.group().index_of(cat.group().generator(i)));
  return out;
}

void require_braidable(const MonoidalData& cat) {
  const auto obstruction = braidability_obstruction(cat.group());
  if (obstruction.braidable) return;
  std::string msg = cat.group().to_string() + " admits no braiding:";
  for (const auto& line : obstruction.witness->chain) msg += "\n  " + line;
  throw NotBraidable(msg);
}

CycloNum sigma1_sum(const MonoidalData& cat, const std::vector<CycloNum>& sigma1) {
  CycloNum sum(cat.field());
  for (const auto& v : sigma1) sum += v;
  return sum;
}

int check_sign(const CycloNum& quotient) {
  if (quotient.is_one()) return 1;
  if ((-quotient).is_one()) return -1;
  return 0;
}

}  // namespace

BraidingData construct_braiding(const MonoidalPtr& cat_ptr, const BraidingParams& params) {
  const MonoidalData& cat = *cat_ptr;
  require_braidable(cat);
  const int n = cat.order();
  const int rank = cat.group().rank();
  if (static_cast<int>(params.delta.size()) != rank) {
    throw InvalidForm("expected " + std::to_string(rank) + " delta entries, got " +
                      std::to_string(params.delta.size()));
  }
  for (int d : params.delta) {
    if (d != 1 && d != -1) throw InvalidForm("delta entries must be +1 or -1");
  }
  if (params.epsilon != 1 && params.epsilon != -1) throw InvalidForm("epsilon must be +1 or -1");

  std::vector<CycloNum> s0;
  s0.reserve(static_cast<std::size_t>(n * n));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) s0.push_back(cat.chi(g, h));
  }

  const auto gens = generator_indices(cat);
  std::vector<CycloNum> gen_values;
  for (int i = 0; i < rank; ++i) {
    const int g = gens[static_cast<std::size_t>(i)];
    gen_values.push_back(principal_sqrt_even_power(cat.chi(g, g)).scaled(mpq_class(params.delta[static_cast<std::size_t>(i)])));
  }

  // σ₁(h₁⋯h_k) = Π_i σ₁(h_i) Π_{j>i} χ(h_i,h_j), generators in increasing index order
  std::vector<CycloNum> s1;
  for (int g = 0; g < n; ++g) {
    const auto parts = cat.group().decompose(cat.group().element(g));
    CycloNum v = cat.one();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      v *= gen_values[static_cast<std::size_t>(parts[i])];
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        v *= cat.chi(gens[static_cast<std::size_t>(parts[i])], gens[static_cast<std::size_t>(parts[j])]);
      }
    }
    s1.push_back(std::move(v));
  }

  CycloNum radicand = cat.tau();
  radicand *= sigma1_sum(cat, s1);
  const CycloNum s3_one = principal_sqrt_even_power(radicand).scaled(mpq_class(params.epsilon));

  std::vector<CycloNum> s3;
  for (int g = 0; g < n; ++g) {
    CycloNum v = s3_one;
    v *= s1[static_cast<std::size_t>(g)];
    v *= cat.chi(g, g);
    s3.push_back(std::move(v));
  }

  BraidingData out(cat_ptr, std::move(s0), s1, s1, std::move(s3));
  if (!out.all_roots_of_unity()) throw Error("constructed sigma value is not a root of unity");
  return out;
}

BraidingParams extract_invariants(const BraidingData& b) {
  const MonoidalData& cat = b.parent();
  const int n = cat.order();
  BraidingParams out;
  const auto gens = generator_indices(cat);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int g = gens[i];
    CycloNum root(cat.field());
    try {
      root = principal_sqrt_even_power(cat.chi(g, g));
    } catch (const NotAnEvenPowerRoot& e) {
      throw NonUnitInvariant("delta_" + std::to_string(i + 1) + ": " + e.what());
    }
    const int sign = check_sign(b.sigma1(g) * root.inverse());
    if (sign == 0) {
      throw NonUnitInvariant("delta_" + std::to_string(i + 1) + " = sigma1(" + element_key(cat, g) +
                             ") / sqrt(chi) is not +-1");
    }
    out.delta.push_back(sign);
  }

  std::vector<CycloNum> s1;
  for (int g = 0; g < n; ++g) s1.push_back(b.sigma1(g));
  CycloNum radicand = cat.tau();
  radicand *= sigma1_sum(cat, s1);
  CycloNum root(cat.field());
  try {
    root = principal_sqrt_even_power(radicand);
  } catch (const NotAnEvenPowerRoot& e) {
    throw NonUnitInvariant(std::string("epsilon: ") + e.what());
  }
  const int sign = check_sign(b.sigma3(0) * root.inverse());
  if (sign == 0) throw NonUnitInvariant("epsilon = sigma3(1) / sqrt(tau * sum sigma1) is not +-1");
  out.epsilon = sign;
  return out;
}

// ---------------------------------------------------------------------------

bool ReducedReport::equation_holds(int equation) const {
  for (const auto& f : failures) {
    if (f.equation == equation) return false;
  }
  return true;
}

std::string reduced_equation(int k) {
  static const std::array<const char*, 10> text = {
      "sigma0(a,b) = chi(a,b)",
      "sigma2(ab) = sigma2(a) sigma2(b) chi(a,b)",
      "sigma2(a) sigma3(b a^-1) = chi(a,b) sigma3(b)",
      "sigma1(a)^2 = chi(a^-1,a)",
      "tau sum_c chi(ab,c)^-1 sigma2(c) = chi(a,b)^-1 sigma3(a) sigma3(b)",
      "sigma0(b,a) = chi(a,b)^-1",
      "sigma1(ab) = sigma1(a) sigma1(b) chi(a,b)^-1",
      "sigma1(a) sigma3(b a^-1) = chi(a,b)^-1 sigma3(b)",
      "sigma2(a)^2 = chi(a,a)",
      "tau sum_c chi(ab,c) sigma1(c) = chi(a,b) sigma3(a) sigma3(b)",
  };
  if (k < 1 || k > 10) throw Error("reduced equations are numbered 1..10");
  return text[static_cast<std::size_t>(k - 1)];
}

ReducedReport verify_hexagons_reduced(const BraidingData& b) {
  const MonoidalData& cat = b.parent();
  const int n = cat.order();
  ReducedReport report;
  const auto key = [&](int e) { return element_key(cat, e); };
  const auto fail = [&](int eq, std::string witness) {
    report.passed = false;
    report.failures.push_back({eq, std::move(witness)});
  };

  // τ Σ_c χ(x,c)^{-1} σ₂(c) and τ Σ_c χ(x,c) σ₁(c), per x
  std::vector<CycloNum> sum2, sum1;
  for (int x = 0; x < n; ++x) {
    CycloNum s2(cat.field()), s1(cat.field());
    for (int c = 0; c < n; ++c) {
      s2 += cat.chi_inv(x, c) * b.sigma2(c);
      s1 += cat.chi(x, c) * b.sigma1(c);
    }
    sum2.push_back(cat.tau() * s2);
    sum1.push_back(cat.tau() * s1);
  }

  for (int a = 0; a < n; ++a) {
    const int ai = cat.inv(a);
    if (!(b.sigma1(a) * b.sigma1(a) == cat.chi(ai, a))) fail(4, "a=" + key(a));
    if (!(b.sigma2(a) * b.sigma2(a) == cat.chi(a, a))) fail(9, "a=" + key(a));

    for (int bb = 0; bb < n; ++bb) {
      const std::string w = "a=" + key(a) + " b=" + key(bb);
      const int ab = cat.mul(a, bb);
      const int b_ai = cat.mul(bb, ai);

      if (!(b.sigma0(a, bb) == cat.chi(a, bb))) fail(1, w);
      if (!(b.sigma2(ab) == b.sigma2(a) * b.sigma2(bb) * cat.chi(a, bb))) fail(2, w);
      if (!(b.sigma2(a) * b.sigma3(b_ai) == cat.chi(a, bb) * b.sigma3(bb))) fail(3, w);
      if (!(sum2[static_cast<std::size_t>(ab)] == cat.chi_inv(a, bb) * b.sigma3(a) * b.sigma3(bb))) fail(5, w);

      if (!(b.sigma0(bb, a) == cat.chi_inv(a, bb))) fail(6, w);
      if (!(b.sigma1(ab) == b.sigma1(a) * b.sigma1(bb) * cat.chi_inv(a, bb))) fail(7, w);
      if (!(b.sigma1(a) * b.sigma3(b_ai) == cat.chi_inv(a, bb) * b.sigma3(bb))) fail(8, w);
      if (!(sum1[static_cast<std::size_t>(ab)] == cat.chi(a, bb) * b.sigma3(a) * b.sigma3(bb))) fail(10, w);
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const auto& x, const auto& y) { return x.equation < y.equation; });
  return report;
}

DirectReport verify_hexagons_direct(const BraidingData& b, const HexagonSystem* system, int threads) {
  std::optional<HexagonSystem> owned;
  if (system == nullptr) {
    owned.emplace(b.parent_ptr());
    system = &*owned;
  } else if (system->monoidal().conductor() != b.parent().conductor() ||
             !(system->monoidal().group() == b.parent().group())) {
    throw Error("hexagon system belongs to a different category");
  }

  const auto values = b.variables();
  const auto& templates = system->templates();
  std::vector<std::optional<HexagonFailure>> failures(templates.size());
  parallel_for(templates.size(), threads, [&](std::size_t i) {
    const auto& t = templates[i];
    const auto lhs = evaluate_side(t.lhs, values);
    const auto rhs = evaluate_side(t.rhs, values);
    if (same_entries(lhs, rhs)) return;
    failures[i] = HexagonFailure{t.triple, t.inverse,
                                 BlockMatrix(t.lhs.front().source(), t.lhs.back().target(), lhs),
                                 BlockMatrix(t.rhs.front().source(), t.rhs.back().target(), rhs)};
  });

  DirectReport report;
  report.diagrams_checked = static_cast<int>(templates.size());
  for (auto& f : failures) {
    if (f) report.failures.push_back(std::move(*f));
  }
  report.passed = report.failures.empty();
  return report;
}

std::pair<BlockMatrix, BlockMatrix> mmm_hexagon_sides(const BraidingData& b) {
  const auto m = SimpleLabel::m();
  const SigmaLayout layout(b.parent().order());
  const auto t = make_hexagon_template(b.parent(), layout, m, m, m, false);
  const auto values = b.variables();
  return {evaluate_side_block(t.lhs, values), evaluate_side_block(t.rhs, values)};
}

std::vector<EnumeratedBraiding> enumerate_braidings(const MonoidalPtr& cat, int threads) {
  require_braidable(*cat);
  const HexagonSystem system(cat);
  const auto params = all_params(cat->group().rank());
  std::vector<std::optional<EnumeratedBraiding>> slots(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    BraidingData data = construct_braiding(cat, params[i]);
    const auto report = verify_hexagons_direct(data, &system);
    if (!report.passed) throw Error("constructed braiding " + params[i].to_string() + " fails a hexagon");
    slots[i] = EnumeratedBraiding{params[i], std::move(data)};
  });
  std::vector<EnumeratedBraiding> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------

TwistCheck check_twist(const BraidingData& b, const TwistData& t) {
  const MonoidalData& cat = b.parent();
  const int n = cat.order();
  TwistCheck out{true, true, true};
  if (static_cast<int>(t.theta_g.size()) != n) return TwistCheck{};
  const CycloNum theta_m_sq = t.theta_m * t.theta_m;
  for (int g = 0; g < n; ++g) {
    const CycloNum& th = t.theta_g[static_cast<std::size_t>(g)];
    for (int h = 0; h < n; ++h) {
      if (!(t.theta_g[static_cast<std::size_t>(cat.mul(g, h))] == th * t.theta_g[static_cast<std::size_t>(h)])) {
        out.multiplicative = false;
      }
    }
    if (!(th == b.sigma1(g) * b.sigma1(g))) out.from_sigma1 = false;
    if (!(th == theta_m_sq * b.sigma3(g) * b.sigma3(g))) out.balances_m = false;
  }
  return out;
}

std::vector<TwistData> compute_twists(const BraidingData& b) {
  const MonoidalData& cat = b.parent();
  const int n = cat.order();
  TwistData plus{{}, b.sigma3(0).inverse()};
  for (int g = 0; g < n; ++g) {
    const CycloNum c = cat.chi(g, g);
    if (!(c * c).is_one()) throw Error("chi(g,g)^2 != 1; twist formula needs chi(g,g) = +-1");
    plus.theta_g.push_back(b.sigma1(g) * b.sigma1(g));
  }
  TwistData minus{plus.theta_g, -plus.theta_m};
  std::vector<TwistData> out{std::move(plus), std::move(minus)};
  for (const auto& t : out) {
    if (!check_twist(b, t).passed()) throw Error("twist does not balance the braiding");
  }
  return out;
}

RootOrderReport root_order_report(const BraidingData& b) {
  const MonoidalData& cat = b.parent();
  const SigmaLayout layout(cat.order());
  RootOrderReport out;
  out.bound = 8 * cat.order();
  out.refined_bound = 4 * cat.order();
  const auto values = b.variables();
  for (std::size_t v = 0; v < values.size(); ++v) {
    const auto ord = root_order(values[v]);
    if (!ord) throw Error(layout.name(cat, static_cast<int>(v)) + " is not a root of unity");
    out.max_order = std::max(out.max_order, *ord);
  }
  out.within_bound = out.bound % out.max_order == 0;
  out.refined = form_checks(cat.chi()).diag_trivial && out.refined_bound % out.max_order == 0;
  return out;
}

CycloNum determinant(std::vector<std::vector<CycloNum>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error("determinant of an empty matrix");
  const FieldPtr field = a[0][0].field();
  CycloNum det = CycloNum::integer(field, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return CycloNum(field);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const CycloNum inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const CycloNum f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
      }
    }
  }
  return det;
}

DeterminantCheck determinant_identity(const BraidingData& b) {
  const MonoidalData& cat = b.parent();
  const int n = cat.order();
  const auto m = SimpleLabel::m();
  const BlockMatrix alpha = associator_blocks(cat, m, m, m);
  std::vector<std::vector<CycloNum>> dense(static_cast<std::size_t>(n),
                                           std::vector<CycloNum>(static_cast<std::size_t>(n), CycloNum(cat.field())));
  for (int r = 0; r < alpha.rows(); ++r) {
    for (const auto& [c, v] : alpha.entries().row(r)) dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
  }
  DeterminantCheck out{determinant(dense), cat.one(), cat.one(), false};
  for (int g = 0; g < n; ++g) {
    out.det_s2 *= b.sigma2(g);
    out.det_s3 *= b.sigma3(g);
  }
  out.holds = out.det_a * out.det_s2 == out.det_s3 * out.det_s3;
  return out;
}

}  // namespace ngc
