#include "ngc/cyclo.hpp"

#include <numeric>
#include <sstream>

#include "ngc/errors.hpp"

namespace ngc {

namespace {

using IntPoly = std::vector<long>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials; divisor must be monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw Error("cyclotomic polynomial division left a remainder");
  }
  trim(quot);
  return quot;
}

// Φ_n by the recursion x^n - 1 = Π_{d | n} Φ_d.
IntPoly cyclotomic(int n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic(d));
  }
  return p;
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Conductor::Conductor(int m) : m_(m) {
  if (m < 2 || m % 2 != 0) {
    throw Error("conductor must be an even integer >= 2, got " + std::to_string(m));
  }
}

CycloField::CycloField(Conductor conductor)
    : m_(conductor.value()), power_of_two_(is_power_of_two(conductor.value())) {
  phi_ = cyclotomic(m_);
  degree_ = static_cast<int>(phi_.size()) - 1;

  monomials_.reserve(static_cast<std::size_t>(m_));
  IntPoly cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  for (int k = 0; k < m_; ++k) {
    monomials_.push_back(cur);
    // multiply by ζ and fold the overflow term back through Φ_M
    const long top = cur.back();
    for (int i = degree_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i) - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < degree_; ++i) cur[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
    }
  }
}

const std::vector<long>& CycloField::monomial(long k) const {
  long r = k % m_;
  if (r < 0) r += m_;
  return monomials_[static_cast<std::size_t>(r)];
}

FieldPtr make_field(int conductor) { return std::make_shared<const CycloField>(Conductor(conductor)); }

RootOfUnity::RootOfUnity(int m, long e) : conductor(Conductor(m).value()) {
  long r = e % m;
  if (r < 0) r += m;
  exponent = static_cast<int>(r);
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error("CycloNum requires a field");
}

CycloNum CycloNum::from_dense(FieldPtr field, std::vector<mpq_class>& dense) {
  CycloNum out(std::move(field));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) out.terms_.emplace_back(static_cast<int>(i), std::move(dense[i]));
  }
  return out;
}

CycloNum::CycloNum(FieldPtr field, std::vector<mpq_class> coeffs) : CycloNum(std::move(field)) {
  const auto d = static_cast<std::size_t>(field_->degree());
  std::vector<mpq_class> dense(d, mpq_class(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (sgn(coeffs[i]) == 0) continue;
    if (i < d) {
      dense[i] += coeffs[i];
    } else {
      const auto& mono = field_->monomial(static_cast<long>(i));
      for (std::size_t j = 0; j < d; ++j) {
        if (mono[j] != 0) dense[j] += coeffs[i] * mono[j];
      }
    }
  }
  *this = from_dense(field_, dense);
}

std::vector<mpq_class> CycloNum::coeffs() const {
  std::vector<mpq_class> dense(static_cast<std::size_t>(field_->degree()), mpq_class(0));
  for (const auto& [i, c] : terms_) dense[static_cast<std::size_t>(i)] = c;
  return dense;
}

CycloNum CycloNum::rational(FieldPtr field, const mpq_class& q) {
  CycloNum out(std::move(field));
  mpq_class c = q;
  c.canonicalize();
  if (sgn(c) != 0) out.terms_.emplace_back(0, std::move(c));
  return out;
}

CycloNum CycloNum::root(FieldPtr field, long exponent) {
  CycloNum out(std::move(field));
  const auto& mono = out.field_->monomial(exponent);
  for (std::size_t j = 0; j < mono.size(); ++j) {
    if (mono[j] != 0) out.terms_.emplace_back(static_cast<int>(j), mpq_class(mono[j]));
  }
  return out;
}

CycloNum CycloNum::embed(FieldPtr field, const RootOfUnity& r) {
  if (r.conductor != field->conductor()) {
    throw ConductorMismatch("root of unity of conductor " + std::to_string(r.conductor) +
                            " embedded into field of conductor " + std::to_string(field->conductor()));
  }
  return root(std::move(field), r.exponent);
}

bool CycloNum::is_zero() const { return terms_.empty(); }

bool CycloNum::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

void CycloNum::check_same_field(const CycloNum& other) const {
  if (field_ == other.field_) return;
  if (field_->conductor() != other.field_->conductor()) {
    throw ConductorMismatch("conductor mismatch: " + std::to_string(field_->conductor()) + " vs " +
                            std::to_string(other.field_->conductor()));
  }
}

namespace {

using Terms = std::vector<std::pair<int, mpq_class>>;

// Merge b·sign into a; both sorted, result sorted without zeros.
Terms merge_terms(const Terms& a, const Terms& b, bool subtract) {
  Terms out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, subtract ? mpq_class(-ib->second) : ib->second);
      ++ib;
    } else {
      mpq_class v = subtract ? mpq_class(ia->second - ib->second) : mpq_class(ia->second + ib->second);
      if (sgn(v) != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  check_same_field(rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  check_same_field(rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum out(*this);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.check_same_field(b);
  const auto& field = *a.field_;
  const int d = field.degree();
  CycloNum out(a.field_);
  if (a.terms_.empty() || b.terms_.empty()) return out;

  if (field.power_of_two()) {
    // ζ^{M/2} = -1, so ζ^{d+j} = -ζ^j
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
      const auto& other = a.terms_.size() == 1 ? b.terms_ : a.terms_;
      Terms low, high;
      for (const auto& [j, c] : other) {
        const int k = single.first + j;
        if (k < d) {
          high.emplace_back(k, single.second * c);
        } else {
          low.emplace_back(k - d, -(single.second * c));
        }
      }
      low.insert(low.end(), std::make_move_iterator(high.begin()), std::make_move_iterator(high.end()));
      out.terms_ = std::move(low);
      return out;
    }
    std::vector<mpq_class> dense(static_cast<std::size_t>(d), mpq_class(0));
    mpq_class term;
    for (const auto& [i, x] : a.terms_) {
      for (const auto& [j, y] : b.terms_) {
        term = x * y;
        const int k = i + j;
        if (k < d) {
          dense[static_cast<std::size_t>(k)] += term;
        } else {
          dense[static_cast<std::size_t>(k - d)] -= term;
        }
      }
    }
    return CycloNum::from_dense(a.field_, dense);
  }

  std::vector<mpq_class> wide(2 * static_cast<std::size_t>(d), mpq_class(0));
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) wide[static_cast<std::size_t>(i + j)] += x * y;
  }
  std::vector<mpq_class> dense(wide.begin(), wide.begin() + d);
  mpq_class term;
  for (std::size_t k = static_cast<std::size_t>(d); k < wide.size(); ++k) {
    if (sgn(wide[k]) == 0) continue;
    const auto& mono = field.monomial(static_cast<long>(k));
    for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
      if (mono[j] != 0) {
        term = wide[k] * mono[j];
        dense[j] += term;
      }
    }
  }
  return CycloNum::from_dense(a.field_, dense);
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.conductor() != b.conductor()) return false;
  return a.terms_ == b.terms_;
}

CycloNum CycloNum::scaled(const mpq_class& q) const {
  CycloNum out(field_);
  if (sgn(q) == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= q;
  return out;
}

CycloNum CycloNum::inverse() const {
  const auto d = static_cast<std::size_t>(field_->degree());
  if (terms_.empty()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");

  // single term q·ζ^k: invert directly
  if (terms_.size() == 1) {
    mpq_class q = 1 / terms_[0].second;
    return root(field_, -static_cast<long>(terms_[0].first)).scaled(q);
  }

  // Solve (multiplication-by-this) x = 1 by Gauss-Jordan elimination over Q.
  std::vector<std::vector<mpq_class>> mat(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  for (std::size_t j = 0; j < d; ++j) {
    const CycloNum col = *this * root(field_, static_cast<long>(j));
    for (const auto& [i, c] : col.terms_) mat[static_cast<std::size_t>(i)][j] = c;
  }
  mat[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && sgn(mat[piv][c]) == 0) ++piv;
    if (piv == d) throw DivisionByZero("singular multiplication matrix");
    std::swap(mat[c], mat[piv]);
    const mpq_class inv = 1 / mat[c][c];
    for (std::size_t k = c; k <= d; ++k) mat[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(mat[r][c]) == 0) continue;
      const mpq_class f = mat[r][c];
      for (std::size_t k = c; k <= d; ++k) mat[r][k] -= f * mat[c][k];
    }
  }
  std::vector<mpq_class> dense(d);
  for (std::size_t i = 0; i < d; ++i) dense[i] = mat[i][d];
  return from_dense(field_, dense);
}

CycloNum CycloNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloNum result = integer(field_, 1);
  CycloNum base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

std::optional<RootOfUnity> as_root_of_unity(const CycloNum& a) {
  const auto& field = *a.field();
  const int m = field.conductor();
  const auto& t = a.terms();

  if (field.power_of_two()) {
    // the roots of unity are exactly ±ζ^k, 0 ≤ k < M/2
    if (t.size() != 1) return std::nullopt;
    if (t[0].second == 1) return RootOfUnity(m, t[0].first);
    if (t[0].second == -1) return RootOfUnity(m, t[0].first + m / 2);
    return std::nullopt;
  }

  for (int e = 0; e < m; ++e) {
    if (a == CycloNum::root(a.field(), e)) return RootOfUnity(m, e);
  }
  return std::nullopt;
}

CycloNum principal_sqrt_even_power(const CycloNum& a) {
  const auto r = as_root_of_unity(a);
  if (!r) throw NotAnEvenPowerRoot("radicand " + a.to_string() + " is not a root of unity");
  if (r->exponent % 2 != 0) {
    throw NotAnEvenPowerRoot("radicand z" + std::to_string(r->conductor) + "^" + std::to_string(r->exponent) +
                             " has odd exponent");
  }
  return CycloNum::root(a.field(), r->exponent / 2);
}

std::optional<int> root_order(const CycloNum& a) {
  const auto r = as_root_of_unity(a);
  if (!r) return std::nullopt;
  return r->conductor / std::gcd(r->conductor, r->exponent);
}

CycloNum sqrt_group_order(const FieldPtr& field, int group_order) {
  if (!is_power_of_two(group_order)) {
    throw UnsupportedGroup("group order " + std::to_string(group_order) + " is not a power of two");
  }
  int n = 0;
  while ((1 << n) < group_order) ++n;
  const int m = field->conductor();
  CycloNum out = CycloNum::integer(field, 1LL << (n / 2));
  if (n % 2 == 1) {
    if (m % 8 != 0) {
      throw UnsupportedGroup("sqrt(2) needs an 8th root of unity; conductor is " + std::to_string(m));
    }
    out = out * (CycloNum::root(field, m / 8) + CycloNum::root(field, -(m / 8)));
  }
  return out;
}

}  // namespace ngc
