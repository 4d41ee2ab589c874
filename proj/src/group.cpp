#include "ngc/group.hpp"

#include <numeric>
#include <sstream>

#include "ngc/errors.hpp"

namespace ngc {

GroupSpec::GroupSpec(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw UnsupportedGroup("group needs at least one invariant factor");
  for (int d : factors_) {
    if (d < 2) throw UnsupportedGroup("invariant factors must be >= 2, got " + std::to_string(d));
    if (order_ > (1 << 20) / d) throw UnsupportedGroup("group order too large");
    order_ *= d;
    elementary_2_ = elementary_2_ && d == 2;
  }
}

void GroupSpec::check(const GroupElement& g) const {
  if (g.exponents.size() != factors_.size()) {
    throw Error("element has " + std::to_string(g.exponents.size()) + " exponents, group has rank " +
                std::to_string(factors_.size()));
  }
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

int GroupSpec::index_of(const GroupElement& g) const {
  check(g);
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = g.exponents[i] % factors_[i];
    if (r < 0) r += factors_[i];
    idx = idx * factors_[i] + r;
  }
  return idx;
}

GroupElement GroupSpec::element(int index) const {
  if (index < 0 || index >= order_) throw Error("element index out of range");
  GroupElement g{std::vector<int>(factors_.size(), 0)};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g.exponents[i] = index % factors_[i];
    index /= factors_[i];
  }
  return g;
}

GroupElement GroupSpec::identity() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement GroupSpec::generator(int i) const {
  if (i < 0 || i >= rank()) throw Error("generator index out of range");
  GroupElement g = identity();
  g.exponents[static_cast<std::size_t>(i)] = 1;
  return g;
}

GroupElement GroupSpec::multiply(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement out = identity();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.exponents[i] = ((g.exponents[i] + h.exponents[i]) % factors_[i] + factors_[i]) % factors_[i];
  }
  return out;
}

GroupElement GroupSpec::inverse(const GroupElement& g) const {
  check(g);
  GroupElement out = identity();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.exponents[i] = ((-g.exponents[i]) % factors_[i] + factors_[i]) % factors_[i];
  }
  return out;
}

GroupElement GroupSpec::power(const GroupElement& g, int k) const {
  check(g);
  GroupElement out = identity();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const long long e = static_cast<long long>(g.exponents[i]) * k;
    out.exponents[i] = static_cast<int>(((e % factors_[i]) + factors_[i]) % factors_[i]);
  }
  return out;
}

int GroupSpec::element_order(const GroupElement& g) const {
  check(g);
  int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int d = factors_[i];
    const int r = ((g.exponents[i] % d) + d) % d;
    ord = std::lcm(ord, d / std::gcd(d, r));
  }
  return ord;
}

std::vector<int> GroupSpec::decompose(const GroupElement& g) const {
  if (!elementary_2_) throw UnsupportedGroup("decompose requires an elementary abelian 2-group, got " + to_string());
  check(g);
  std::vector<int> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.exponents[i] % 2 != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string GroupSpec::key(const GroupElement& g) const {
  check(g);
  bool wide = false;
  for (int d : factors_) wide = wide || d > 10;
  std::ostringstream os;
  for (std::size_t i = 0; i < g.exponents.size(); ++i) {
    if (wide && i > 0) os << ",";
    os << g.exponents[i];
  }
  return os.str();
}

GroupElement GroupSpec::parse_key(const std::string& key) const {
  bool wide = false;
  for (int d : factors_) wide = wide || d > 10;
  GroupElement g;
  if (wide) {
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("malformed element key '" + key + "'");
      }
      g.exponents.push_back(std::stoi(part));
    }
  } else {
    for (char c : key) {
      if (c < '0' || c > '9') throw Error("malformed element key '" + key + "'");
      g.exponents.push_back(c - '0');
    }
  }
  if (g.exponents.size() != factors_.size()) throw Error("element key '" + key + "' has the wrong length");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.exponents[i] >= factors_[i]) throw Error("element key '" + key + "' is not reduced");
  }
  return g;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << " x ";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

int default_conductor(const GroupSpec& group) { return 8 * group.order(); }

// ---------------------------------------------------------------------------

Bicharacter::Bicharacter(GroupSpec group, FieldPtr field, std::vector<std::vector<int>> gram_exponents)
    : group_(std::move(group)), field_(std::move(field)), gram_(std::move(gram_exponents)) {
  const int m = field_->conductor();
  const auto n = static_cast<std::size_t>(group_.rank());
  if (gram_.size() != n) throw InvalidForm("gram matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InvalidForm("gram matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      int& e = gram_[i][j];
      e = ((e % m) + m) % m;
      const long long di = group_.factors()[i];
      const long long dj = group_.factors()[j];
      if ((di * e) % m != 0 || (dj * e) % m != 0) {
        throw InvalidForm("gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") does not define a bicharacter on " + group_.to_string());
      }
    }
  }
}

Bicharacter Bicharacter::from_binary(const GroupSpec& group, const std::vector<std::vector<int>>& b) {
  if (!group.is_elementary_2()) throw InvalidForm("binary gram matrices need an elementary-2 group");
  const int m = default_conductor(group);
  std::vector<std::vector<int>> gram = b;
  for (auto& row : gram) {
    for (int& e : row) {
      if (e != 0 && e != 1) throw InvalidForm("binary gram entries must be 0 or 1");
      e *= m / 2;
    }
  }
  return Bicharacter(group, make_field(m), std::move(gram));
}

int Bicharacter::exponent(const GroupElement& g, const GroupElement& h) const {
  const int m = conductor();
  const auto n = static_cast<std::size_t>(group_.rank());
  if (g.exponents.size() != n || h.exponents.size() != n) throw Error("element does not belong to the group");
  long long acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.exponents[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      acc += static_cast<long long>(g.exponents[i]) * h.exponents[j] * gram_[i][j];
      acc %= m;
    }
  }
  return static_cast<int>(((acc % m) + m) % m);
}

RootOfUnity Bicharacter::value(const GroupElement& g, const GroupElement& h) const {
  return RootOfUnity(conductor(), exponent(g, h));
}

std::optional<std::vector<std::vector<int>>> Bicharacter::binary_gram() const {
  if (!group_.is_elementary_2()) return std::nullopt;
  const int half = conductor() / 2;
  std::vector<std::vector<int>> b = gram_;
  for (auto& row : b) {
    for (int& e : row) {
      if (e != 0 && e != half) return std::nullopt;
      e = e == 0 ? 0 : 1;
    }
  }
  return b;
}

CycloNum chi_eval(const Bicharacter& chi, const GroupElement& g, const GroupElement& h) {
  return CycloNum::root(chi.field(), chi.exponent(g, h));
}

FormChecks form_checks(const Bicharacter& chi) {
  FormChecks out;
  const auto& gram = chi.gram();
  out.symmetric = true;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) out.symmetric = out.symmetric && gram[i][j] == gram[j][i];
  }

  const auto elems = chi.group().elements();
  out.nondegenerate = true;
  out.diag_trivial = true;
  for (std::size_t gi = 0; gi < elems.size(); ++gi) {
    bool in_kernel = true;
    for (const auto& h : elems) {
      if (chi.exponent(elems[gi], h) != 0) {
        in_kernel = false;
        break;
      }
    }
    if (gi != 0 && in_kernel) out.nondegenerate = false;
    if (chi.exponent(elems[gi], elems[gi]) != 0) out.diag_trivial = false;
  }
  return out;
}

namespace {

bool invertible_mod2(std::vector<unsigned> rows, int n) {
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && !((rows[static_cast<std::size_t>(piv)] >> c) & 1u)) ++piv;
    if (piv == n) return false;
    std::swap(rows[static_cast<std::size_t>(c)], rows[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < n; ++r) {
      if (r != c && ((rows[static_cast<std::size_t>(r)] >> c) & 1u)) {
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(c)];
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Bicharacter> enumerate_forms(int rank) {
  if (rank < 1 || rank > 4) throw InvalidForm("enumerate_forms supports ranks 1..4");
  const auto group = GroupSpec::elementary_2(rank);
  const int entries = rank * (rank + 1) / 2;
  std::vector<Bicharacter> out;
  for (unsigned mask = 0; mask < (1u << entries); ++mask) {
    std::vector<std::vector<int>> b(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
    std::vector<unsigned> rows(static_cast<std::size_t>(rank), 0);
    int bit = 0;
    for (int i = 0; i < rank; ++i) {
      for (int j = i; j < rank; ++j, ++bit) {
        if ((mask >> bit) & 1u) {
          b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
          b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
          rows[static_cast<std::size_t>(i)] |= 1u << j;
          rows[static_cast<std::size_t>(j)] |= 1u << i;
        }
      }
    }
    if (invertible_mod2(rows, rank)) out.push_back(Bicharacter::from_binary(group, b));
  }
  return out;
}

Bicharacter diagonal_form(int rank) {
  std::vector<std::vector<int>> b(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return Bicharacter::from_binary(GroupSpec::elementary_2(rank), b);
}

Bicharacter hyperbolic_form(int rank) {
  if (rank < 2 || rank % 2 != 0) throw InvalidForm("hyperbolic form needs an even rank");
  std::vector<std::vector<int>> b(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; i += 2) {
    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = 1;
    b[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = 1;
  }
  return Bicharacter::from_binary(GroupSpec::elementary_2(rank), b);
}

Obstruction braidability_obstruction(const GroupSpec& group) {
  Obstruction out;
  for (const auto& a : group.elements()) {
    const int ord = group.element_order(a);
    if (ord <= 2) continue;

    ObstructionWitness w;
    w.element = a;
    w.order = ord;
    const std::string ak = group.key(a);
    w.chain.push_back("a braiding forces sigma0(a,b) = chi(a,b) and sigma0(b,a) = chi(a,b)^-1; with chi symmetric, "
                      "chi(a,b)^2 = 1, so chi takes values in {+1,-1}");
    if (ord % 2 == 1) {
      w.kind = ObstructionWitness::Kind::OddOrder;
      w.trivialized = a;
      w.chain.push_back("a = " + ak + " has odd order " + std::to_string(ord) + ", so chi(a,b)^" +
                        std::to_string(ord) + " = chi(1,b) = 1 for every b");
      w.chain.push_back("an odd power of +-1 equals its base, hence chi(a,b) = 1 for every b");
      w.chain.push_back("a != 1 lies in the kernel of g -> chi(g,-): chi is degenerate, contradiction");
    } else {
      w.kind = ObstructionWitness::Kind::EvenOrder;
      w.trivialized = group.multiply(a, a);
      w.chain.push_back("a = " + ak + " has even order " + std::to_string(ord) + " > 2, so a^2 = " +
                        group.key(w.trivialized) + " != 1");
      w.chain.push_back("chi(a^2,b) = chi(a,b)^2 = 1 for every b");
      w.chain.push_back("a^2 != 1 lies in the kernel of g -> chi(g,-): chi is degenerate, contradiction");
    }
    out.witness = std::move(w);
    return out;
  }
  out.braidable = true;
  return out;
}

}  // namespace ngc
