#include "ngc/serialize.hpp"

#include "ngc/errors.hpp"

namespace ngc {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& require_object(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  return j;
}

const Json& field_of(const Json& j, const std::string& key, const std::string& pointer) {
  require_object(j, pointer);
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(pointer, key), "missing required field \"" + key + "\"");
  return *it;
}

long as_integer(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  return j.get<long>();
}

int as_sign(const Json& j, const std::string& pointer) {
  const long v = as_integer(j, pointer);
  if (v != 1 && v != -1) throw SchemaError(pointer, "expected 1 or -1");
  return static_cast<int>(v);
}

std::vector<std::vector<int>> int_matrix(const Json& j, int size, const std::string& pointer) {
  require_array(j, pointer);
  if (static_cast<int>(j.size()) != size) {
    throw SchemaError(pointer, "expected " + std::to_string(size) + " rows, got " + std::to_string(j.size()));
  }
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = child(pointer, i);
    require_array(j[i], p);
    if (static_cast<int>(j[i].size()) != size) throw SchemaError(p, "expected " + std::to_string(size) + " entries");
    std::vector<int> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(static_cast<int>(as_integer(j[i][k], child(p, k))));
    out.push_back(std::move(row));
  }
  return out;
}

template <class F>
auto rethrow_at(const std::string& pointer, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(pointer, e.what());
  }
}

Json table_to_json(const MonoidalData& cat, const std::vector<CycloNum>& values) {
  Json out = Json::object();
  for (int g = 0; g < cat.order(); ++g) {
    out[cat.group().key(cat.group().element(g))] = value_to_json(values[static_cast<std::size_t>(g)]);
  }
  return out;
}

// Table over G keyed by element keys; every element exactly once.
template <class F>
auto table_from_json(const Json& j, const MonoidalData& cat, const std::string& pointer, F&& value) {
  using T = decltype(value(j, pointer));
  require_object(j, pointer);
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(cat.order()));
  for (const auto& [key, v] : j.items()) {
    const auto p = child(pointer, key);
    const int idx = rethrow_at(p, [&] { return cat.group().index_of(cat.group().parse_key(key)); });
    if (cat.group().key(cat.group().element(idx)) != key) throw SchemaError(p, "non-canonical element key");
    slots[static_cast<std::size_t>(idx)] = value(v, p);
  }
  std::vector<T> out;
  for (int g = 0; g < cat.order(); ++g) {
    const auto key = cat.group().key(cat.group().element(g));
    if (!slots[static_cast<std::size_t>(g)]) throw SchemaError(child(pointer, key), "missing table entry");
    out.push_back(std::move(*slots[static_cast<std::size_t>(g)]));
  }
  return out;
}

std::vector<CycloNum> values_table(const Json& j, const MonoidalData& cat, const std::string& pointer) {
  return table_from_json(j, cat, pointer,
                         [&](const Json& v, const std::string& p) { return value_from_json(v, cat.field(), p); });
}

}  // namespace

Json to_json(const CycloNum& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const Json& j, const FieldPtr& field, const std::string& pointer) {
  const long m = as_integer(field_of(j, "conductor", pointer), child(pointer, "conductor"));
  if (m != field->conductor()) {
    throw SchemaError(child(pointer, "conductor"),
                      "conductor " + std::to_string(m) + " does not match " + std::to_string(field->conductor()));
  }
  const auto cp = child(pointer, "coeffs");
  const Json& coeffs = require_array(field_of(j, "coeffs", pointer), cp);
  if (static_cast<int>(coeffs.size()) != field->degree()) {
    throw SchemaError(cp, "expected " + std::to_string(field->degree()) + " coefficients, got " +
                              std::to_string(coeffs.size()));
  }
  std::vector<mpq_class> q;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto p = child(cp, i);
    if (!coeffs[i].is_string()) throw SchemaError(p, "expected a rational string \"p/q\"");
    const auto text = coeffs[i].get<std::string>();
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0 || sgn(v.get_den()) == 0) {
      throw SchemaError(p, "malformed rational \"" + text + "\"");
    }
    v.canonicalize();
    q.push_back(std::move(v));
  }
  return CycloNum(field, std::move(q));
}

Json to_json(const RootOfUnity& r) { return Json{{"conductor", r.conductor}, {"exp", r.exponent}}; }

RootOfUnity root_from_json(const Json& j, const std::string& pointer) {
  const long m = as_integer(field_of(j, "conductor", pointer), child(pointer, "conductor"));
  const long e = as_integer(field_of(j, "exp", pointer), child(pointer, "exp"));
  return rethrow_at(child(pointer, "conductor"), [&] { return RootOfUnity(static_cast<int>(m), e); });
}

Json value_to_json(const CycloNum& a) {
  if (const auto r = as_root_of_unity(a)) return Json{{"exp", r->exponent}};
  return to_json(a);
}

CycloNum value_from_json(const Json& j, const FieldPtr& field, const std::string& pointer) {
  require_object(j, pointer);
  if (j.contains("exp")) {
    if (j.size() != 1) throw SchemaError(pointer, "a root-of-unity value has only the field \"exp\"");
    const long e = as_integer(j["exp"], child(pointer, "exp"));
    if (e < 0 || e >= field->conductor()) {
      throw SchemaError(child(pointer, "exp"), "exponent must lie in [0, " + std::to_string(field->conductor()) + ")");
    }
    return CycloNum::root(field, e);
  }
  return cyclo_from_json(j, field, pointer);
}

Json to_json(const GroupSpec& g) { return Json{{"factors", g.factors()}}; }

GroupSpec group_from_json(const Json& j, const std::string& pointer) {
  const auto fp = child(pointer, "factors");
  const Json& factors = require_array(field_of(j, "factors", pointer), fp);
  if (factors.empty()) throw SchemaError(fp, "expected at least one factor");
  std::vector<int> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const long d = as_integer(factors[i], child(fp, i));
    if (d < 2 || d > 64) throw SchemaError(child(fp, i), "factor must lie in [2, 64]");
    out.push_back(static_cast<int>(d));
  }
  return rethrow_at(fp, [&] { return GroupSpec(out); });
}

Json to_json(const MonoidalData& cat) {
  Json out{{"group", to_json(cat.group())}, {"tau_sign", cat.tau_sign()}, {"conductor", cat.conductor()}};
  if (const auto b = cat.chi().binary_gram(); b && cat.group().is_elementary_2()) {
    out["gram"] = *b;
  } else {
    out["gram_exp"] = cat.chi().gram();
  }
  return out;
}

MonoidalPtr monoidal_from_json(const Json& j, const std::string& pointer) {
  require_object(j, pointer);
  const GroupSpec group = group_from_json(field_of(j, "group", pointer), child(pointer, "group"));
  const int tau_sign = as_sign(field_of(j, "tau_sign", pointer), child(pointer, "tau_sign"));
  const auto cp = child(pointer, "conductor");
  const long m = as_integer(field_of(j, "conductor", pointer), cp);
  if (m != default_conductor(group)) {
    throw SchemaError(cp, "conductor must be 8|G| = " + std::to_string(default_conductor(group)));
  }
  const int rank = group.rank();

  std::optional<Bicharacter> chi;
  if (group.is_elementary_2() || !j.contains("gram_exp")) {
    const auto gp = child(pointer, "gram");
    const auto b = int_matrix(field_of(j, "gram", pointer), rank, gp);
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < b[r].size(); ++c) {
        if (b[r][c] != 0 && b[r][c] != 1) throw SchemaError(child(child(gp, r), c), "expected 0 or 1");
      }
    }
    chi = rethrow_at(gp, [&] { return Bicharacter::from_binary(group, b); });
  } else {
    const auto gp = child(pointer, "gram_exp");
    const auto e = int_matrix(j["gram_exp"], rank, gp);
    chi = rethrow_at(gp, [&] { return Bicharacter(group, make_field(static_cast<int>(m)), e); });
  }
  const auto gp = child(pointer, j.contains("gram_exp") && !group.is_elementary_2() ? "gram_exp" : "gram");
  return rethrow_at(gp, [&] { return build_monoidal(group, *chi, tau_sign); });
}

Json to_json(const BraidingParams& p) { return Json{{"delta", p.delta}, {"epsilon", p.epsilon}}; }

BraidingParams params_from_json(const Json& j, const std::string& pointer) {
  BraidingParams out;
  const auto dp = child(pointer, "delta");
  const Json& delta = require_array(field_of(j, "delta", pointer), dp);
  for (std::size_t i = 0; i < delta.size(); ++i) out.delta.push_back(as_sign(delta[i], child(dp, i)));
  out.epsilon = as_sign(field_of(j, "epsilon", pointer), child(pointer, "epsilon"));
  return out;
}

Json to_json(const TwistData& t, const MonoidalData& cat) {
  return Json{{"theta_g", table_to_json(cat, t.theta_g)}, {"theta_m", value_to_json(t.theta_m)}};
}

TwistData twist_from_json(const Json& j, const MonoidalData& cat, const std::string& pointer) {
  TwistData out{values_table(field_of(j, "theta_g", pointer), cat, child(pointer, "theta_g")),
                value_from_json(field_of(j, "theta_m", pointer), cat.field(), child(pointer, "theta_m"))};
  return out;
}

Json to_json(const BraidingRecord& r) {
  const MonoidalData& cat = r.data.parent();
  const int n = cat.order();
  const auto key = [&](int g) { return cat.group().key(cat.group().element(g)); };
  Json s0 = Json::object();
  std::vector<CycloNum> s1, s2, s3;
  for (int a = 0; a < n; ++a) {
    Json row = Json::object();
    for (int b = 0; b < n; ++b) row[key(b)] = value_to_json(r.data.sigma0(a, b));
    s0[key(a)] = std::move(row);
    s1.push_back(r.data.sigma1(a));
    s2.push_back(r.data.sigma2(a));
    s3.push_back(r.data.sigma3(a));
  }
  Json out{{"sigma0", s0},
           {"sigma1", table_to_json(cat, s1)},
           {"sigma2", table_to_json(cat, s2)},
           {"sigma3", table_to_json(cat, s3)}};
  if (r.params) out["params"] = to_json(*r.params);
  if (r.twists) {
    Json tw = Json::array();
    for (const auto& t : *r.twists) tw.push_back(to_json(t, cat));
    out["twists"] = std::move(tw);
  }
  return out;
}

BraidingRecord braiding_from_json(const Json& j, const MonoidalPtr& cat, const std::string& pointer) {
  require_object(j, pointer);
  const auto s0p = child(pointer, "sigma0");
  const auto rows = table_from_json(field_of(j, "sigma0", pointer), *cat, s0p,
                                    [&](const Json& row, const std::string& p) { return values_table(row, *cat, p); });
  std::vector<CycloNum> s0;
  for (const auto& row : rows) s0.insert(s0.end(), row.begin(), row.end());
  auto s1 = values_table(field_of(j, "sigma1", pointer), *cat, child(pointer, "sigma1"));
  auto s2 = values_table(field_of(j, "sigma2", pointer), *cat, child(pointer, "sigma2"));
  auto s3 = values_table(field_of(j, "sigma3", pointer), *cat, child(pointer, "sigma3"));

  BraidingRecord out{std::nullopt, BraidingData(cat, std::move(s0), std::move(s1), std::move(s2), std::move(s3)),
                     std::nullopt};
  if (j.contains("params")) {
    const auto pp = child(pointer, "params");
    out.params = params_from_json(j["params"], pp);
    if (static_cast<int>(out.params->delta.size()) != cat->group().rank()) {
      throw SchemaError(child(pp, "delta"), "expected " + std::to_string(cat->group().rank()) + " entries");
    }
  }
  if (j.contains("twists")) {
    const auto tp = child(pointer, "twists");
    const Json& tw = require_array(j["twists"], tp);
    std::vector<TwistData> twists;
    for (std::size_t i = 0; i < tw.size(); ++i) twists.push_back(twist_from_json(tw[i], *cat, child(tp, i)));
    out.twists = std::move(twists);
  }
  return out;
}

Json to_json(const Document& d) {
  Json braidings = Json::array();
  for (const auto& b : d.braidings) braidings.push_back(to_json(b));
  return Json{{"monoidal", to_json(*d.monoidal)}, {"braidings", braidings}};
}

Document document_from_json(const Json& j) {
  require_object(j, "");
  Document out;
  if (!j.contains("monoidal")) {
    out.monoidal = monoidal_from_json(j, "");
    return out;
  }
  out.monoidal = monoidal_from_json(j["monoidal"], "/monoidal");
  if (j.contains("braidings")) {
    const Json& bs = require_array(j["braidings"], "/braidings");
    for (std::size_t i = 0; i < bs.size(); ++i) {
      out.braidings.push_back(braiding_from_json(bs[i], out.monoidal, child("/braidings", i)));
    }
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

Document classification_document(const MonoidalPtr& cat, const std::vector<EnumeratedBraiding>& braidings) {
  Document out{cat, {}};
  for (const auto& e : braidings) out.braidings.push_back({e.params, e.data, compute_twists(e.data)});
  return out;
}

}  // namespace ngc
