#include "ngc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "ngc/braiding.hpp"
#include "ngc/errors.hpp"
#include "ngc/oracle.hpp"
#include "ngc/serialize.hpp"

namespace ngc {

namespace {

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string value_text(const CycloNum& v) {
  const std::string z = "z" + std::to_string(v.conductor());
  if (const auto r = as_root_of_unity(v)) return z + "^" + std::to_string(r->exponent);
  std::string poly = v.to_string();
  std::string out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 'z') {
      out += z;
      if (i + 1 == poly.size() || poly[i + 1] != '^') out += "^1";
    } else {
      out += poly[i];
    }
  }
  return out;
}

std::string list_text(const std::vector<CycloNum>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + value_text(values[i]);
  return out + "]";
}

std::string gram_text(const MonoidalData& cat) {
  const auto b = cat.chi().binary_gram();
  const auto& rows = b && cat.group().is_elementary_2() ? *b : cat.chi().gram();
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) out += (c ? "," : "") + std::to_string(rows[r][c]);
    out += "]";
  }
  return out + "]";
}

std::string pass_text(bool ok) { return ok ? "PASS" : "FAIL"; }

void write_legend(const MonoidalData& cat, std::ostream& out) {
  out << "group: " << cat.group().to_string() << "  gram: " << gram_text(cat) << "  tau: " << value_text(cat.tau())
      << " (tau_sign " << sign_char(cat.tau_sign()) << "1)\n";
  out << "legend: zM^k = exp(2 pi i k / M), M = " << cat.conductor() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path || *path == "-") {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw Error("cannot write " + *path);
  f << text;
}

struct Row {
  BraidingParams params;
  BraidingData data;
  std::vector<TwistData> twists;
  ReducedReport reduced;
  DirectReport direct;
  std::optional<RootOrderReport> orders;
  bool twists_ok = false;

  bool passed() const { return reduced.passed && direct.passed && twists_ok && orders && orders->within_bound; }
};

std::vector<Row> classify_rows(const MonoidalPtr& cat, int threads) {
  const HexagonSystem system(cat);
  std::vector<Row> rows;
  for (const auto& p : all_params(cat->group().rank())) {
    BraidingData b = construct_braiding(cat, p);
    Row row{p, b, {}, verify_hexagons_reduced(b), verify_hexagons_direct(b, &system, threads), std::nullopt, false};
    try {
      row.twists = compute_twists(b);
      row.twists_ok = row.twists.size() == 2;
    } catch (const Error&) {
      row.twists_ok = false;
    }
    try {
      row.orders = root_order_report(b);
    } catch (const Error&) {
      row.orders.reset();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool sigma0_is_chi(const BraidingData& b) {
  const auto& cat = b.parent();
  for (int g = 0; g < cat.order(); ++g) {
    for (int h = 0; h < cat.order(); ++h) {
      if (!(b.sigma0(g, h) == cat.chi(g, h))) return false;
    }
  }
  return true;
}

std::string sigma0_text(const BraidingData& b) {
  if (sigma0_is_chi(b)) return "chi";
  const auto& cat = b.parent();
  std::string out = "[";
  for (int g = 0; g < cat.order(); ++g) {
    std::vector<CycloNum> row;
    for (int h = 0; h < cat.order(); ++h) row.push_back(b.sigma0(g, h));
    out += (g ? "," : "") + list_text(row);
  }
  return out + "]";
}

std::vector<CycloNum> table(const BraidingData& b, int which) {
  std::vector<CycloNum> out;
  for (int g = 0; g < b.parent().order(); ++g) {
    out.push_back(which == 1 ? b.sigma1(g) : which == 2 ? b.sigma2(g) : b.sigma3(g));
  }
  return out;
}

}  // namespace

int default_threads() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("NGC_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) threads = std::min<long>(threads, cap);
  }
  return threads;
}

MonoidalPtr select_monoidal(const RunConfig& cfg) {
  if (cfg.rank < 1 || cfg.rank > 4) throw InvalidForm("rank must lie in 1..4");
  const GroupSpec group = GroupSpec::elementary_2(cfg.rank);
  if (cfg.form == "hyperbolic") return build_monoidal(group, hyperbolic_form(cfg.rank), cfg.tau_sign);
  if (cfg.form == "diagonal") return build_monoidal(group, diagonal_form(cfg.rank), cfg.tau_sign);
  if (cfg.form.empty() || cfg.form.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidForm("form must be an index, \"hyperbolic\" or \"diagonal\", got \"" + cfg.form + "\"");
  }
  const auto forms = enumerate_forms(cfg.rank);
  const unsigned long idx = std::stoul(cfg.form);
  if (idx >= forms.size()) {
    throw InvalidForm("form index " + cfg.form + " out of range; rank " + std::to_string(cfg.rank) + " has " +
                      std::to_string(forms.size()) + " forms");
  }
  return build_monoidal(group, forms[idx], cfg.tau_sign);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.oracle && cfg.rank > 2) {
    err << "error: --oracle supports rank <= 2\n";
    return kExitUsage;
  }
  MonoidalPtr cat;
  try {
    cat = select_monoidal(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto rows = classify_rows(cat, cfg.threads);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.passed();

  std::optional<OracleComparison> oracle;
  if (cfg.oracle) {
    oracle = oracle_compare(cat, cfg.threads);
    ok = ok && oracle->equal;
  }

  Document doc{cat, {}};
  for (const auto& r : rows) doc.braidings.push_back({r.params, r.data, r.twists_ok ? std::optional(r.twists) : std::nullopt});
  if (cfg.output) write_text(cfg.output, dump(to_json(doc)), out);

  if (cfg.json) {
    Json report = to_json(doc);
    Json checks = Json::array();
    for (const auto& r : rows) {
      checks.push_back(Json{{"params", to_json(r.params)},
                            {"reduced", r.reduced.passed},
                            {"direct", r.direct.passed},
                            {"twists", r.twists_ok},
                            {"max_order", r.orders ? r.orders->max_order : 0}});
    }
    report["checks"] = std::move(checks);
    if (oracle) {
      report["oracle"] = Json{{"equal", oracle->equal},
                              {"oracle_count", oracle->oracle_count},
                              {"constructed_count", oracle->constructed_count}};
    }
    report["passed"] = ok;
    out << dump(report);
    return ok ? kExitPass : kExitFail;
  }

  write_legend(*cat, out);
  int max_order = 0;
  bool refined = true;
  for (const auto& r : rows) {
    out << r.params.to_string() << "  s0=" << sigma0_text(r.data) << "  s1=" << list_text(table(r.data, 1))
        << "  s2=" << list_text(table(r.data, 2)) << "  s3=" << list_text(table(r.data, 3));
    if (r.twists_ok) {
      out << "  theta_g=" << list_text(r.twists[0].theta_g) << "  theta_m={" << value_text(r.twists[0].theta_m) << ","
          << value_text(r.twists[1].theta_m) << "}";
    } else {
      out << "  twists=FAIL";
    }
    out << "  order=" << (r.orders ? std::to_string(r.orders->max_order) : "?") << "  reduced=" << pass_text(r.reduced.passed)
        << "  direct=" << pass_text(r.direct.passed) << "\n";
    if (r.orders) {
      max_order = std::max(max_order, r.orders->max_order);
      refined = refined && r.orders->refined;
    } else {
      refined = false;
    }
  }
  const int n = cat->order();
  out << rows.size() << " braidings; max root order " << max_order << " divides 8|G| = " << 8 * n << ": "
      << ((8 * n) % std::max(1, max_order) == 0 ? "yes" : "no") << "\n";
  out << "refined root bound 4|G| = " << 4 * n << ": "
      << (refined ? "yes" : (form_checks(cat->chi()).diag_trivial ? "NO" : "not applicable (chi(g,g) = -1 for some g)"))
      << "\n";
  if (oracle) out << oracle->summary() << "\n";
  out << "result: " << pass_text(ok) << "\n";
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.input) {
    err << "error: verify needs an input file\n";
    return kExitUsage;
  }
  Document doc;
  try {
    doc = document_from_json(parse_json(read_file(*cfg.input)));
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const MonoidalData& cat = *doc.monoidal;
  bool ok = true;
  Json report;

  const auto pentagon = verify_pentagon(cat, cfg.threads);
  ok = ok && pentagon.passed;
  report["pentagon"] = Json{{"passed", pentagon.passed},
                            {"quadruples", pentagon.quadruples_checked},
                            {"inverse_identity", pentagon.inverse_identity}};
  std::ostringstream text;
  write_legend(cat, text);
  text << "pentagon: " << pass_text(pentagon.passed) << " (" << pentagon.quadruples_checked << " quadruples, inverse identity "
       << (pentagon.inverse_identity ? "holds" : "FAILS") << ")\n";
  if (pentagon.first_failure) {
    const auto& q = pentagon.first_failure->quadruple;
    text << "  first failing quadruple (" << label_name(cat, q[0]) << "," << label_name(cat, q[1]) << ","
         << label_name(cat, q[2]) << "," << label_name(cat, q[3]) << ")\n";
  }

  std::optional<HexagonSystem> system;
  if (!doc.braidings.empty()) system.emplace(doc.monoidal);
  Json records = Json::array();
  for (std::size_t i = 0; i < doc.braidings.size(); ++i) {
    const auto& rec = doc.braidings[i];
    const auto& b = rec.data;
    std::vector<std::string> problems;
    Json rj;

    const auto reduced = verify_hexagons_reduced(b);
    Json failed_eq = Json::array();
    for (int k = 1; k <= 10; ++k) {
      if (reduced.equation_holds(k)) continue;
      failed_eq.push_back(k);
      std::string witness;
      for (const auto& f : reduced.failures) {
        if (f.equation == k) {
          witness = f.witness;
          break;
        }
      }
      problems.push_back("reduced equation " + std::to_string(k) + " fails: " + reduced_equation(k) + " [" + witness + "]");
    }
    rj["reduced"] = Json{{"passed", reduced.passed}, {"failed_equations", failed_eq}};

    const auto direct = verify_hexagons_direct(b, &*system, cfg.threads);
    Json failed_tri = Json::array();
    for (const auto& f : direct.failures) {
      const std::string name = std::string(f.inverse ? "inverse " : "") + "hexagon (" + label_name(cat, f.triple[0]) +
                               "," + label_name(cat, f.triple[1]) + "," + label_name(cat, f.triple[2]) + ")";
      failed_tri.push_back(name);
      if (failed_tri.size() <= 3) problems.push_back(name + " fails");
    }
    rj["direct"] = Json{{"passed", direct.passed}, {"diagrams", direct.diagrams_checked}, {"failed", failed_tri}};

    try {
      const auto got = extract_invariants(b);
      rj["invariants"] = to_json(got);
      if (rec.params && !(got == *rec.params)) {
        for (std::size_t k = 0; k < got.delta.size() && k < rec.params->delta.size(); ++k) {
          if (got.delta[k] != rec.params->delta[k]) {
            problems.push_back("delta_" + std::to_string(k + 1) + " extraction mismatch: recorded " +
                               sign_char(rec.params->delta[k]) + "1, extracted " + sign_char(got.delta[k]) + "1");
          }
        }
        if (got.epsilon != rec.params->epsilon) {
          problems.push_back("epsilon extraction mismatch: recorded " + sign_char(rec.params->epsilon) +
                             "1, extracted " + sign_char(got.epsilon) + "1");
        }
      }
    } catch (const Error& e) {
      rj["invariants"] = Json{{"error", e.what()}};
      problems.push_back(std::string("invariant extraction: ") + e.what());
    }

    try {
      const auto orders = root_order_report(b);
      rj["root_order"] = Json{{"max_order", orders.max_order},
                              {"bound", orders.bound},
                              {"within_bound", orders.within_bound},
                              {"refined", orders.refined}};
      if (!orders.within_bound) {
        problems.push_back("root order " + std::to_string(orders.max_order) + " does not divide 8|G| = " +
                           std::to_string(orders.bound));
      }
    } catch (const Error& e) {
      rj["root_order"] = Json{{"error", e.what()}};
      problems.push_back(std::string("root order: ") + e.what());
    }

    if (rec.twists) {
      Json tj = Json::array();
      if (rec.twists->size() != 2) problems.push_back("expected exactly 2 twists, found " + std::to_string(rec.twists->size()));
      for (std::size_t t = 0; t < rec.twists->size(); ++t) {
        const auto c = check_twist(b, (*rec.twists)[t]);
        tj.push_back(Json{{"multiplicative", c.multiplicative}, {"from_sigma1", c.from_sigma1}, {"balances_m", c.balances_m}});
        const std::string who = "twist " + std::to_string(t) + ": ";
        if (!c.multiplicative) problems.push_back(who + "theta_gh = theta_g theta_h fails");
        if (!c.from_sigma1) problems.push_back(who + "theta_g = sigma1(g)^2 fails");
        if (!c.balances_m) problems.push_back(who + "theta_g = theta_m^2 sigma3(g)^2 fails");
      }
      rj["twists"] = std::move(tj);
    }

    const bool passed = problems.empty();
    ok = ok && passed;
    rj["passed"] = passed;
    rj["problems"] = problems;
    records.push_back(std::move(rj));

    text << "braiding " << i;
    if (rec.params) text << " " << rec.params->to_string();
    text << ": reduced " << pass_text(reduced.passed) << ", direct " << pass_text(direct.passed) << " ("
         << direct.diagrams_checked << " diagrams)";
    if (rec.twists) text << ", twists " << rec.twists->size();
    text << " -> " << pass_text(passed) << "\n";
    for (const auto& p : problems) text << "  " << p << "\n";
  }
  report["braidings"] = std::move(records);
  report["passed"] = ok;
  text << "result: " << pass_text(ok) << "\n";

  out << (cfg.json ? dump(report) : text.str());
  return ok ? kExitPass : kExitFail;
}

int cmd_example(const RunConfig&, std::ostream& out, std::ostream&) {
  const GroupSpec z2 = GroupSpec::elementary_2(1);
  const Bicharacter chi = enumerate_forms(1).front();
  bool ok = true;
  out << "G = Z/2 = <g>, chi(g,g) = -1, I = z16^4\n";
  out << "sigma1(g) = sigma2(g) = delta I, sigma3(1)^2 = tau (1 + delta I), sigma3(g) = sigma3(1) sigma1(g) chi(g,g) = -delta I sigma3(1)\n";
  out << "legend: z16^k = exp(2 pi i k / 16)\n";
  for (const int tau : {1, -1}) {
    const auto cat = build_monoidal(z2, chi, tau);
    const CycloNum i = CycloNum::root(cat->field(), 4);
    for (const auto& p : all_params(1)) {
      const auto b = construct_braiding(cat, p);
      const int delta = p.delta[0];
      const CycloNum delta_i = i.scaled(mpq_class(delta));
      const CycloNum s3_g = -(b.sigma3(0) * delta_i);
      const bool table_ok = b.sigma1(0).is_one() && b.sigma2(0).is_one() && b.sigma1(1) == delta_i &&
                            b.sigma2(1) == delta_i && b.sigma3(1) == s3_g &&
                            b.sigma3(0) * b.sigma3(0) == cat->tau() * (cat->one() + delta_i);
      const auto o1 = root_order(b.sigma3(0));
      const auto og = root_order(b.sigma3(1));
      const bool primitive = o1 == 16 && og == 16;
      ok = ok && table_ok && primitive;
      out << "tau=" << sign_char(tau) << "1/sqrt2  delta=" << sign_char(delta) << "1  epsilon=" << sign_char(p.epsilon)
          << "1  sigma1(1)=" << value_text(b.sigma1(0)) << "  sigma1(g)=" << value_text(b.sigma1(1))
          << "  sigma3(1)=" << value_text(b.sigma3(0)) << "  sigma3(g)=" << value_text(b.sigma3(1))
          << "  orders=" << o1.value_or(0) << "," << og.value_or(0) << "  " << pass_text(table_ok && primitive) << "\n";
    }
  }
  out << "sigma3 values primitive 16th roots for every parameter choice: " << (ok ? "yes" : "NO") << "\n";
  return ok ? kExitPass : kExitFail;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Document doc;
  if (cfg.input) {
    try {
      doc = document_from_json(parse_json(read_file(*cfg.input)));
    } catch (const SchemaError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    try {
      const auto cat = select_monoidal(cfg);
      doc = classification_document(cat, enumerate_braidings(cat, cfg.threads));
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  write_text(cfg.output, dump(to_json(doc)), out);
  return kExitPass;
}

int cmd_obstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.group.empty()) {
    err << "error: obstruct needs --group d1,d2,...\n";
    return kExitUsage;
  }
  for (int d : cfg.group) {
    if (d < 2) {
      err << "error: group factors must be >= 2\n";
      return kExitUsage;
    }
  }
  const GroupSpec group(cfg.group);
  const auto o = braidability_obstruction(group);
  out << group.to_string() << " (order " << group.order() << "): " << (o.braidable ? "braidable" : "not braidable")
      << "\n";
  if (o.witness) {
    const auto& w = *o.witness;
    out << "witness: a = " << group.key(w.element) << ", order " << w.order << ", "
        << (w.kind == ObstructionWitness::Kind::OddOrder ? "odd" : "even") << " case, chi(" << group.key(w.trivialized)
        << ",-) = 1\n";
    for (const auto& line : w.chain) out << "  " << line << "\n";
  }
  return kExitPass;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-group categories: braidings, verification and classification", "ngc"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = default_threads();
  std::string tau = "+";
  std::string input;
  std::string output;
  std::string group;

  const auto tau_check = CLI::IsMember({"+", "-", "+1", "-1"});

  auto* classify = app.add_subcommand("classify", "enumerate and verify every braiding of one category");
  classify->add_option("--rank", cfg.rank, "rank n of (Z/2)^n")->check(CLI::Range(1, 4));
  classify->add_option("--form", cfg.form, "form index, hyperbolic or diagonal");
  classify->add_option("--tau", tau, "sign of tau")->check(tau_check);
  classify->add_flag("--oracle", cfg.oracle, "compare against the brute-force search (rank <= 2)");
  classify->add_flag("--json", cfg.json, "print a JSON report");
  classify->add_option("--out", output, "write the classification document to a file");

  auto* verify = app.add_subcommand("verify", "check a monoidal or classification document");
  verify->add_option("input", input, "JSON file")->required();
  verify->add_flag("--json", cfg.json, "print a JSON report");

  app.add_subcommand("example", "the Z/2 example table for both signs of tau");

  auto* exp = app.add_subcommand("export", "write a classification document, or normalise an existing one");
  exp->add_option("--in", input, "document to re-export");
  exp->add_option("--out", output, "destination (stdout when omitted)");
  exp->add_option("--rank", cfg.rank, "rank n of (Z/2)^n")->check(CLI::Range(1, 4));
  exp->add_option("--form", cfg.form, "form index, hyperbolic or diagonal");
  exp->add_option("--tau", tau, "sign of tau")->check(tau_check);

  auto* obstruct = app.add_subcommand("obstruct", "decide whether a group admits braided near-group categories");
  obstruct->add_option("--group", group, "invariant factors, e.g. 2,4")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  cfg.tau_sign = tau.front() == '-' ? -1 : 1;
  if (!input.empty()) cfg.input = input;
  if (!output.empty()) cfg.output = output;

  try {
    if (classify->parsed()) return cmd_classify(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (exp->parsed()) return cmd_export(cfg, out, err);
    if (obstruct->parsed()) {
      std::istringstream is(group);
      std::string part;
      while (std::getline(is, part, ',')) {
        if (part.empty() || part.size() > 3 || part.find_first_not_of("0123456789") != std::string::npos) {
          err << "error: malformed invariant factors \"" << group << "\"\n";
          return kExitUsage;
        }
        cfg.group.push_back(std::stoi(part));
      }
      return cmd_obstruct(cfg, out, err);
    }
    return cmd_example(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace ngc
