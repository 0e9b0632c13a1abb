#include "wph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "list_parse.hpp"
#include "wph/errors.hpp"
#include "wph/families.hpp"
#include "wph/hilbert.hpp"
#include "wph/hypersurface.hpp"
#include "wph/search.hpp"
#include "wph/singularity.hpp"

namespace wph::cli {

namespace {

using Json = nlohmann::ordered_json;

// A command's output plus whether all of its checks passed.
struct Outcome {
  Json document;
  bool passed = true;
};

// --- text rendering --------------------------------------------------------

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

bool is_flat(const Json& value) {
  if (value.is_object()) {
    return std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); });
  }
  if (value.is_array()) {
    return std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); });
  }
  return true;
}

void render(std::ostream& os, const Json& value, int indent);

void render_entry(std::ostream& os, const std::string& key, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_primitive()) {
    os << pad << key << ": " << scalar_text(value) << '\n';
  } else if (value.is_array() && is_flat(value)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
    os << "]\n";
  } else {
    os << pad << key << ":\n";
    render(os, value, indent + 2);
  }
}

void render(std::ostream& os, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) render_entry(os, key, item, indent);
    return;
  }
  for (const auto& item : value) {
    if (item.is_object() && is_flat(item)) {
      os << pad << "-";
      for (const auto& [key, field] : item.items()) os << ' ' << key << '=' << scalar_text(field);
      os << '\n';
    } else if (item.is_primitive()) {
      os << pad << "- " << scalar_text(item) << '\n';
    } else {
      os << pad << "-\n";
      render(os, item, indent + 2);
    }
  }
}

// --- shared pieces ---------------------------------------------------------

Json bigints(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json plurigenera_json(const std::vector<BigInt>& values) {
  Json out = Json::object();
  for (std::size_t m = 0; m < values.size(); ++m) out["P_" + std::to_string(m + 1)] = values[m].str();
  return out;
}

Json stratum_json(const StratumEntry& entry) {
  Json indices = Json::array();
  for (std::size_t i : entry.stratum.indices) indices.push_back(i);
  Json out;
  out["stratum"] = indices;
  out["h"] = entry.stratum.h;
  const bool compact = entry.ambient_type.weights().size() > 24;
  out["ambient_type"] = to_string(entry.ambient_type, compact);
  out["ambient_class"] = std::string(to_string(entry.ambient_class));
  out["ambient_min"] = "min=" + entry.ambient_min.value.to_string() + " at j=" + std::to_string(entry.ambient_min.j);
  out["incidence"] = std::string(to_string(entry.incidence));
  out["member_type"] = entry.member_type ? Json(to_string(*entry.member_type, compact)) : Json(nullptr);
  out["member_class"] = entry.member_class ? Json(std::string(to_string(*entry.member_class))) : Json(nullptr);
  out["eliminated_variable"] = entry.eliminated_variable ? Json(*entry.eliminated_variable) : Json(nullptr);
  Json reflections = Json::array();
  for (Weight j : entry.quasi_reflections) reflections.push_back(j);
  out["quasi_reflection_j"] = reflections;
  return out;
}

Json family_json(const FamilyReport& report, std::optional<unsigned> decimal) {
  Json out;
  out["family"] = report.family;
  Json params = Json::object();
  for (const auto& [name, value] : report.parameters) params[name] = value;
  out["parameters"] = params;
  out["weights"] = to_string(report.hypersurface.weights(), true);
  out["degree"] = report.hypersurface.degree();
  const Rational vol = volume(report.hypersurface);
  out["volume"] = vol.to_string();
  if (decimal) out["volume_decimal_approx"] = vol.to_decimal(*decimal) + " (approx)";
  out["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}});
  out["checks"] = checks;
  out["notes"] = report.notes;
  return out;
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Weight v = detail::parse_integer(text, text);
    return {v, v};
  }
  const IntRange r{detail::parse_integer(text.substr(0, dots), text), detail::parse_integer(text.substr(dots + 2), text)};
  if (r.first > r.last) throw InvalidInput("empty range '" + text + "'");
  return r;
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text) {
  const Rational q = parse_rational(text);
  if (q <= Rational(0)) throw InvalidInput("volume must be positive: '" + text + "'");
  if (q.numerator() > 1'000'000 || q.denominator() > 1'000'000) throw InvalidInput("volume too large: '" + text + "'");
  if (text.find('/') != std::string::npos) {
    // reject non-reduced input rather than silently reducing it
    const auto slash = text.find('/');
    const Weight r = detail::parse_integer(text.substr(0, slash), text);
    const Weight s = detail::parse_integer(text.substr(slash + 1), text);
    if (std::gcd(r, s) != 1) throw InvalidInput("volume '" + text + "' is not in lowest terms");
  }
  return {q.numerator().convert_to<std::int64_t>(), q.denominator().convert_to<std::int64_t>()};
}

// --- commands --------------------------------------------------------------

struct AnalyzeArgs {
  std::string weights;
  std::int64_t degree = 0;
  std::int64_t plurigenera = 0;
};

Outcome analyze(const AnalyzeArgs& args, std::optional<unsigned> decimal, const Budgets& budgets) {
  const WeightedHypersurface x(parse_weights(args.weights), args.degree);
  const Weights& w = x.weights();
  Outcome outcome;
  Json& doc = outcome.document;
  doc["inputs"] = {{"weights", args.weights}, {"degree", args.degree}};
  if (args.plurigenera > 0) doc["inputs"]["plurigenera"] = args.plurigenera;

  const auto report = singularity_report(x, budgets);
  Json results;
  results["weights"] = to_string(w, w.size() > 24);
  results["degree"] = x.degree();
  results["dimension"] = x.dimension();
  results["amplitude"] = x.amplitude();
  results["well_formed"] = report.well_formed;
  results["quasi_smooth"] = report.quasi_smooth;
  results["ambient_canonical"] = report.ambient_canonical ? Json(*report.ambient_canonical) : Json(nullptr);
  if (x.amplitude() >= 1) {
    const Rational vol = volume(x);
    results["volume"] = vol.to_string();
    if (decimal) results["volume_decimal_approx"] = vol.to_decimal(*decimal) + " (approx)";
  } else {
    results["volume"] = nullptr;
  }
  Json points = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (contains_coordinate_point(x, i)) points.push_back(i);
  }
  results["contained_coordinate_points"] = points;
  Json strata = Json::array();
  for (const auto& entry : report.entries) strata.push_back(stratum_json(entry));
  results["singularities"] = strata;
  results["member_class"] =
      report.member_class ? Json(std::string(to_string(*report.member_class))) : Json("not asserted (not quasi-smooth)");
  if (args.plurigenera > 0) results["plurigenera"] = plurigenera_json(plurigenera_table(x, args.plurigenera, budgets));
  doc["results"] = results;
  doc["checks"] = Json::array();
  return outcome;
}

Outcome plurigenera(const AnalyzeArgs& args, const Budgets& budgets) {
  const WeightedHypersurface x(parse_weights(args.weights), args.degree);
  if (args.plurigenera < 1) throw InvalidInput("--up-to must be at least 1");
  Outcome outcome;
  Json& doc = outcome.document;
  doc["inputs"] = {{"weights", args.weights}, {"degree", args.degree}, {"up_to", args.plurigenera}};
  Json results;
  results["amplitude"] = x.amplitude();
  results["quasi_smooth"] = quasi_smooth(x, budgets);
  results["plurigenera"] = plurigenera_json(plurigenera_table(x, args.plurigenera, budgets));
  doc["results"] = results;
  doc["checks"] = Json::array();
  return outcome;
}

Outcome reid_tai(const std::string& literal, std::optional<unsigned> decimal, const Budgets& budgets) {
  const auto s = parse_quotient(literal);
  Outcome outcome;
  Json& doc = outcome.document;
  doc["inputs"] = {{"singularity", literal}};
  Json results;
  results["type"] = to_string(s);
  results["residues"] = s.residues();
  const SingularityClass c = classify_quotient(s, budgets);
  results["class"] = std::string(to_string(c));
  if (s.order() >= 2) {
    const auto min = reid_tai_min(s, budgets);
    results["min"] = min.value.to_string();
    if (decimal) results["min_decimal_approx"] = min.value.to_decimal(*decimal) + " (approx)";
    results["j"] = min.j;
    results["summary"] = std::string(to_string(c)) + " min=" + min.value.to_string() + " at j=" + std::to_string(min.j);
    results["quasi_reflection_j"] = quasi_reflections(s, budgets);
  } else {
    results["min"] = nullptr;
    results["summary"] = "Smooth (trivial group)";
  }
  doc["results"] = results;
  doc["checks"] = Json::array();
  return outcome;
}

Outcome verify_reports(const std::vector<FamilyReport>& reports, std::optional<unsigned> decimal) {
  Outcome outcome;
  Json list = Json::array();
  for (const auto& r : reports) {
    list.push_back(family_json(r, decimal));
    outcome.passed = outcome.passed && r.passed();
  }
  outcome.document["results"] = {{"reports", list}};
  Json checks = Json::array();
  for (const auto& r : reports) {
    std::string label = r.family;
    for (const auto& [name, value] : r.parameters) {
      if (name != "degree" && name != "dimension" && name != "member_dimension" && name != "obstruction_degree") {
        label += " " + name + "=" + value;
      }
    }
    checks.push_back({{"name", label}, {"passed", r.passed()}});
  }
  outcome.document["checks"] = checks;
  return outcome;
}

struct VerifyArgs {
  std::string family;
  bool all = false;
  std::string k = "2..6", l = "0..4", n, q;
};

Outcome verify(const VerifyArgs& args, std::optional<unsigned> decimal, const Budgets& budgets) {
  Json inputs;
  std::vector<FamilyReport> reports;
  if (args.all) {
    inputs["all"] = true;
    reports = verify_all(VerifyRanges{}, budgets).reports;
  } else {
    inputs["family"] = args.family;
    const std::string& f = args.family;
    if (f == "prop" || f == "canonical") {
      const IntRange k = parse_range(args.k), l = parse_range(args.l);
      inputs["k"] = args.k;
      inputs["l"] = args.l;
      for (auto kk = k.first; kk <= k.last; ++kk) {
        for (auto ll = l.first; ll <= l.last; ++ll) reports.push_back(canonical_family(kk, ll, budgets));
      }
    } else if (f == "thm3" || f == "vanishing" || f == "thm4" || f == "obstruction" || f == "ample") {
      if (args.n.empty()) throw InvalidInput("--n is required for family " + f);
      inputs["n"] = args.n;
      const IntRange n = parse_range(args.n);
      for (auto nn = n.first; nn <= n.last; ++nn) {
        if (f == "thm3" || f == "vanishing") {
          reports.push_back(vanishing_plurigenera_witness(nn, budgets));
        } else if (f == "ample") {
          reports.push_back(ample_witness(nn, budgets));
        } else {
          reports.push_back(finite_map_obstruction_witness(nn, budgets));
        }
      }
    } else if (f == "volume") {
      if (args.q.empty()) throw InvalidInput("--q is required for family volume");
      inputs["q"] = args.q;
      for (const auto& item : detail::split_list(args.q)) {
        const auto [r, s] = parse_fraction(item);
        reports.push_back(volume_witness(r, s, std::nullopt, std::nullopt, budgets));
      }
    } else {
      throw InvalidInput("unknown family '" + f + "' (prop, thm3, thm4, ample, volume)");
    }
  }
  Outcome outcome = verify_reports(reports, decimal);
  outcome.document = Json{{"inputs", inputs}, {"results", outcome.document["results"]},
                          {"checks", outcome.document["checks"]}};
  return outcome;
}

Outcome construct_volume(const std::string& q, std::optional<std::int64_t> a, std::optional<std::int64_t> b,
                         std::optional<unsigned> decimal, const Budgets& budgets) {
  const auto [r, s] = parse_fraction(q);
  Outcome outcome = verify_reports({volume_witness(r, s, a, b, budgets)}, decimal);
  Json inputs{{"q", q}};
  if (a) inputs["a"] = *a;
  if (b) inputs["b"] = *b;
  outcome.document = Json{{"inputs", inputs}, {"results", outcome.document["results"]},
                          {"checks", outcome.document["checks"]}};
  return outcome;
}

struct SearchArgs {
  SearchOptions options;
  bool min_only = false;
};

Json record_json(const SearchRecord& r, std::optional<unsigned> decimal) {
  Json out;
  out["weights"] = to_string(r.weights);
  out["degree"] = r.degree;
  out["amplitude"] = r.amplitude;
  out["volume"] = r.volume.to_string();
  if (decimal) out["volume_decimal_approx"] = r.volume.to_decimal(*decimal) + " (approx)";
  out["plurigenera"] = bigints(r.plurigenera);
  out["well_formed"] = r.well_formed;
  out["quasi_smooth"] = r.quasi_smooth;
  out["canonical"] = r.canonical;
  out["ambient_canonical"] = r.ambient_canonical;
  return out;
}

void write_csv(std::ostream& os, const std::vector<SearchRecord>& records, std::int64_t columns) {
  os << "weights,d,volume";
  for (std::int64_t m = 1; m <= columns; ++m) os << ",P_" << m;
  os << ",well_formed,quasi_smooth,canonical,ambient_canonical\n";
  for (const auto& r : records) {
    os << '"' << to_string(r.weights) << "\"," << r.degree << ',' << r.volume.to_string();
    for (const auto& p : r.plurigenera) os << ',' << p.str();
    for (bool flag : {r.well_formed, r.quasi_smooth, r.canonical, r.ambient_canonical}) {
      os << ',' << (flag ? "true" : "false");
    }
    os << '\n';
  }
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Budgets budgets;
  try {
    budgets = budgets_from_env();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(args, out, err, budgets);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Budgets& given) {
  Budgets budgets = given;
  CLI::App app{"Weighted projective hypersurfaces: singularities, plurigenera, volumes", "wph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  bool json = false;
  bool csv = false;
  std::optional<unsigned> decimal;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Structured JSON output");
    sub->add_option("--decimal", decimal, "Append a truncated decimal approximation with this many digits");
  };

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Well-formedness, quasi-smoothness, volume and singularities of X_d");
  analyze_cmd->add_option("--weights", analyze_args.weights, "Comma-separated weights, e.g. 4,5,6,7,23")->required();
  analyze_cmd->add_option("--degree", analyze_args.degree, "Degree d")->required();
  analyze_cmd->add_option("--plurigenera", analyze_args.plurigenera, "Also list P_1..P_M");
  add_common(analyze_cmd);

  AnalyzeArgs pluri_args;
  auto* pluri_cmd = app.add_subcommand("plurigenera", "Plurigenera table of X_d");
  pluri_cmd->add_option("--weights", pluri_args.weights, "Comma-separated weights")->required();
  pluri_cmd->add_option("--degree", pluri_args.degree, "Degree d")->required();
  pluri_cmd->add_option("--up-to", pluri_args.plurigenera, "Largest m")->required();
  add_common(pluri_cmd);

  std::string literal;
  auto* rt_cmd = app.add_subcommand("reid-tai", "Classify a cyclic quotient singularity such as 1/6(2,2,3)");
  rt_cmd->add_option("singularity", literal, "Literal 1/r(b_1,...,b_m)")->required();
  add_common(rt_cmd);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the explicit families");
  verify_cmd->add_option("--family", verify_args.family, "prop | thm3 | thm4 | ample | volume");
  verify_cmd->add_flag("--all", verify_args.all, "Every family over its default range");
  verify_cmd->add_option("--k", verify_args.k, "k or k1..k2 (prop)");
  verify_cmd->add_option("--l", verify_args.l, "l or l1..l2 (prop)");
  verify_cmd->add_option("--n", verify_args.n, "n or n1..n2 (thm3, thm4, ample)");
  verify_cmd->add_option("--q", verify_args.q, "comma-separated volumes r/s (volume)");
  add_common(verify_cmd);

  std::string q;
  std::optional<std::int64_t> a_override;
  std::optional<std::int64_t> b_override;
  auto* volume_cmd = app.add_subcommand("construct-volume", "Construct X with volume exactly r/s");
  volume_cmd->add_option("q", q, "Target volume r/s in lowest terms")->required();
  volume_cmd->add_option("--a", a_override, "Override a");
  volume_cmd->add_option("--b", b_override, "Override b");
  add_common(volume_cmd);

  SearchArgs search_args;
  std::optional<unsigned> jobs;
  auto* search_cmd = app.add_subcommand("search", "Enumerate canonical quasi-smooth hypersurfaces by weight sum");
  search_cmd->add_option("--dim", search_args.options.member_dim, "Dimension of the hypersurface")->required();
  search_cmd->add_option("--max-sum", search_args.options.max_weight_sum, "Bound on the sum of the weights")->required();
  search_cmd->add_option("--vanishing", search_args.options.vanishing, "Require P_1 = ... = P_V = 0");
  search_cmd->add_option("--plurigenera", search_args.options.plurigenera_up_to, "Report P_1..P_M");
  search_cmd->add_option("--amplitude", search_args.options.amplitude, "d - sum(weights)");
  search_cmd->add_option("--jobs", jobs, "Worker threads");
  search_cmd->add_flag("--min", search_args.min_only, "Only the smallest-volume record");
  search_cmd->add_flag("--csv", csv, "CSV output");
  add_common(search_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (jobs) budgets.search_jobs = *jobs;
  if (json && csv) {
    err << "error: --json and --csv are exclusive\n";
    return kUsageError;
  }

  try {
    Outcome outcome;
    std::string command;
    if (*analyze_cmd) {
      command = "analyze";
      outcome = analyze(analyze_args, decimal, budgets);
    } else if (*pluri_cmd) {
      command = "plurigenera";
      outcome = plurigenera(pluri_args, budgets);
    } else if (*rt_cmd) {
      command = "reid-tai";
      outcome = reid_tai(literal, decimal, budgets);
    } else if (*verify_cmd) {
      command = "verify";
      if (verify_args.all == !verify_args.family.empty()) {
        throw InvalidInput("give exactly one of --family or --all");
      }
      outcome = verify(verify_args, decimal, budgets);
    } else if (*volume_cmd) {
      command = "construct-volume";
      outcome = construct_volume(q, a_override, b_override, decimal, budgets);
    } else {
      command = "search";
      const auto& opts = search_args.options;
      std::vector<SearchRecord> records;
      if (search_args.min_only) {
        records.push_back(find_min_volume(opts, budgets));
      } else {
        records = enumerate_candidates(opts, budgets);
      }
      if (csv) {
        write_csv(out, records, std::max(opts.plurigenera_up_to, opts.vanishing));
        return kOk;
      }
      Json list = Json::array();
      for (const auto& r : records) list.push_back(record_json(r, decimal));
      outcome.document["inputs"] = {{"dim", opts.member_dim},
                                    {"max_sum", opts.max_weight_sum},
                                    {"amplitude", opts.amplitude},
                                    {"vanishing", opts.vanishing},
                                    {"plurigenera", opts.plurigenera_up_to}};
      outcome.document["results"] = {
          {"bound", "weight sum <= " + std::to_string(opts.max_weight_sum) + "; no claim beyond this bound"},
          {"count", records.size()},
          {"records", list}};
      outcome.document["checks"] = Json::array();
    }

    Json doc;
    doc["command"] = command;
    doc["argv"] = join_args(args);
    doc["version"] = kVersion;
    for (auto& [key, value] : outcome.document.items()) doc[key] = value;
    doc["status"] = outcome.passed ? "pass" : "fail";
    if (json) {
      out << doc.dump(2) << '\n';
    } else {
      render(out, doc, 0);
    }
    return outcome.passed ? kOk : kCheckFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const EmptyResult& e) {
    err << "no result: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace wph::cli
