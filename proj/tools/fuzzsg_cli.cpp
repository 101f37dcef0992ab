// fuzzsg: classify fuzzy subgroups of small finite groups up to level-chain
// equality (~) and up to automorphism of the level chain.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 resource cap exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzsg/fuzzsg.hpp"
#include "report_json.hpp"

namespace {

using namespace fuzzsg;
using cli::big;
using nlohmann::json;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Options {
  std::string format = "text";
  Limits limits;
};

std::string num(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c + 1 < r.size(); ++c) os << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
    os << r.back() << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_tsv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) os << r[c] << (c + 1 < r.size() ? "\t" : "\n");
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::vector<std::vector<std::string>> fix_rows(const json& table) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table)
    rows.push_back({r["automorphism"].get<std::string>(), num(r["fixed_subgroups"]), num(r["fixed_chains"])});
  return rows;
}

const std::vector<std::string> kFixHeader{"automorphism", "fixed_subgroups", "fixed_chains"};

// ---- count ------------------------------------------------------------------

int cmd_count(const Options& opt, const std::string& spec_text, const std::string& relation, bool with_fix_table,
              bool with_reps) {
  const auto spec = parse_group_spec(spec_text);
  json doc{{"command", "count"}, {"group", spec.to_string()}, {"relation", relation}};
  Classification c;
  if (relation == "tilde") {
    auto group = std::make_shared<const FiniteGroup>(make_group(spec, opt.limits));
    auto lat = enumerate_subgroups(group, opt.limits);
    doc["order"] = group->order();
    doc["subgroup_count"] = lat.size();
    doc["h"] = big(count_chains(lat));
  } else {
    c = classify(spec, opt.limits, with_reps);
    doc["order"] = c.report.group_order;
    doc["subgroup_count"] = c.report.subgroup_count;
    doc["h"] = big(c.report.h);
    doc["N"] = big(c.report.n);
    doc["aut_order"] = c.report.aut_order;
    if (with_fix_table) doc["fix_table"] = cli::fix_table_json(c);
    if (with_reps) doc["orbits"] = cli::orbits_json(*c.lattice, *c.report.orbits);
  }

  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> summary{{"group", doc["group"]},
                                                {"relation", relation},
                                                {"order", num(doc["order"])},
                                                {"subgroups", num(doc["subgroup_count"])},
                                                {"h", num(doc["h"])}};
  if (doc.contains("N")) {
    summary.push_back({"N", num(doc["N"])});
    summary.push_back({"aut_order", num(doc["aut_order"])});
  }
  if (opt.format == "tsv") {
    print_tsv(std::cout, {"key", "value"}, summary);
    if (doc.contains("fix_table")) {
      std::cout << "\n";
      print_tsv(std::cout, kFixHeader, fix_rows(doc["fix_table"]));
    }
    if (doc.contains("orbits")) {
      std::cout << "\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& o : *c.report.orbits)
        rows.push_back({cli::chain_text(*c.lattice, o.representative), std::to_string(o.members.size())});
      print_tsv(std::cout, {"representative", "size"}, rows);
    }
    return kOk;
  }
  for (const auto& row : summary) std::cout << std::left << std::setw(11) << row[0] << row[1] << "\n";
  if (doc.contains("fix_table")) {
    std::cout << "\n";
    print_table(std::cout, kFixHeader, fix_rows(doc["fix_table"]));
  }
  if (doc.contains("orbits")) {
    std::cout << "\n";
    for (const auto& o : *c.report.orbits)
      std::cout << cli::chain_text(*c.lattice, o.representative) << "  [" << o.members.size() << "]\n";
  }
  return kOk;
}

// ---- orbits / chains / fix-table / lattice ------------------------------------

int cmd_orbits(const Options& opt, const std::string& spec_text) {
  const auto spec = parse_group_spec(spec_text);
  auto c = classify(spec, opt.limits, true);
  const auto& orbits = *c.report.orbits;
  if (opt.format == "json") {
    json doc{{"command", "orbits"},
             {"group", spec.to_string()},
             {"N", orbits.size()},
             {"orbits", cli::orbits_json(*c.lattice, orbits)}};
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& o : orbits)
    rows.push_back({cli::chain_text(*c.lattice, o.representative), std::to_string(o.members.size())});
  if (opt.format == "tsv") {
    print_tsv(std::cout, {"representative", "size"}, rows);
  } else {
    for (const auto& r : rows) std::cout << r[0] << "  [" << r[1] << "]\n";
  }
  return kOk;
}

int cmd_chains(const Options& opt, const std::string& spec_text) {
  const auto spec = parse_group_spec(spec_text);
  auto group = std::make_shared<const FiniteGroup>(make_group(spec, opt.limits));
  const auto lat = enumerate_subgroups(group, opt.limits);
  const auto chains = enumerate_chains(lat, opt.limits);
  if (opt.format == "json") {
    json list = json::array();
    for (const auto& ch : chains) list.push_back(cli::chain_json(lat, ch));
    std::cout << json{{"command", "chains"}, {"group", spec.to_string()}, {"h", chains.size()}, {"chains", list}}.dump(2)
              << "\n";
    return kOk;
  }
  for (const auto& ch : chains) std::cout << cli::chain_text(lat, ch) << "\n";
  return kOk;
}

int cmd_fix_table(const Options& opt, const std::string& spec_text) {
  const auto spec = parse_group_spec(spec_text);
  auto c = classify(spec, opt.limits);
  json doc{{"command", "fix-table"},
           {"group", spec.to_string()},
           {"aut_order", c.report.aut_order},
           {"N", big(c.report.n)},
           {"rows", cli::fix_table_json(c)}};
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "tsv") {
    print_tsv(std::cout, kFixHeader, fix_rows(doc["rows"]));
  } else {
    print_table(std::cout, kFixHeader, fix_rows(doc["rows"]));
    std::cout << "\nN = " << num(doc["N"]) << " over |Aut| = " << c.report.aut_order << "\n";
  }
  return kOk;
}

int cmd_lattice(const Options& opt, const std::string& spec_text) {
  const auto spec = parse_group_spec(spec_text);
  auto group = std::make_shared<const FiniteGroup>(make_group(spec, opt.limits));
  const auto lat = enumerate_subgroups(group, opt.limits);
  const auto doc = cli::lattice_json(spec, lat);
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::string covers;
    for (auto k : lat.lower_covers(i)) covers += (covers.empty() ? "" : ",") + std::to_string(k);
    rows.push_back({std::to_string(i), std::to_string(lat[i].order()), cli::subgroup_text(lat, i), covers.empty() ? "-" : covers});
  }
  const std::vector<std::string> header{"index", "order", "elements", "covers"};
  if (opt.format == "tsv")
    print_tsv(std::cout, header, rows);
  else
    print_table(std::cout, header, rows);
  return kOk;
}

// ---- formula ------------------------------------------------------------------

int cmd_formula(const Options& opt, const std::vector<std::string>& args) {
  if (args.empty()) throw InvalidInput("formula needs one of: h-cyclic <n>, h-dihedral <p> <m>, aut-order <spec>");
  const auto& which = args[0];
  auto number = [&](std::size_t i) {
    if (i >= args.size()) throw InvalidInput("formula " + which + ": missing argument");
    return detail::parse_size(args[i], args[i]);
  };
  BigInt value;
  if (which == "h-cyclic") {
    value = h_cyclic_formula(factorize(number(1)));
  } else if (which == "h-dihedral") {
    value = h_dihedral_2pm(number(1), number(2));
  } else if (which == "aut-order") {
    if (args.size() < 2) throw InvalidInput("formula aut-order: missing group spec");
    value = aut_order_formula(parse_group_spec(args[1]));
  } else {
    throw InvalidInput("unknown formula '" + which + "'");
  }
  json doc{{"command", "formula"},
           {"formula", which},
           {"args", std::vector<std::string>(args.begin() + 1, args.end())},
           {"value", big(value)}};
  if (opt.format == "json")
    std::cout << doc.dump(2) << "\n";
  else if (opt.format == "tsv")
    print_tsv(std::cout, {"formula", "value"}, {{which, value.str()}});
  else
    std::cout << value << "\n";
  return kOk;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const Options& opt, const std::vector<std::string>& specs, const std::string& corpus) {
  std::vector<GroupSpec> groups;
  if (!corpus.empty()) {
    if (corpus != "default") throw InvalidInput("unknown corpus '" + corpus + "' (only 'default' exists)");
    groups = default_corpus();
  }
  for (const auto& s : specs) groups.push_back(parse_group_spec(s));
  if (groups.empty()) throw InvalidInput("verify needs group specs or --corpus default");

  std::vector<CheckResult> results;
  for (const auto& g : groups) {
    auto r = verify_group(g, opt.limits);
    results.insert(results.end(), r.begin(), r.end());
  }
  bool all_ok = true;
  json checks = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    const char* status = r.status == CheckResult::Status::pass ? "PASS" : r.status == CheckResult::Status::fail ? "FAIL" : "SKIP";
    all_ok = all_ok && r.passed();
    checks.push_back({{"group", r.group}, {"check", r.check}, {"status", status}, {"detail", r.detail}});
    rows.push_back({status, r.group, r.check, r.detail});
  }
  if (opt.format == "json") {
    std::cout << json{{"command", "verify"}, {"passed", all_ok}, {"checks", checks}}.dump(2) << "\n";
  } else if (opt.format == "tsv") {
    print_tsv(std::cout, {"status", "group", "check", "detail"}, rows);
  } else {
    print_table(std::cout, {"status", "group", "check", "detail"}, rows);
    std::cout << (all_ok ? "\nall checks passed\n" : "\nverification FAILED\n");
  }
  return all_ok ? kOk : kMismatch;
}

// ---- fuzzy ----------------------------------------------------------------------

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto integer = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("membership value '" + text + "' must be an integer or p/q");
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(integer(text));
  const BigInt den = integer(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("membership value '" + text + "' has zero denominator");
  return Rational(integer(text.substr(0, slash)), den);
}

FuzzyMembership read_membership(const GroupPtr& group, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput(path + ": expected an object mapping element labels to values");
  FuzzyMembership mu{group, std::vector<Rational>(group->order())};
  std::vector<bool> seen(group->order());
  for (const auto& [label, value] : doc.items()) {
    const auto x = group->find_label(label);
    if (!x) throw InvalidInput(path + ": unknown element label '" + label + "'");
    if (!value.is_string()) throw InvalidInput(path + ": value for '" + label + "' must be a string like \"2/3\"");
    mu.values[*x] = parse_rational(value.get<std::string>());
    seen[*x] = true;
  }
  for (Elem x = 0; x < group->order(); ++x)
    if (!seen[x]) throw InvalidInput(path + ": no value for element '" + group->label(x) + "'");
  return mu;
}

int cmd_fuzzy(const Options& opt, const std::string& spec_text, const std::vector<std::string>& files) {
  const auto spec = parse_group_spec(spec_text);
  auto group = std::make_shared<const FiniteGroup>(make_group(spec, opt.limits));
  const auto lat = enumerate_subgroups(group, opt.limits);
  if (files.empty() || files.size() > 2) throw InvalidInput("fuzzy takes one or two membership files");

  json doc{{"command", "fuzzy"}, {"group", spec.to_string()}};
  json subgroups = json::array();
  std::vector<FuzzyMembership> mus;
  for (const auto& f : files) {
    mus.push_back(read_membership(group, f));
    const bool valid = is_fuzzy_subgroup(mus.back());
    json entry{{"file", f}, {"fuzzy_subgroup", valid}};
    if (valid) entry["level_chain"] = cli::chain_json(lat, level_chain(mus.back(), lat));
    subgroups.push_back(entry);
  }
  doc["inputs"] = subgroups;
  const bool all_valid = std::all_of(subgroups.begin(), subgroups.end(), [](const json& e) { return e["fuzzy_subgroup"].get<bool>(); });
  if (mus.size() == 2 && all_valid) {
    const auto aut = automorphisms_for(spec, *group, opt.limits);
    doc["tilde"] = tilde_equivalent(mus[0], mus[1], lat);
    doc["approx"] = approx_equivalent(mus[0], mus[1], aut, lat);
    doc["approx_same_image"] = approx_equivalent(mus[0], mus[1], aut, lat, ApproxMode::same_image);
  }

  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < mus.size(); ++i) {
    const bool valid = subgroups[i]["fuzzy_subgroup"].get<bool>();
    rows.push_back({files[i], valid ? "yes" : "no", valid ? cli::chain_text(lat, level_chain(mus[i], lat)) : "-"});
  }
  if (opt.format == "tsv")
    print_tsv(std::cout, {"file", "fuzzy_subgroup", "level_chain"}, rows);
  else
    print_table(std::cout, {"file", "fuzzy_subgroup", "level_chain"}, rows);
  if (doc.contains("tilde")) {
    auto yn = [](const json& b) { return b.get<bool>() ? std::string("yes") : std::string("no"); };
    if (opt.format == "tsv") {
      print_tsv(std::cout, {"relation", "equivalent"},
                {{"tilde", yn(doc["tilde"])}, {"approx", yn(doc["approx"])}, {"approx_same_image", yn(doc["approx_same_image"])}});
    } else {
      std::cout << "\ntilde:             " << yn(doc["tilde"]) << "\napprox:            " << yn(doc["approx"])
                << "\napprox_same_image: " << yn(doc["approx_same_image"]) << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify fuzzy subgroups of small finite groups by level chains and automorphisms"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--max-order", opt.limits.max_order, "Largest group order accepted");
  app.add_option("--max-chains", opt.limits.max_chains, "Largest number of chains enumerated explicitly");
  app.add_option("--max-subgroups", opt.limits.max_subgroups, "Largest subgroup lattice built");
  app.add_option("--max-automorphisms", opt.limits.max_automorphisms, "Largest automorphism group built");

  std::string spec, relation = "approx", corpus;
  bool fix_table = false, reps = false;
  std::vector<std::string> rest;

  auto* count = app.add_subcommand("count", "Count classes under tilde (h) or approx (N)");
  count->add_option("group", spec, "Group spec, e.g. dihedral:8")->required();
  count->add_option("--relation", relation, "tilde or approx")->check(CLI::IsMember({"tilde", "approx"}));
  count->add_flag("--fix-table", fix_table, "Include per-automorphism fix counts");
  count->add_flag("--reps", reps, "Include one representative chain per orbit");

  auto* orbits = app.add_subcommand("orbits", "List automorphism orbits of chains");
  orbits->add_option("group", spec)->required();

  auto* chains = app.add_subcommand("chains", "List every chain of subgroups ending at G");
  chains->add_option("group", spec)->required();

  auto* fix = app.add_subcommand("fix-table", "Per-automorphism fixed subgroups and fixed chains");
  fix->add_option("group", spec)->required();

  auto* lattice = app.add_subcommand("lattice", "Subgroup lattice with Hasse-diagram covers");
  lattice->add_option("group", spec)->required();

  auto* formula = app.add_subcommand("formula", "Closed forms: h-cyclic <n> | h-dihedral <p> <m> | aut-order <spec>");
  formula->add_option("args", rest)->required();

  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("groups", rest);
  verify->add_option("--corpus", corpus, "Named corpus (default)");

  auto* fuzzy = app.add_subcommand("fuzzy", "Level chains and equivalence of fuzzy subgroups given as JSON files");
  fuzzy->add_option("group", spec)->required();
  fuzzy->add_option("files", rest)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(opt, spec, relation, fix_table, reps);
    if (*orbits) return cmd_orbits(opt, spec);
    if (*chains) return cmd_chains(opt, spec);
    if (*fix) return cmd_fix_table(opt, spec);
    if (*lattice) return cmd_lattice(opt, spec);
    if (*formula) return cmd_formula(opt, rest);
    if (*verify) return cmd_verify(opt, rest, corpus);
    if (*fuzzy) return cmd_fuzzy(opt, spec, rest);
  } catch (const ResourceError& e) {
    std::cerr << "fuzzsg: " << e.what() << "\n";
    return kResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "fuzzsg: consistency check failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "fuzzsg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
