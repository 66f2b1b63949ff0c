// rmg: analysis of finite groupoids given by Cayley tables, centered on
// right modular groupoids, inflations and generalised inflations.
//
// Exit codes: 0 property holds / witness found, 1 fails / none found,
// 2 usage, parse or capacity error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmg/config.hpp"
#include "rmg/enumeration.hpp"
#include "rmg/errors.hpp"
#include "rmg/extension.hpp"
#include "rmg/fixtures.hpp"
#include "rmg/harness.hpp"
#include "rmg/identities.hpp"
#include "rmg/inflation.hpp"
#include "rmg/morphisms.hpp"
#include "rmg/table_io.hpp"

namespace {

using namespace rmg;

std::string witness_tuple(const Magma& m, const std::vector<Element>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += m.element_name(w[i]);
  }
  return out + ")";
}

Element resolve_element(const Magma& m, const std::string& token) {
  if (m.names()) {
    for (Element e = 0; e < m.order(); ++e)
      if ((*m.names())[e] == token) return e;
  }
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < m.order()) return v;
  } catch (const std::exception&) {
  }
  throw ArgumentError("unknown element '" + token + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

int run_check(const std::string& path, const std::vector<std::string>& props) {
  const Magma m = read_table_file(path);
  bool all_hold = true;
  for (const std::string& prop : props) {
    PropertyReport rep;
    bool existential = false;
    if (prop == "right-modular") {
      rep = is_right_modular(m);
    } else if (prop == "medial") {
      rep = is_medial(m);
    } else if (prop == "associative") {
      rep = is_associative(m);
    } else if (prop == "idempotent") {
      rep = is_idempotent(m);
    } else if (prop == "commutative") {
      rep = is_commutative(m);
    } else if (prop == "right-cancellative") {
      rep = is_right_cancellative(m);
    } else if (prop == "left-cancellative") {
      rep = is_left_cancellative(m);
    } else if (prop == "cancellative") {
      rep = is_cancellative(m);
    } else if (prop == "quasigroup") {
      rep = is_quasigroup(m);
    } else if (prop == "union-of-groups") {
      rep = is_union_of_groups(m);
    } else if (prop == "has-left-identity") {
      existential = true;
      const auto ids = left_identities(m);
      rep.holds = !ids.empty();
      if (rep.holds) rep.witness = ids.members();
    } else {
      throw ArgumentError("unknown property '" + prop + "'");
    }
    std::cout << prop << ": ";
    if (rep.holds) {
      std::cout << "holds";
      if (existential && rep.witness)
        std::cout << ' ' << witness_tuple(m, *rep.witness);
    } else {
      std::cout << "fails";
      if (rep.witness) std::cout << " at " << witness_tuple(m, *rep.witness);
      all_hold = false;
    }
    std::cout << '\n';
  }
  return all_hold ? 0 : 1;
}

int run_iso(const std::string& path1, const std::string& path2) {
  const Magma m1 = read_table_file(path1);
  const Magma m2 = read_table_file(path2);
  const auto p = is_isomorphic(m1, m2);
  if (!p) {
    std::cout << "not isomorphic\n";
    return 1;
  }
  std::cout << "isomorphic\n";
  for (Element e = 0; e < m1.order(); ++e)
    std::cout << m1.element_name(e) << " -> " << m2.element_name((*p)(e))
              << '\n';
  return 0;
}

int run_canon(const std::string& path) {
  const Magma m = read_table_file(path);
  std::cout << format_table(canonical_form(m));
  return 0;
}

int run_inflation(const std::string& path, const std::string& sub,
                  bool generalised) {
  const Magma m = read_table_file(path);
  std::vector<ElementSet> candidates;
  if (sub == "auto") {
    candidates = candidate_subgroupoids(m);
  } else {
    ElementSet s(m.order());
    for (const std::string& token : split_commas(sub))
      s.insert(resolve_element(m, token));
    if (s.empty()) throw ArgumentError("empty subgroupoid");
    if (!is_closed(m, s))
      throw PreconditionError("the given subset is not closed");
    candidates.push_back(s);
  }
  for (const ElementSet& s : candidates) {
    std::string found;
    if (generalised) {
      if (auto w = find_gen_inflation(m, s)) found = format_witness(m, s, *w);
    } else {
      if (auto w = find_retraction(m, s)) found = format_witness(m, s, *w);
    }
    if (!found.empty()) {
      std::cout << "sub:";
      const auto members = s.members();
      for (std::size_t i = 0; i < members.size(); ++i)
        std::cout << (i ? "," : " ") << m.element_name(members[i]);
      std::cout << '\n' << found;
      return 0;
    }
  }
  std::cout << "none\n";
  return 1;
}

int run_extend(const std::string& path, bool dedupe) {
  const Magma m = read_table_file(path);
  const auto extensions = enumerate_rm_extensions(m, dedupe);
  bool first = true;
  for (const auto& [spec, ext] : extensions) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << format_spec(spec) << format_table(ext);
  }
  return 0;
}

RequireFlags parse_require(const std::string& list) {
  RequireFlags flags;
  for (const std::string& token : split_commas(list)) {
    if (token == "right-modular")
      flags.right_modular = true;
    else if (token == "idempotent")
      flags.idempotent = true;
    else if (token == "associative")
      flags.associative = true;
    else if (token == "not-associative")
      flags.not_associative = true;
    else if (token == "cancellative")
      flags.cancellative = true;
    else if (token == "right-cancellative")
      flags.right_cancellative = true;
    else if (token == "medial")
      flags.medial = true;
    else if (token == "commutative")
      flags.commutative = true;
    else
      throw ArgumentError("unknown constraint '" + token + "'");
  }
  return flags;
}

int run_enumerate(int order, const std::string& require,
                  const std::string& embed, const std::string& free_domain,
                  bool count_only, std::uint64_t limit) {
  EnumerationConstraints cons;
  cons.order = order;
  cons.require = parse_require(require);
  int embedded_order = 0;
  if (!embed.empty()) {
    const Magma base = read_table_file(embed);
    embedded_order = base.order();
    if (embedded_order > order)
      throw ArgumentError("embedded table larger than the requested order");
    cons.fixed_cells.assign(static_cast<std::size_t>(order) * order,
                            std::nullopt);
    for (Element a = 0; a < embedded_order; ++a)
      for (Element b = 0; b < embedded_order; ++b)
        cons.fixed_cells[a * order + b] = base.op(a, b);
  }
  if (!free_domain.empty()) {
    ElementSet domain(order);
    if (free_domain == "embedded") {
      if (embedded_order == 0)
        throw ArgumentError("--free-domain embedded requires --embed");
      for (Element e = 0; e < embedded_order; ++e) domain.insert(e);
    } else {
      for (const std::string& token : split_commas(free_domain))
        domain.insert(std::stoi(token));
    }
    cons.free_cell_domain = domain;
  }

  if (count_only) {
    std::cout << count_magmas(cons) << '\n';
    return 0;
  }
  std::uint64_t emitted = 0;
  bool first = true;
  for_each_magma(cons, [&](const Magma& m) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << format_table(m);
    ++emitted;
    return limit == 0 || emitted < limit;
  });
  return 0;
}

void dump_violations(const std::string& out_dir, const HarnessReport& report) {
  if (out_dir.empty() || report.violations.empty()) return;
  std::filesystem::create_directories(out_dir);
  int index = 0;
  for (const auto& v : report.violations) {
    const std::string path = out_dir + "/" + report.name + "-" +
                             std::to_string(index++) + ".tbl";
    std::ofstream out(path, std::ios::binary);
    out << "# " << v.substructure << '\n';
    out << "# " << v.detail << '\n';
    out << format_table(v.instance);
  }
}

int run_verify_paper(const std::string& golden, bool print_counts,
                     std::uint64_t budget, int workers,
                     const std::string& out_dir) {
  std::map<std::string, std::uint64_t> pinned;
  if (!golden.empty()) {
    std::ifstream in(golden, std::ios::binary);
    if (!in) throw ArgumentError("cannot open '" + golden + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    pinned = parse_pinned_counts(buf.str());
  } else {
    pinned = pinned_counts();
  }

  const auto pv = verify_paper(pinned, budget, workers);
  for (const auto& rep : pv.reports) {
    std::cerr << rep.name << ": " << rep.elapsed_seconds << "s\n";
    dump_violations(out_dir, rep);
  }

  if (print_counts) {
    std::cout << "# measured counts; regenerate with: rmg verify-paper "
                 "--print-counts\n";
    for (const auto& rep : pv.reports) {
      std::cout << "# " << rep.name << '\n';
      for (const auto& [key, value] : rep.counts)
        std::cout << key << " = " << value << '\n';
    }
    return pv.all_pass ? 0 : 1;
  }

  int failed = 0;
  for (const auto& c : pv.claims) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " = " << c.measured
              << " (expected " << c.expected << ")\n";
    if (!c.pass) ++failed;
  }
  std::cout << "claims: " << pv.claims.size() - failed << " pass, " << failed
            << " fail\n";
  return pv.all_pass ? 0 : 1;
}

int run_hunt(const std::string& mode, int max_sub, int max_adjoined,
             int workers, const std::string& out_dir) {
  HuntMode hunt_mode;
  if (mode == "right-modular")
    hunt_mode = HuntMode::right_modular;
  else if (mode == "commutative-semigroup")
    hunt_mode = HuntMode::commutative_semigroup;
  else
    throw ArgumentError("unknown hunt mode '" + mode + "'");
  HuntBounds bounds;
  bounds.max_sub_order = max_sub;
  if (max_adjoined > 0)
    bounds.max_adjoined = max_adjoined;
  else
    bounds.max_adjoined = hunt_mode == HuntMode::right_modular ? 2 : 1;

  const auto report = hunt_strict_gen_inflations(hunt_mode, bounds, workers);
  std::cerr << report.name << ": " << report.elapsed_seconds << "s\n";
  std::cout << format_report(report);
  dump_violations(out_dir, report);
  return report.violations.empty() ? 1 : 0;
}

int run_fixture(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : fixture_names()) std::cout << n << '\n';
    return 0;
  }
  std::cout << format_table(fixture(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid analysis: right modular groupoids, "
               "inflations and generalised inflations"};
  app.require_subcommand(1);
  int workers = 0;
  std::string out_dir;
  app.add_option("--workers", workers,
                 "worker threads (0 = all available; results are identical "
                 "for any count)");
  app.add_option("--out", out_dir, "directory for violation table dumps");

  auto* fixture_cmd =
      app.add_subcommand("fixture", "print a bundled table (no name: list)");
  std::string fixture_name;
  fixture_cmd->add_option("name", fixture_name, "fixture name");

  auto* check = app.add_subcommand("check", "decide properties of a table");
  std::string check_file;
  std::vector<std::string> check_props;
  check->add_option("file", check_file, "table file")->required();
  check->add_option("properties", check_props, "properties to check")
      ->required();

  auto* iso = app.add_subcommand("iso", "isomorphism between two tables");
  std::string iso_file1, iso_file2;
  iso->add_option("file1", iso_file1)->required();
  iso->add_option("file2", iso_file2)->required();

  auto* canon = app.add_subcommand("canon", "canonical form of a table");
  std::string canon_file;
  canon->add_option("file", canon_file)->required();

  auto* inflation =
      app.add_subcommand("inflation", "inflation / generalised-inflation "
                                      "witness search");
  std::string inflation_file, inflation_sub = "auto";
  bool generalised = false;
  inflation->add_option("file", inflation_file)->required();
  inflation->add_option("--sub", inflation_sub,
                        "comma-separated subgroupoid, or 'auto'");
  inflation->add_flag("--generalised", generalised,
                      "search for a generalised-inflation witness");

  auto* extend = app.add_subcommand(
      "extend", "one-point right modular generalised-inflation extensions");
  std::string extend_file;
  bool dedupe = false;
  extend->add_option("file", extend_file)->required();
  extend->add_flag("--dedupe", dedupe, "one table per isomorphism class");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate small tables");
  int enum_order = 1;
  std::string enum_require, enum_embed, enum_domain;
  bool count_only = false;
  std::uint64_t enum_limit = 0;
  enumerate->add_option("--order", enum_order, "table order")->required();
  enumerate->add_option("--require", enum_require,
                        "comma-separated constraints (right-modular, "
                        "idempotent, associative, not-associative, "
                        "cancellative, right-cancellative, medial, "
                        "commutative)");
  enumerate->add_option("--embed", enum_embed,
                        "table file fixed into the top-left corner");
  enumerate->add_option("--free-domain", enum_domain,
                        "allowed free-cell values: comma list or 'embedded'");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--limit", enum_limit, "stop after this many tables");

  auto* verify =
      app.add_subcommand("verify-paper", "run every verification harness and "
                                         "print a claim-by-claim table");
  std::string golden;
  bool print_counts = false;
  std::uint64_t budget = 100000;
  verify->add_option("--golden", golden, "pinned-count file (overrides the "
                                         "built-in values)");
  verify->add_flag("--print-counts", print_counts,
                   "print measured counts in golden-file format");
  verify->add_option("--budget", budget,
                     "sampled specs for the order-4 cross-validation");

  auto* hunt = app.add_subcommand(
      "hunt", "search for generalised inflations that are not inflations");
  std::string hunt_mode_name;
  int max_sub = 3, max_adjoined = 0;
  hunt->add_option("--mode", hunt_mode_name,
                   "right-modular or commutative-semigroup")
      ->required();
  hunt->add_option("--max-sub", max_sub, "largest subgroupoid order");
  hunt->add_option("--max-adjoined", max_adjoined,
                   "largest number of adjoined elements (default: 2 for "
                   "right-modular, 1 for commutative-semigroup)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fixture_cmd) return run_fixture(fixture_name);
    if (*check) return run_check(check_file, check_props);
    if (*iso) return run_iso(iso_file1, iso_file2);
    if (*canon) return run_canon(canon_file);
    if (*inflation) return run_inflation(inflation_file, inflation_sub, generalised);
    if (*extend) return run_extend(extend_file, dedupe);
    if (*enumerate)
      return run_enumerate(enum_order, enum_require, enum_embed, enum_domain,
                           count_only, enum_limit);
    if (*verify)
      return run_verify_paper(golden, print_counts, budget, workers, out_dir);
    if (*hunt)
      return run_hunt(hunt_mode_name, max_sub, max_adjoined, workers, out_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
