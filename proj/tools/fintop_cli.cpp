// fintop: analyze finite topologies, run the law suite, enumerate topologies and
// inspect windows of the digital line.
//
// Exit codes: 0 success, 1 unexpected law failure, 2 input error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintop/catalog.hpp"
#include "fintop/io.hpp"
#include "fintop/laws.hpp"
#include "fintop/report.hpp"
#include "fintop/suite.hpp"

namespace {

using namespace fintop;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInput = 2;

// Spaces larger than this make the pairwise law checks (4^n) impractical.
constexpr std::size_t kMaxLawPoints = 10;

enum class Format { Text, Machine };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A catalog id, or a path to a file holding one or more topology documents.
std::vector<CatalogEntry> resolve_source(const std::string& source) {
  if (is_catalog_id(source)) return {named_entry(source)};
  if (!std::filesystem::exists(source)) {
    throw InputError("'" + source + "' is neither a catalog id nor an existing file");
  }
  auto docs = parse_topologies(read_file(source), source);
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string id = docs[i].name;
    if (id.empty()) id = docs.size() == 1 ? source : source + "#" + std::to_string(i);
    out.push_back({id, "from " + source, std::move(docs[i].space)});
  }
  return out;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& source, Format format) {
  const auto entries = resolve_source(source);
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto analysis = analyze_space(entries[i].space);
    if (format == Format::Machine) {
      all.push_back(analysis_json(entries[i], analysis));
    } else {
      if (i > 0) std::cout << "\n";
      std::cout << render_analysis_text(entries[i], analysis);
    }
  }
  if (format == Format::Machine) print_json(entries.size() == 1 ? all.front() : all);
  return kExitOk;
}

struct LawsConfig {
  std::optional<std::size_t> max_points;
  std::vector<std::string> law_ids;
  std::vector<std::string> spaces;
  std::size_t workers = 1;
  Format format = Format::Text;
};

int cmd_laws(const LawsConfig& cfg) {
  const auto registry = register_laws();
  std::vector<Law> laws;
  if (cfg.law_ids.empty()) {
    laws = registry;
  } else {
    for (const auto& id : cfg.law_ids) {
      const Law* law = find_law(registry, id);
      if (!law) throw InputError("unknown law '" + id + "'");
      laws.push_back(*law);
    }
  }

  // With explicit --space and no --max-points, only the named spaces are examined.
  std::vector<CatalogEntry> spaces;
  const bool enumerate = cfg.max_points.has_value() || cfg.spaces.empty();
  if (enumerate) {
    const std::size_t max_points = cfg.max_points.value_or(4);
    if (max_points < 1 || max_points > kMaxEnumerationPoints) {
      throw InputError("--max-points must be between 1 and " + std::to_string(kMaxEnumerationPoints));
    }
    for (std::size_t n = 1; n <= max_points; ++n) {
      for (auto& e : enumerated_entries(n)) spaces.push_back(std::move(e));
    }
    for (auto& e : default_catalog()) spaces.push_back(std::move(e));
  }
  for (const auto& src : cfg.spaces) {
    for (auto& e : resolve_source(src)) {
      if (e.space.size() > kMaxLawPoints) {
        throw InputError("space '" + e.id + "' has " + std::to_string(e.space.size()) +
                         " points; the law suite accepts at most " + std::to_string(kMaxLawPoints));
      }
      spaces.push_back(std::move(e));
    }
  }

  const auto report = run_suite(spaces, laws, {cfg.workers, 3});
  if (cfg.format == Format::Machine) {
    print_json(report_json(report));
  } else {
    std::cout << render_report_text(report);
  }
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
  return report.exit_code();
}

int cmd_enumerate(std::size_t points, const std::string& out_dir) {
  const auto entries = enumerated_entries(points);
  if (out_dir.empty()) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i > 0) std::cout << "---\n";
      std::cout << write_topology(entries[i].space, entries[i].id);
    }
    return kExitOk;
  }
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto path = std::filesystem::path(out_dir) /
                      ("top-" + std::to_string(points) + "-" + std::to_string(i) + ".yaml");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << write_topology(entries[i].space, entries[i].id);
  }
  std::cout << entries.size() << " topologies written to " << out_dir << "\n";
  return kExitOk;
}

int cmd_khalimsky(std::int64_t lo, std::int64_t hi, Format format) {
  const auto window = khalimsky_window(lo, hi);
  const auto& space = window.space;
  const auto profile = axiom_profile(space);

  struct Row {
    std::string label;
    bool even;
    bool closed;
    bool regular_open;
  };
  std::vector<Row> rows;
  for (std::size_t p = 0; p < space.size(); ++p) {
    const auto x = SubsetMask::singleton(p);
    rows.push_back({space.name(p), is_even(window.value(p)), space.is_closed(x),
                    set_class(space, x).regular_open});
  }
  const std::string warning =
      "even endpoint: its cell is cut by the window, so the neighbouring odd singleton need not be regular open";

  if (format == Format::Machine) {
    nlohmann::json j;
    j["lo"] = lo;
    j["hi"] = hi;
    j["boundary_warning"] = window.boundary_warning;
    j["axioms"] = profile_json(space, profile);
    auto singles = nlohmann::json::array();
    for (const auto& r : rows) {
      singles.push_back({{"point", r.label}, {"parity", r.even ? "even" : "odd"},
                         {"closed", r.closed}, {"regular_open", r.regular_open}});
    }
    j["singletons"] = singles;
    print_json(j);
    return kExitOk;
  }
  std::cout << "window: [" << lo << ", " << hi << "]\n";
  std::cout << "points: " << space.size() << "\n";
  if (window.boundary_warning) std::cout << "warning: " << warning << "\n";
  std::cout << render_profile_text(space, profile);
  std::cout << "singletons:\n";
  for (const auto& r : rows) {
    std::cout << "  {" << r.label << "}: " << (r.even ? "even" : "odd")
              << " closed=" << (r.closed ? "true" : "false")
              << " regular_open=" << (r.regular_open ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_claim(const std::string& law_id, const std::string& source, Format format) {
  const auto registry = register_laws();
  const Law* law = find_law(registry, law_id);
  if (!law) throw InputError("unknown law '" + law_id + "'");
  int code = kExitOk;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& entry : resolve_source(source)) {
    nlohmann::json j{{"law", law->id}, {"status", to_string(law->status)}, {"space", entry.id}};
    if (!law->applies_to(entry)) {
      j["result"] = "not-applicable";
      if (format == Format::Text) std::cout << law->id << " on " << entry.id << ": not applicable\n";
    } else if (auto w = check_law(*law, entry)) {
      j["result"] = "fail";
      j["witness"] = witness_json(*w);
      if (law->status == LawStatus::ExpectedHolds) code = kExitLawFailure;
      if (format == Format::Text) {
        std::cout << law->id << " [" << to_string(law->status) << "] on " << entry.id << ": FAIL\n";
        std::cout << "  witness: " << w->explanation << "\n";
      }
    } else {
      j["result"] = "pass";
      if (format == Format::Text) {
        std::cout << law->id << " [" << to_string(law->status) << "] on " << entry.id << ": PASS\n";
      }
    }
    all.push_back(j);
  }
  if (format == Format::Machine) print_json(all.size() == 1 ? all.front() : all);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces: semi-open sets, semi-kernels and low separation axioms"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Print the families and axiom profile of a space");
  std::string analyze_source;
  analyze->add_option("space", analyze_source, "Catalog id or topology file")->required();
  add_format(analyze);

  auto* laws = app.add_subcommand("laws", "Run the law suite");
  LawsConfig laws_cfg;
  std::size_t max_points = 0;
  auto* max_points_opt = laws->add_option("--max-points", max_points,
                                          "Enumerate all topologies on 1..N points (N <= 5)");
  laws->add_option("--law", laws_cfg.law_ids, "Only run these laws");
  laws->add_option("--space", laws_cfg.spaces, "Extra catalog id or topology file");
  laws->add_option("--workers", laws_cfg.workers, "Worker threads (0 = hardware)");
  add_format(laws);

  auto* enumerate = app.add_subcommand("enumerate", "Dump every topology on N labelled points");
  std::size_t enum_points = 0;
  std::string out_dir;
  enumerate->add_option("--points", enum_points, "Point count (1..5)")->required();
  enumerate->add_option("--out", out_dir, "Write one file per topology into this directory");

  auto* khalimsky = app.add_subcommand("khalimsky", "Analyze a window [LO, HI] of the digital line");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  khalimsky->add_option("lo", lo, "Lower end")->required();
  khalimsky->add_option("hi", hi, "Upper end")->required();
  add_format(khalimsky);

  auto* claim = app.add_subcommand("claim", "Check one law on one space");
  std::string claim_law;
  std::string claim_space;
  claim->add_option("law", claim_law, "Law id")->required();
  claim->add_option("space", claim_space, "Catalog id or topology file")->required();
  add_format(claim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const Format format = format_name == "machine" ? Format::Machine : Format::Text;
  try {
    if (analyze->parsed()) return cmd_analyze(analyze_source, format);
    if (laws->parsed()) {
      if (max_points_opt->count() > 0) laws_cfg.max_points = max_points;
      laws_cfg.format = format;
      return cmd_laws(laws_cfg);
    }
    if (enumerate->parsed()) return cmd_enumerate(enum_points, out_dir);
    if (khalimsky->parsed()) return cmd_khalimsky(lo, hi, format);
    if (claim->parsed()) return cmd_claim(claim_law, claim_space, format);
  } catch (const TopologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
