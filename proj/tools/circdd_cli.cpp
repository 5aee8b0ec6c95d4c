// Copyright 2026 The circdd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circdd_cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "circdd/analysis.hpp"
#include "circdd/bounds.hpp"
#include "circdd/builtin_records.hpp"
#include "circdd/circulant_graph.hpp"
#include "circdd/combined_search.hpp"
#include "circdd/constructions.hpp"
#include "circdd/error.hpp"
#include "circdd/prune_config.hpp"
#include "circdd/records.hpp"
#include "circdd/search.hpp"

namespace circdd::cli {
namespace {

struct Globals {
  std::string records = "records.json";
  std::string format = "text";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool seed_builtin = false;
};

RecordTable LoadRecords(const Globals& g, std::ostream& err) {
  if (!std::filesystem::exists(g.records)) {
    err << "note: " << g.records << " not found, using the built-in seed table\n";
    return SeedBuiltin();
  }
  return RecordTable::Load(g.records);
}

void WriteOrPrint(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
  file << text;
}

std::pair<int, int> ParseCell(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::kParseError, "cell must be 'deg,D'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError, "cell must be 'deg,D', got '" + text + "'");
  }
}

std::string DescribeReport(const RecordEntry& e, const VerificationReport& r) {
  std::ostringstream s;
  s << "(" << e.degree << "," << e.diameter << ") " << e.order << " ";
  s << (r.passed ? "ok" : "MISMATCH");
  for (const auto& m : r.mismatches) s << "; " << m;
  return s.str();
}

// Search-side options shared by search, maxsearch and profile.
struct PruneFlags {
  std::string prune_file;
  bool default_prune = false;
  bool free_s1 = false;
  int k = 1;
};

void AddPruneFlags(CLI::App* cmd, PruneFlags& f) {
  auto* file = cmd->add_option("--prune-file", f.prune_file, "ceiling config file");
  auto* def = cmd->add_flag("--default-prune", f.default_prune,
                            "ceilings profiled from the built-in witnesses of the cell");
  file->excludes(def);
  cmd->add_flag("--free-s1", f.free_s1, "do not fix s1 = 1");
  cmd->add_option("--k", f.k, "minimum gap between generators")->check(CLI::PositiveNumber);
}

PruneConfig MakeConfig(const PruneFlags& f, int degree, int diameter) {
  PruneConfig cfg;
  if (!f.prune_file.empty()) {
    cfg = PruneConfig::Load(f.prune_file);
  } else if (f.default_prune) {
    const auto sets = BuiltinCatalog().Sets(degree, diameter);
    cfg = ProfileCeilings(sets, diameter);
  }
  if (f.free_s1) cfg.require_s1_eq_1 = false;
  if (f.k != 1) cfg.k = f.k;
  return cfg;
}

SearchOptions MakeSearchOptions(const Globals& g, std::uint64_t budget, std::ostream& err) {
  SearchOptions so;
  so.threads = g.threads;
  so.node_budget = budget;
  so.progress = [&err](const SearchProgress& p) {
    err << "progress: " << p.nodes_visited << " nodes, " << p.pruned << " pruned, subtree "
        << p.subtrees_done << "/" << p.subtrees_total << "\n";
  };
  return so;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree/diameter toolkit for circulant graphs", "circdd"};
  Globals g;
  app.add_option("--records", g.records, "record table (JSON)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--threads", g.threads, "search worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--seed-builtin", g.seed_builtin, "write the built-in seed table to --records");
  app.require_subcommand(0, 1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "upper bounds, single cell or CSV grid");
  int b_deg = 0, b_diam = 0, b_deg_min = 3, b_deg_max = 0, b_dmin = 2, b_dmax = 0;
  std::string b_kind = "circulant";
  auto* b_deg_opt = bounds->add_option("--deg", b_deg, "degree")->check(CLI::Range(2, 1 << 20));
  auto* b_diam_opt = bounds->add_option("--diam", b_diam, "diameter")->check(CLI::PositiveNumber);
  auto* b_grid_deg = bounds->add_option("--deg-max", b_deg_max, "grid: last degree");
  auto* b_grid_diam = bounds->add_option("--dmax", b_dmax, "grid: last diameter");
  bounds->add_option("--deg-min", b_deg_min, "grid: first degree")->check(CLI::Range(2, 1 << 20));
  bounds->add_option("--dmin", b_dmin, "grid: first diameter")->check(CLI::PositiveNumber);
  bounds->add_option("--kind", b_kind, "bound")
      ->check(CLI::IsMember({"moore", "circulant", "triple"}));
  b_deg_opt->needs(b_diam_opt);
  b_diam_opt->needs(b_deg_opt);
  b_grid_deg->needs(b_grid_diam);
  b_grid_diam->needs(b_grid_deg);
  b_deg_opt->excludes(b_grid_deg);
  b_deg_opt->excludes(b_grid_diam);
  b_diam_opt->excludes(b_grid_deg);
  b_diam_opt->excludes(b_grid_diam);

  // verify
  auto* verify = app.add_subcommand("verify", "verify a connection set or a record table");
  std::string v_set, v_cell;
  int v_expect_diam = 0, v_expect_deg = 0;
  bool v_published = false;
  auto* v_set_opt = verify->add_option("--set", v_set, "connection set 'n;s1,s2,...'");
  verify->add_option("--expect-diam", v_expect_diam, "expected diameter")->needs(v_set_opt);
  verify->add_option("--expect-deg", v_expect_deg, "expected degree")->needs(v_set_opt);
  auto* v_cell_opt = verify->add_option("--cell", v_cell, "only this cell, 'deg,D'");
  auto* v_pub = verify->add_flag("--published", v_published, "verify the built-in published sets");
  v_set_opt->excludes(v_cell_opt);
  v_set_opt->excludes(v_pub);

  // search
  auto* search = app.add_subcommand("search", "pruned depth-first search at one order");
  std::int64_t s_n = 0;
  int s_deg = 0, s_diam = 0;
  bool s_all = false, s_collapse = false;
  std::uint64_t s_budget = 0;
  PruneFlags s_prune;
  search->add_option("--n", s_n, "order")->required();
  search->add_option("--deg", s_deg, "degree")->required();
  search->add_option("--diam", s_diam, "diameter")->required();
  search->add_flag("--all", s_all, "list every solution instead of the first");
  search->add_flag("--collapse", s_collapse, "one representative per multiplicative class");
  search->add_option("--budget", s_budget, "node budget (0 = none)");
  AddPruneFlags(search, s_prune);

  // maxsearch
  auto* maxsearch = app.add_subcommand("maxsearch", "largest order with a solution in a range");
  int m_deg = 0, m_diam = 0;
  std::int64_t m_from = 0, m_to = 0;
  std::uint64_t m_budget = 0;
  PruneFlags m_prune;
  maxsearch->add_option("--deg", m_deg, "degree")->required();
  maxsearch->add_option("--diam", m_diam, "diameter")->required();
  maxsearch->add_option("--from", m_from, "smallest order")->required();
  maxsearch->add_option("--to", m_to, "largest order")->required();
  maxsearch->add_option("--budget", m_budget, "node budget per order (0 = none)");
  AddPruneFlags(maxsearch, m_prune);

  // combine
  auto* combine = app.add_subcommand("combine", "Cartesian-product search over known factors");
  int c_deg = 0, c_diam = 0;
  std::uint64_t c_budget = 0;
  bool c_trace = false, c_update = false;
  combine->add_option("--deg", c_deg, "degree")->required();
  combine->add_option("--diam", c_diam, "diameter")->required();
  combine->add_option("--budget", c_budget, "node budget for missing factors (0 = catalog only)");
  combine->add_flag("--trace", c_trace, "print the candidate list evolution to stderr");
  combine->add_flag("--update", c_update, "store the result in --records if it is better");

  // product
  auto* product = app.add_subcommand("product", "Cartesian product of two circulants");
  std::string p_first, p_second;
  product->add_option("first", p_first, "first factor 'n;s1,...'")->required();
  product->add_option("second", p_second, "second factor 'm;s1,...'")->required();

  // table
  auto* table = app.add_subcommand("table", "render the record table");
  int t_deg_min = 3, t_deg_max = 16, t_dmin = 2, t_dmax = 10;
  table->add_option("--deg-min", t_deg_min);
  table->add_option("--deg-max", t_deg_max);
  table->add_option("--dmin", t_dmin);
  table->add_option("--dmax", t_dmax);

  // fit
  auto* fit = app.add_subcommand("fit", "least-squares polynomial surface");
  std::string f_what = "bounds", f_out, f_parity = "all";
  int f_degree = 3, f_deg_min = 3, f_deg_max = 15, f_dmin = 2, f_dmax = 10;
  bool f_log = false;
  fit->add_option("--what", f_what)->check(CLI::IsMember({"bounds", "records", "percent"}));
  fit->add_option("--degree", f_degree, "polynomial degree")->check(CLI::IsMember({3, 4}));
  fit->add_flag("--log", f_log, "fit the natural log of the cells");
  fit->add_option("--parity", f_parity, "rows used")->check(CLI::IsMember({"all", "even", "odd"}));
  fit->add_option("--out", f_out, "output file (default stdout)");
  fit->add_option("--deg-min", f_deg_min);
  fit->add_option("--deg-max", f_deg_max);
  fit->add_option("--dmin", f_dmin);
  fit->add_option("--dmax", f_dmax);

  // grid
  auto* grid = app.add_subcommand("grid", "difference and percentage grids as CSV");
  std::string gr_what = "diff", gr_out;
  bool gr_normalize = false;
  int gr_deg_min = 3, gr_deg_max = 15, gr_dmin = 2, gr_dmax = 10;
  grid->add_option("--what", gr_what)
      ->check(CLI::IsMember({"diff", "percent", "percent-diff"}));
  grid->add_flag("--normalize", gr_normalize, "divide differences by the actual value");
  grid->add_option("--out", gr_out, "output file (default stdout)");
  grid->add_option("--deg-min", gr_deg_min);
  grid->add_option("--deg-max", gr_deg_max);
  grid->add_option("--dmin", gr_dmin);
  grid->add_option("--dmax", gr_dmax);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration at one order");
  std::int64_t o_n = 0;
  int o_deg = 0, o_diam = 0;
  oracle->add_option("--n", o_n, "order")->required();
  oracle->add_option("--deg", o_deg, "degree")->required();
  oracle->add_option("--diam", o_diam, "diameter")->required();

  // profile
  auto* profile = app.add_subcommand("profile", "derive ceilings from the built-in witnesses");
  int pr_deg = 0, pr_diam = 0;
  unsigned pr_slack = 1;
  std::string pr_out, pr_dir;
  auto* pr_deg_opt = profile->add_option("--deg", pr_deg, "degree");
  auto* pr_diam_opt = profile->add_option("--diam", pr_diam, "diameter");
  profile->add_option("--slack", pr_slack, "added to every observed maximum");
  profile->add_option("--out", pr_out, "output file (default stdout)");
  auto* pr_dir_opt = profile->add_option("--dir", pr_dir, "write deg<deg>_diam<D>.cfg for every cell");
  pr_deg_opt->needs(pr_diam_opt);
  pr_dir_opt->excludes(pr_deg_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g.seed_builtin) {
      SeedBuiltin().Save(g.records);
      err << "wrote built-in seed table to " << g.records << "\n";
    }
    if (app.get_subcommands().empty()) {
      if (g.seed_builtin) return kExitOk;
      err << "usage error: a subcommand is required\n" << app.help();
      return kExitUsage;
    }

    if (*bounds) {
      auto kind_at = [&](int deg) {
        if (b_kind == "moore") return BoundKind::kMoore;
        if (b_kind == "triple") return BoundKind::kTripleLoop;
        return CirculantKind(deg);
      };
      if (b_deg != 0) {
        out << Bound(kind_at(b_deg), b_deg, b_diam) << "\n";
        return kExitOk;
      }
      if (b_deg_max == 0) {
        err << "usage error: bounds needs --deg/--diam or --deg-max/--dmax\n";
        return kExitUsage;
      }
      if (b_deg_min > b_deg_max || b_dmin > b_dmax) {
        err << "usage error: empty grid range\n";
        return kExitUsage;
      }
      out << "deg";
      for (int d = b_dmin; d <= b_dmax; ++d) out << ",D=" << d;
      out << "\n";
      for (int deg = b_deg_min; deg <= b_deg_max; ++deg) {
        out << deg;
        for (int d = b_dmin; d <= b_dmax; ++d) out << ',' << Bound(kind_at(deg), deg, d);
        out << "\n";
      }
      return kExitOk;
    }

    if (*verify) {
      if (!v_set.empty()) {
        const CirculantGraph graph(ConnectionSet::Parse(v_set));
        const auto diam = Diameter(graph);
        if (!diam) {
          out << "disconnected, degree " << graph.degree() << "\n";
        } else {
          out << "diameter " << *diam << ", degree " << graph.degree() << "\n";
        }
        bool ok = true;
        if (v_expect_diam != 0 && (!diam || static_cast<int>(*diam) != v_expect_diam)) {
          err << "error: diameter mismatch, expected " << v_expect_diam << "\n";
          ok = false;
        }
        if (v_expect_deg != 0 && graph.degree() != v_expect_deg) {
          err << "error: degree mismatch, expected " << v_expect_deg << "\n";
          ok = false;
        }
        return ok ? kExitOk : kExitDomainError;
      }
      std::optional<std::pair<int, int>> only;
      if (!v_cell.empty()) only = ParseCell(v_cell);
      std::vector<RecordEntry> entries;
      if (v_published) {
        for (const PublishedSet& p : PublishedSets()) {
          RecordEntry e;
          e.degree = p.degree;
          e.diameter = p.diameter;
          e.order = p.order;
          e.set = p.set();
          entries.push_back(std::move(e));
        }
      } else {
        const RecordTable table = LoadRecords(g, err);
        for (const auto& [key, e] : table.entries()) entries.push_back(e);
      }
      std::size_t checked = 0, failed = 0, skipped = 0;
      for (const RecordEntry& e : entries) {
        if (only && (e.degree != only->first || e.diameter != only->second)) continue;
        if (!e.set) {
          ++skipped;
          continue;
        }
        const VerificationReport r = VerifyEntry(e);
        ++checked;
        if (!r.passed) ++failed;
        out << DescribeReport(e, r) << "\n";
      }
      out << checked << " checked, " << failed << " mismatched, " << skipped
          << " order-only skipped\n";
      return failed == 0 ? kExitOk : kExitDomainError;
    }

    if (*search) {
      const PruneConfig cfg = MakeConfig(s_prune, s_deg, s_diam);
      const SearchOutcome res =
          Search(s_n, s_deg, s_diam, cfg, s_all ? SearchMode::kAll : SearchMode::kFirstOnly,
                 MakeSearchOptions(g, s_budget, err));
      auto sols = s_collapse ? CollapseMultiplicative(res.solutions) : res.solutions;
      if (sols.empty()) out << "no solutions\n";
      for (const auto& s : sols) out << s.ToString() << "\n";
      err << "nodes " << res.nodes_visited << ", pruned " << res.pruned
          << (res.exhausted ? ", exhausted" : "") << (res.budget_hit ? ", budget hit" : "") << "\n";
      return kExitOk;
    }

    if (*maxsearch) {
      const PruneConfig cfg = MakeConfig(m_prune, m_deg, m_diam);
      const auto res =
          MaxOrderSearch(m_deg, m_diam, m_from, m_to, cfg, MakeSearchOptions(g, m_budget, err));
      if (!res) {
        out << "no solutions\n";
      } else {
        out << res->order << " " << res->set.ToString() << "\n";
      }
      return kExitOk;
    }

    if (*combine) {
      RecordTable records = LoadRecords(g, err);
      std::vector<std::string> trace;
      CombinedOptions co;
      co.node_budget = c_budget;
      co.threads = g.threads;
      if (c_trace) co.trace = &trace;
      std::optional<CombinedResult> res;
      try {
        res = CombinedSearch(c_deg, c_diam, records, BuiltinCatalog(), co);
      } catch (...) {
        for (const auto& line : trace) err << line << "\n";
        throw;
      }
      for (const auto& line : trace) err << line << "\n";
      const ProductWitness& w = res->witness;
      out << w.product.order() << " = " << w.first.order() << " x " << w.second.order() << "\n";
      out << w.product.connection_set().ToString() << "\n";
      out << "factors " << w.first.connection_set().ToString() << " and "
          << w.second.connection_set().ToString() << "\n";
      out << "degree " << w.degree << ", diameter " << w.diameter
          << (w.measured ? " (measured)" : " (asserted)") << "\n";
      if (c_update) {
        RecordEntry e;
        e.degree = c_deg;
        e.diameter = c_diam;
        e.order = w.product.order();
        e.set = w.product.connection_set();
        e.source = "product " + std::to_string(w.first.order()) + " x " +
                   std::to_string(w.second.order());
        const bool replaced = records.UpdateIfBetter(std::move(e));
        if (replaced) records.Save(g.records);
        err << (replaced ? "record updated\n" : "record kept\n");
      }
      return kExitOk;
    }

    if (*product) {
      const ProductWitness w = CartesianProduct(CirculantGraph(ConnectionSet::Parse(p_first)),
                                                CirculantGraph(ConnectionSet::Parse(p_second)));
      out << w.product.connection_set().ToString() << "\n";
      out << "degree " << w.degree << ", diameter " << w.diameter
          << (w.measured ? " (measured)" : " (asserted)") << "\n";
      return kExitOk;
    }

    if (*table) {
      const TableFormat fmt = g.format == "csv"    ? TableFormat::kCsv
                              : g.format == "json" ? TableFormat::kJson
                                                   : TableFormat::kText;
      out << RenderTable(LoadRecords(g, err), fmt, t_deg_min, t_deg_max, t_dmin, t_dmax);
      return kExitOk;
    }

    if (*fit) {
      Grid data(f_deg_min, f_deg_max, f_dmin, f_dmax);
      if (f_what == "bounds") {
        data = BoundGrid(BoundKind::kCirculantEven, f_deg_min, f_deg_max, f_dmin, f_dmax);
      } else if (f_what == "records") {
        data = RecordGrid(LoadRecords(g, err), f_deg_min, f_deg_max, f_dmin, f_dmax);
      } else {
        data = PercentageGrid(LoadRecords(g, err), f_deg_min, f_deg_max, f_dmin, f_dmax);
      }
      if (f_parity != "all") data = FilterParity(data, f_parity == "even" ? 0 : 1);
      const PolyFit pf =
          FitPoly(data, f_degree, f_log ? FitTransform::kLog : FitTransform::kIdentity);
      WriteOrPrint(f_out, pf.ToJson(), out);
      err << "R^2 = " << std::setprecision(6) << pf.r_squared << " over " << pf.samples
          << " cells\n";
      return kExitOk;
    }

    if (*grid) {
      Grid result(gr_deg_min, gr_deg_max, gr_dmin, gr_dmax);
      if (gr_what == "diff") {
        const Grid b = BoundGrid(BoundKind::kCirculantEven, gr_deg_min, gr_deg_max, gr_dmin, gr_dmax);
        result = DiffGrid(FitPoly(b, 3, FitTransform::kLog), b, gr_normalize);
      } else {
        const Grid pct = PercentageGrid(LoadRecords(g, err), gr_deg_min, gr_deg_max, gr_dmin, gr_dmax);
        result = gr_what == "percent" ? pct : DiffGrid(PercentageFit(pct), pct, gr_normalize);
      }
      WriteOrPrint(gr_out, result.ToCsv(), out);
      return kExitOk;
    }

    if (*oracle) {
      const auto sols = BruteForceOracle(o_n, o_deg, o_diam);
      if (sols.empty()) out << "no solutions\n";
      for (const auto& s : sols) out << s.ToString() << "\n";
      return kExitOk;
    }

    if (*profile) {
      const WitnessCatalog& catalog = BuiltinCatalog();
      if (!pr_dir.empty()) {
        std::filesystem::create_directories(pr_dir);
        std::size_t written = 0;
        for (int deg = 3; deg <= 16; ++deg) {
          for (int d = 2; d <= 10; ++d) {
            const auto sets = catalog.Sets(deg, d);
            const PruneConfig cfg = ProfileCeilings(sets, d, pr_slack);
            if (!cfg.has_ceilings()) continue;
            const auto path = std::filesystem::path(pr_dir) /
                              ("deg" + std::to_string(deg) + "_diam" + std::to_string(d) + ".cfg");
            std::ofstream file(path);
            if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
            file << "# ceilings for degree " << deg << ", diameter " << d << ", profiled from "
                 << sets.size() << " witness set(s), slack " << pr_slack << "\n"
                 << cfg.ToString();
            ++written;
          }
        }
        err << "wrote " << written << " config files to " << pr_dir << "\n";
        return kExitOk;
      }
      if (pr_deg == 0) {
        err << "usage error: profile needs --deg/--diam or --dir\n";
        return kExitUsage;
      }
      const PruneConfig cfg = ProfileCeilings(catalog.Sets(pr_deg, pr_diam), pr_diam, pr_slack);
      WriteOrPrint(pr_out, cfg.ToString(), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace circdd::cli
