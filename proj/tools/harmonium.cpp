// harmonium: command-line front end for the harmonious colouring toolkit.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonium/bounds.hpp"
#include "harmonium/constructive.hpp"
#include "harmonium/families.hpp"
#include "harmonium/heuristics.hpp"
#include "harmonium/io.hpp"
#include "harmonium/reduction.hpp"
#include "harmonium/reproduce.hpp"
#include "harmonium/solver.hpp"

namespace hm = harmonium;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

using Clock = std::chrono::steady_clock;

// A graph argument is an edge-list path, "-" for stdin, a catalog name, or
// family:n[,m] such as "wheel:6" or "lollipop:6,4".
struct Loaded {
  hm::Graph graph;
  std::string id;
};

Loaded load_graph(const std::string &arg) {
  if (arg == "-") {
    return {hm::read_edge_list(std::cin), "stdin"};
  }
  if (std::filesystem::exists(arg)) {
    return {hm::read_edge_list_file(arg), arg};
  }
  if (const auto id = hm::parse_named(arg)) {
    return {hm::named(*id), std::string(hm::info(*id).name)};
  }
  const auto colon = arg.find(':');
  if (colon != std::string::npos) {
    if (const auto fam = hm::parse_family(arg.substr(0, colon))) {
      hm::FamilySpec spec{*fam};
      char sep = 0;
      std::istringstream in(arg.substr(colon + 1));
      if (in >> spec.n) {
        if (in >> sep && !(sep == ',' && in >> spec.m)) {
          throw CLI::ValidationError("graph", "bad family parameters in '" + arg + "'");
        }
        return {hm::generate(spec), hm::describe(spec)};
      }
    }
  }
  throw CLI::ValidationError("graph", "'" + arg + "' is neither a file, a catalog name nor family:n[,m]");
}

void write_text(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw hm::ParseError("cannot write " + path);
  }
  out << text;
}

std::string coloring_text(const hm::Coloring &c) {
  std::ostringstream out;
  hm::write_coloring(out, c);
  return out.str();
}

// The RunRecord envelope shared by every --json output.
json record(const std::string &command, const std::string &graph_id, json results,
            const std::vector<std::string> &artifacts, Clock::time_point start) {
  return {{"command", command},
          {"graph_id", graph_id},
          {"results", std::move(results)},
          {"artifacts", artifacts},
          {"elapsed", std::chrono::duration<double>(Clock::now() - start).count()}};
}

struct Budgets {
  std::optional<std::uint64_t> nodes;
  std::optional<double> seconds;
  std::optional<int> start_k;
  bool parallel = false;
  unsigned threads = 0;
  std::string order = "index";

  void add_to(CLI::App *cmd) {
    cmd->add_option("--node-budget", nodes, "Stop after this many search nodes")->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget", seconds, "Stop after this many seconds")->check(CLI::PositiveNumber);
    cmd->add_flag("--parallel", parallel, "Split the search over worker threads");
    cmd->add_option("--threads", threads, "Worker cap (also capped by HARMONIUM_THREADS)");
    cmd->add_option("--order", order, "Vertex order")->check(CLI::IsMember({"index", "degree"}));
  }

  hm::SolverConfig config() const {
    hm::SolverConfig cfg;
    cfg.node_budget = nodes;
    if (seconds) {
      cfg.time_budget = hm::Seconds{*seconds};
    }
    cfg.start_k = start_k;
    cfg.parallel_roots = parallel;
    cfg.threads = threads;
    cfg.order = order == "degree" ? hm::VertexOrder::degree : hm::VertexOrder::index;
    return cfg;
  }
};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Harmonious colouring toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  int exit_code = kOk;
  const auto start = Clock::now();
  const std::string invocation = [&] {
    std::string s;
    for (int i = 0; i < argc; ++i) {
      s += (i ? " " : "") + std::string(argv[i]);
    }
    return s;
  }();

  // gen
  std::string gen_what;
  int gen_n = 0;
  int gen_m = 0;
  std::string gen_out;
  auto *gen = app.add_subcommand("gen", "Emit a family instance or catalog graph as an edge list");
  gen->add_option("what", gen_what, "Family name or catalog name")->required();
  gen->add_option("-n", gen_n, "First family parameter");
  gen->add_option("-m", gen_m, "Second parameter (lollipop path length, GP step)");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
  gen->callback([&] {
    hm::Graph g;
    std::string id;
    if (const auto fam = hm::parse_family(gen_what)) {
      const hm::FamilySpec spec{*fam, gen_n, gen_m};
      g = hm::generate(spec);
      id = hm::describe(spec);
    } else if (const auto named = hm::parse_named(gen_what)) {
      g = hm::named(*named);
      id = std::string(hm::info(*named).name);
    } else {
      throw CLI::ValidationError("what", "unknown family or catalog graph '" + gen_what + "'");
    }
    const std::string text = "# " + id + "\n" + hm::to_edge_list(g);
    write_text(gen_out, text);
    if (as_json && !gen_out.empty()) {
      std::cout << record(invocation, id, hm::to_json(hm::stats(g)), {gen_out}, start).dump(2) << '\n';
    }
  });

  // solve
  std::string solve_graph;
  std::optional<int> solve_k;
  std::string solve_out;
  Budgets solve_budget;
  auto *solve_cmd = app.add_subcommand("solve", "Exact harmonious chromatic number");
  solve_cmd->add_option("graph", solve_graph, "Edge-list file, catalog name or family:n[,m]")->required();
  solve_cmd->add_option("-k", solve_k, "Only decide whether k colours suffice")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--start-k", solve_budget.start_k, "First k to try");
  solve_cmd->add_option("-o,--output", solve_out, "Write the witness colouring here");
  solve_budget.add_to(solve_cmd);
  solve_cmd->callback([&] {
    const auto in = load_graph(solve_graph);
    const auto cfg = solve_budget.config();
    std::vector<std::string> artifacts;
    if (solve_k) {
      const auto r = hm::exists_k(in.graph, *solve_k, cfg);
      if (r.witness && !solve_out.empty()) {
        write_text(solve_out, coloring_text(*r.witness));
        artifacts.push_back(solve_out);
      }
      if (as_json) {
        std::cout << record(invocation, in.id, hm::to_json(r), artifacts, start).dump(2) << '\n';
      } else {
        std::cout << in.id << ": k=" << *solve_k << " " << hm::to_string(r.outcome) << " (" << r.nodes
                  << " nodes)\n";
        if (r.witness && solve_out.empty()) {
          std::cout << coloring_text(*r.witness);
        }
      }
      exit_code = r.outcome == hm::Outcome::feasible ? kOk
                  : r.outcome == hm::Outcome::infeasible ? kMismatch
                                                         : kBudget;
      return;
    }
    const auto r = hm::solve(in.graph, cfg);
    if (!solve_out.empty()) {
      write_text(solve_out, coloring_text(r.witness));
      artifacts.push_back(solve_out);
    }
    if (as_json) {
      std::cout << record(invocation, in.id, hm::to_json(r), artifacts, start).dump(2) << '\n';
    } else if (r.complete) {
      std::cout << in.id << ": h=" << r.h << " (" << r.nodes_explored << " nodes, " << r.elapsed.count()
                << " s)\n";
      if (solve_out.empty()) {
        std::cout << coloring_text(r.witness);
      }
    } else {
      std::cout << in.id << ": budget exhausted, " << r.proved_lower + 1 << " <= h <= " << r.best_upper << '\n';
    }
    exit_code = r.complete ? kOk : kBudget;
  });

  // bound
  std::string bound_graph;
  auto *bound = app.add_subcommand("bound", "Lower bounds (and two classical upper bounds) as JSON");
  bound->add_option("graph", bound_graph, "Edge-list file, catalog name or family:n[,m]")->required();
  bound->callback([&] {
    const auto in = load_graph(bound_graph);
    const auto b = hm::to_json(hm::lower_bounds(in.graph));
    std::cout << (as_json ? record(invocation, in.id, b, {}, start) : b).dump(2) << '\n';
  });

  // check
  std::string check_graph;
  std::string check_coloring;
  auto *check = app.add_subcommand("check", "Verify a colouring file against a graph");
  check->add_option("graph", check_graph, "Edge-list file, catalog name or family:n[,m]")->required();
  check->add_option("coloring", check_coloring, "Colouring file: n lines 'vertex colour'")->required();
  check->callback([&] {
    const auto in = load_graph(check_graph);
    const auto c = hm::read_coloring_file(check_coloring, in.graph.order());
    const auto v = hm::is_harmonious(in.graph, c);
    if (as_json) {
      auto res = hm::to_json(v);
      res["colors"] = c.num_colors();
      std::cout << record(invocation, in.id, res, {}, start).dump(2) << '\n';
    } else {
      std::cout << hm::to_string(v) << " (" << c.num_colors() << " colours)\n";
    }
    exit_code = hm::is_ok(v) ? kOk : kMismatch;
  });

  // greedy
  std::string greedy_graph;
  std::vector<int> greedy_order;
  std::optional<int> greedy_tree;
  auto *greedy = app.add_subcommand("greedy", "Smallest-colour greedy over a vertex order");
  auto *greedy_graph_opt = greedy->add_option("graph", greedy_graph, "Edge-list file, catalog name or family:n[,m]");
  greedy->add_option("--order", greedy_order, "Vertex order (default 0..n-1)")->delimiter(',');
  greedy->add_option("--adversarial", greedy_tree, "Use the adversarial tree with branching N and its order")
      ->check(CLI::Range(3, 64))
      ->excludes(greedy_graph_opt);
  greedy->callback([&] {
    hm::Graph g;
    std::string id;
    std::vector<hm::Vertex> order;
    std::optional<hm::Coloring> good;
    if (greedy_tree) {
      auto t = hm::adversarial_tree(*greedy_tree);
      g = t.tree;
      order = t.order;
      id = "adversarial_tree(" + std::to_string(*greedy_tree) + ")";
      good = hm::adversarial_good_coloring(*greedy_tree);
    } else {
      if (greedy_graph.empty()) {
        throw CLI::RequiredError("graph");
      }
      auto in = load_graph(greedy_graph);
      g = std::move(in.graph);
      id = in.id;
      order = greedy_order.empty() ? hm::index_order(g.order()) : std::vector<hm::Vertex>(greedy_order);
    }
    const auto c = hm::greedy(g, order);
    if (as_json) {
      json res{{"colors", c.num_colors()}, {"coloring", c.colors()}};
      if (good) {
        res["good_colors"] = good->num_colors();
      }
      std::cout << record(invocation, id, res, {}, start).dump(2) << '\n';
    } else {
      std::cout << "# " << id << ": greedy uses " << c.num_colors() << " colours";
      if (good) {
        std::cout << ", good colouring uses " << good->num_colors();
      }
      std::cout << '\n' << coloring_text(c);
    }
  });

  // vc-color
  std::string vc_graph;
  bool vc_approx = false;
  auto *vc = app.add_subcommand("vc-color", "Colour from a vertex cover");
  vc->add_option("graph", vc_graph, "Edge-list file, catalog name or family:n[,m]")->required();
  vc->add_flag("--approx", vc_approx, "Use the maximal-matching 2-approximation instead of an exact cover");
  vc->callback([&] {
    const auto in = load_graph(vc_graph);
    const auto cover =
        hm::min_vertex_cover(in.graph, vc_approx ? hm::CoverMethod::matching_2approx : hm::CoverMethod::exact);
    const auto c = hm::vc_coloring(in.graph, cover);
    const auto delta = static_cast<int>(in.graph.max_degree());
    const int ceiling = static_cast<int>(cover.size) + delta * delta - delta + 1;
    if (as_json) {
      json res{{"cover", cover.cover}, {"cover_size", cover.size}, {"colors", c.num_colors()},
               {"ceiling", ceiling}, {"coloring", c.colors()}};
      std::cout << record(invocation, in.id, res, {}, start).dump(2) << '\n';
    } else {
      std::cout << "# " << in.id << ": cover " << cover.size << ", " << c.num_colors() << " colours (ceiling "
                << ceiling << ")\n"
                << coloring_text(c);
    }
  });

  // construct
  std::string con_family;
  int con_n = 0;
  int con_m = 0;
  auto *construct = app.add_subcommand("construct", "Explicit colouring of a cycle-related family");
  construct->add_option("family", con_family, "sunflower, sun, closed_sun or lollipop")
      ->required()
      ->check(CLI::IsMember({"sunflower", "sun", "closed_sun", "closed-sun", "lollipop"}));
  construct->add_option("-n", con_n, "Family parameter")->required();
  construct->add_option("-m", con_m, "Lollipop path length");
  construct->callback([&] {
    const auto fam = *hm::parse_family(con_family);
    const hm::FamilySpec spec{fam, con_n, con_m};
    const auto g = hm::generate(spec);
    hm::Coloring c;
    json extra = json::object();
    switch (fam) {
      case hm::Family::sunflower: c = hm::color_sunflower(con_n); break;
      case hm::Family::sun: c = hm::color_sun(con_n); break;
      case hm::Family::closed_sun: c = hm::color_closed_sun(con_n); break;
      default: {
        const auto plan = hm::lollipop_plan(con_n, con_m);
        c = plan.coloring();
        extra = {{"t", plan.t}, {"case", std::string(hm::to_string(plan.parity_case))}, {"h", plan.r},
                 {"trail", plan.trail}};
      }
    }
    const auto v = hm::is_harmonious(g, c);
    if (as_json) {
      json res{{"colors", c.num_colors()}, {"verdict", hm::to_json(v)}, {"coloring", c.colors()}};
      res.update(extra);
      std::cout << record(invocation, hm::describe(spec), res, {}, start).dump(2) << '\n';
    } else {
      std::cout << "# " << hm::describe(spec) << ": " << c.num_colors() << " colours, " << hm::to_string(v) << '\n'
                << coloring_text(c);
    }
    exit_code = hm::is_ok(v) ? kOk : kMismatch;
  });

  // reduce
  std::string red_graph;
  int red_k = 0;
  std::string red_out;
  bool red_verify = false;
  auto *reduce = app.add_subcommand("reduce", "Build the independent-set gadget");
  reduce->add_option("graph", red_graph, "Edge-list file, catalog name or family:n[,m]")->required();
  reduce->add_option("-k", red_k, "Independent set size")->required();
  reduce->add_option("-o,--output", red_out, "Write the gadget edge list here (default stdout)");
  reduce->add_flag("--verify", red_verify, "Decide both sides exactly (at most 6 source vertices)");
  reduce->callback([&] {
    const auto in = load_graph(red_graph);
    const auto inst = hm::build_reduction(in.graph, red_k);
    json res{{"threshold", inst.threshold}, {"gadget_order", inst.gadget.order()},
             {"gadget_size", inst.gadget.size()}};
    if (red_verify) {
      const auto rep = hm::verify_equivalence(in.graph, red_k);
      res["independence_number"] = rep.independence_number;
      res["is_exists"] = rep.is_exists;
      res["colorable_at_threshold"] = rep.colorable_at_threshold;
      res["equivalent"] = rep.equivalent;
      exit_code = rep.equivalent ? kOk : kMismatch;
    }
    std::vector<std::string> artifacts;
    if (!red_out.empty() || !as_json) {
      write_text(red_out, hm::to_edge_list(inst.gadget));
    }
    if (!red_out.empty()) {
      artifacts.push_back(red_out);
    }
    if (as_json) {
      std::cout << record(invocation, in.id, res, artifacts, start).dump(2) << '\n';
    } else if (red_verify || !red_out.empty()) {
      std::cerr << res.dump() << '\n';
    }
  });

  // reproduce
  std::string rep_scope = "all";
  double rep_budget = 600.0;
  bool rep_parallel = false;
  auto *rep = app.add_subcommand("reproduce", "Recompute every published value and compare");
  rep->add_option("--scope", rep_scope, "all, regular33, cycle_families, greedy or reduction")
      ->check(CLI::IsMember({"all", "regular33", "cycle_families", "cycle-families", "greedy", "reduction"}));
  rep->add_option("--entry-budget", rep_budget, "Seconds per solver entry before it is SKIPPED")
      ->check(CLI::PositiveNumber);
  rep->add_flag("--parallel", rep_parallel, "Parallel solver roots");
  rep->callback([&] {
    hm::ReproduceOptions opt;
    opt.entry_budget = hm::Seconds{rep_budget};
    opt.parallel_roots = rep_parallel;
    const auto rows = hm::reproduce(*hm::parse_scope(rep_scope), opt);
    if (as_json) {
      json arr = json::array();
      for (const auto &r : rows) {
        arr.push_back(hm::to_json(r));
      }
      std::cout << record(invocation, rep_scope, arr, {}, start).dump(2) << '\n';
    } else {
      std::cout << hm::format_table(rows);
    }
    exit_code = hm::all_passed(rows) ? kOk : kMismatch;
  });

  // export
  std::string exp_graph;
  std::string exp_coloring;
  std::string exp_out;
  auto *exp = app.add_subcommand("export", "Graphviz DOT, optionally coloured");
  exp->add_option("graph", exp_graph, "Edge-list file, catalog name or family:n[,m]")->required();
  exp->add_option("-c,--coloring", exp_coloring, "Colouring file");
  exp->add_option("-o,--output", exp_out, "Output file (default stdout)");
  exp->callback([&] {
    const auto in = load_graph(exp_graph);
    std::optional<hm::Coloring> c;
    if (!exp_coloring.empty()) {
      c = hm::read_coloring_file(exp_coloring, in.graph.order());
    }
    write_text(exp_out, hm::export_dot(in.graph, c));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  } catch (const hm::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hm::GraphError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return exit_code;
}
