#include "harmonium/reproduce.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "harmonium/constructive.hpp"
#include "harmonium/families.hpp"
#include "harmonium/heuristics.hpp"
#include "harmonium/reduction.hpp"

namespace harmonium {

namespace {

using Clock = std::chrono::steady_clock;

class Collector {
 public:
  Collector(Scope scope, const ReproduceOptions &opt) : scope_(scope), opt_(opt) {}

  void exact(const std::string &id, const Graph &g, int expected) {
    SolverConfig cfg;
    cfg.time_budget = opt_.entry_budget;
    cfg.parallel_roots = opt_.parallel_roots;
    const auto res = solve(g, cfg);
    std::optional<int> got;
    if (res.complete && is_ok(is_harmonious(g, res.witness))) {
      got = res.h;
    }
    push(id, "h", "=", expected, got, res.elapsed, !res.complete);
  }

  // A colouring counts only when it verifies; a failed check shows as -1.
  void coloring(const std::string &id, const std::string &quantity, const std::string &rel, const Graph &g,
                const Coloring &c, int expected, Seconds elapsed) {
    const int got = is_ok(is_harmonious(g, c)) ? static_cast<int>(c.num_colors()) : -1;
    push(id, quantity, rel, expected, got, elapsed, false);
  }

  void value(const std::string &id, const std::string &quantity, const std::string &rel, int expected, int got,
             Seconds elapsed) {
    push(id, quantity, rel, expected, got, elapsed, false);
  }

  std::vector<ReproduceRow> take() { return std::move(rows_); }

 private:
  void push(const std::string &id, const std::string &quantity, const std::string &rel, int expected,
            std::optional<int> got, Seconds elapsed, bool skipped) {
    ReproduceRow row;
    row.scope = scope_;
    row.graph_id = id;
    row.quantity = quantity;
    row.relation = rel;
    row.expected = expected;
    row.computed = skipped ? std::nullopt : got;
    row.elapsed = elapsed;
    if (skipped) {
      row.status = RowStatus::skipped;
    } else if (!got) {
      row.status = RowStatus::fail;
    } else {
      const bool ok = rel == "<=" ? *got <= expected && *got > 0 : *got == expected;
      row.status = ok ? RowStatus::pass : RowStatus::fail;
    }
    rows_.push_back(std::move(row));
  }

  Scope scope_;
  ReproduceOptions opt_;
  std::vector<ReproduceRow> rows_;
};

Seconds since(Clock::time_point t) { return Clock::now() - t; }

void regular33(Collector &out) {
  using NG = NamedGraph;
  const std::array<std::pair<NG, int>, 16> table = {{
      {NG::planar33_8_1, 7},  {NG::planar33_8_2, 7},  {NG::planar33_8_3, 7},  {NG::planar33_10_1, 7},
      {NG::planar33_10_2, 7}, {NG::planar33_10_3, 7}, {NG::planar33_10_4, 7}, {NG::planar33_10_5, 7},
      {NG::planar33_10_6, 7}, {NG::planar33_12_1, 8}, {NG::planar33_12_2, 8}, {NG::bidiakis, 8},
      {NG::franklin, 9},      {NG::tietze, 9},        {NG::yutsis, 9},        {NG::truncated_tetrahedron, 8},
  }};
  for (const auto &[id, h] : table) {
    out.exact(std::string(info(id).name), named(id), h);
  }
  const FamilySpec gp{Family::generalized_petersen, 5, 1};
  out.exact(describe(gp), generate(gp), 7);

  // Diameter-2 graphs need all n colours.
  for (const auto id : {NG::petersen, NG::wagner, NG::octahedron}) {
    out.exact(std::string(info(id).name), named(id), static_cast<int>(info(id).n));
  }
  for (const FamilySpec s : {FamilySpec{Family::flower, 4}, FamilySpec{Family::jewel, 3},
                             FamilySpec{Family::triangular_book, 4}, FamilySpec{Family::book_with_bookmark, 4}}) {
    const auto g = generate(s);
    out.exact(describe(s), g, static_cast<int>(g.order()));
  }
}

void cycle_families(Collector &out) {
  const std::array<int, 4> small_sunflower = {7, 7, 8, 8};
  for (int n = 3; n <= 9; ++n) {
    const FamilySpec s{Family::sunflower, n};
    const auto g = generate(s);
    const int expected = n <= 6 ? small_sunflower[static_cast<std::size_t>(n - 3)] : n + 1;
    out.exact(describe(s), g, expected);
    if (n >= 7) {
      const auto t = Clock::now();
      const auto c = color_sunflower(n);
      out.coloring(describe(s), "construction", "=", g, c, expected, since(t));
    }
  }
  for (int n = 3; n <= 7; ++n) {
    const FamilySpec s{Family::sun, n};
    const auto g = generate(s);
    const int expected = n % 2 == 0 ? n + 2 : n + 3;
    out.exact(describe(s), g, expected);
    const auto t = Clock::now();
    out.coloring(describe(s), "construction", "=", g, color_sun(n), expected, since(t));
  }
  for (int n = 3; n <= 7; ++n) {
    const FamilySpec s{Family::closed_sun, n};
    const auto g = generate(s);
    const auto t = Clock::now();
    const int expected = n <= 5 ? 2 * n : n + h_cycle(n);
    out.exact(describe(s), g, expected);
    out.coloring(describe(s), "construction", "=", g, color_closed_sun(n), expected, since(t));
  }
  for (int n = 3; n <= 6; ++n) {
    for (int m = 2; m <= 8; ++m) {
      const FamilySpec s{Family::lollipop, n, m};
      const auto g = generate(s);
      const auto t = Clock::now();
      const int formula = lollipop_h(n, m);
      const auto plan = lollipop_plan(n, m);
      out.exact(describe(s), g, formula);
      out.coloring(describe(s), "trail plan", "=", g, plan.coloring(), formula, since(t));
    }
  }
  out.value("lollipop(6,4)", "closed form", "=", 8, lollipop_h(6, 4), Seconds{0});
}

void greedy_rows(Collector &out) {
  for (int N = 3; N <= 8; ++N) {
    const auto t = Clock::now();
    const auto tree = adversarial_tree(N);
    const auto bad = greedy(tree.tree, tree.order);
    const std::string id = "adversarial_tree(" + std::to_string(N) + ")";
    out.coloring(id, "greedy", "=", tree.tree, bad, (N - 1) * (N - 1) + 1, since(t));
    const auto t2 = Clock::now();
    out.coloring(id, "good colouring", "<=", tree.tree, adversarial_good_coloring(N), 2 * N - 2, since(t2));
  }
}

void reduction_rows(Collector &out) {
  std::vector<std::pair<std::string, Graph>> sources;
  for (int n = 3; n <= 6; ++n) {
    sources.emplace_back(describe({Family::cycle, n}), generate({Family::cycle, n}));
  }
  for (int n = 2; n <= 6; ++n) {
    sources.emplace_back(describe({Family::path, n}), generate({Family::path, n}));
  }
  for (int n = 1; n <= 6; ++n) {
    sources.emplace_back(describe({Family::complete, n}), generate({Family::complete, n}));
  }
  sources.emplace_back(describe({Family::star, 5}), generate({Family::star, 5}));
  for (const auto &[id, g] : sources) {
    const auto t = Clock::now();
    const int n = static_cast<int>(g.order());
    int agree = 0;
    for (int k = 1; k <= n; ++k) {
      agree += verify_equivalence(g, k).equivalent ? 1 : 0;
    }
    out.value(id, "k with IS <=> colouring", "=", n, agree, since(t));
  }
}

}  // namespace

std::string_view to_string(Scope s) noexcept {
  switch (s) {
    case Scope::all: return "all";
    case Scope::regular33: return "regular33";
    case Scope::cycle_families: return "cycle_families";
    case Scope::greedy: return "greedy";
    case Scope::reduction: return "reduction";
  }
  return "?";
}

std::optional<Scope> parse_scope(std::string_view s) {
  for (const auto sc : {Scope::all, Scope::regular33, Scope::cycle_families, Scope::greedy, Scope::reduction}) {
    if (to_string(sc) == s) {
      return sc;
    }
  }
  if (s == "cycle-families") {
    return Scope::cycle_families;
  }
  return std::nullopt;
}

std::string_view to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::pass: return "PASS";
    case RowStatus::fail: return "FAIL";
    case RowStatus::skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<ReproduceRow> reproduce(Scope scope, const ReproduceOptions &opt) {
  std::vector<ReproduceRow> rows;
  auto run = [&](Scope s, void (*fill)(Collector &)) {
    if (scope != Scope::all && scope != s) {
      return;
    }
    Collector c(s, opt);
    fill(c);
    auto part = c.take();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };
  run(Scope::regular33, regular33);
  run(Scope::cycle_families, cycle_families);
  run(Scope::greedy, greedy_rows);
  run(Scope::reduction, reduction_rows);
  return rows;
}

bool all_passed(const std::vector<ReproduceRow> &rows) {
  return std::none_of(rows.begin(), rows.end(), [](const ReproduceRow &r) { return r.status == RowStatus::fail; });
}

std::string format_table(const std::vector<ReproduceRow> &rows) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "scope" << std::setw(26) << "graph" << std::setw(26) << "quantity"
      << std::setw(12) << "expected" << std::setw(10) << "computed" << std::setw(9) << "status"
      << "seconds\n";
  for (const auto &r : rows) {
    out << std::left << std::setw(16) << to_string(r.scope) << std::setw(26) << r.graph_id << std::setw(26)
        << r.quantity << std::setw(12) << (r.relation == "=" ? "" : r.relation) + std::to_string(r.expected)
        << std::setw(10) << (r.computed ? std::to_string(*r.computed) : "-") << std::setw(9) << to_string(r.status)
        << std::fixed << std::setprecision(3) << r.elapsed.count() << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ReproduceRow &row) {
  nlohmann::json j{{"scope", std::string(to_string(row.scope))},
                   {"graph_id", row.graph_id},
                   {"quantity", row.quantity},
                   {"relation", row.relation},
                   {"expected", row.expected},
                   {"computed", nullptr},
                   {"status", std::string(to_string(row.status))},
                   {"elapsed", row.elapsed.count()}};
  if (row.computed) {
    j["computed"] = *row.computed;
  }
  return j;
}

}  // namespace harmonium
