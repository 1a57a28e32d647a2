// Command-line front end for the chains library: search, spectrum,
// billiard-table analysis, parametric constructions, verification and
// golden-fixture reproduction. Exit codes: 0 found/valid/match,
// 1 not found/invalid/mismatch, 2 usage or input error, 3 budget.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chains/billiards.hpp"
#include "chains/constructions.hpp"
#include "chains/io.hpp"
#include "chains/search.hpp"
#include "chains/sumgraph.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace chains;

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::vector<std::int64_t> split_ints(const std::string& text, char sep) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw ParseError("bad integer: '" + item + "'");
  }
  return out;
}

// "squares", "fibonacci", ..., "recurrence:4,5" or "explicit:2,5,11".
TargetSet parse_targets(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  auto kind = parse_target_kind(name);
  if (!kind) throw ParseError("unknown target set '" + name + "'");
  if (*kind == TargetKind::Recurrence) {
    if (colon == std::string::npos)
      throw ParseError("recurrence needs seeds, e.g. recurrence:4,5");
    auto seeds = split_ints(spec.substr(colon + 1), ',');
    if (seeds.size() != 2) throw ParseError("recurrence needs two seeds");
    return TargetSet::recurrence(seeds[0], seeds[1]);
  }
  if (*kind == TargetKind::Explicit) {
    if (colon == std::string::npos)
      throw ParseError("explicit needs members, e.g. explicit:2,5,11");
    return TargetSet::explicit_set(split_ints(spec.substr(colon + 1), ','));
  }
  if (colon != std::string::npos)
    throw ParseError("'" + name + "' takes no parameters");
  return TargetSet::make(*kind);
}

json targets_json(const TargetSet& ts) {
  json params = json::array();
  if (ts.kind() == TargetKind::Recurrence) {
    auto [x0, x1] = ts.recurrence_seeds();
    params = {x0, x1};
  } else if (ts.kind() == TargetKind::Explicit) {
    params = ts.explicit_members();
  }
  return json{{"kind", std::string(to_string(ts.kind()))}, {"params", params}};
}

std::vector<std::int64_t> adjacent_sums(const std::vector<int>& beads,
                                        bool closed) {
  std::vector<std::int64_t> sums;
  for (std::size_t i = 0; i + 1 < beads.size(); ++i)
    sums.push_back(std::int64_t{beads[i]} + beads[i + 1]);
  if (closed && beads.size() > 1)
    sums.push_back(std::int64_t{beads.back()} + beads.front());
  return sums;
}

json beads_json(const TargetSet& ts, const std::vector<int>& beads,
                const std::string& mode, bool closed) {
  return json{{"n", beads.size()},
              {"targets", targets_json(ts)},
              {"mode", mode},
              {"beads", beads},
              {"sums", adjacent_sums(beads, closed)},
              {"closed", closed}};
}

std::vector<int> read_beads_arg(const std::string& path) {
  if (path.empty()) return parse_beads(std::cin);
  return parse_beads(read_file(path));
}

std::string outcome_word(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    default: return "budget";
  }
}

// ---- search ----------------------------------------------------------

int run_search(const std::string& targets, int n, const std::string& mode,
               std::size_t count, bool as_json, std::uint64_t budget) {
  TargetSet ts = parse_targets(targets);
  SumGraph g = build_graph(n, ts);
  SearchLimits limits{budget};
  bool closed = mode == "necklace";
  std::vector<std::vector<int>> found;
  if (count > 0) {
    if (closed) {
      auto en = enumerate_necklaces(g, count, limits);
      for (auto& nk : en.necklaces) found.push_back(nk.beads);
    } else {
      auto en = enumerate_chains(g, count, limits);
      for (auto& c : en.chains) found.push_back(c.beads);
    }
  } else if (closed) {
    if (auto nk = find_necklace(g, limits)) found.push_back(nk->beads);
  } else {
    if (auto c = find_chain(g, limits)) found.push_back(c->beads);
  }
  if (as_json) {
    if (count > 0) {
      json arr = json::array();
      for (auto& beads : found)
        arr.push_back(beads_json(ts, beads, mode, closed));
      std::cout << arr.dump() << "\n";
    } else if (!found.empty()) {
      std::cout << beads_json(ts, found[0], mode, closed).dump() << "\n";
    } else {
      std::cout << json{{"n", n},
                        {"targets", targets_json(ts)},
                        {"mode", mode},
                        {"beads", json::array()},
                        {"sums", json::array()},
                        {"closed", closed}}
                       .dump()
                << "\n";
    }
  } else {
    for (auto& beads : found) std::cout << format_beads(beads) << "\n";
  }
  return found.empty() ? kNotFound : kFound;
}

// ---- spectrum --------------------------------------------------------

int run_spectrum(const std::string& targets, int from, int to,
                 const std::string& mode, bool count, int threads,
                 bool as_json, std::uint64_t budget) {
  TargetSet ts = parse_targets(targets);
  SpectrumMode m = mode == "chain"      ? SpectrumMode::Chain
                   : mode == "necklace" ? SpectrumMode::Necklace
                                        : SpectrumMode::Both;
  if (count && m != SpectrumMode::Chain)
    throw ParseError("--count requires --mode chain");
  auto rows = spectrum(ts, from, to, m, count, threads, SearchLimits{budget});
  bool budget_hit = false;
  json arr = json::array();
  for (const auto& row : rows) {
    json j{{"n", row.n}};
    std::ostringstream line;
    line << row.n;
    if (m != SpectrumMode::Necklace) {
      line << " " << outcome_word(row.chain);
      j["chain"] = outcome_word(row.chain);
      budget_hit |= row.chain == Outcome::BudgetExceeded;
    }
    if (m != SpectrumMode::Chain) {
      line << " " << outcome_word(row.necklace);
      j["necklace"] = outcome_word(row.necklace);
      budget_hit |= row.necklace == Outcome::BudgetExceeded;
    }
    if (row.chain_count) {
      line << " " << *row.chain_count;
      j["count"] = *row.chain_count;
    }
    if (!as_json) std::cout << line.str() << "\n";
    arr.push_back(j);
    std::cerr << "n=" << row.n << " elapsed " << row.elapsed.count() << "s\n";
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return budget_hit ? kBudget : kFound;
}

// ---- table -----------------------------------------------------------

std::string render_table_text(const TableDecomposition& d, std::int64_t P,
                              std::optional<std::int64_t> gcd_value,
                              std::optional<bool> complete) {
  std::ostringstream out;
  out << "P " << P << "\n";
  out << "pockets";
  for (auto p : d.pockets) out << " " << p;
  out << "\n";
  for (const auto& path : d.paths) {
    out << "path";
    for (auto b : path) out << " " << b;
    out << "\n";
  }
  for (const auto& cyc : d.cycles) {
    out << "cycle";
    for (auto b : cyc) out << " " << b;
    out << "\n";
  }
  if (gcd_value) out << "gcd " << *gcd_value << "\n";
  if (complete) out << "complete " << (*complete ? "yes" : "no") << "\n";
  return out.str();
}

int run_table(const std::string& corners, const std::string& folds_file,
              const std::string& render_out, bool as_json) {
  std::optional<BilliardTable> table;
  std::optional<std::pair<FoldSystem, FoldSystem>> folds;
  if (!corners.empty()) {
    auto c = split_ints(corners, ',');
    if (c.size() != 4) throw ParseError("--corners needs A,B,C,D");
    table = rect_table(c[0], c[1], c[2], c[3]);
    folds.emplace(table->fold_a(), table->fold_b());
  } else if (!folds_file.empty()) {
    folds.emplace(fold_pair_from_json(read_file(folds_file)));
  } else {
    throw ParseError("need --corners or --folds");
  }
  const std::int64_t P = folds->first.n();

  if (P > (std::int64_t{1} << 25)) {
    auto stats = decompose_stats(folds->first, folds->second);
    std::cout << "P " << stats.n << "\n" << "pockets";
    for (auto p : stats.pockets) std::cout << " " << p;
    std::cout << "\n" << "path-lengths";
    for (auto l : stats.path_lengths) std::cout << " " << l;
    std::cout << "\n" << "cycle-lengths";
    for (auto l : stats.cycle_lengths) std::cout << " " << l;
    std::cout << "\n";
    return kFound;
  }

  TableDecomposition d = decompose(folds->first, folds->second);
  std::optional<std::int64_t> gcd_value;
  std::optional<bool> complete;
  if (table) {
    gcd_value = std::gcd(table->B - table->A, table->C - table->B);
    if (d.pockets.size() == 2)
      complete = lemma_predict(*table).complete;
    else
      complete = d.paths.empty() && d.cycles.size() == 1;
  }
  if (as_json) {
    json j{{"P", P},
           {"pockets", d.pockets},
           {"paths", d.paths},
           {"cycles", d.cycles}};
    if (gcd_value) j["gcd"] = *gcd_value;
    if (complete) j["complete"] = *complete;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << render_table_text(d, P, gcd_value, complete);
  }
  if (!render_out.empty()) {
    std::ofstream svg(render_out, std::ios::binary);
    if (!svg) throw ParseError("cannot write " + render_out);
    svg << (table ? render_svg(*table, d)
                  : render_svg(folds->first, folds->second, d));
  }
  return kFound;
}

// ---- construct -------------------------------------------------------

std::string square_row_line(const SquareNecklaceRow& row) {
  std::ostringstream out;
  out << row.r << "," << row.s << " " << row.x << "," << row.y;
  for (auto root : row.corner_roots) out << " " << root;
  out << " " << row.double_sides.first << "," << row.double_sides.second
      << " " << row.perimeter;
  if (!row.sides_coprime) out << " not-coprime";
  return out.str();
}

std::string figurate_row_line(const FigurateRow& row) {
  std::ostringstream out;
  out << row.corners[0] << " " << row.corners[1] << " " << row.corners[2]
      << " " << row.corners[3] << " " << row.sides.first << ","
      << row.sides.second << " " << row.perimeter;
  if (row.discrepancies.empty()) {
    out << " ok";
  } else {
    for (const auto& d : row.discrepancies) out << " diff:" << d;
  }
  return out.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_pairs(
    const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto rs = split_ints(item, ':');
    if (rs.size() != 2) throw ParseError("--pairs wants r:s,r:s,...");
    pairs.push_back({rs[0], rs[1]});
  }
  return pairs;
}

// ---- reproduce -------------------------------------------------------

std::string fixture_path(const std::string& dir, const std::string& name) {
  return dir + "/" + name;
}

std::string canonical_line(std::vector<int> beads, bool closed) {
  return format_beads(closed ? canonical_necklace(std::move(beads))
                             : canonical_chain(std::move(beads)));
}

// The square table over 9, 16, 25 and half of 64: its pocket path is the
// 16-chain, shrinking and growing by one bead at the pockets.
std::vector<std::vector<int>> recaman_chains() {
  BilliardTable t = rect_table(9, 16, 25, 32);
  auto d = decompose(t.fold_a(), t.fold_b());
  if (d.paths.size() != 1 || d.paths[0].size() != 16)
    throw std::logic_error("square table path incomplete");
  std::vector<int> c16;
  for (auto b : d.paths[0]) c16.push_back(static_cast<int>(b));
  if (c16.front() == 16) std::reverse(c16.begin(), c16.end());
  std::vector<int> c15(c16.begin(), c16.end() - 1);
  std::vector<int> c17 = c16;
  std::reverse(c17.begin(), c17.end());  // ends at 8, and 8+17 = 25
  c17.push_back(17);
  TargetSet sq = TargetSet::make(TargetKind::Squares);
  for (auto* c : {&c15, &c16, &c17})
    if (!verify_sequence(*c, sq, false).valid)
      throw std::logic_error("square chain failed verification");
  return {c15, c16, c17};
}

std::string reproduce_content(const std::string& id,
                              const std::string& fixtures) {
  std::ostringstream out;
  if (id == "fig1") {
    for (auto& c : recaman_chains()) out << canonical_line(c, false) << "\n";
  } else if (id == "fig2" || id == "fig3" || id == "fig14") {
    TargetSet ts = TargetSet::make(id == "fig3" ? TargetKind::Triangular
                                                : TargetKind::Squares);
    std::istringstream in(read_file(fixture_path(fixtures, id + ".txt")));
    std::string line;
    while (std::getline(in, line)) {
      auto beads = parse_beads(line);
      if (!verify_sequence(beads, ts, true).valid)
        throw std::logic_error("fixture necklace failed verification");
      out << canonical_line(beads, true) << "\n";
    }
  } else if (id == "fig10") {
    BilliardTable t = rect_table(4, 13, 25, 34);
    auto d = decompose(t.fold_a(), t.fold_b());
    auto lemma = lemma_predict(t);
    out << render_table_text(d, t.perimeter(), lemma.gcd, lemma.complete);
  } else if (id == "fig12") {
    BilliardTable t = rect_table(13, 21, 34, 42);
    auto d = decompose(t.fold_a(), t.fold_b());
    auto lemma = lemma_predict(t);
    out << render_table_text(d, t.perimeter(), lemma.gcd, lemma.complete);
  } else if (id == "fig13") {
    TargetSet ts = TargetSet::make(TargetKind::Triangular);
    Necklace nk = build_necklace_from_corners(1, 15, 91, 105, ts);
    for (int i = 0; i < 3; ++i) {
      nk = extend_necklace(nk, ts);
      out << format_beads(nk.beads) << "\n";
    }
  } else if (id == "table-squares") {
    auto rows = square_necklace_rows(
        {{2, 1}, {3, 2}, {4, 3}, {7, 3}, {7, 5}, {5, 4}, {5, 3}});
    // The published table lists the coprime-sided rows by perimeter.
    std::erase_if(rows,
                  [](const SquareNecklaceRow& r) { return !r.sides_coprime; });
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SquareNecklaceRow& a, const SquareNecklaceRow& b) {
                       return a.perimeter < b.perimeter;
                     });
    for (const auto& row : rows) out << square_row_line(row) << "\n";
  } else if (id == "table-triangular" || id == "table-pentagonal") {
    auto rows = figurate_table_rows(id == "table-triangular"
                                        ? TargetKind::Triangular
                                        : TargetKind::Pentagonal);
    for (const auto& row : rows) out << figurate_row_line(row) << "\n";
  } else {
    throw ParseError("unknown reproduce id '" + id + "'");
  }
  return out.str();
}

int run_reproduce(const std::string& id, const std::string& fixtures) {
  std::string content = reproduce_content(id, fixtures);
  std::cout << content;
  std::string golden = read_file(fixture_path(fixtures, [&] {
    std::string name = id;
    for (char& c : name)
      if (c == '-') c = '_';
    return name + ".txt";
  }()));
  if (content != golden) {
    std::cerr << "reproduce " << id << ": output differs from fixture\n";
    return kNotFound;
  }
  return kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chains and necklaces of 1..n with constrained adjacent sums"};
  app.require_subcommand(1);

  std::string targets = "squares", mode = "chain";
  int n = 0, from = 2, to = 2, threads = 1;
  std::size_t count = 0;
  bool as_json = false, closed = false, count_flag = false, drop_max = false;
  std::uint64_t budget = SearchLimits{}.node_budget;
  std::string corners, folds_file, render_out, in_file, id;
  std::string pairs_arg;
  std::int64_t r = 0, s = 0, bound = 1024;
  std::string fixtures = CHAINS_FIXTURES_DIR;

  auto* search_cmd = app.add_subcommand("search", "exhaustive chain/necklace search");
  search_cmd->add_option("--targets", targets)->required();
  search_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"chain", "necklace"}));
  search_cmd->add_option("--count", count, "enumerate up to CAP results");
  search_cmd->add_option("--budget", budget);
  search_cmd->add_flag("--json", as_json);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "existence per n over a range");
  spectrum_cmd->add_option("--targets", targets)->required();
  spectrum_cmd->add_option("--from", from)->required();
  spectrum_cmd->add_option("--to", to)->required();
  spectrum_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"chain", "necklace", "both"}));
  spectrum_cmd->add_flag("--count", count_flag, "count distinct chains");
  spectrum_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--budget", budget);
  spectrum_cmd->add_flag("--json", as_json);

  auto* table_cmd = app.add_subcommand("table", "decompose a billiard table");
  table_cmd->add_option("--corners", corners, "doubled corners A,B,C,D");
  table_cmd->add_option("--folds", folds_file, "fold-system JSON file");
  table_cmd->add_option("--render", render_out, "write an SVG diagram");
  table_cmd->add_flag("--json", as_json);

  auto* construct_cmd = app.add_subcommand("construct", "parametric families");
  construct_cmd->require_subcommand(1);
  auto* fib_cmd = construct_cmd->add_subcommand("fibonacci");
  fib_cmd->add_option("--n", n)->required();
  auto* lucas_cmd = construct_cmd->add_subcommand("lucas");
  lucas_cmd->add_option("--n", n)->required();
  auto* sqrows_cmd = construct_cmd->add_subcommand("square-rows");
  sqrows_cmd->add_option("--pairs", pairs_arg)->required();
  auto* sqneck_cmd = construct_cmd->add_subcommand("square-necklace");
  sqneck_cmd->add_option("--corners", corners)->required();
  sqneck_cmd->add_option("--targets", targets);
  auto* odd_cmd = construct_cmd->add_subcommand("odd-square");
  odd_cmd->add_option("--r", r)->required();
  odd_cmd->add_option("--s", s)->required();
  auto* cubic_cmd = construct_cmd->add_subcommand("cubic-387");
  cubic_cmd->add_flag("--drop-max", drop_max);
  auto* cand_cmd = construct_cmd->add_subcommand("cubic-candidates");
  cand_cmd->add_option("--bound", bound);
  auto* extend_cmd = construct_cmd->add_subcommand("extend");
  extend_cmd->add_option("--targets", targets)->required();
  extend_cmd->add_option("--in", in_file);

  auto* verify_cmd = app.add_subcommand("verify", "check a bead sequence");
  verify_cmd->add_option("--targets", targets)->required();
  verify_cmd->add_flag("--closed", closed);
  verify_cmd->add_option("--in", in_file, "bead file (default stdin)");

  auto* repro_cmd = app.add_subcommand("reproduce", "regenerate a bundled figure or table");
  repro_cmd->add_option("id", id)->required();
  repro_cmd->add_option("--fixtures", fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  auto started = std::chrono::steady_clock::now();
  int code = kUsage;
  try {
    if (*search_cmd) {
      code = run_search(targets, n, mode, count, as_json, budget);
    } else if (*spectrum_cmd) {
      code = run_spectrum(targets, from, to, mode, count_flag, threads,
                          as_json, budget);
    } else if (*table_cmd) {
      code = run_table(corners, folds_file, render_out, as_json);
    } else if (*verify_cmd) {
      TargetSet ts = parse_targets(targets);
      auto beads = read_beads_arg(in_file);
      auto report = verify_sequence(beads, ts, closed);
      if (report.valid) {
        std::cout << "valid\n";
        code = kFound;
      } else {
        std::cout << "invalid";
        if (report.violation)
          std::cout << " sum " << report.violation->left << "+"
                    << report.violation->right << "=" << report.violation->sum
                    << " at position " << report.violation->position;
        if (report.coverage_failure) std::cout << " " << *report.coverage_failure;
        std::cout << "\n";
        code = kNotFound;
      }
    } else if (*repro_cmd) {
      code = run_reproduce(id, fixtures);
    } else if (*construct_cmd) {
      TargetSet ts = parse_targets(targets);
      if (*fib_cmd) {
        std::cout << format_beads(fibonacci_chain(n).beads) << "\n";
      } else if (*lucas_cmd) {
        std::cout << format_beads(lucas_chain(n).beads) << "\n";
      } else if (*sqrows_cmd) {
        for (const auto& row : square_necklace_rows(parse_pairs(pairs_arg)))
          std::cout << square_row_line(row) << "\n";
      } else if (*sqneck_cmd) {
        auto c = split_ints(corners, ',');
        if (c.size() != 4) throw ParseError("--corners needs A,B,C,D");
        auto nk = build_necklace_from_corners(c[0], c[1], c[2], c[3], ts);
        std::cout << format_beads(nk.beads) << "\n";
      } else if (*odd_cmd) {
        std::cout << format_beads(odd_square_family(r, s).beads) << "\n";
      } else if (*cubic_cmd) {
        std::cout << format_beads(cubic_chain(drop_max).beads) << "\n";
      } else if (*cand_cmd) {
        for (const auto& cand : cubic_necklace_candidates(bound))
          std::cout << cand.a << " " << cand.b << " " << cand.c << " "
                    << cand.d << " " << cand.gcd_value << " "
                    << cand.perimeter << " "
                    << (cand.coverage_ok ? "covers" : "truncates") << " "
                    << cand.predicted_components << "\n";
      } else if (*extend_cmd) {
        auto nk = make_necklace(read_beads_arg(in_file));
        if (!verify_sequence(nk.beads, ts, true).valid)
          throw ParseError("input is not a valid necklace");
        std::cout << format_beads(extend_necklace(nk, ts).beads) << "\n";
      }
      code = kFound;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    code = kBudget;
  } catch (const NoChain& e) {
    std::cerr << e.what() << "\n";
    code = kNotFound;
  } catch (const NoSpliceFound& e) {
    std::cerr << e.what() << "\n";
    code = kNotFound;
  } catch (const NoInsertionPoint& e) {
    std::cerr << e.what() << "\n";
    code = kNotFound;
  } catch (const Degenerate& e) {
    std::cerr << e.what() << "\n";
    code = kNotFound;
  } catch (const ClosureFailure& e) {
    std::cerr << e.what() << "\n";
    code = kNotFound;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    code = kUsage;
  }
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;
  std::cerr << "elapsed " << elapsed.count() << "s\n";
  return code;
}
