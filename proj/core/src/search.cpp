#include "chains/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <set>
#include <thread>

namespace chains {

namespace {

// Depth-first Hamiltonian path/cycle search over a sum-graph.
// Prunings: least-remaining-degree successor ordering, option counting
// (a vertex short of usable connections must be the final endpoint, and
// there can be at most one such), and connectivity of the unvisited
// subgraph from the current endpoint. All prunings are sound, so an
// exhausted search certifies nonexistence.
class Backtracker {
public:
  // Callback returns true to continue enumerating, false to stop.
  using OnFound = std::function<bool(const std::vector<int>&)>;

  Backtracker(const SumGraph& g, SearchLimits limits)
      : g_(g),
        n_(g.n),
        limits_(limits),
        visited_(g.n + 1, 0),
        rd_(g.n + 1, 0),
        cur_mark_(g.n + 1, 0),
        start_mark_(g.n + 1, 0),
        stamp_(g.n + 1, 0) {
    for (int v = 1; v <= n_; ++v) rd_[v] = g.degree(v);
  }

  void paths(const OnFound& on_found) {
    on_found_ = &on_found;
    cycle_mode_ = false;
    if (n_ == 1) {
      std::vector<int> single{1};
      on_found(single);
      return;
    }
    auto anomalies = degree_anomalies(g_);
    if (!anomalies.isolated.empty()) return;
    if (anomalies.monovalent.size() > 2) return;
    if (!anomalies.monovalent.empty()) {
      // Every monovalent vertex is an endpoint; start from the least.
      require_last_gt_start_ = false;
      if (!run_from(anomalies.monovalent.front())) return;
    } else {
      // Unknown endpoints: try every start, counting each path once by
      // demanding the far endpoint exceed the start.
      require_last_gt_start_ = true;
      for (int s = 1; s <= n_; ++s)
        if (!run_from(s)) return;
    }
  }

  void cycles(const OnFound& on_found) {
    on_found_ = &on_found;
    cycle_mode_ = true;
    if (n_ < 3) return;
    for (int v = 1; v <= n_; ++v)
      if (g_.degree(v) < 2) return;
    for (int u : g_.adj[1]) start_mark_[u] = 1;
    run_from(1);
  }

private:
  bool run_from(int s) {
    start_ = s;
    path_.clear();
    path_.push_back(s);
    visit(s);
    bool cont = dfs(s, n_ - 1);
    unvisit(s);
    path_.pop_back();
    return cont;
  }

  void visit(int v) {
    visited_[v] = 1;
    for (int u : g_.adj[v]) --rd_[u];
  }
  void unvisit(int v) {
    visited_[v] = 0;
    for (int u : g_.adj[v]) ++rd_[u];
  }

  bool complete() {
    if (cycle_mode_) {
      if (!start_mark_[path_.back()]) return true;  // cannot close
    } else if (require_last_gt_start_ && path_.back() <= start_) {
      return true;  // counted from the other endpoint
    }
    return (*on_found_)(path_);
  }

  bool dfs(int cur, int remaining) {
    if (++nodes_ > limits_.node_budget) throw BudgetExceeded();
    if (remaining == 0) return complete();
    if (!prune_ok(cur, remaining)) return true;

    struct Cand {
      int rd;
      int v;
    };
    Cand cands[64];
    int ncand = 0;
    int forced = 0, nforced = 0;
    for (int u : g_.adj[cur])
      if (!visited_[u]) {
        if (cycle_mode_ && remaining > 1 && rd_[u] + start_mark_[u] == 1) {
          // Besides the edge to cur, u has a single usable connection left,
          // which is not enough for both sides of u unless we step onto u
          // right now. Two such neighbors make the position hopeless.
          forced = u;
          ++nforced;
        }
        if (ncand == 64) {  // fall back for absurdly dense vertices
          return dfs_dense(cur, remaining);
        }
        cands[ncand++] = {rd_[u], u};
      }
    if (nforced) {
      if (nforced > 1) return true;
      visit(forced);
      path_.push_back(forced);
      bool cont = dfs(forced, remaining - 1);
      path_.pop_back();
      unvisit(forced);
      return cont;
    }
    std::sort(cands, cands + ncand,
              [](const Cand& a, const Cand& b) {
                return a.rd != b.rd ? a.rd < b.rd : a.v < b.v;
              });
    for (int i = 0; i < ncand; ++i) {
      int u = cands[i].v;
      visit(u);
      path_.push_back(u);
      bool cont = dfs(u, remaining - 1);
      path_.pop_back();
      unvisit(u);
      if (!cont) return false;
    }
    return true;
  }

  bool dfs_dense(int cur, int remaining) {
    std::vector<std::pair<int, int>> cands;
    for (int u : g_.adj[cur])
      if (!visited_[u]) cands.emplace_back(rd_[u], u);
    std::sort(cands.begin(), cands.end());
    for (auto [rd, u] : cands) {
      visit(u);
      path_.push_back(u);
      bool cont = dfs(u, remaining - 1);
      path_.pop_back();
      unvisit(u);
      if (!cont) return false;
    }
    return true;
  }

  bool prune_ok(int cur, int remaining) {
    for (int u : g_.adj[cur]) cur_mark_[u] = 1;
    bool ok = cycle_mode_ ? prune_cycle(remaining) : prune_path(cur, remaining);
    if (ok) ok = connected(cur, remaining);
    for (int u : g_.adj[cur]) cur_mark_[u] = 0;
    return ok;
  }

  bool prune_path(int /*cur*/, int remaining) {
    int finals = 0;
    for (int v = 1; v <= n_; ++v) {
      if (visited_[v]) continue;
      if (rd_[v] == 0) {
        // Only reachable from the current endpoint, and then stuck.
        if (!cur_mark_[v] || remaining > 1) return false;
      } else if (rd_[v] == 1 && !cur_mark_[v]) {
        if (++finals > 1) return false;  // both would need to end the path
      }
    }
    return true;
  }

  bool prune_cycle(int /*remaining*/) {
    if (rd_[start_] == 0) return false;  // no unvisited neighbor can close
    int need_start_edge = 0;
    for (int v = 1; v <= n_; ++v) {
      if (visited_[v]) continue;
      int base = rd_[v] + (cur_mark_[v] ? 1 : 0);
      if (base + (start_mark_[v] ? 1 : 0) < 2) return false;
      if (base < 2 && ++need_start_edge > 1) return false;
    }
    return true;
  }

  // All unvisited vertices must be reachable from the current endpoint
  // through unvisited vertices.
  bool connected(int cur, int remaining) {
    if (remaining == 0) return true;
    ++token_;
    bfs_.clear();
    for (int u : g_.adj[cur])
      if (!visited_[u] && stamp_[u] != token_) {
        stamp_[u] = token_;
        bfs_.push_back(u);
      }
    if (bfs_.empty()) return false;
    std::size_t head = 0;
    int reached = static_cast<int>(bfs_.size());
    while (head < bfs_.size()) {
      int v = bfs_[head++];
      for (int u : g_.adj[v])
        if (!visited_[u] && stamp_[u] != token_) {
          stamp_[u] = token_;
          bfs_.push_back(u);
          ++reached;
        }
    }
    return reached == remaining;
  }

  const SumGraph& g_;
  int n_;
  SearchLimits limits_;
  std::uint64_t nodes_ = 0;
  bool cycle_mode_ = false;
  bool require_last_gt_start_ = false;
  int start_ = 0;
  const OnFound* on_found_ = nullptr;
  std::vector<int> path_;
  std::vector<char> visited_;
  std::vector<int> rd_;
  std::vector<char> cur_mark_;
  std::vector<char> start_mark_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t token_ = 0;
  std::vector<int> bfs_;
};

}  // namespace

std::optional<Chain> find_chain(const SumGraph& g, SearchLimits limits) {
  std::optional<Chain> result;
  Backtracker bt(g, limits);
  bt.paths([&](const std::vector<int>& beads) {
    result = make_chain(beads);
    return false;
  });
  return result;
}

std::optional<Necklace> find_necklace(const SumGraph& g, SearchLimits limits) {
  std::optional<Necklace> result;
  Backtracker bt(g, limits);
  bt.cycles([&](const std::vector<int>& beads) {
    result = make_necklace(beads);
    return false;
  });
  return result;
}

ChainEnumeration enumerate_chains(const SumGraph& g, std::size_t cap,
                                  SearchLimits limits) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::set<std::vector<int>> found;
  bool truncated = false;
  Backtracker bt(g, limits);
  bt.paths([&](const std::vector<int>& beads) {
    found.insert(canonical_chain(beads));
    if (found.size() > cap) {
      truncated = true;
      return false;
    }
    return true;
  });
  ChainEnumeration out;
  out.truncated = truncated;
  for (auto& beads : found) {
    if (out.chains.size() == cap) break;
    out.chains.push_back(Chain{beads});
  }
  return out;
}

NecklaceEnumeration enumerate_necklaces(const SumGraph& g, std::size_t cap,
                                        SearchLimits limits) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::set<std::vector<int>> found;
  bool truncated = false;
  Backtracker bt(g, limits);
  bt.cycles([&](const std::vector<int>& beads) {
    found.insert(canonical_necklace(beads));
    if (found.size() > cap) {
      truncated = true;
      return false;
    }
    return true;
  });
  NecklaceEnumeration out;
  out.truncated = truncated;
  for (auto& beads : found) {
    if (out.necklaces.size() == cap) break;
    out.necklaces.push_back(Necklace{beads});
  }
  return out;
}

std::vector<SpectrumRow> spectrum(const TargetSet& ts, int lo, int hi,
                                  SpectrumMode mode, bool count, int threads,
                                  SearchLimits limits) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("bad spectrum range");
  const int rows_n = hi - lo + 1;
  std::vector<SpectrumRow> rows(static_cast<std::size_t>(rows_n));

  auto compute_row = [&](int n) {
    SpectrumRow row;
    row.n = n;
    auto t0 = std::chrono::steady_clock::now();
    SumGraph g = build_graph(n, ts);
    if (mode == SpectrumMode::Chain || mode == SpectrumMode::Both) {
      try {
        if (count) {
          auto en = enumerate_chains(g, SIZE_MAX / 2, limits);
          row.chain_count = en.chains.size();
          row.chain = en.chains.empty() ? Outcome::No : Outcome::Yes;
        } else {
          row.chain = find_chain(g, limits) ? Outcome::Yes : Outcome::No;
        }
      } catch (const BudgetExceeded&) {
        row.chain = Outcome::BudgetExceeded;
      }
      // Forced-move soundness: three monovalent vertices cannot all be
      // chain endpoints.
      if (degree_anomalies(g).monovalent.size() > 2)
        assert(row.chain == Outcome::No);
    }
    if (mode == SpectrumMode::Necklace || mode == SpectrumMode::Both) {
      try {
        row.necklace = find_necklace(g, limits) ? Outcome::Yes : Outcome::No;
      } catch (const BudgetExceeded&) {
        row.necklace = Outcome::BudgetExceeded;
      }
    }
    row.elapsed = std::chrono::steady_clock::now() - t0;
    return row;
  };

  if (threads <= 1) {
    for (int i = 0; i < rows_n; ++i) rows[i] = compute_row(lo + i);
    return rows;
  }

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= rows_n) return;
      rows[i] = compute_row(lo + i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace chains
