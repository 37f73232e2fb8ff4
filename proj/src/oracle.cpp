#include "isoperim/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <queue>
#include <thread>
#include <unordered_set>

#include "isoperim/errors.hpp"

namespace isop {
namespace {

// Dense box holding every connected n-set whose least point is the origin, padded so that
// neighbor lookups from any core cell stay in range.
struct Grid {
  std::size_t dim = 0;
  std::vector<std::int64_t> lo, extent, stride;
  std::vector<std::int64_t> deltas;  // per generator, in generator order
  std::vector<char> allowed;         // core cell lexicographically greater than the origin
  std::int64_t origin = 0;

  Grid(const CayleyGraphSpec& g, std::int64_t n) : dim(g.dimension()) {
    lo.resize(dim);
    extent.resize(dim);
    stride.resize(dim);
    std::vector<std::int64_t> reach(dim, 0);
    for (const auto& u : g.generators()) {
      for (std::size_t i = 0; i < dim; ++i) reach[i] = std::max(reach[i], std::abs(u[i]));
    }
    std::vector<std::int64_t> core_lo(dim), core_hi(dim);
    std::int64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      core_hi[i] = (n - 1) * reach[i];
      core_lo[i] = i == 0 ? 0 : -core_hi[i];
      lo[i] = core_lo[i] - reach[i];
      extent[i] = core_hi[i] - core_lo[i] + 1 + 2 * reach[i];
      total *= extent[i];
      if (total > 50'000'000) throw UsageError("oracle: search box too large for this size");
    }
    std::int64_t s = 1;
    for (std::size_t i = dim; i-- > 0;) {
      stride[i] = s;
      s *= extent[i];
    }
    origin = index_of(LatticePoint::zero(dim));
    for (const auto& u : g.generators()) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < dim; ++i) d += u[i] * stride[i];
      deltas.push_back(d);
    }
    allowed.assign(static_cast<std::size_t>(total), 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
      LatticePoint p = point_of(idx);
      bool in_core = true;
      for (std::size_t i = 0; i < dim; ++i) in_core = in_core && p[i] >= core_lo[i] && p[i] <= core_hi[i];
      allowed[static_cast<std::size_t>(idx)] = in_core && p > LatticePoint::zero(dim);
    }
  }

  std::int64_t index_of(const LatticePoint& p) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) idx += (p[i] - lo[i]) * stride[i];
    return idx;
  }

  LatticePoint point_of(std::int64_t idx) const {
    LatticePoint p = LatticePoint::zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] = idx / stride[i] + lo[i];
      idx %= stride[i];
    }
    return p;
  }
};

struct Shared {
  std::int64_t max_sets;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::atomic<std::int64_t> explored{0};
  std::atomic<bool> stop{false};
};

struct TaskResult {
  std::int64_t best = -1;
  std::vector<CanonicalSet> witnesses;
  std::int64_t explored = 0;
};

class Search {
 public:
  Search(const Grid& grid, std::int64_t n, std::span<const std::int64_t> smaller, std::int64_t seed, bool prune,
         Shared& shared, const std::function<void(const CanonicalSet&)>* visit)
      : grid_(grid), n_(n), smaller_(smaller), prune_(prune), shared_(shared), visit_(visit) {
    std::size_t cells = grid.allowed.size();
    in_set_.assign(cells, 0);
    marked_.assign(cells, 0);
    adj_.assign(cells, 0);
    buffers_.resize(static_cast<std::size_t>(n) + 1);
    result_.best = prune ? seed : -1;
  }

  // Replays the first two levels of the sequential search, then explores branch `task`.
  TaskResult run(std::size_t task) {
    add(grid_.origin);
    marked_[grid_.origin] = 1;
    auto& level1 = buffers_[1];
    level1.clear();
    for (auto d : grid_.deltas) {
      std::int64_t c = grid_.origin + d;
      if (grid_.allowed[c] && !marked_[c]) {
        marked_[c] = 1;
        level1.push_back(c);
      }
    }
    // Branch i pops the i-th element from the back; earlier pops stay marked (excluded).
    std::size_t pos = level1.size() - 1 - task;
    step(level1[pos], 1, pos);
    flush();
    return std::move(result_);
  }

  static std::size_t task_count(const Grid& grid) {
    std::size_t count = 0;
    for (auto d : grid.deltas) count += grid.allowed[grid.origin + d] ? 1 : 0;
    return count;
  }

 private:
  void add(std::int64_t v) {
    in_set_[v] = 1;
    members_.push_back(v);
    edges_ += adj_[v];
    for (auto d : grid_.deltas) ++adj_[v + d];
  }

  void remove(std::int64_t v) {
    for (auto d : grid_.deltas) --adj_[v + d];
    edges_ -= adj_[v];
    members_.pop_back();
    in_set_[v] = 0;
  }

  void count_node() {
    if (++pending_ < 1024) return;
    flush();
  }

  void flush() {
    result_.explored += pending_;
    std::int64_t total = shared_.explored.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (total > shared_.max_sets) shared_.stop = true;
    if (shared_.deadline && std::chrono::steady_clock::now() > *shared_.deadline) shared_.stop = true;
  }

  // Adds v to a set of `size` points; the first `remaining` entries of buffers_[size] stay addable.
  void step(std::int64_t v, std::size_t size, std::size_t remaining) {
    add(v);
    count_node();
    std::size_t m = size + 1;
    if (static_cast<std::int64_t>(m) == n_) {
      record();
    } else {
      auto& child = buffers_[m];
      const auto& parent = buffers_[size];
      child.assign(parent.begin(), parent.begin() + static_cast<std::ptrdiff_t>(remaining));
      std::size_t fresh = child.size();
      for (auto d : grid_.deltas) {
        std::int64_t c = v + d;
        if (grid_.allowed[c] && !marked_[c]) {
          marked_[c] = 1;
          child.push_back(c);
        }
      }
      if (!prune_ || bound(child, m) >= result_.best) grow(m);
      for (std::size_t i = fresh; i < child.size(); ++i) marked_[child[i]] = 0;
    }
    remove(v);
  }

  // Pops candidates from the back; popped ones stay marked, so later siblings never reuse them.
  void grow(std::size_t size) {
    const auto& untried = buffers_[size];
    for (std::size_t top = untried.size(); top > 0 && !shared_.stop.load(std::memory_order_relaxed); --top) {
      step(untried[top - 1], size, top - 1);
    }
  }

  std::int64_t bound(const std::vector<std::int64_t>& candidates, std::size_t m) const {
    std::int64_t r = n_ - static_cast<std::int64_t>(m);
    std::array<std::int64_t, 64> hist{};
    for (auto c : candidates) ++hist[static_cast<std::size_t>(std::min<std::int64_t>(adj_[c], 63))];
    std::int64_t gain = 0;
    std::int64_t left = r;
    for (std::size_t k = hist.size(); k-- > 1 && left > 0;) {
      std::int64_t take = std::min(left, hist[k]);
      gain += take * static_cast<std::int64_t>(k);
      left -= take;
    }
    return edges_ + smaller_[static_cast<std::size_t>(r)] + gain;
  }

  void record() {
    if (visit_ != nullptr) {
      (*visit_)(current_set());
      return;
    }
    if (edges_ < result_.best) return;
    if (edges_ > result_.best) {
      result_.best = edges_;
      result_.witnesses.clear();
    }
    result_.witnesses.push_back(current_set());
  }

  CanonicalSet current_set() const {
    CanonicalSet s;
    s.reserve(members_.size());
    for (auto idx : members_) s.push_back(grid_.point_of(idx));
    std::sort(s.begin(), s.end());
    return s;
  }

  const Grid& grid_;
  std::int64_t n_;
  std::span<const std::int64_t> smaller_;
  bool prune_;
  Shared& shared_;
  const std::function<void(const CanonicalSet&)>* visit_;

  std::vector<char> in_set_, marked_;
  std::vector<std::int32_t> adj_;
  std::vector<std::int64_t> members_;
  std::vector<std::vector<std::int64_t>> buffers_;
  std::int64_t edges_ = 0;
  std::int64_t pending_ = 0;
  TaskResult result_;
};

std::optional<std::chrono::steady_clock::time_point> deadline_of(const OracleOptions& options) {
  if (!options.wall_clock_seconds) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(*options.wall_clock_seconds));
}

void require_n(std::int64_t n) {
  if (n < 1) throw DomainError("oracle: n must be at least 1");
}

}  // namespace

CanonicalSet canonicalize(std::span<const LatticePoint> points) {
  if (points.empty()) return {};
  CanonicalSet s(points.begin(), points.end());
  std::sort(s.begin(), s.end());
  LatticePoint least = s.front();
  for (auto& p : s) p -= least;
  return s;
}

bool is_connected(std::span<const LatticePoint> points, const CayleyGraphSpec& g) {
  if (points.empty()) return true;
  std::unordered_set<LatticePoint, LatticePointHash> remaining(points.begin(), points.end());
  std::vector<LatticePoint> stack{points.front()};
  remaining.erase(points.front());
  while (!stack.empty()) {
    LatticePoint p = stack.back();
    stack.pop_back();
    for (const auto& q : neighbors(p, g)) {
      if (remaining.erase(q)) stack.push_back(q);
    }
  }
  return remaining.empty();
}

std::int64_t enumerate_connected_sets(const CayleyGraphSpec& g, std::int64_t n,
                                      const std::function<void(const CanonicalSet&)>& visit,
                                      const OracleOptions& options) {
  require_n(n);
  if (n == 1) {
    visit(CanonicalSet{LatticePoint::zero(g.dimension())});
    return 1;
  }
  Grid grid(g, n);
  Shared shared{options.max_sets, deadline_of(options)};
  std::vector<std::int64_t> no_bounds(static_cast<std::size_t>(n), 0);
  std::int64_t explored = 1;
  for (std::size_t task = 0; task < Search::task_count(grid); ++task) {
    Search search(grid, n, no_bounds, -1, false, shared, &visit);
    explored += search.run(task).explored;
    if (shared.stop) throw BudgetExceeded("enumerate_connected_sets: budget exceeded", explored, -1);
  }
  return explored;
}

std::int64_t greedy_lower_bound(const CayleyGraphSpec& g, std::int64_t n) {
  require_n(n);
  VertexSet s(g.dimension());
  s.insert(LatticePoint::zero(g.dimension()));
  std::int64_t edges = 0;
  for (std::int64_t m = 1; m < n; ++m) {
    std::optional<LatticePoint> best;
    std::int64_t best_gain = -1;
    std::vector<LatticePoint> frontier;
    for (const auto& p : s) {
      for (const auto& q : neighbors(p, g)) {
        if (!s.contains(q)) frontier.push_back(q);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    for (const auto& q : frontier) {
      std::int64_t gain = 0;
      for (const auto& r : neighbors(q, g)) gain += s.contains(r) ? 1 : 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = q;
      }
    }
    s.insert(*best);
    edges += best_gain;
  }
  return edges;
}

OracleResult max_induced_edges(const CayleyGraphSpec& g, std::int64_t n, const OracleOptions& options,
                               std::span<const std::int64_t> smaller_optima) {
  require_n(n);
  std::vector<std::int64_t> smaller(smaller_optima.begin(), smaller_optima.end());
  if (options.prune && smaller.size() < static_cast<std::size_t>(n)) {
    smaller.assign(1, 0);
    for (std::int64_t r = 1; r < n; ++r) smaller.push_back(max_induced_edges(g, r, options, smaller).best_edges);
  }
  const std::int64_t degree = static_cast<std::int64_t>(g.degree());
  OracleResult result;
  result.n = n;
  if (n == 1) {
    result.witnesses.push_back(CanonicalSet{LatticePoint::zero(g.dimension())});
    result.best_boundary = degree;
    result.sets_explored = 1;
    return result;
  }

  Grid grid(g, n);
  const std::int64_t seed = options.prune ? greedy_lower_bound(g, n) : -1;
  Shared shared{options.max_sets, deadline_of(options)};
  const std::size_t tasks = Search::task_count(grid);
  std::vector<TaskResult> results(tasks);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t t = next++; t < tasks; t = next++) {
        Search search(grid, n, smaller, seed, options.prune, shared, nullptr);
        results[t] = search.run(t);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      shared.stop = true;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::int64_t explored = 1;
  std::int64_t best = -1;
  for (const auto& r : results) {
    explored += r.explored;
    if (!r.witnesses.empty()) best = std::max(best, r.best);
  }
  if (shared.stop) {
    throw BudgetExceeded("max_induced_edges: budget exceeded at n=" + std::to_string(n), explored,
                         std::max(best, seed));
  }
  for (auto& r : results) {
    if (r.best == best) {
      for (auto& w : r.witnesses) result.witnesses.push_back(std::move(w));
    }
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.best_edges = best;
  result.best_boundary = degree * n - 2 * best;
  result.sets_explored = explored;
  return result;
}

std::vector<OracleResult> solve_up_to(const CayleyGraphSpec& g, std::int64_t n_max, const OracleOptions& options) {
  require_n(n_max);
  std::vector<OracleResult> out;
  std::vector<std::int64_t> smaller{0};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    out.push_back(max_induced_edges(g, n, options, smaller));
    smaller.push_back(out.back().best_edges);
  }
  return out;
}

std::int64_t unrestricted_max_edges(const CayleyGraphSpec& g, std::int64_t n, std::int64_t side) {
  require_n(n);
  const std::size_t d = g.dimension();
  // Translate so the lex-least point is 0; the rest are lex-greater and within side of it.
  std::vector<LatticePoint> cells;
  std::vector<std::int64_t> c(d, -side);
  const LatticePoint origin = LatticePoint::zero(d);
  for (;;) {
    LatticePoint p(c);
    if (origin < p) cells.push_back(p);
    std::size_t i = 0;
    while (i < d && ++c[i] > side) c[i++] = -side;
    if (i == d) break;
  }
  if (static_cast<std::int64_t>(cells.size()) + 1 < n) throw UsageError("unrestricted_max_edges: box too small");
  // gain[i][j]: 1 if cells i and j are adjacent; the origin's adjacency is folded into base[i].
  const std::size_t m = cells.size();
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  std::vector<std::int64_t> base(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    base[i] = g.is_generator(cells[i]) ? 1 : 0;
    for (std::size_t j = 0; j < m; ++j) adj[i][j] = g.adjacent(cells[i], cells[j]) ? 1 : 0;
  }
  std::int64_t best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t edges) {
    if (static_cast<std::int64_t>(chosen.size()) == n - 1) {
      best = std::max(best, edges);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      std::int64_t gain = base[i];
      for (auto j : chosen) gain += adj[i][j];
      chosen.push_back(i);
      rec(i + 1, edges + gain);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace isop
