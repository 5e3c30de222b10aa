#include "hamloc/flow.hpp"

#include <algorithm>
#include <deque>

namespace hamloc {

std::size_t MaxFlow::add_node() {
  adj_.emplace_back();
  return adj_.size() - 1;
}

void MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t rev_cap) {
  adj_[from].push_back({to, adj_[to].size() + (from == to ? 1 : 0), cap});
  adj_[to].push_back({from, adj_[from].size() - 1, rev_cap});
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  level_.assign(adj_.size(), -1);
  level_[s] = 0;
  std::deque<std::size_t> q{s};
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (const auto& a : adj_[v])
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push_back(a.to);
      }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t f) {
  if (v == t) return f;
  for (auto& i = it_[v]; i < adj_[v].size(); ++i) {
    auto& a = adj_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    auto d = dfs(a.to, t, std::min(f, a.cap));
    if (d > 0) {
      a.cap -= d;
      adj_[a.to][a.rev].cap += d;
      return d;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t s, std::size_t t) {
  std::int64_t total = 0;
  while (bfs(s, t)) {
    it_.assign(adj_.size(), 0);
    while (auto f = dfs(s, t, kInfCap)) total += f;
  }
  return total;
}

}  // namespace hamloc
