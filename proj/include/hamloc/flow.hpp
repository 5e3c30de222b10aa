#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hamloc {

// Dinic max-flow on a directed network; undirected edges use rev_cap = cap.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n) : adj_(n) {}
  std::size_t add_node();
  void add_edge(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t rev_cap = 0);
  std::int64_t run(std::size_t s, std::size_t t);
  std::size_t size() const { return adj_.size(); }

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t cap;
  };
  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t f);
  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

inline constexpr std::int64_t kInfCap = std::int64_t{1} << 40;

}  // namespace hamloc
