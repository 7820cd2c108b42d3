#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace pancyc {

/// Dinic max-flow on a small integer-capacity network. Augmentation can be
/// resumed after new edges are added.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  int add_node() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }

  /// Returns the id of the forward edge.
  int add_edge(int from, int to, int cap) {
    int id = static_cast<int>(to_.size());
    push(from, to, cap);
    push(to, from, 0);
    return id;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      it_.assign(head_.begin(), head_.end());
      while (long long f = dfs(s, t, std::numeric_limits<int>::max())) total += f;
    }
    return total;
  }

  int flow(int edge) const { return cap_[edge ^ 1]; }
  int residual(int edge) const { return cap_[edge]; }

  /// Nodes reachable from `from` along positive-residual edges, never
  /// entering any node in `blocked`.
  std::vector<char> reachable(int from, const std::vector<int>& blocked) const {
    std::vector<char> seen(head_.size(), 0), stop(head_.size(), 0);
    for (int b : blocked) stop[b] = 1;
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = next_[e]) {
        int v = to_[e];
        if (cap_[e] > 0 && !seen[v] && !stop[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

  /// Forward edges leaving u, as (edge id, head) pairs.
  std::vector<std::pair<int, int>> out_edges(int u) const {
    std::vector<std::pair<int, int>> out;
    for (int e = head_[u]; e >= 0; e = next_[e])
      if ((e & 1) == 0) out.emplace_back(e, to_[e]);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  void push(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = next_[e])
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          q.push(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& e = it_[u]; e >= 0; e = next_[e]) {
      int v = to_[e];
      if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
        long long d = dfs(v, t, std::min(f, cap_[e]));
        if (d > 0) {
          cap_[e] -= static_cast<int>(d);
          cap_[e ^ 1] += static_cast<int>(d);
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, to_, cap_, next_, level_, it_;
};

}  // namespace pancyc
