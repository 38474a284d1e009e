#include "netsparse/comm_graph.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "netsparse/errors.hpp"
#include "netsparse/rng.hpp"

namespace netsparse {

CommGraph validate(const std::vector<std::pair<int, int>>& edges, int L) {
  if (L < 0) throw ConfigError("validate: L must be non-negative");
  const int v = L + 1;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(v));
  std::vector<std::vector<int>> in(static_cast<std::size_t>(v));
  for (const auto& [from, to] : edges) {
    if (from < 0 || from > L || to < 0 || to > L)
      throw ConfigError("validate: edge endpoint out of range");
    if (from == 0) throw ConfigError("validate: estimator node cannot send");
    if (from == to) throw CyclicGraph("validate: self-loop at vertex " + std::to_string(from));
    out[static_cast<std::size_t>(from)].push_back(to);
    in[static_cast<std::size_t>(to)].push_back(from);
  }

  // cycle detection over the whole vertex set
  std::vector<int> color(static_cast<std::size_t>(v), 0);  // 0 white, 1 gray, 2 black
  std::function<void(int)> dfs = [&](int u) {
    color[static_cast<std::size_t>(u)] = 1;
    for (int w : out[static_cast<std::size_t>(u)]) {
      if (color[static_cast<std::size_t>(w)] == 1)
        throw CyclicGraph("validate: cycle through vertex " + std::to_string(w));
      if (color[static_cast<std::size_t>(w)] == 0) dfs(w);
    }
    color[static_cast<std::size_t>(u)] = 2;
  };
  for (int u = 0; u < v; ++u)
    if (color[static_cast<std::size_t>(u)] == 0) dfs(u);

  // path counts to the estimator (well-defined once acyclic)
  std::vector<long long> paths(static_cast<std::size_t>(v), -1);
  std::function<long long(int)> count = [&](int u) -> long long {
    long long& memo = paths[static_cast<std::size_t>(u)];
    if (memo >= 0) return memo;
    if (u == 0) return memo = 1;
    long long total = 0;
    for (int w : out[static_cast<std::size_t>(u)]) total += count(w);
    return memo = total;
  };
  for (int u = 1; u <= L; ++u) {
    const long long c = count(u);
    if (c == 0) throw Unreachable(u);
    if (c > 1) throw MultiplePaths(u);
  }

  CommGraph g;
  g.vertex_count = v;
  g.edges = edges;
  g.parent.assign(static_cast<std::size_t>(v), -1);
  g.children.assign(static_cast<std::size_t>(v), {});
  g.depth.assign(static_cast<std::size_t>(v), 0);
  // exactly one path implies exactly one out-edge for every subsystem
  for (int u = 1; u <= L; ++u) g.parent[static_cast<std::size_t>(u)] = out[static_cast<std::size_t>(u)].front();
  for (int u = 0; u <= L; ++u) {
    g.children[static_cast<std::size_t>(u)] = in[static_cast<std::size_t>(u)];
    std::sort(g.children[static_cast<std::size_t>(u)].begin(), g.children[static_cast<std::size_t>(u)].end());
  }
  std::function<int(int)> depth_of = [&](int u) -> int {
    if (u == 0) return 0;
    int& d = g.depth[static_cast<std::size_t>(u)];
    if (d > 0) return d;
    return d = 1 + depth_of(g.parent[static_cast<std::size_t>(u)]);
  };
  for (int u = 1; u <= L; ++u) g.max_path_len = std::max(g.max_path_len, depth_of(u));
  g.partition.assign(static_cast<std::size_t>(g.max_path_len), {});
  for (int u = 1; u <= L; ++u)
    g.partition[static_cast<std::size_t>(g.depth[static_cast<std::size_t>(u)] - 1)].push_back(u);
  return g;
}

std::vector<std::pair<int, int>> star_edges(int L) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(L));
  for (int u = 1; u <= L; ++u) edges.emplace_back(u, 0);
  return edges;
}

Eigen::MatrixXd SeededMatrixGen::block(int k, int subsystem, int rows, int cols) const {
  if (rows < 1 || cols < 1) throw ConfigError("SeededMatrixGen: block dimensions must be >= 1");
  rng::Stream stream(rng::derive(
      base_seed, {rng::tag_measurement, static_cast<std::uint64_t>(k),
                  static_cast<std::uint64_t>(subsystem)}));
  Eigen::MatrixXd c(rows, cols);
  // fixed fill order: row by row
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) c(i, j) = stream.next_gaussian();
  return c;
}

Eigen::MatrixXd assemble_measurement(const SeededMatrixGen& gen, int k, int rows,
                                     const std::vector<int>& block_sizes) {
  Eigen::Index n = 0;
  for (int sz : block_sizes) n += sz;
  Eigen::MatrixXd c(rows, n);
  Eigen::Index offset = 0;
  for (std::size_t l = 0; l < block_sizes.size(); ++l) {
    c.middleCols(offset, block_sizes[l]) = gen.block(k, static_cast<int>(l) + 1, rows, block_sizes[l]);
    offset += block_sizes[l];
  }
  return c;
}

MeasureResult distributed_measure(const CommGraph& graph, const SeededMatrixGen& gen,
                                  int k, int p, const std::vector<Eigen::VectorXd>& states,
                                  bool parallel) {
  const int L = graph.subsystem_count();
  if (static_cast<int>(states.size()) != L)
    throw DimensionMismatch("distributed_measure: need one state block per subsystem");
  if (p < 1) throw ConfigError("distributed_measure: p must be >= 1");

  MeasureResult result;
  std::vector<Eigen::VectorXd> partial(static_cast<std::size_t>(L + 1));
  const int T = graph.max_path_len;
  for (int t = 0; t < T; ++t) {
    const std::vector<int>& active = graph.partition[static_cast<std::size_t>(T - t - 1)];
    const Eigen::Index count = static_cast<Eigen::Index>(active.size());
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (Eigen::Index idx = 0; idx < count; ++idx) {
        const int l = active[static_cast<std::size_t>(idx)];
        Eigen::VectorXd z = gen.block(k, l, p, static_cast<int>(states[static_cast<std::size_t>(l - 1)].size())) *
                            states[static_cast<std::size_t>(l - 1)];
        for (int child : graph.children[static_cast<std::size_t>(l)]) z += partial[static_cast<std::size_t>(child)];
        partial[static_cast<std::size_t>(l)] = std::move(z);
      }
    } else {
      for (Eigen::Index idx = 0; idx < count; ++idx) {
        const int l = active[static_cast<std::size_t>(idx)];
        Eigen::VectorXd z = gen.block(k, l, p, static_cast<int>(states[static_cast<std::size_t>(l - 1)].size())) *
                            states[static_cast<std::size_t>(l - 1)];
        for (int child : graph.children[static_cast<std::size_t>(l)]) z += partial[static_cast<std::size_t>(child)];
        partial[static_cast<std::size_t>(l)] = std::move(z);
      }
    }
    // log in ascending sender order; every node sends exactly once
    for (int l : active)
      result.log.push_back({t, l, graph.parent[static_cast<std::size_t>(l)], p});
  }

  result.output = Eigen::VectorXd::Zero(p);
  if (T > 0)
    for (int l : graph.partition[0]) result.output += partial[static_cast<std::size_t>(l)];
  return result;
}

Eigen::VectorXd measure_reference(const CommGraph& graph, const SeededMatrixGen& gen,
                                  int k, int p, const std::vector<Eigen::VectorXd>& states) {
  const int L = graph.subsystem_count();
  if (static_cast<int>(states.size()) != L)
    throw DimensionMismatch("measure_reference: need one state block per subsystem");
  std::function<Eigen::VectorXd(int)> eval = [&](int l) -> Eigen::VectorXd {
    Eigen::VectorXd z = gen.block(k, l, p, static_cast<int>(states[static_cast<std::size_t>(l - 1)].size())) *
                        states[static_cast<std::size_t>(l - 1)];
    for (int child : graph.children[static_cast<std::size_t>(l)]) z += eval(child);
    return z;
  };
  Eigen::VectorXd y = Eigen::VectorXd::Zero(p);
  if (graph.max_path_len > 0)
    for (int l : graph.partition[0]) y += eval(l);
  return y;
}

void write_message_log(std::ostream& os, const std::vector<Message>& log) {
  os << "round,sender,receiver,payload_dim\n";
  for (const Message& msg : log)
    os << msg.round << ',' << msg.sender << ',' << msg.receiver << ',' << msg.payload_dim << '\n';
}

}  // namespace netsparse
