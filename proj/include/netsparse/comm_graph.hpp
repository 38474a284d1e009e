#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace netsparse {

// Directed communication graph on vertices {0..L}; vertex 0 is the estimator.
// Valid graphs have exactly one path from every subsystem to vertex 0, which
// makes them in-trees rooted at the estimator.
struct CommGraph {
  int vertex_count = 1;  // L + 1
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> partition;  // partition[t-1] = C_t, ascending
  int max_path_len = 0;                     // T
  std::vector<int> parent;                  // unique out-neighbour; parent[0] = -1
  std::vector<std::vector<int>> children;   // in-neighbours, ascending
  std::vector<int> depth;                   // path length to vertex 0

  int subsystem_count() const { return vertex_count - 1; }
};

// Checks acyclicity and path uniqueness, and computes the path-length
// partition C_1..C_T. Throws CyclicGraph, MultiplePaths, or Unreachable.
CommGraph validate(const std::vector<std::pair<int, int>>& edges, int L);

// Star graph: every subsystem sends directly to the estimator.
std::vector<std::pair<int, int>> star_edges(int L);

// Deterministic standard-normal measurement blocks C_l(k). Streams are
// derived per (k, subsystem), so transmitter and receiver regenerate
// bit-identical matrices from the shared base seed.
struct SeededMatrixGen {
  std::uint64_t base_seed = 0;

  Eigen::MatrixXd block(int k, int subsystem, int rows, int cols) const;
};

// Full C(k) = [C_1(k) ... C_L(k)] assembled from the per-subsystem blocks.
Eigen::MatrixXd assemble_measurement(const SeededMatrixGen& gen, int k, int rows,
                                     const std::vector<int>& block_sizes);

struct Message {
  int round;
  int sender;
  int receiver;
  int payload_dim;
};

struct MeasureResult {
  Eigen::VectorXd output;
  std::vector<Message> log;
};

// Round-based in-network aggregation of y(k) = sum_l C_l(k) x_l(k): in round
// t every subsystem in C_{T-t} adds its children's partial sums (ascending
// index) to its own block product and forwards the result. Per-node work
// within a round is independent, so the parallel path is bit-identical.
MeasureResult distributed_measure(const CommGraph& graph, const SeededMatrixGen& gen,
                                  int k, int p, const std::vector<Eigen::VectorXd>& states,
                                  bool parallel = false);

// Serial recursive reference with the same per-node summation order; ground
// truth for the round engine in tests and the benchmark.
Eigen::VectorXd measure_reference(const CommGraph& graph, const SeededMatrixGen& gen,
                                  int k, int p, const std::vector<Eigen::VectorXd>& states);

void write_message_log(std::ostream& os, const std::vector<Message>& log);

}  // namespace netsparse
