#pragma once

#include <string>
#include <vector>

#include "efl/greedy.hpp"
#include "efl/types.hpp"

namespace efl {

enum class InstanceType { A1, A2, B };

// Ledger of the full coloring run: per-step outcomes, the color budget
// partition, and the fallbacks taken.
struct PipelineReport {
  InstanceType type = InstanceType::A1;
  std::vector<std::string> steps;      // human-readable per-step log
  std::vector<std::string> fallbacks;  // stages replaced by the greedy net
  int colors_used = 0;
  bool within_n = false;
  bool proper = false;
  // Color budget ledger (sizes of the palette segments actually used).
  int c_large = 0;  // large/medium stage palette
  int c_main = 0;   // main-stage matchings
  int c_buff = 0;   // leftover buffer
  int c_final = 0;  // graph-edge finish
  double fpp_volume = 0;
};

// Routes the large-edge coloring outcome: A1 when the greedy cascade
// succeeded but the instance is not (rho,eps)-full, A2 when it is full, B
// when the near-extremal pairing colorer fired.
InstanceType classify_type(const LinearHypergraph& H, const LargeEdgeResult& phi,
                           double rho, double eps);

// Full coloring driver.  Always returns a verified proper coloring; the
// report records whether the palette stayed within n and which stages fell
// back to the size-ordered greedy net.
struct PipelineOutput {
  EdgeColoring col;
  PipelineReport report;
};
PipelineOutput efl_color(const LinearHypergraph& H, const Hierarchy& h,
                         uint64_t seed);

// Bounded-degree variant aiming at (1-sigma) n colors; rejects instances
// whose maximum degree or near-sqrt(n) edge count is too large.
EdgeColoring stability_color(const LinearHypergraph& H, const Hierarchy& h);

// Low-degree variant aiming at eps_target * n colors; requires max degree
// <= eta n and a size gap around sqrt(n).
EdgeColoring sublinear_color(const LinearHypergraph& H, double eta,
                             double eps_target);

}  // namespace efl
