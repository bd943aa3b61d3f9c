#pragma once

#include <string>
#include <vector>

#include "poincare/compact.hpp"
#include "poincare/solver.hpp"

namespace poincare {

struct CapacityOptions {
  std::vector<double> levels;   // grid steps, descending; empty picks defaults
  bool allow_translate = true;  // shift the set so it covers the origin
  double window_scale = 1.1;
};

struct CapacityReport {
  double pcap = 0.0;
  int point_class = 0;
  bool degenerate = false;  // decided exactly, no solve
  bool translated = false;
  Point translated_by{0.0, 0.0};
  std::string far_field;
  double window = 0.0;
  std::vector<double> level_h;
  std::vector<double> level_value;
  std::vector<int> level_newton;
  std::vector<double> level_residual;
  double extrapolated = 0.0;
  double order = 0.0;  // NaN when the levels do not fit a power law
};

// Capacity of a compact set through the normalized density of its sphere
// complement at infinity: the solve runs in the w = 1/z chart and reads half
// the chart density at w = 0. Sets with at most two points have capacity zero
// exactly. The set must cover the origin; when it does not and translation is
// allowed, the computation shifts it (capacity is translation invariant).
CapacityReport compute_pcap(const RegionSpec& compact_spec,
                            const CapacityOptions& opt = {});

double cap_disk_exact(double radius);
double cap_segment_exact(double length);

}  // namespace poincare
