#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apkit/group.hpp"

namespace apkit {

/// Build parameters for a window; which fields apply depends on the kind.
struct WindowParams {
  // real_grid: candidates/tests on [-T, T]^d with the model's step
  double radius = 0.0;
  // lattice: box [-R, R]^d
  std::int64_t box = 0;
  // optional separate (usually wider) test radius; 0 means "same as radius"
  double test_radius = 0.0;
  std::int64_t test_box = 0;
  // motion_E2 product sample
  int x_count = 0;
  double x_max = 0.0;
  int y_count = 0;
  double y_max = 0.0;
  int theta_count = 0;
};

/// The finite stand-in for "for all t in G": candidates are searched,
/// test elements realize the suprema. Immutable after construction.
struct WindowSpec {
  GroupModelPtr model;
  std::vector<Element> candidates;  // sorted canonically, duplicate-free
  std::vector<Element> test_set;    // sorted canonically, duplicate-free
  double tolerance = 0.0;
  WindowParams params;

  std::uint64_t fingerprint() const;

  std::optional<std::size_t> find_candidate(const Element& e) const;
};

/// Deterministic window construction per model kind:
/// cayley -> whole group, lattice -> box, real_grid -> grid on [-T,T]^d,
/// motion_E2 -> {(x+iy, e^{i theta})} product sample.
WindowSpec build_window(GroupModelPtr model, const WindowParams& params);

/// Window from an explicit candidate list (test set defaults to candidates).
WindowSpec window_from_elements(GroupModelPtr model,
                                std::vector<Element> candidates,
                                std::vector<Element> test_set = {});

}  // namespace apkit
