#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace apkit {

/// Rigid motion of the plane, encoded as (z, w) with |w| = 1.
/// Composition follows (z', w')(z, w) = (z' + w'z, w'w).
struct MotionElement {
  std::complex<double> z{0.0, 0.0};
  std::complex<double> w{1.0, 0.0};
};

/// One group element. The active alternative matches the owning model's kind:
/// cayley -> int64 index, lattice -> integer vector, real_grid -> integer
/// grid coordinates (scaled by the model's step), motion_E2 -> MotionElement.
///
/// Real-grid elements are stored as grid indices, not raw doubles, so the
/// grid subgroup h*Z^d has exact arithmetic; the model converts to real
/// coordinates on demand.
using Element = std::variant<std::int64_t,               // cayley index
                             std::vector<std::int64_t>,  // lattice / grid
                             MotionElement>;

bool element_equal(const Element& a, const Element& b, double tolerance);

/// Canonical strict ordering used everywhere determinism matters: windows are
/// sorted by it, greedy searches start at the least element, ties break
/// toward it. Orders by distance from the identity first, then by
/// components, so symmetric windows enumerate center-out.
bool element_less(const Element& a, const Element& b);

std::string format_element(const Element& e);

/// Stable content hash (FNV-1a over the canonical byte encoding).
std::uint64_t element_hash(const Element& e);

std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t seed = 1469598103934665603ull);

}  // namespace apkit
