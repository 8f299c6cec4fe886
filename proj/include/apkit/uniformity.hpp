#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apkit/function.hpp"
#include "apkit/window.hpp"

namespace apkit {

/// Metric realization of a vicinity: the entourage {(x,y) : d(x,y) <= eps}.
struct Vicinity {
  double epsilon;
  /// The halving law V o V subset U: composing two eps/2 vicinities lands in
  /// the eps vicinity. This is the constant every composed construction
  /// charges per step.
  Vicinity half() const { return Vicinity{epsilon / 2.0}; }
  bool contains(double distance) const { return distance <= epsilon; }
};

/// Which translates a definition quantifies over. left compares f(ut) with
/// f(vt) over t, right compares f(tu) with f(tv) over t, two_sided compares
/// f(sut) with f(svt) over pairs (s,t).
enum class Side { left, right, two_sided };

std::string to_string(Side side);
Side side_from_string(const std::string& s);

/// Sup-distance between the u- and v-translates of f over the window's test
/// set, with the witness realizing the maximum.
struct TranslateDistance {
  Element u, v;
  Side side = Side::left;
  double value = 0.0;
  std::optional<Element> witness_s;  // right / two_sided
  std::optional<Element> witness_t;  // left / two_sided
};

/// Pseudometric engine bound to (f, side, window). Elements are registered
/// once and addressed by slot id; 1-d grid models get a dense cached value
/// table so the hot scans are pure array walks.
///
/// distance() is the exact maximum with deterministic first-argmax witness
/// order; distance_above() may stop scanning once the running maximum
/// exceeds `bound` (the returned value is exact whenever it is <= bound).
class TranslateEngine {
 public:
  TranslateEngine(const FunctionTable& f, Side side, const WindowSpec& w);
  ~TranslateEngine();

  TranslateEngine(const TranslateEngine&) = delete;
  TranslateEngine& operator=(const TranslateEngine&) = delete;

  /// Register an element (need not belong to the window). Idempotent per
  /// distinct element value.
  std::size_t add_element(const Element& e);
  /// Registers all window candidates, in window order, as slots 0..N-1.
  void add_candidates();

  const Element& element(std::size_t slot) const;
  std::size_t size() const;

  double distance(std::size_t a, std::size_t b) const;
  double distance_above(std::size_t a, std::size_t b, double bound) const;
  TranslateDistance distance_with_witness(std::size_t a, std::size_t b) const;

  Side side() const;
  const WindowSpec& window() const;
  const FunctionTable& function() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Definition 3.1 sup-distance for two elements of the model.
TranslateDistance translate_distance(const FunctionTable& f, const Element& u,
                                     const Element& v, Side side,
                                     const WindowSpec& w);

/// Report of the abelian collapse check (L and R coincide; two-sided
/// collapses when sampled products stay inside the test set).
struct SideCollapseReport {
  double max_lr_discrepancy = 0.0;
  double max_two_sided_discrepancy = 0.0;
  bool test_set_product_closed = false;
  std::size_t pairs_checked = 0;
};

/// Asserts translate_distance(L) == translate_distance(R) on an abelian
/// model; throws ContractViolation on non-abelian input.
SideCollapseReport abelian_side_collapse_check(const FunctionTable& f,
                                               const Element& u,
                                               const Element& v,
                                               const WindowSpec& w);

}  // namespace apkit
