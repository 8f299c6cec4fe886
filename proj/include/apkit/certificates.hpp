#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apkit/uniformity.hpp"

namespace apkit {

/// Finite cover A_1..A_n of the candidate set such that any two elements of
/// the same A_j translate alike within the budget (Definition 3.1 made
/// window-relative). Sets need not be disjoint.
struct MaakCover {
  double epsilon = 0.0;
  Side side = Side::left;
  std::vector<std::vector<Element>> sets;
  std::vector<Element> representatives;  // representatives[j] in sets[j]
  /// ball radius used by the greedy construction; absent for hand-built
  /// covers (transforms need it to decide off-window membership)
  std::optional<double> radius;
  double verified_defect = 0.0;

  std::size_t size() const { return sets.size(); }
};

/// Centers whose translate-pseudometric balls of the covering radius reach
/// every candidate ((2.6) total boundedness witness).
struct EpsilonNet {
  double epsilon = 0.0;
  Side side = Side::left;
  std::vector<Element> centers;
  double covering_radius = 0.0;
  std::optional<Element> farthest;  // candidate realizing the radius
};

/// eps-periods with their measured defects (Definition 3.8's P_L / P_R / P).
struct PeriodSet {
  double epsilon = 0.0;
  Side side = Side::left;  // left -> P_L, right -> P_R, two_sided -> P
  std::vector<Element> taus;
  std::vector<double> defects;
  std::size_t search_domain_size = 0;

  bool contains(const GroupModel& model, const Element& tau) const;
};

enum class DensityMode { finite_f, compact_k, weak_two_sided };
std::string to_string(DensityMode mode);
DensityMode density_mode_from_string(const std::string& s);

/// Which way the witness multiplies the period set.
enum class WitnessOrientation { f_times_p, p_times_f, f_p_f };
std::string to_string(WitnessOrientation o);
WitnessOrientation witness_orientation_from_string(const std::string& s);

/// Witness that the periods are relatively dense in the window
/// (Definitions 3.6/3.7): finite_f covers by F*P (or P*F for right periods),
/// compact_k measures the max gap on 1-d models, weak_two_sided covers by
/// F1*P*F2.
struct DensityWitness {
  DensityMode mode = DensityMode::finite_f;
  WitnessOrientation orientation = WitnessOrientation::f_times_p;
  Side side = Side::left;
  std::vector<Element> f_left;   // F (or F_1)
  std::vector<Element> f_right;  // F_2 (weak mode)
  std::vector<Element> residual;
  // compact_k: K = [0, max_gap]; edge_gap is the uncovered stretch at the
  // window boundary
  double max_gap = 0.0;
  double edge_gap = 0.0;
  double budget = 0.0;  // |F| cap (finite modes) or gap length cap
};

/// Failure witness of a uniform-continuity scan: a concrete pair (or triple)
/// with small displacement but large codomain distance.
struct UcFailureWitness {
  double epsilon = 0.0;
  double delta = 0.0;  // displacement size at which it was found
  Element x;
  Element displacement;
  std::optional<Element> y;  // two_sided only
  double distance = 0.0;
};

/// Table of admissible (eps, delta) pairs per Definition 3.13, with failure
/// witnesses for the eps that admit no sampled delta.
struct UcModulus {
  Side side = Side::left;
  struct Entry {
    double epsilon = 0.0;
    std::optional<double> delta;  // largest admissible sampled displacement
    double defect_at_delta = 0.0;
  };
  std::vector<Entry> entries;
  std::vector<UcFailureWitness> failures;
  std::vector<double> displacement_scale;

  bool admissible(double epsilon) const;
};

/// Result of the Bochner-style iterated pigeonhole refinement.
struct SubsequenceExtraction {
  bool ok = false;
  std::size_t failed_stage = 0;  // meaningful when !ok
  std::vector<std::size_t> indices;  // surviving indices into the input
  std::vector<double> stage_bounds;  // verified pairwise bound per stage
  std::vector<double> schedule;
};

/// A certificate plus its measured defect against an epsilon budget; never a
/// bare boolean.
template <class Certificate>
struct Verdict {
  Certificate certificate;
  double epsilon = 0.0;
  double defect = 0.0;
  std::uint64_t window_fingerprint = 0;

  bool pass() const { return defect <= epsilon; }
};

/// verify_cover output: recomputed coverage and defect, independent of how
/// the cover was produced.
struct CoverReport {
  bool covered = false;
  std::optional<Element> uncovered;
  double defect = 0.0;
  std::optional<std::pair<Element, Element>> witness_pair;
  std::size_t witness_set = 0;
  bool pass = false;
};

// Structural content hashes; receipts use them as certificate ids.
std::uint64_t cert_fingerprint(const MaakCover& c);
std::uint64_t cert_fingerprint(const EpsilonNet& c);
std::uint64_t cert_fingerprint(const PeriodSet& c);
std::uint64_t cert_fingerprint(const DensityWitness& c);

}  // namespace apkit
