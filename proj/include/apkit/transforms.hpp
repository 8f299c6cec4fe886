#pragma once

#include "apkit/certificates.hpp"

namespace apkit {

/// Receipt of a certificate conversion: the stated epsilon inflation plus
/// enough construction trace to audit it. Outputs are re-verified through
/// the checkers before a receipt is issued.
struct TransformReceipt {
  std::string transform;
  std::uint64_t input_fingerprint = 0;
  double input_epsilon = 0.0;
  double output_epsilon = 0.0;
  double inflation = 0.0;  // output_epsilon / input_epsilon, exact
  double reverified_defect = 0.0;
  std::size_t clipped = 0;  // constructed elements dropped by the window
  std::vector<std::string> trace;
};

/// Largest input cover size the C_beta enumeration accepts.
inline constexpr std::size_t kLemma51SetCap = 12;

struct TwoSidedCoverResult {
  MaakCover cover;
  TransformReceipt receipt;
  /// beta vectors realized by the candidates (the surviving C_beta indices)
  std::vector<std::vector<std::size_t>> surviving_beta;
};

/// Left cover at eps/4 -> two-sided cover at eps via the C_beta = cap of
/// B_{k,beta_k} construction, B_{kj} = a_k^{-1} A_j. Inflation 4.
/// Refuses covers larger than kLemma51SetCap (override only for suites that
/// need wider windows; the CLI keeps the documented cap).
TwoSidedCoverResult left_cover_to_twosided(const FunctionTable& f,
                                           const MaakCover& cover,
                                           const WindowSpec& w,
                                           std::size_t set_cap = kLemma51SetCap);

struct PeriodsFromCoverResult {
  PeriodSet periods;           // two-sided periods a_j^{-1} u, re-verified
  DensityWitness density;      // F = representatives, residual recorded
  TransformReceipt receipt;
};

/// Two-sided cover at eps -> P(f, eps) plus a left F-relative-density
/// witness, from {a_j^{-1} u : u in A_j}. Inflation 1.
PeriodsFromCoverResult cover_to_period_set(const FunctionTable& f,
                                           const MaakCover& cover,
                                           const WindowSpec& w);

struct CoverFromPeriodsResult {
  MaakCover cover;
  TransformReceipt receipt;
};

/// Periods at eps plus an empty-residual witness F with P*F covering the
/// candidates -> left cover A_j = P*a_j at 2*eps. Inflation 2.
CoverFromPeriodsResult period_set_to_left_cover(const FunctionTable& f,
                                                const PeriodSet& periods,
                                                const DensityWitness& density,
                                                const WindowSpec& w);

/// Weak witness F1*P*F2 covering the candidates -> two-sided cover
/// A_{jk} = a_j P b_k at 2*eps. Inflation 2.
CoverFromPeriodsResult weak_periods_to_cover(const FunctionTable& f,
                                             const PeriodSet& periods,
                                             const DensityWitness& density,
                                             const WindowSpec& w);

struct PeriodInverseResult {
  PeriodSet periods;
  TransformReceipt receipt;
  std::size_t dropped = 0;  // inverses outside the candidate set
};

/// {tau} -> {tau^{-1}} with defects recomputed (Lemma 3.10's symmetry step).
PeriodInverseResult period_set_inverse(const FunctionTable& f,
                                       const PeriodSet& periods,
                                       const WindowSpec& w);

}  // namespace apkit
