#pragma once

#include <complex>
#include <vector>

#include "apkit/function.hpp"

namespace apkit {

/// Exponential sum sum_j c_j e^{i omega_j t}; sin-form entries expand into
/// conjugate exponential pairs.
struct TrigPoly {
  struct Term {
    std::complex<double> coefficient;
    double frequency;
  };
  std::vector<Term> terms;

  std::complex<double> eval(double t) const;
  double coefficient_bound() const;  // sum |c_j|

  static TrigPoly sine(double frequency);
  static TrigPoly constant(std::complex<double> c);
};

std::complex<double> trig_poly_eval(const TrigPoly& p, double t);

/// (1/2T) integral of f over [-T, T], composite trapezoid at step h.
std::complex<double> bohr_mean(const std::function<std::complex<double>(double)>& f,
                               double T, double h);

/// c_omega(f) = M(f * conj(phi_omega)), phi_omega(t) = e^{i omega t}.
std::complex<double> fourier_coefficient(
    const std::function<std::complex<double>(double)>& f, double omega,
    double T, double h);

struct SpectrumEstimate {
  struct Line {
    double omega;
    std::complex<double> coefficient;
  };
  std::vector<Line> lines;  // sorted by |coefficient| descending
  std::vector<double> probed;
  double T = 0.0;
  double step = 0.0;
  double threshold = 0.0;
};

/// Probe the Bohr coefficients at the given frequencies and keep those above
/// the threshold.
SpectrumEstimate spectrum_scan(
    const std::function<std::complex<double>(double)>& f,
    const std::vector<double>& omegas, double T, double h, double threshold);

/// Wu's function f(z, w) = e^{i Re(z/w)} on the motion group.
std::complex<double> wu_function(const MotionElement& g);

/// Right uniform-continuity defect of the rotational displacement (0, e^{i
/// theta}): the grid supremum over real u of |f((u,1)(0,w)) - f(u,1)|
/// together with the closed-form envelope |e^{i pi cos theta} - 1| attained
/// near u = pi/(1 - w).
struct WuRucDefect {
  double theta = 0.0;
  double grid_sup = 0.0;
  double envelope = 0.0;
  double witness_u = 0.0;  // grid argmax
  std::size_t grid_points = 0;
};
WuRucDefect wu_ruc_defect(double theta, std::size_t grid_points = 10000);

}  // namespace apkit
