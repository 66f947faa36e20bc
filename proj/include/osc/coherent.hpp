#pragma once

// Eigenstates of the lowering operator K-, expanded in the |n, l> basis with
// the unnormalized convention c_0 = 1:
//
//   c_n = k^n sqrt(Gamma(1+alpha) / (n! Gamma(n+1+alpha)))
//
// Magnitudes span hundreds of orders across n, so coefficients are held as
// (ln|c_n|, arg c_n) and materialized on demand.

#include <complex>
#include <span>
#include <vector>

#include "osc/algebra.hpp"

namespace osc {

using Complex = std::complex<double>;

/// Tail bound |c_{n_max}|^2 / sum |c_n|^2 below which a state counts as converged.
inline constexpr double kTailBound = 1e-16;

class CoherentState {
 public:
  const AlgebraParams& params() const { return params_; }
  Complex label() const { return label_; }
  int n_max() const { return static_cast<int>(log_abs_.size()) - 1; }
  std::size_t size() const { return log_abs_.size(); }

  /// ln|c_n|; -inf when c_n = 0 (k = 0, n > 0).
  double log_abs(int n) const { return static_cast<double>(log_abs_.at(n)); }
  double phase(int n) const { return phase_.at(n); }
  Complex coefficient(int n) const;
  std::vector<Complex> coefficients() const;

  /// ln sum_n |c_n|^2 over the stored coefficients.
  double log_norm_squared() const { return log_norm_squared_; }
  double tail_ratio() const { return tail_ratio_; }
  bool converged() const { return tail_ratio_ <= kTailBound; }

 private:
  friend CoherentState coherent_coeffs(const AlgebraParams&, Complex, int);
  CoherentState(const AlgebraParams& params, Complex label) : params_(params), label_(label) {}

  AlgebraParams params_;
  Complex label_;
  // Extended precision so that exp(log_abs) rounds to c_n within about an ulp;
  // the wave-function series at large |k| cancels to roughly e^{-2|k|}.
  std::vector<long double> log_abs_;
  std::vector<double> phase_;
  double log_norm_squared_ = 0.0;
  double tail_ratio_ = 0.0;
};

CoherentState coherent_coeffs(const AlgebraParams& params, Complex k, int n_max = kDefaultNMax);

enum class Components {
  All,       // every stored component, so the missing c_{n_max+1} shows up as a tail defect
  Interior,  // components 0..n_max-1 only, where truncation plays no role
};

/// ||K- v - k v|| / ||v|| for the state's coefficient vector v.
double eigen_residual(const CoherentState& state, const TruncatedRep& rep, Components components = Components::All);

/// sum_n |c_n|^2
double norm_squared(const CoherentState& state);

/// Gamma(1+alpha) I_alpha(2|k|) |k|^{-alpha}; equals 1 at k = 0.
double norm_closed_form(const AlgebraParams& params, double abs_k);

/// sum_n conj(a_n) b_n between two states built on the same parameters and cutoff.
Complex overlap(const CoherentState& a, const CoherentState& b);

/// Gamma(1+alpha) (k k')^{-alpha/2} I_alpha(2 sqrt(k k')) for real positive labels.
double overlap_closed_form(const AlgebraParams& params, double k, double k_prime);

struct EvolvedState {
  CoherentState state;  // label k exp(-2 i omega t)
  Complex global_phase;  // exp(-i omega (l + N/2) t)
};

EvolvedState evolve(const CoherentState& state, double t);

/// exp(-i E_n t) c_n applied level by level; the reference route for evolve.
std::vector<Complex> evolve_per_level(const CoherentState& state, double t);

/// max_n |evolve_per_level_n - global_phase * evolved c_n| / max_n |c_n|.
double evolution_phase_defect(const CoherentState& state, double t);

// ---------------------------------------------------------------------------
// One-dimensional sectors

/// Norms in the one-dimensional convention where the odd state carries the
/// factor lambda = sqrt(2k): cosh(2|k|) for even, sinh(2|k|) for odd.
double n1_sector_norm(Parity sector, double abs_k);

/// |lambda|^2 relating the odd-sector state with c_0 = 1 to the one-dimensional
/// convention; 1 for the even sector.
double n1_sector_weight(Parity sector, double abs_k);

/// exp(c a^dagger)|0> in the Fock basis, m = 0..fock_size-1.
struct StandardCoherent {
  Complex c;
  std::vector<Complex> coeffs;  // c^m / sqrt(m!)
};

StandardCoherent standard_coherent(Complex c, std::size_t fock_size);

struct RecombinationReport {
  Complex c;
  std::size_t fock_size = 0;
  double mapped_deviation = 0.0;    // max |even_n -> |2n>, c * odd_n -> |2n+1>| vs c^m / sqrt(m!)
  double operator_deviation = 0.0;  // same, built by applying K+ = (a^dagger)^2 / 2 in Fock space

  double max_deviation() const { return mapped_deviation > operator_deviation ? mapped_deviation : operator_deviation; }
};

/// Recombines the even and odd sector states (labels k = c^2/2) with lambda = c
/// and compares the result against exp(c a^dagger)|0>.
RecombinationReport recombine_n1(const CoherentState& even, const CoherentState& odd, Complex c);

/// Sector state embedded in the Fock basis (n -> 2n or 2n+1).
std::vector<Complex> to_fock(const CoherentState& sector_state);

/// min_mu ||a v - mu v|| / ||v|| for the Fock-space vector of a sector state.
double annihilation_residual(const CoherentState& sector_state);

}  // namespace osc
