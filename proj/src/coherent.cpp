#include "osc/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "osc/error.hpp"
#include "osc/special_functions.hpp"

namespace osc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp2(std::span<const long double> log_abs) {
  long double peak = kNegInf;
  for (long double v : log_abs) peak = std::max(peak, 2.0L * v);
  if (peak == kNegInf) return kNegInf;
  long double sum = 0.0L;
  for (long double v : log_abs) sum += std::exp(2.0L * v - peak);
  return static_cast<double>(peak + std::log(sum));
}

double vector_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

void require_sector(const CoherentState& state, Parity sector, const char* role) {
  if (state.params().parity() != sector) {
    throw ValidationError(std::string(role) + " state must belong to the N = 1 " +
                          (sector == Parity::Even ? "even" : "odd") + " sector");
  }
}

}  // namespace

Complex CoherentState::coefficient(int n) const {
  const double mag = log_abs_.at(n) == kNegInf ? 0.0 : static_cast<double>(std::exp(log_abs_[n]));
  return std::polar(mag, phase_[n]);
}

std::vector<Complex> CoherentState::coefficients() const {
  std::vector<Complex> out(log_abs_.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = coefficient(static_cast<int>(n));
  return out;
}

CoherentState coherent_coeffs(const AlgebraParams& params, Complex k, int n_max) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) throw ValidationError("coherent label must be finite");

  CoherentState state(params, k);
  const std::size_t size = static_cast<std::size_t>(n_max) + 1;
  state.log_abs_.assign(size, kNegInf);
  state.phase_.assign(size, 0.0);
  state.log_abs_[0] = 0.0;

  const double abs_k = std::abs(k);
  if (abs_k > 0.0) {
    const long double log_k = std::log(static_cast<long double>(abs_k));
    const double arg_k = std::arg(k);
    const long double alpha = params.alpha();
    for (int n = 0; n < n_max; ++n) {
      // |c_{n+1} / c_n| = |k| / sqrt((n+1)(n+1+alpha))
      state.log_abs_[n + 1] = state.log_abs_[n] + log_k - 0.5L * (std::log(n + 1.0L) + std::log(n + 1.0L + alpha));
      state.phase_[n + 1] = (n + 1) * arg_k;
    }
  }
  state.log_norm_squared_ = log_sum_exp2(state.log_abs_);
  state.tail_ratio_ = state.log_abs_.back() == kNegInf
                          ? 0.0
                          : static_cast<double>(std::exp(2.0L * state.log_abs_.back() - state.log_norm_squared_));
  return state;
}

double eigen_residual(const CoherentState& state, const TruncatedRep& rep, Components components) {
  if (!(rep.params == state.params()) || rep.n_max != state.n_max()) {
    throw ValidationError("representation and state must share parameters and cutoff");
  }
  const std::vector<Complex> v = state.coefficients();
  std::vector<double> re(v.size());
  std::vector<double> im(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    re[i] = v[i].real();
    im[i] = v[i].imag();
  }
  const std::vector<double> lowered_re = rep.k_minus.apply(re);
  const std::vector<double> lowered_im = rep.k_minus.apply(im);
  const std::size_t count = components == Components::All ? v.size() : v.size() - 1;
  double defect = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    defect += std::norm(Complex(lowered_re[i], lowered_im[i]) - state.label() * v[i]);
  }
  return std::sqrt(defect) / vector_norm(v);
}

double norm_squared(const CoherentState& state) { return std::exp(state.log_norm_squared()); }

double norm_closed_form(const AlgebraParams& params, double abs_k) {
  if (abs_k < 0.0) throw ValidationError("|k| must be nonnegative");
  if (abs_k == 0.0) return 1.0;
  const double alpha = params.alpha();
  const double z = 2.0 * abs_k;
  if (z < 600.0) return std::exp(log_gamma(1.0 + alpha)) * bessel_i(alpha, z) * std::pow(abs_k, -alpha);
  return std::exp(log_gamma(1.0 + alpha) + log_bessel_i(alpha, z) - alpha * std::log(abs_k));
}

Complex overlap(const CoherentState& a, const CoherentState& b) {
  if (!(a.params() == b.params()) || a.n_max() != b.n_max()) {
    throw ValidationError("overlap requires states with equal parameters and cutoff");
  }
  Complex sum = 0.0;
  for (int n = 0; n <= a.n_max(); ++n) sum += std::conj(a.coefficient(n)) * b.coefficient(n);
  return sum;
}

double overlap_closed_form(const AlgebraParams& params, double k, double k_prime) {
  if (!(k > 0.0) || !(k_prime > 0.0)) throw ValidationError("closed-form overlap needs real positive labels");
  const double alpha = params.alpha();
  const double product = k * k_prime;
  return std::exp(log_gamma(1.0 + alpha)) * std::pow(product, -alpha / 2.0) * bessel_i(alpha, 2.0 * std::sqrt(product));
}

EvolvedState evolve(const CoherentState& state, double t) {
  const AlgebraParams& p = state.params();
  const double omega = p.omega();
  const Complex label = state.label() * std::polar(1.0, -2.0 * omega * t);
  const Complex phase = std::polar(1.0, -omega * (p.ell() + p.dim() / 2.0) * t);
  return {coherent_coeffs(p, label, state.n_max()), phase};
}

std::vector<Complex> evolve_per_level(const CoherentState& state, double t) {
  std::vector<Complex> out = state.coefficients();
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= std::polar(1.0, -state.params().energy(static_cast<int>(n)) * t);
  }
  return out;
}

double evolution_phase_defect(const CoherentState& state, double t) {
  const std::vector<Complex> direct = evolve_per_level(state, t);
  const EvolvedState mapped = evolve(state, t);
  double scale = 0.0;
  double defect = 0.0;
  for (int n = 0; n <= state.n_max(); ++n) {
    scale = std::max(scale, std::abs(state.coefficient(n)));
    defect = std::max(defect, std::abs(direct[n] - mapped.global_phase * mapped.state.coefficient(n)));
  }
  return defect / scale;
}

double n1_sector_norm(Parity sector, double abs_k) {
  return sector == Parity::Even ? std::cosh(2.0 * abs_k) : std::sinh(2.0 * abs_k);
}

double n1_sector_weight(Parity sector, double abs_k) { return sector == Parity::Even ? 1.0 : 2.0 * abs_k; }

StandardCoherent standard_coherent(Complex c, std::size_t fock_size) {
  StandardCoherent s{c, std::vector<Complex>(fock_size)};
  if (fock_size == 0) return s;
  s.coeffs[0] = 1.0;
  for (std::size_t m = 0; m + 1 < fock_size; ++m) s.coeffs[m + 1] = s.coeffs[m] * c / std::sqrt(m + 1.0);
  return s;
}

std::vector<Complex> to_fock(const CoherentState& sector_state) {
  const auto parity = sector_state.params().parity();
  if (!parity) throw ValidationError("Fock embedding needs an N = 1 sector state");
  const std::size_t offset = *parity == Parity::Even ? 0 : 1;
  std::vector<Complex> fock(2 * sector_state.size(), 0.0);
  for (std::size_t n = 0; n < sector_state.size(); ++n) fock[2 * n + offset] = sector_state.coefficient(static_cast<int>(n));
  return fock;
}

RecombinationReport recombine_n1(const CoherentState& even, const CoherentState& odd, Complex c) {
  require_sector(even, Parity::Even, "first");
  require_sector(odd, Parity::Odd, "second");
  if (even.n_max() != odd.n_max()) throw ValidationError("sector states must share the cutoff");
  const Complex k = 0.5 * c * c;
  const double tol = 1e-12 * std::max(1.0, std::abs(k));
  if (std::abs(even.label() - k) > tol || std::abs(odd.label() - k) > tol) {
    throw ValidationError("sector labels must both equal c^2/2");
  }

  const std::size_t fock_size = even.size() * 2;
  const StandardCoherent target = standard_coherent(c, fock_size);

  RecombinationReport report{c, fock_size, 0.0, 0.0};

  // Route 1: coefficient mapping |n>_even -> |2n>, |n>_odd -> |2n+1>.
  std::vector<Complex> mapped = to_fock(even);
  const std::vector<Complex> odd_fock = to_fock(odd);
  for (std::size_t m = 0; m < fock_size; ++m) mapped[m] += c * odd_fock[m];
  for (std::size_t m = 0; m < fock_size; ++m) {
    report.mapped_deviation = std::max(report.mapped_deviation, std::abs(mapped[m] - target.coeffs[m]));
  }

  // Route 2: sum_n k^n B_n K+^n acting on |0> and on a^dagger|0>, with
  // K+ = (a^dagger)^2 / 2 applied in the Fock basis.
  auto raise_pair = [fock_size](const std::vector<Complex>& v) {
    std::vector<Complex> out(fock_size, 0.0);
    for (std::size_t m = 0; m + 2 < fock_size; ++m) out[m + 2] = 0.5 * std::sqrt((m + 1.0) * (m + 2.0)) * v[m];
    return out;
  };
  auto ladder_sum = [&](std::size_t seed_index, double alpha) {
    std::vector<Complex> term(fock_size, 0.0);
    term[seed_index] = 1.0;
    std::vector<Complex> total = term;
    for (int n = 0; n < even.n_max(); ++n) {
      // B_{n+1} / B_n = 1 / ((n+1)(n+1+alpha))
      term = raise_pair(term);
      const Complex scale = k / ((n + 1.0) * (n + 1.0 + alpha));
      for (std::size_t m = 0; m < fock_size; ++m) {
        term[m] *= scale;
        total[m] += term[m];
      }
    }
    return total;
  };
  const std::vector<Complex> even_sum = ladder_sum(0, -0.5);
  const std::vector<Complex> odd_sum = ladder_sum(1, 0.5);
  for (std::size_t m = 0; m < fock_size; ++m) {
    const Complex built = even_sum[m] + c * odd_sum[m];
    report.operator_deviation = std::max(report.operator_deviation, std::abs(built - target.coeffs[m]));
  }
  return report;
}

double annihilation_residual(const CoherentState& sector_state) {
  const std::vector<Complex> v = to_fock(sector_state);
  std::vector<Complex> lowered(v.size(), 0.0);
  for (std::size_t m = 0; m + 1 < v.size(); ++m) lowered[m] = std::sqrt(m + 1.0) * v[m + 1];
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t m = 0; m < v.size(); ++m) {
    num += std::conj(v[m]) * lowered[m];
    den += std::norm(v[m]);
  }
  const Complex mu = num / den;
  double defect = 0.0;
  for (std::size_t m = 0; m < v.size(); ++m) defect += std::norm(lowered[m] - mu * v[m]);
  return std::sqrt(defect / den);
}

}  // namespace osc
