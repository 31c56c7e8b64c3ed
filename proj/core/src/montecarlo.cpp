#include "mlae/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mlae/sampling.hpp"

namespace mlae {

void IntegralProblem::validate() const {
  if (n < 1 || n > StateVector::kMaxDomainQubits) {
    throw std::invalid_argument("domain qubit count must be in 1..20");
  }
  if (!(b_max > 0.0 && b_max <= std::numbers::pi)) {
    throw std::invalid_argument("b_max must lie in (0, pi]");
  }
}

double IntegralProblem::angle(std::uint64_t x) const {
  return (static_cast<double>(x) + 0.5) * b_max / std::ldexp(1.0, static_cast<int>(n));
}

StateVector apply_P(StateVector state) {
  const auto h = hadamard_gate();
  for (unsigned j = 0; j < state.domain_qubits(); ++j) state.apply(j + 1, h);
  return state;
}

StateVector rotate_ancilla(StateVector state, const IntegralProblem& problem, bool inverse) {
  problem.validate();
  if (state.domain_qubits() != problem.n) {
    throw std::invalid_argument("state width does not match the problem");
  }
  const double sign = inverse ? -1.0 : 1.0;
  const double base = problem.b_max / std::ldexp(1.0, static_cast<int>(problem.n));
  // Domain bit j carries weight 2^j, so its rotation is 2^(j+1) times the base angle.
  if (!inverse) state.apply(0, ry_gate(base));
  for (unsigned step = 0; step < problem.n; ++step) {
    const unsigned j = inverse ? problem.n - 1 - step : step;
    state.apply_controlled(j + 1, 0, ry_gate(sign * base * std::ldexp(1.0, static_cast<int>(j + 1))));
  }
  if (inverse) state.apply(0, ry_gate(-base));
  return state;
}

StateVector rotate_ancilla_table(StateVector state, std::span<const double> angles, bool inverse) {
  if (angles.size() != state.size() / 2) {
    throw std::invalid_argument("one rotation angle per domain value required");
  }
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t x = 0; x < angles.size(); ++x) {
    const double c = std::cos(angles[x]);
    const double s = inverse ? -std::sin(angles[x]) : std::sin(angles[x]);
    const Complex a0 = amps[2 * x];
    const Complex a1 = amps[2 * x + 1];
    amps[2 * x] = c * a0 - s * a1;
    amps[2 * x + 1] = s * a0 + c * a1;
  }
  return StateVector::from_amplitudes(state.domain_qubits(), std::move(amps));
}

StateVector apply_R(StateVector state, const IntegralProblem& problem) {
  for (std::size_t i = 1; i < state.size(); i += 2) {
    if (std::abs(state[i]) > 1e-12) {
      throw std::invalid_argument("apply_R expects the ancilla in |0> on every component");
    }
  }
  return rotate_ancilla(std::move(state), problem);
}

StateVector apply_A(StateVector state, const IntegralProblem& problem) {
  return rotate_ancilla(apply_P(std::move(state)), problem);
}

StateVector apply_A_inverse(StateVector state, const IntegralProblem& problem) {
  return apply_P(rotate_ancilla(std::move(state), problem, /*inverse=*/true));
}

StateVector apply_Q(StateVector state, const IntegralProblem& problem, std::uint64_t times) {
  for (std::uint64_t t = 0; t < times; ++t) {
    state.flip_sign_ancilla(0);
    state = apply_A_inverse(std::move(state), problem);
    state.flip_sign_basis(0);
    state = apply_A(std::move(state), problem);
  }
  return state;
}

StateVector prepare_amplified(const IntegralProblem& problem, std::uint64_t m) {
  problem.validate();
  return apply_Q(apply_A(StateVector::zero(problem.n), problem), problem, m);
}

double exact_sum(const IntegralProblem& problem) {
  problem.validate();
  const std::uint64_t count = std::uint64_t{1} << problem.n;
  double total = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    const double s = std::sin(problem.angle(x));
    total += s * s;
  }
  return total / static_cast<double>(count);
}

std::vector<double> amplified_probabilities(const IntegralProblem& problem,
                                            const Schedule& schedule) {
  problem.validate();
  std::vector<double> probabilities;
  probabilities.reserve(schedule.size());
  // Depths are usually non-decreasing, so keep amplifying the previous state.
  StateVector state = apply_A(StateVector::zero(problem.n), problem);
  std::uint64_t depth = 0;
  for (const auto& e : schedule.entries()) {
    if (e.amplifications < depth) {
      state = apply_A(StateVector::zero(problem.n), problem);
      depth = 0;
    }
    state = apply_Q(std::move(state), problem, e.amplifications - depth);
    depth = e.amplifications;
    probabilities.push_back(state.ancilla_one_probability());
  }
  return probabilities;
}

IntegralEstimate estimate_integral(const IntegralProblem& problem, const Schedule& schedule,
                                   const MLConfig& config, std::uint64_t seed) {
  const auto probabilities = amplified_probabilities(problem, schedule);
  return estimate_integral(problem, schedule, probabilities, config, seed);
}

IntegralEstimate estimate_integral(const IntegralProblem& problem, const Schedule& schedule,
                                   std::span<const double> probabilities,
                                   const MLConfig& config, std::uint64_t seed) {
  const auto data = sample_counts_from_probabilities(schedule, probabilities, seed);
  IntegralEstimate est;
  est.ml = ml_estimate(data, schedule, config);
  est.s_hat = est.ml.a_hat;
  est.exact = exact_sum(problem);
  est.bounds = bound_report(schedule, est.exact);
  return est;
}

std::vector<Complex> amplification_matrix(const IntegralProblem& problem) {
  problem.validate();
  const std::size_t dim = std::size_t{1} << (problem.n + 1);
  std::vector<Complex> matrix(dim * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto column = apply_Q(StateVector::basis(problem.n, j), problem, 1);
    for (std::size_t i = 0; i < dim; ++i) matrix[i * dim + j] = column[i];
  }
  return matrix;
}

}  // namespace mlae
