#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlae/likelihood.hpp"
#include "mlae/schedule.hpp"
#include "mlae/statevector.hpp"
#include "mlae/statistics.hpp"

namespace mlae {

/// Riemann sum of sin^2 over [0, b_max] on a 2^n point midpoint grid:
///   S = 2^-n sum_x sin^2((x + 1/2) b_max / 2^n).
struct IntegralProblem {
  unsigned n = 2;
  double b_max = 0.7853981633974483;  // pi / 4

  /// Throws std::invalid_argument unless 1 <= n <= 20 and 0 < b_max <= pi.
  void validate() const;
  /// Ancilla angle for domain value x, (x + 1/2) b_max / 2^n.
  double angle(std::uint64_t x) const;
};

/// Hadamard on every domain qubit. On |0>_n|0> this gives the uniform
/// superposition with the ancilla untouched; it is its own inverse.
StateVector apply_P(StateVector state);

/// Ancilla rotation |x>|0> -> |x>(cos phi_x |0> + sin phi_x |1>), phi_x = problem.angle(x).
/// Requires every ancilla-1 amplitude to be zero; throws std::invalid_argument otherwise.
StateVector apply_R(StateVector state, const IntegralProblem& problem);

/// The unitary behind apply_R on arbitrary states: RY(b_max / 2^n) on the
/// ancilla, then for each domain bit j an RY(b_max / 2^(n-1-j)) controlled by
/// that bit. `inverse` applies the adjoint (reverse order, negated angles).
StateVector rotate_ancilla(StateVector state, const IntegralProblem& problem, bool inverse = false);

/// General loading for f(x) = sin^2(angles[x]): one ancilla rotation per
/// domain value. Hook for integrands other than the sine instance.
StateVector rotate_ancilla_table(StateVector state, std::span<const double> angles,
                                 bool inverse = false);

/// State preparation A = R (P x I) and its inverse.
StateVector apply_A(StateVector state, const IntegralProblem& problem);
StateVector apply_A_inverse(StateVector state, const IntegralProblem& problem);

/// Applies the amplification operator `times` times. Each application is
/// U_psi U_0: first the reflection I - 2 I_n (x) |0><0| (sign flip on the
/// ancilla-0 components), then U_psi = A (I - 2|0><0|) A^-1. This equals
/// -A S_0 A^-1 S_chi including the global sign.
StateVector apply_Q(StateVector state, const IntegralProblem& problem, std::uint64_t times);

/// Q^m A |0>.
StateVector prepare_amplified(const IntegralProblem& problem, std::uint64_t m);

double exact_sum(const IntegralProblem& problem);

/// Ancilla-1 probability of Q^{m_k} A|0> for each schedule entry, from the state vector.
std::vector<double> amplified_probabilities(const IntegralProblem& problem,
                                            const Schedule& schedule);

struct IntegralEstimate {
  double s_hat = 0.0;
  double exact = 0.0;
  MLResult ml;
  BoundReport bounds;  // evaluated at the exact sum
};

/// Simulates the measurement schedule on the state vector, draws N_k ancilla
/// readouts per entry and returns the maximum-likelihood estimate of S.
IntegralEstimate estimate_integral(const IntegralProblem& problem, const Schedule& schedule,
                                   const MLConfig& config, std::uint64_t seed);

/// Same, reusing probabilities already computed by amplified_probabilities.
IntegralEstimate estimate_integral(const IntegralProblem& problem, const Schedule& schedule,
                                   std::span<const double> probabilities,
                                   const MLConfig& config, std::uint64_t seed);

/// Dense (2^(n+1))^2 matrix of the amplification operator, column j = Q e_j.
std::vector<Complex> amplification_matrix(const IntegralProblem& problem);

}  // namespace mlae
