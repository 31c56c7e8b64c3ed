#include "mlae/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlae {

StateVector StateVector::zero(unsigned domain_qubits) { return basis(domain_qubits, 0); }

StateVector StateVector::basis(unsigned domain_qubits, std::uint64_t index) {
  if (domain_qubits == 0 || domain_qubits > kMaxDomainQubits) {
    throw std::invalid_argument("domain register must have 1 to 20 qubits");
  }
  std::vector<Complex> amps(std::size_t{1} << (domain_qubits + 1));
  if (index >= amps.size()) throw std::invalid_argument("basis index out of range");
  amps[index] = 1.0;
  return StateVector(domain_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(unsigned domain_qubits, std::vector<Complex> amplitudes) {
  if (domain_qubits == 0 || domain_qubits > kMaxDomainQubits) {
    throw std::invalid_argument("domain register must have 1 to 20 qubits");
  }
  if (amplitudes.size() != (std::size_t{1} << (domain_qubits + 1))) {
    throw std::invalid_argument("amplitude count must be 2^(n+1)");
  }
  StateVector state(domain_qubits, std::move(amplitudes));
  if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
    throw std::invalid_argument("state is not normalized");
  }
  return state;
}

double StateVector::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto& z : amps_) total += std::norm(z);
  return total;
}

double StateVector::ancilla_one_probability() const noexcept {
  double total = 0.0;
  for (std::size_t i = 1; i < amps_.size(); i += 2) total += std::norm(amps_[i]);
  return total;
}

void StateVector::apply(unsigned bit, const Gate2x2& gate) {
  if (bit > n_) throw std::invalid_argument("qubit index out of range");
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & stride) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | stride];
    amps_[i] = gate[0] * a0 + gate[1] * a1;
    amps_[i | stride] = gate[2] * a0 + gate[3] * a1;
  }
}

void StateVector::apply_controlled(unsigned control_bit, unsigned target_bit,
                                   const Gate2x2& gate) {
  if (control_bit > n_ || target_bit > n_ || control_bit == target_bit) {
    throw std::invalid_argument("bad control/target qubits");
  }
  const std::size_t control = std::size_t{1} << control_bit;
  const std::size_t stride = std::size_t{1} << target_bit;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & stride) || !(i & control)) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | stride];
    amps_[i] = gate[0] * a0 + gate[1] * a1;
    amps_[i | stride] = gate[2] * a0 + gate[3] * a1;
  }
}

void StateVector::flip_sign_ancilla(unsigned ancilla) {
  for (std::size_t i = ancilla & 1u; i < amps_.size(); i += 2) amps_[i] = -amps_[i];
}

void StateVector::flip_sign_basis(std::uint64_t index) {
  if (index >= amps_.size()) throw std::invalid_argument("basis index out of range");
  amps_[index] = -amps_[index];
}

Gate2x2 hadamard_gate() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {r, r, r, -r};
}

Gate2x2 ry_gate(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return {c, -s, s, c};
}

}  // namespace mlae
