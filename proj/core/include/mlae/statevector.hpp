#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace mlae {

using Complex = std::complex<double>;
using Gate2x2 = std::array<Complex, 4>;  // row-major

/// Dense amplitudes of an (n + 1)-qubit register.
///
/// Basis index = 2 x + ancilla: bit 0 is the ancilla, bit j + 1 is bit j of
/// the n-bit domain value x.
class StateVector {
 public:
  static constexpr unsigned kMaxDomainQubits = 20;

  /// |0>_n |0>.
  static StateVector zero(unsigned domain_qubits);
  /// Computational basis state with the given index.
  static StateVector basis(unsigned domain_qubits, std::uint64_t index);
  /// Takes ownership of 2^(n+1) amplitudes. Throws if the size is wrong or the
  /// norm differs from one by more than 1e-10.
  static StateVector from_amplitudes(unsigned domain_qubits, std::vector<Complex> amplitudes);

  unsigned domain_qubits() const noexcept { return n_; }
  unsigned qubits() const noexcept { return n_ + 1; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const noexcept;
  /// Probability that the ancilla (bit 0) reads 1.
  double ancilla_one_probability() const noexcept;

  void apply(unsigned bit, const Gate2x2& gate);
  void apply_controlled(unsigned control_bit, unsigned target_bit, const Gate2x2& gate);
  /// Multiplies every amplitude whose ancilla bit equals `ancilla` by -1.
  void flip_sign_ancilla(unsigned ancilla);
  /// Multiplies the amplitude of basis index `index` by -1.
  void flip_sign_basis(std::uint64_t index);

 private:
  StateVector(unsigned n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}

  unsigned n_;
  std::vector<Complex> amps_;
};

Gate2x2 hadamard_gate();
/// exp(-i angle Y / 2): |0> -> cos(angle/2)|0> + sin(angle/2)|1>.
Gate2x2 ry_gate(double angle);

}  // namespace mlae
