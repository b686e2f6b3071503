#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "holo/gf2.hpp"

namespace holo {

/// n-qubit Pauli operator in symplectic form: qubit i carries X^x_i Z^z_i,
/// with (1,1) read as Y. The overall phase is i^phase_exponent().
class PauliString {
public:
  PauliString() = default;
  /// Identity on `n` qubits.
  explicit PauliString(std::size_t n);
  PauliString(BitVector x, BitVector z, bool negative = false);

  /// Parses an optional sign ("+", "-", "+i", "-i", "i") followed by letters over IXYZ.
  static PauliString parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return x_.size(); }
  [[nodiscard]] const BitVector& x_bits() const noexcept { return x_; }
  [[nodiscard]] const BitVector& z_bits() const noexcept { return z_; }
  [[nodiscard]] BitVector& x_bits() noexcept { return x_; }
  [[nodiscard]] BitVector& z_bits() noexcept { return z_; }

  [[nodiscard]] std::uint8_t phase_exponent() const noexcept { return phase_; }
  [[nodiscard]] bool is_hermitian() const noexcept { return (phase_ & 1U) == 0; }
  /// +1 or -1; meaningful only for Hermitian operators.
  [[nodiscard]] int sign() const noexcept { return phase_ == 2 ? -1 : 1; }
  void set_sign(int s) noexcept { phase_ = s < 0 ? 2 : 0; }
  void set_phase_exponent(std::uint8_t e) noexcept { phase_ = static_cast<std::uint8_t>(e % 4); }

  /// Single-qubit letter at `q`: one of I, X, Y, Z.
  [[nodiscard]] char letter(std::size_t q) const;
  void set_letter(std::size_t q, char p);

  [[nodiscard]] bool is_identity() const noexcept { return x_.none() && z_.none(); }
  [[nodiscard]] std::size_t weight() const;

  /// Sign prefix and IXYZ letters, e.g. "+XZZXI".
  [[nodiscard]] std::string to_string() const;
  /// Letters only.
  [[nodiscard]] std::string letters() const;

  /// Interleaved symplectic vector (x_0, z_0, x_1, z_1, ...).
  [[nodiscard]] BitVector interleaved() const;
  static PauliString from_interleaved(const BitVector& v);

  friend bool operator==(const PauliString&, const PauliString&) = default;

private:
  BitVector x_;
  BitVector z_;
  std::uint8_t phase_ = 0;
};

/// Operator product p*q with the phase tracked exactly.
[[nodiscard]] PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff the symplectic inner product x_p.z_q + z_p.x_q vanishes mod 2.
[[nodiscard]] bool commutes(const PauliString& p, const PauliString& q);

/// Qubits on which p acts non-trivially (x OR z).
[[nodiscard]] BitVector support(const PauliString& p);

/// Phase-free equality of the operator parts.
[[nodiscard]] bool same_operator(const PauliString& p, const PauliString& q);

}  // namespace holo
