#include "holo/pauli.hpp"

#include <stdexcept>
#include <utility>

namespace holo {

namespace {

void require_same_size(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts: " + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()));
  }
}

// Exponent of i picked up when moving from the product of the single-qubit
// Paulis (x1,z1)(x2,z2) to the Hermitian Pauli with bits (x1^x2, z1^z2).
int product_phase(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) {
    return 0;
  }
  if (x1 && z1) {  // Y
    return static_cast<int>(z2) - static_cast<int>(x2);
  }
  if (x1) {  // X
    return z2 ? (x2 ? 1 : -1) : 0;
  }
  return x2 ? (z2 ? -1 : 1) : 0;  // Z
}

}  // namespace

PauliString::PauliString(std::size_t n) : x_(n), z_(n) {}

PauliString::PauliString(BitVector x, BitVector z, bool negative)
    : x_(std::move(x)), z_(std::move(z)), phase_(negative ? 2 : 0) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("x and z parts of a Pauli string must have equal length");
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::uint8_t phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = static_cast<std::uint8_t>((phase + 1) % 4);
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    p.set_letter(q, text[q]);
  }
  p.set_phase_exponent(phase);
  return p;
}

char PauliString::letter(std::size_t q) const {
  const bool x = x_.get(q);
  const bool z = z_.get(q);
  if (x && z) {
    return 'Y';
  }
  if (x) {
    return 'X';
  }
  return z ? 'Z' : 'I';
}

void PauliString::set_letter(std::size_t q, char p) {
  switch (p) {
    case 'I':
    case '_':
      x_.set(q, false);
      z_.set(q, false);
      break;
    case 'X':
      x_.set(q, true);
      z_.set(q, false);
      break;
    case 'Y':
      x_.set(q, true);
      z_.set(q, true);
      break;
    case 'Z':
      x_.set(q, false);
      z_.set(q, true);
      break;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + p + "'");
  }
}

std::size_t PauliString::weight() const { return (x_ | z_).popcount(); }

std::string PauliString::letters() const {
  std::string s(size(), 'I');
  for (std::size_t q = 0; q < size(); ++q) {
    s[q] = letter(q);
  }
  return s;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + letters();
}

BitVector PauliString::interleaved() const {
  BitVector v(2 * size());
  for (const std::size_t q : x_.set_bits()) {
    v.set(2 * q);
  }
  for (const std::size_t q : z_.set_bits()) {
    v.set(2 * q + 1);
  }
  return v;
}

PauliString PauliString::from_interleaved(const BitVector& v) {
  if (v.size() % 2 != 0) {
    throw std::invalid_argument("interleaved symplectic vector must have even length");
  }
  PauliString p(v.size() / 2);
  for (const std::size_t b : v.set_bits()) {
    if (b % 2 == 0) {
      p.x_.set(b / 2);
    } else {
      p.z_.set(b / 2);
    }
  }
  return p;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  int exponent = p.phase_exponent() + q.phase_exponent();
  const BitVector active = support(p) & support(q);
  for (const std::size_t i : active.set_bits()) {
    exponent += product_phase(p.x_bits().get(i), p.z_bits().get(i), q.x_bits().get(i), q.z_bits().get(i));
  }
  PauliString r(p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits());
  r.set_phase_exponent(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4));
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  return p.x_bits().dot(q.z_bits()) == p.z_bits().dot(q.x_bits());
}

BitVector support(const PauliString& p) { return p.x_bits() | p.z_bits(); }

bool same_operator(const PauliString& p, const PauliString& q) {
  return p.x_bits() == q.x_bits() && p.z_bits() == q.z_bits();
}

}  // namespace holo
