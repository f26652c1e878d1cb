#include "bsyk/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace bsyk {

namespace {

void check_width(int n_qubits) {
  if (n_qubits <= 0 || n_qubits > 64) {
    throw std::invalid_argument("PauliString width must be in [1, 64], got " +
                                std::to_string(n_qubits));
  }
}

void check_same_width(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli width mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
}

std::uint64_t width_mask(int n_qubits) {
  return n_qubits == 64 ? ~0ull : ((1ull << n_qubits) - 1);
}

}  // namespace

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits) {
  check_width(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  check_width(n_qubits);
  const std::uint64_t mask = width_mask(n_qubits);
  if ((x_ & ~mask) != 0 || (z_ & ~mask) != 0) {
    throw std::invalid_argument("Pauli mask has bits beyond the string width");
  }
}

PauliString PauliString::parse(const std::string& label) {
  PauliString p(static_cast<int>(label.size()));
  for (std::size_t q = 0; q < label.size(); ++q) {
    const std::uint64_t bit = 1ull << q;
    switch (label[q]) {
      case 'I': break;
      case 'X': p.x_ |= bit; break;
      case 'Y': p.x_ |= bit; p.z_ |= bit; break;
      case 'Z': p.z_ |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli label character '" +
                                    std::string(1, label[q]) + "'");
    }
  }
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char pauli) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  PauliString p(n_qubits);
  const std::uint64_t bit = 1ull << qubit;
  switch (pauli) {
    case 'X': p.x_ = bit; break;
    case 'Y': p.x_ = bit; p.z_ = bit; break;
    case 'Z': p.z_ = bit; break;
    default: throw std::invalid_argument("pauli must be one of X, Y, Z");
  }
  return p;
}

char PauliString::site(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const bool x = (x_ >> qubit) & 1;
  const bool z = (z_ >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  std::string s(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) s[static_cast<std::size_t>(q)] = site(q);
  return s;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_qubits_ != b.n_qubits_) return a.n_qubits_ < b.n_qubits_;
  for (int q = 0; q < a.n_qubits_; ++q) {
    const char ca = a.site(q), cb = b.site(q);
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::pair<PauliString, Phase> multiply(const PauliString& a,
                                       const PauliString& b) {
  check_same_width(a, b);
  const std::uint64_t cx = a.x_mask() ^ b.x_mask();
  const std::uint64_t cz = a.z_mask() ^ b.z_mask();
  // Writing each site as i^{x z} X^x Z^z, the product picks up
  // i^{xa za + xb zb - xc zc} (-1)^{za xb} site by site.
  const int k = std::popcount(a.x_mask() & a.z_mask()) +
                std::popcount(b.x_mask() & b.z_mask()) +
                2 * std::popcount(a.z_mask() & b.x_mask()) -
                std::popcount(cx & cz);
  return {PauliString(a.n_qubits(), cx, cz), Phase(k)};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_width(a, b);
  const int anti = std::popcount(a.x_mask() & b.z_mask()) +
                   std::popcount(a.z_mask() & b.x_mask());
  return (anti & 1) == 0;
}

int weight(const PauliString& a) {
  return std::popcount(a.x_mask() | a.z_mask());
}

BasisAction apply_to_basis(const PauliString& p, std::uint64_t basis_index) {
  const int n_y = std::popcount(p.x_mask() & p.z_mask());
  const int k = n_y + 2 * std::popcount(p.z_mask() & basis_index);
  return {basis_index ^ p.x_mask(), Phase(k)};
}

}  // namespace bsyk
