#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

namespace bsyk {

// Power of the imaginary unit, i^k with k mod 4.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : k_(((exponent % 4) + 4) % 4) {}

  constexpr int exponent() const { return k_; }
  std::complex<double> value() const {
    switch (k_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  constexpr bool is_real() const { return k_ == 0 || k_ == 2; }
  // +1 or -1; only meaningful when is_real().
  constexpr int real_sign() const { return k_ == 0 ? 1 : -1; }

  friend constexpr Phase operator*(Phase a, Phase b) {
    return Phase(a.k_ + b.k_);
  }
  friend constexpr bool operator==(Phase a, Phase b) { return a.k_ == b.k_; }

 private:
  int k_ = 0;
};

// Tensor product of single-qubit I/X/Y/Z operators in the symplectic
// (x mask, z mask) representation: site q is I/X/Y/Z for (x,z) bits
// (0,0)/(1,0)/(1,1)/(0,1).  Phase-free by convention; products carry their
// phase separately (see multiply).  Qubit q lives in bit q, capacity 64.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  // Parse "XYIZ..." with the leftmost character on qubit 0.
  static PauliString parse(const std::string& label);
  // Single non-identity site; pauli must be 'X', 'Y' or 'Z'.
  static PauliString single(int n_qubits, int qubit, char pauli);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  bool is_identity() const { return (x_ | z_) == 0; }
  char site(int qubit) const;
  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_qubits_ == b.n_qubits_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  // Orders by the text rendering (I < X < Y < Z per site, qubit 0 first).
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

// Operator product a*b = phase * string, with the string phase-free.
std::pair<PauliString, Phase> multiply(const PauliString& a,
                                       const PauliString& b);

// True iff the symplectic form <a.x,b.z> + <a.z,b.x> vanishes mod 2.
bool commutes(const PauliString& a, const PauliString& b);

// Number of non-identity sites.
int weight(const PauliString& a);

// Action on a computational basis state: P|b> = i^k |b ^ x_mask>.
struct BasisAction {
  std::uint64_t index;
  Phase phase;
};
BasisAction apply_to_basis(const PauliString& p, std::uint64_t basis_index);

}  // namespace bsyk
