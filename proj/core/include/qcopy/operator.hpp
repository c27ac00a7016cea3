#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qcopy {

using Complex = std::complex<double>;

/// Dense, row-major complex matrix. For qubit registers the basis ordering
/// puts spin-up first in every factor, so |11…1⟩ is row/column 0 and the
/// all-down state is the last row/column, with qubit 1 the most significant
/// digit. This matches the three-state ordering |11…1⟩, |10…0⟩, |00…0⟩ used
/// throughout the gate-synthesis module.
class Operator {
 public:
  /// Zero matrix of the given dimension (dim ≥ 1).
  explicit Operator(std::size_t dim);
  Operator(std::size_t dim, std::vector<Complex> entries);

  static Operator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  const std::vector<Complex>& entries() const noexcept { return entries_; }

  /// Conjugate transpose. Applying it twice reproduces the operand exactly.
  Operator adjoint() const;

  double frobenius_norm() const;
  /// ‖a − a†‖_F
  double hermiticity_residual() const;
  /// ‖a†a − 1‖_F
  double unitarity_residual() const;

  Complex trace() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scale);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, double s) { return a *= Complex(s, 0.0); }
  friend Operator operator*(double s, Operator a) { return a *= Complex(s, 0.0); }

  /// Matrix product.
  Operator operator*(const Operator& other) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Kronecker product; the left factor is the more significant index block,
/// consistent with qubit 1 being the leftmost tensor factor.
Operator tensor_product(const Operator& a, const Operator& b);

double frobenius_distance(const Operator& a, const Operator& b);

/// A computational basis state |q₁q₂…q_{n+1}⟩ with q = 1 meaning spin-up.
class BasisState {
 public:
  explicit BasisState(std::vector<int> bits);
  /// Parse "10…0" (qubit 1 leftmost).
  static BasisState from_string(std::string_view text);
  static BasisState all_up(std::size_t qubits);
  static BasisState all_down(std::size_t qubits);
  /// |10…0⟩: qubit 1 up, all copies down.
  static BasisState up_control(std::size_t qubits);

  std::size_t qubit_count() const noexcept { return bits_.size(); }
  const std::vector<int>& bits() const noexcept { return bits_; }

  /// Row/column of this state in Operator/Ket storage (spin-up first, so
  /// |1…1⟩ → 0 and |0…0⟩ → 2^qubits − 1).
  std::size_t index() const;
  /// Plain binary value of the bitstring with q₁ most significant; the
  /// complement of index() within the register.
  std::size_t bit_value() const;

  std::string to_string() const;

 private:
  std::vector<int> bits_;
};

/// Dense state vector over the same index convention as Operator.
class Ket {
 public:
  explicit Ket(std::size_t dim);
  Ket(std::size_t dim, std::vector<Complex> amplitudes);
  static Ket basis(const BasisState& state);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }

  double norm() const;
  /// |Σ|ψ_i|² − 1|
  double normalization_error() const;

 private:
  std::vector<Complex> amplitudes_;
};

Ket apply(const Operator& a, const Ket& v);
Complex inner(const Ket& a, const Ket& b);
double distance(const Ket& a, const Ket& b);

}  // namespace qcopy
