#include "qcopy/operator.hpp"

#include <cmath>
#include <utility>

#include "qcopy/errors.hpp"

namespace qcopy {

Operator::Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw Error("operator dimension must be at least 1");
}

Operator::Operator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw Error("operator dimension must be at least 1");
  if (entries_.size() != dim * dim)
    throw DimMismatch("operator entries length does not equal dim^2");
}

Operator Operator::identity(std::size_t dim) {
  Operator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

Operator Operator::adjoint() const {
  Operator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      out(c, r) = std::conj((*this)(r, c));
  return out;
}

double Operator::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

double Operator::hermiticity_residual() const {
  double sum = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      sum += std::norm((*this)(r, c) - std::conj((*this)(c, r)));
  return std::sqrt(sum);
}

double Operator::unitarity_residual() const {
  const Operator gram = adjoint() * (*this);
  double sum = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex expect = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      sum += std::norm(gram(r, c) - expect);
    }
  return std::sqrt(sum);
}

Complex Operator::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

Operator& Operator::operator+=(const Operator& other) {
  if (other.dim_ != dim_) throw DimMismatch("operator sum: dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  if (other.dim_ != dim_) throw DimMismatch("operator difference: dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

Operator Operator::operator*(const Operator& other) const {
  if (other.dim_ != dim_) throw DimMismatch("operator product: dimensions differ");
  Operator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex{}) continue;  // synthesized operators are often sparse
      const Complex* brow = other.entries_.data() + k * dim_;
      Complex* orow = out.entries_.data() + i * dim_;
      for (std::size_t j = 0; j < dim_; ++j) orow[j] += a * brow[j];
    }
  }
  return out;
}

Operator tensor_product(const Operator& a, const Operator& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Operator out(da * db);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1) {
      const Complex av = a(i1, j1);
      if (av == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < db; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2)
          out(i1 * db + i2, j1 * db + j2) = av * b(i2, j2);
    }
  return out;
}

double frobenius_distance(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim())
    throw DimMismatch("frobenius distance: dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(sum);
}

BasisState::BasisState(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error("basis state needs at least one qubit");
  for (int b : bits_)
    if (b != 0 && b != 1) throw Error("basis state bits must be 0 or 1");
}

BasisState BasisState::from_string(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ParseError("basis state string must contain only 0 and 1");
    bits.push_back(c - '0');
  }
  if (bits.empty()) throw ParseError("empty basis state string");
  return BasisState(std::move(bits));
}

BasisState BasisState::all_up(std::size_t qubits) {
  return BasisState(std::vector<int>(qubits, 1));
}

BasisState BasisState::all_down(std::size_t qubits) {
  return BasisState(std::vector<int>(qubits, 0));
}

BasisState BasisState::up_control(std::size_t qubits) {
  std::vector<int> bits(qubits, 0);
  bits[0] = 1;
  return BasisState(std::move(bits));
}

std::size_t BasisState::index() const {
  std::size_t idx = 0;
  for (int b : bits_) idx = (idx << 1) | static_cast<std::size_t>(1 - b);
  return idx;
}

std::size_t BasisState::bit_value() const {
  std::size_t value = 0;
  for (int b : bits_) value = (value << 1) | static_cast<std::size_t>(b);
  return value;
}

std::string BasisState::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (int b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

Ket::Ket(std::size_t dim) : amplitudes_(dim) {
  if (dim == 0) throw Error("ket dimension must be at least 1");
}

Ket::Ket(std::size_t dim, std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (dim == 0) throw Error("ket dimension must be at least 1");
  if (amplitudes_.size() != dim)
    throw DimMismatch("ket amplitudes length does not equal dim");
}

Ket Ket::basis(const BasisState& state) {
  Ket out(std::size_t{1} << state.qubit_count());
  out[state.index()] = 1.0;
  return out;
}

double Ket::norm() const {
  double sum = 0.0;
  for (const Complex& z : amplitudes_) sum += std::norm(z);
  return std::sqrt(sum);
}

double Ket::normalization_error() const {
  double sum = 0.0;
  for (const Complex& z : amplitudes_) sum += std::norm(z);
  return std::abs(sum - 1.0);
}

Ket apply(const Operator& a, const Ket& v) {
  if (a.dim() != v.dim()) throw DimMismatch("apply: operator/ket dimensions differ");
  Ket out(v.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) sum += a(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

Complex inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw DimMismatch("inner: ket dimensions differ");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double distance(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw DimMismatch("distance: ket dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

}  // namespace qcopy
