#include "qcopy/pauli.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "qcopy/errors.hpp"

namespace qcopy {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t log2_exact(std::size_t v) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

}  // namespace

char to_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  throw Error("invalid Pauli letter");
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default: throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

Operator materialize(PauliLetter letter) {
  Operator out(2);
  switch (letter) {
    case PauliLetter::I:
      out(0, 0) = 1.0;
      out(1, 1) = 1.0;
      break;
    case PauliLetter::X:
      out(0, 1) = 1.0;
      out(1, 0) = 1.0;
      break;
    case PauliLetter::Y:
      out(0, 1) = Complex(0.0, -1.0);
      out(1, 0) = Complex(0.0, 1.0);
      break;
    case PauliLetter::Z:
      out(0, 0) = 1.0;
      out(1, 1) = -1.0;
      break;
  }
  return out;
}

Operator materialize(const PauliTerm& term) {
  if (term.letters.empty()) throw Error("pauli term needs at least one letter");
  Operator out = materialize(term.letters.front());
  for (std::size_t i = 1; i < term.letters.size(); ++i)
    out = tensor_product(out, materialize(term.letters[i]));
  out *= term.coefficient;
  return out;
}

Operator sigma_plus() {
  Operator out(2);
  out(0, 1) = 2.0;
  return out;
}

Operator sigma_minus() {
  Operator out(2);
  out(1, 0) = 2.0;
  return out;
}

std::vector<PauliTerm> decompose(const Operator& h, double prune) {
  const std::size_t dim = h.dim();
  if (!is_power_of_two(dim))
    throw NotPowerOfTwoDim("decompose: operator dimension is not a power of two");
  const std::size_t k = log2_exact(dim);
  const std::size_t strings = std::size_t{1} << (2 * k);

  // Walk every matrix entry once; each per-qubit index pair (r_m, c_m) is
  // reached by exactly two letters, so an entry feeds 2^k of the 4^k
  // coefficients. Letter weights below are conj(L[r,c]) for the nonzero L.
  std::vector<Complex> coefficients(strings, Complex{});
  std::vector<std::size_t> string_code(dim);
  std::vector<Complex> weight(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex entry = h(r, c);
      if (entry == Complex{}) continue;
      string_code[0] = 0;
      weight[0] = entry;
      std::size_t count = 1;
      for (std::size_t m = 0; m < k; ++m) {
        const std::size_t shift = k - 1 - m;
        const std::size_t rb = (r >> shift) & 1u;
        const std::size_t cb = (c >> shift) & 1u;
        std::size_t code_a, code_b;
        Complex w_a, w_b;
        if (rb == cb) {
          code_a = static_cast<std::size_t>(PauliLetter::I);
          w_a = 1.0;
          code_b = static_cast<std::size_t>(PauliLetter::Z);
          w_b = (rb == 0) ? 1.0 : -1.0;
        } else {
          code_a = static_cast<std::size_t>(PauliLetter::X);
          w_a = 1.0;
          code_b = static_cast<std::size_t>(PauliLetter::Y);
          // conj(Y[r,c]): Y(0,1) = −i, Y(1,0) = +i.
          w_b = (rb == 0) ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
        }
        for (std::size_t i = 0; i < count; ++i) {
          string_code[count + i] = (string_code[i] << 2) | code_b;
          weight[count + i] = weight[i] * w_b;
          string_code[i] = (string_code[i] << 2) | code_a;
          weight[i] *= w_a;
        }
        count *= 2;
      }
      for (std::size_t i = 0; i < count; ++i)
        coefficients[string_code[i]] += weight[i];
    }
  }

  const double scale = 1.0 / static_cast<double>(dim);
  std::vector<PauliTerm> terms;
  for (std::size_t code = 0; code < strings; ++code) {
    const Complex c = coefficients[code] * scale;
    if (std::abs(c) <= prune) continue;
    std::vector<PauliLetter> letters(k);
    for (std::size_t m = 0; m < k; ++m)
      letters[m] = static_cast<PauliLetter>((code >> (2 * (k - 1 - m))) & 3u);
    terms.push_back(PauliTerm{c, std::move(letters)});
  }
  return terms;
}

std::string format_term(const PauliTerm& term) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.10f", term.coefficient.real());
  std::string out(buf);
  out.push_back(' ');
  for (PauliLetter l : term.letters) out.push_back(to_char(l));
  return out;
}

}  // namespace qcopy
