#include "qcopy/synthesis.hpp"

#include <cmath>
#include <numbers>

#include "qcopy/errors.hpp"
#include "qcopy/pauli.hpp"

namespace qcopy {

namespace {

constexpr double kPi = std::numbers::pi;

void check_copy_count(int n) {
  if (n < 1) throw Error("copy count n must be at least 1");
  if (n > 11) throw Error("copy count n beyond the supported register size");
}

void check_duration(double dt) {
  if (!(dt > 0.0)) throw Error("gate duration dt must be positive");
}

Operator tensor_power(const Operator& factor, int count) {
  Operator out = factor;
  for (int i = 1; i < count; ++i) out = tensor_product(out, factor);
  return out;
}

}  // namespace

void GateSpec::validate() const {
  check_copy_count(n);
  check_duration(dt);
}

std::size_t all_up_index(int n) {
  check_copy_count(n);
  return 0;
}

std::size_t up_control_index(int n) {
  check_copy_count(n);
  return (std::size_t{1} << n) - 1;
}

std::size_t all_down_index(int n) {
  check_copy_count(n);
  return (std::size_t{1} << (n + 1)) - 1;
}

Operator target_copy_unitary(const GateSpec& spec) {
  spec.validate();
  const std::size_t dim = std::size_t{1} << (spec.n + 1);
  const std::size_t up = all_up_index(spec.n);
  const std::size_t src = up_control_index(spec.n);
  const std::size_t down = all_down_index(spec.n);

  Operator u = Operator::identity(dim);
  u(up, up) = 0.0;
  u(src, src) = 0.0;
  u(up, src) = std::polar(1.0, spec.beta);
  u(src, up) = std::polar(1.0, spec.alpha);
  u(down, down) = std::polar(1.0, spec.rho);
  return u;
}

Operator subspace_block(const GateSpec& spec) {
  spec.validate();
  Operator u(3);
  u(0, 1) = std::polar(1.0, spec.beta);
  u(1, 0) = std::polar(1.0, spec.alpha);
  u(2, 2) = std::polar(1.0, spec.rho);
  return u;
}

std::array<Complex, 3> subspace_eigenphases(const GateSpec& spec) {
  spec.validate();
  const Complex swap_phase = std::polar(1.0, spec.gamma());
  return {swap_phase, -swap_phase, std::polar(1.0, spec.rho)};
}

EnergyTriple branch_energies(const GateSpec& spec) {
  spec.validate();
  const double dt = spec.dt;
  const double half_sum = 0.5 * (spec.alpha + spec.beta);
  return EnergyTriple{
      -half_sum / dt + 2.0 * kPi * spec.n1 / dt,
      -half_sum / dt + 2.0 * kPi * (spec.n2 + 0.5) / dt,
      -spec.rho / dt + 2.0 * kPi * spec.n3 / dt,
  };
}

Operator subspace_hamiltonian(double gamma, int branch, double dt) {
  check_duration(dt);
  const double strength = (kPi / dt) * (branch - 0.5);
  Operator h(3);
  h(0, 1) = strength * std::polar(1.0, -gamma);
  h(1, 0) = strength * std::polar(1.0, gamma);
  return h;
}

Operator copy_hamiltonian_projector(int n, double gamma, int branch, double dt) {
  check_copy_count(n);
  check_duration(dt);
  const double strength = (kPi / dt) * (branch - 0.5);
  Operator h(std::size_t{1} << (n + 1));
  h(all_up_index(n), up_control_index(n)) = strength * std::polar(1.0, -gamma);
  h(up_control_index(n), all_up_index(n)) = strength * std::polar(1.0, gamma);
  return h;
}

Operator copy_hamiltonian_pauli(int n, double gamma, double dt) {
  check_copy_count(n);
  check_duration(dt);
  // (1 + σz) on the control selects the spin-up block.
  const Operator control = materialize(PauliLetter::I) + materialize(PauliLetter::Z);
  const Operator raise_all = tensor_power(sigma_plus(), n);
  const Operator lower_all = tensor_power(sigma_minus(), n);
  Operator copies = std::polar(1.0, -gamma) * raise_all;
  copies += std::polar(1.0, gamma) * lower_all;
  const double prefactor = kPi / (std::ldexp(1.0, n + 2) * dt);
  return prefactor * tensor_product(control, copies);
}

Operator single_copy_spin_hamiltonian(double gamma, double dt) {
  check_duration(dt);
  const double scale = kPi / (4.0 * dt);
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);
  using L = PauliLetter;
  Operator h = materialize(PauliTerm{scale * cg, {L::I, L::X}});
  h += materialize(PauliTerm{scale * sg, {L::I, L::Y}});
  h += materialize(PauliTerm{scale * cg, {L::Z, L::X}});
  h += materialize(PauliTerm{scale * sg, {L::Z, L::Y}});
  return h;
}

Operator cnot_hamiltonian(int sign, double dt) {
  if (sign != 1 && sign != -1) throw Error("cnot sign must be +1 or -1");
  check_duration(dt);
  const Operator control = materialize(PauliLetter::I) + materialize(PauliLetter::Z);
  const Operator flip = materialize(PauliLetter::I) - materialize(PauliLetter::X);
  return (sign * kPi / (4.0 * dt)) * tensor_product(control, flip);
}

Operator exact_synthesis(const GateSpec& spec) {
  spec.validate();
  const EnergyTriple e = branch_energies(spec);
  // Eigenvectors of the swap block are (1, ±e^{iδ})/√2 with δ = (α−β)/2,
  // so H = Σ E_k v_k v_k† keeps a closed form.
  const double delta = 0.5 * (spec.alpha - spec.beta);
  const double diag = 0.5 * (e.e1 + e.e2);
  const Complex off = 0.5 * (e.e1 - e.e2) * std::polar(1.0, -delta);

  const std::size_t up = all_up_index(spec.n);
  const std::size_t src = up_control_index(spec.n);
  const std::size_t down = all_down_index(spec.n);
  Operator h(std::size_t{1} << (spec.n + 1));
  h(up, up) = diag;
  h(src, src) = diag;
  h(up, src) = off;
  h(src, up) = std::conj(off);
  h(down, down) = e.e3;
  return h;
}

}  // namespace qcopy
