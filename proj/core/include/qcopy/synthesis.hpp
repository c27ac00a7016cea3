#pragma once

#include <array>

#include "qcopy/operator.hpp"

namespace qcopy {

/// Target parameters for the basis-copying gate on 1 control + n copy qubits.
struct GateSpec {
  int n = 1;          ///< copy count, ≥ 1
  double alpha = 0.0; ///< phase of |10…0⟩⟨11…1|
  double beta = 0.0;  ///< phase of |11…1⟩⟨10…0|
  double rho = 0.0;   ///< phase of |00…0⟩⟨00…0|
  int n1 = 0;         ///< branch integer for the +e^{iγ} eigenphase
  int n2 = 0;         ///< branch integer for the −e^{iγ} eigenphase
  int n3 = 0;         ///< branch integer for the e^{iρ} eigenphase
  double dt = 1.0;    ///< gate duration, > 0

  /// γ = (α+β)/2; recomputed, never stored.
  double gamma() const noexcept { return 0.5 * (alpha + beta); }
  /// N = N₁ − N₂.
  int branch() const noexcept { return n1 - n2; }

  void validate() const;
};

/// Energies (units 1/dt, ħ = 1) whose phases e^{−iE dt} realize the three
/// subspace eigenphases for the branch integers they were built from.
struct EnergyTriple {
  double e1;
  double e2;
  double e3;
};

/// Storage indices of the three special basis states for n copies.
std::size_t all_up_index(int n);       ///< |11…1⟩ → 0
std::size_t up_control_index(int n);   ///< |10…0⟩ → 2^n − 1
std::size_t all_down_index(int n);     ///< |00…0⟩ → 2^{n+1} − 1

/// The copying unitary: |10…0⟩ → e^{iβ}|11…1⟩, |11…1⟩ → e^{iα}|10…0⟩,
/// |00…0⟩ → e^{iρ}|00…0⟩, every other basis state fixed with phase 1.
Operator target_copy_unitary(const GateSpec& spec);

/// Its 3×3 block on span{|11…1⟩, |10…0⟩, |00…0⟩}, in that order.
Operator subspace_block(const GateSpec& spec);

/// Closed-form eigenvalues of the subspace block:
/// (e^{iγ}, −e^{iγ}, e^{iρ}) with γ = (α+β)/2.
std::array<Complex, 3> subspace_eigenphases(const GateSpec& spec);

/// E₁ = −(α+β)/(2Δt) + 2πN₁/Δt, E₂ = −(α+β)/(2Δt) + 2π(N₂+½)/Δt,
/// E₃ = −ρ/Δt + 2πN₃/Δt.
EnergyTriple branch_energies(const GateSpec& spec);

/// The 3×3 copying Hamiltonian block
/// (π/dt)(N−½)[[0, e^{−iγ}, 0], [e^{iγ}, 0, 0], [0, 0, 0]].
Operator subspace_hamiltonian(double gamma, int branch, double dt);

/// Full-space copying Hamiltonian in projector form:
/// (π/dt)(N−½)(e^{−iγ}|1…1⟩⟨10…0| + e^{iγ}|10…0⟩⟨1…1|); exactly two
/// nonzero entries.
Operator copy_hamiltonian_projector(int n, double gamma, int branch, double dt);

/// The same Hamiltonian (branch N = 1) assembled from ladder products:
/// (π/(2^{n+2}dt))(1+σz⁽¹⁾)(e^{−iγ}σ₊⁽²⁾⋯σ₊⁽ⁿ⁺¹⁾ + e^{iγ}σ₋⁽²⁾⋯σ₋⁽ⁿ⁺¹⁾).
Operator copy_hamiltonian_pauli(int n, double gamma, double dt);

/// n = 1 spin-component form:
/// (π/(4dt))(1+σz⁽¹⁾)(cos γ σx⁽²⁾ + sin γ σy⁽²⁾).
Operator single_copy_spin_hamiltonian(double gamma, double dt);

/// ±(π/(4dt))(1+σz⁽¹⁾)(1−σx⁽²⁾); both signs exponentiate to the classical
/// controlled-NOT permutation (all nonzero entries 1).
Operator cnot_hamiltonian(int sign, double dt);

/// General-branch synthesis: H = V diag(E₁,E₂,E₃) V† from the closed-form
/// eigenvectors of the subspace block, embedded in the full space (zero
/// outside the three-state subspace). Its propagator over dt reproduces
/// target_copy_unitary(spec) with the exact phases α, β, ρ for every choice
/// of branch integers.
Operator exact_synthesis(const GateSpec& spec);

}  // namespace qcopy
