#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcopy/operator.hpp"

namespace qcopy {

/// Time modulation f(t) of a fixed generator over one gate window [0, Δt],
/// normalized to unit average so the realized propagator is unchanged:
///   constant: f = 1
///   sine:     f(t) = (π/2)·sin(πt/Δt)
///   square:   f(t) = 2 on [Δt/4, 3Δt/4], 0 elsewhere
class PulseProfile {
 public:
  enum class Kind { Constant, Sine, Square };

  static PulseProfile constant() { return PulseProfile(Kind::Constant); }
  static PulseProfile sine() { return PulseProfile(Kind::Sine); }
  static PulseProfile square() { return PulseProfile(Kind::Square); }
  /// "constant" | "sine" | "square"
  static PulseProfile from_name(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  double value(double t, double dt) const;
  /// Closed-form antiderivative ∫₀ᵗ f, so the unit-average invariant can be
  /// checked without quadrature.
  double integral(double t, double dt) const;
  double average(double dt) const { return integral(dt, dt) / dt; }

  /// f as seen by substep `step` of `steps`: identical to value() except
  /// that jump points of the square profile take the one-sided value from
  /// inside the step, keeping each substep on a single smooth piece.
  double sample(double t, double dt, int step, int steps) const;

 private:
  explicit PulseProfile(Kind kind) : kind_(kind) {}
  Kind kind_;
};

/// Integrates iψ' = f(t)Hψ (ħ = 1) with fixed-step classical RK4 over
/// `steps` uniform substeps. Requires a Hermitian generator, a normalized
/// initial ket, steps ≥ 100, and steps divisible by 4 for the square
/// profile (jump points must land on the grid).
Ket pulse_evolve(const Operator& h, const PulseProfile& profile, double dt,
                 const Ket& psi0, int steps);

/// One copy stage: the single-copy gate on (control, target).
struct Stage {
  int control;
  int target;
};

/// Sequential copying: n single-copy gates, one new target per stage.
struct StagePlan {
  int n;
  double gamma;
  double dt_per_stage;
  std::vector<Stage> stages;

  /// Control 1, targets ascending 2…n+1.
  static StagePlan sequential(int n, double gamma, double dt_per_stage);
  void validate() const;
};

struct StagedCopyResult {
  /// Per-stage gates embedded in the full 2^{n+1}-dimensional space.
  std::vector<Operator> gates;
  /// Product in stage order (first stage applied first).
  Operator composed;
};

StagedCopyResult staged_copy(const StagePlan& plan);

/// A two-qubit gate placed on (control, target) of a `qubits`-sized
/// register, identity elsewhere. Qubit labels are 1-based.
Operator embed_two_qubit(const Operator& gate, int control, int target,
                         int qubits);

}  // namespace qcopy
