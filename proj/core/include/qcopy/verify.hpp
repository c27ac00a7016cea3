#pragma once

#include <map>
#include <string>

#include "qcopy/operator.hpp"

namespace qcopy {

/// Structured pass/fail record: passed is true iff every residual is within
/// tolerance. Realized phases are reported for inspection and are only
/// gated in strict mode.
struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double tolerance = 0.0;
  std::map<std::string, double> residuals;
  std::map<std::string, Complex> realized_phases;
  /// Extra failure context (e.g. the zero-trace case of phase comparison).
  std::string diagnostic;

  double worst_residual() const;
};

/// Checks the two copying conditions on u (dim 2^{n+1}): |10…0⟩ reaches
/// |11…1⟩ with unit modulus, |00…0⟩ stays put with unit modulus, and every
/// other basis state is fixed up to phase. strict_phases additionally
/// requires the other basis states to keep phase exactly 1.
VerificationReport verify_copying(const Operator& u, int n, double tol,
                                  bool strict_phases = false);

/// Checks the controlled-NOT truth table on a 4×4 operator: |11⟩↔|10⟩ with
/// unit modulus, |01⟩ and |00⟩ fixed, everything off the pattern zero.
/// strict_phases additionally requires all four amplitudes to equal 1.
VerificationReport verify_cnot_truth_table(const Operator& u, double tol,
                                           bool strict_phases = false);

/// Passed iff ‖a − φb‖_F ≤ tol for the optimal unit-modulus φ
/// = trace(b†a)/|trace(b†a)|. A vanishing trace means the operators are not
/// phase-related: reported as failed with a diagnostic, not thrown.
VerificationReport equal_up_to_global_phase(const Operator& a,
                                            const Operator& b, double tol);

/// Deterministic single-line JSON:
/// {"check":…,"passed":…,"tolerance":…,"residuals":{…},"phases":{…}}.
std::string to_json(const VerificationReport& report);

}  // namespace qcopy
