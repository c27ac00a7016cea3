#include "qcopy/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qcopy/errors.hpp"
#include "qcopy/json_io.hpp"
#include "qcopy/synthesis.hpp"

namespace qcopy {

double VerificationReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& [label, value] : residuals) worst = std::max(worst, value);
  return worst;
}

namespace {

bool gate(VerificationReport& report) {
  report.passed = true;
  for (const auto& [label, value] : report.residuals)
    if (!(value <= report.tolerance)) report.passed = false;
  return report.passed;
}

}  // namespace

VerificationReport verify_copying(const Operator& u, int n, double tol,
                                  bool strict_phases) {
  const std::size_t dim = std::size_t{1} << (n + 1);
  if (u.dim() != dim)
    throw DimMismatch("verify_copying: operator dim does not match 2^(n+1)");
  const double ures = u.unitarity_residual();
  if (ures > tol)
    throw NotUnitary("verify_copying: operand is not unitary", ures);

  const std::size_t up = all_up_index(n);
  const std::size_t src = up_control_index(n);
  const std::size_t down = all_down_index(n);

  VerificationReport report;
  report.check_name = "copying-conditions";
  report.tolerance = tol;

  const Complex up_copy = u(up, src);
  const Complex up_return = u(src, up);
  const Complex down_fix = u(down, down);
  report.residuals["copy_up"] = std::abs(1.0 - std::abs(up_copy));
  report.residuals["fix_down"] = std::abs(1.0 - std::abs(down_fix));

  double others = 0.0;
  double others_phase = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    if (b == up || b == src || b == down) continue;
    others = std::max(others, std::abs(1.0 - std::abs(u(b, b))));
    others_phase = std::max(others_phase, std::abs(u(b, b) - Complex(1.0, 0.0)));
  }
  report.residuals["others_diag"] = others;
  if (strict_phases) report.residuals["others_phase"] = others_phase;

  report.realized_phases["up_copy"] = up_copy;
  report.realized_phases["up_return"] = up_return;
  report.realized_phases["down_fix"] = down_fix;
  gate(report);
  return report;
}

VerificationReport verify_cnot_truth_table(const Operator& u, double tol,
                                           bool strict_phases) {
  if (u.dim() != 4)
    throw DimMismatch("verify_cnot_truth_table: operator must be 4x4");

  VerificationReport report;
  report.check_name = "cnot-truth-table";
  report.tolerance = tol;

  // Index order |11⟩, |10⟩, |01⟩, |00⟩.
  const Complex amp_11_to_10 = u(1, 0);
  const Complex amp_10_to_11 = u(0, 1);
  const Complex amp_01 = u(2, 2);
  const Complex amp_00 = u(3, 3);

  report.residuals["cond_11_to_10"] = std::abs(1.0 - std::abs(amp_11_to_10));
  report.residuals["cond_10_to_11"] = std::abs(1.0 - std::abs(amp_10_to_11));
  report.residuals["cond_01_fixed"] = std::abs(1.0 - std::abs(amp_01));
  report.residuals["cond_00_fixed"] = std::abs(1.0 - std::abs(amp_00));

  double leakage = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool on_pattern = (r == 1 && c == 0) || (r == 0 && c == 1) ||
                              (r == 2 && c == 2) || (r == 3 && c == 3);
      if (!on_pattern) leakage = std::max(leakage, std::abs(u(r, c)));
    }
  report.residuals["leakage"] = leakage;

  if (strict_phases) {
    report.residuals["phase_11_to_10"] = std::abs(amp_11_to_10 - Complex(1.0, 0.0));
    report.residuals["phase_10_to_11"] = std::abs(amp_10_to_11 - Complex(1.0, 0.0));
    report.residuals["phase_01"] = std::abs(amp_01 - Complex(1.0, 0.0));
    report.residuals["phase_00"] = std::abs(amp_00 - Complex(1.0, 0.0));
  }

  report.realized_phases["amp_11_to_10"] = amp_11_to_10;
  report.realized_phases["amp_10_to_11"] = amp_10_to_11;
  report.realized_phases["amp_01"] = amp_01;
  report.realized_phases["amp_00"] = amp_00;
  gate(report);
  return report;
}

VerificationReport equal_up_to_global_phase(const Operator& a,
                                            const Operator& b, double tol) {
  if (a.dim() != b.dim())
    throw DimMismatch("equal_up_to_global_phase: dimensions differ");
  const double ares = a.unitarity_residual();
  if (ares > tol)
    throw NotUnitary("equal_up_to_global_phase: first operand not unitary", ares);
  const double bres = b.unitarity_residual();
  if (bres > tol)
    throw NotUnitary("equal_up_to_global_phase: second operand not unitary", bres);

  VerificationReport report;
  report.check_name = "equal-up-to-global-phase";
  report.tolerance = tol;

  Complex overlap = 0.0;  // trace(b†a)
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    overlap += std::conj(b.entries()[i]) * a.entries()[i];

  if (std::abs(overlap) <= 1e-12 * static_cast<double>(a.dim())) {
    report.passed = false;
    report.diagnostic = "zero trace overlap: operators are not phase-related";
    report.residuals["distance"] = frobenius_distance(a, b);
    return report;
  }

  const Complex phi = overlap / std::abs(overlap);
  report.realized_phases["phi"] = phi;
  report.residuals["distance"] = frobenius_distance(a, phi * b);
  gate(report);
  return report;
}

std::string to_json(const VerificationReport& report) {
  std::string out = "{\"check\":" + json_quote(report.check_name);
  out += ",\"passed\":";
  out += report.passed ? "true" : "false";
  out += ",\"tolerance\":" + format_real(report.tolerance);
  out += ",\"residuals\":{";
  bool first = true;
  for (const auto& [label, value] : report.residuals) {
    if (!first) out += ",";
    first = false;
    out += json_quote(label) + ":" + format_real(value);
  }
  out += "},\"phases\":{";
  first = true;
  for (const auto& [label, value] : report.realized_phases) {
    if (!first) out += ",";
    first = false;
    out += json_quote(label) + ":[" + format_real(value.real()) + "," +
           format_real(value.imag()) + "]";
  }
  out += "}";
  if (!report.diagnostic.empty()) out += ",\"diagnostic\":" + json_quote(report.diagnostic);
  out += "}";
  return out;
}

}  // namespace qcopy
