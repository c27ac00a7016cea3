#include "qcopy/evolution.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "qcopy/errors.hpp"
#include "qcopy/spectral.hpp"
#include "qcopy/synthesis.hpp"

namespace qcopy {

namespace {

constexpr double kPi = std::numbers::pi;

// dψ = scale · (−i f) · H ψ, accumulated into out.
void add_scaled_derivative(const Operator& h, const std::vector<Complex>& psi,
                           Complex scale, std::vector<Complex>& out) {
  const std::size_t n = h.dim();
  for (std::size_t r = 0; r < n; ++r) {
    Complex sum = 0.0;
    const Complex* row = h.entries().data() + r * n;
    for (std::size_t c = 0; c < n; ++c) sum += row[c] * psi[c];
    out[r] += scale * sum;
  }
}

}  // namespace

PulseProfile PulseProfile::from_name(std::string_view name) {
  if (name == "constant") return constant();
  if (name == "sine") return sine();
  if (name == "square") return square();
  throw ParseError("unknown pulse profile '" + std::string(name) +
                   "' (expected constant|sine|square)");
}

std::string PulseProfile::name() const {
  switch (kind_) {
    case Kind::Constant: return "constant";
    case Kind::Sine: return "sine";
    case Kind::Square: return "square";
  }
  throw Error("invalid pulse kind");
}

double PulseProfile::value(double t, double dt) const {
  switch (kind_) {
    case Kind::Constant:
      return 1.0;
    case Kind::Sine:
      return 0.5 * kPi * std::sin(kPi * t / dt);
    case Kind::Square:
      return (t >= 0.25 * dt && t <= 0.75 * dt) ? 2.0 : 0.0;
  }
  throw Error("invalid pulse kind");
}

double PulseProfile::integral(double t, double dt) const {
  switch (kind_) {
    case Kind::Constant:
      return t;
    case Kind::Sine:
      return 0.5 * dt * (1.0 - std::cos(kPi * t / dt));
    case Kind::Square: {
      if (t <= 0.25 * dt) return 0.0;
      if (t <= 0.75 * dt) return 2.0 * (t - 0.25 * dt);
      return dt;
    }
  }
  throw Error("invalid pulse kind");
}

double PulseProfile::sample(double t, double dt, int step, int steps) const {
  if (kind_ != Kind::Square) return value(t, dt);
  // Substep boundaries land on the jump points (steps % 4 == 0), so the
  // step index alone decides which constant piece the whole substep sees.
  const int quarter = steps / 4;
  return (step >= quarter && step < 3 * quarter) ? 2.0 : 0.0;
}

Ket pulse_evolve(const Operator& h, const PulseProfile& profile, double dt,
                 const Ket& psi0, int steps) {
  if (!(dt > 0.0)) throw Error("pulse_evolve: dt must be positive");
  if (steps < 100) throw Error("pulse_evolve: steps must be at least 100");
  if (profile.kind() == PulseProfile::Kind::Square && steps % 4 != 0)
    throw Error("pulse_evolve: square profile requires steps divisible by 4");
  if (h.dim() != psi0.dim())
    throw DimMismatch("pulse_evolve: operator/ket dimensions differ");
  const double hres = h.hermiticity_residual();
  const double hnorm = h.frobenius_norm();
  if (hnorm > 0.0 && hres > 1e-12 * hnorm)
    throw NotHermitian("pulse_evolve: generator is not Hermitian", hres / hnorm);
  if (psi0.normalization_error() > 1e-12)
    throw NotNormalized("pulse_evolve: initial ket is not normalized");

  const std::size_t dim = psi0.dim();
  const double step_h = dt / steps;
  std::vector<Complex> y = psi0.amplitudes();
  std::vector<Complex> stage(dim), k1(dim), k2(dim), k3(dim), k4(dim);

  for (int i = 0; i < steps; ++i) {
    const double t0 = (i * dt) / steps;
    const double f0 = profile.sample(t0, dt, i, steps);
    const double fm = profile.sample(t0 + 0.5 * step_h, dt, i, steps);
    const double f1 = profile.sample(t0 + step_h, dt, i, steps);

    std::fill(k1.begin(), k1.end(), Complex{});
    add_scaled_derivative(h, y, Complex(0.0, -f0), k1);

    for (std::size_t j = 0; j < dim; ++j) stage[j] = y[j] + 0.5 * step_h * k1[j];
    std::fill(k2.begin(), k2.end(), Complex{});
    add_scaled_derivative(h, stage, Complex(0.0, -fm), k2);

    for (std::size_t j = 0; j < dim; ++j) stage[j] = y[j] + 0.5 * step_h * k2[j];
    std::fill(k3.begin(), k3.end(), Complex{});
    add_scaled_derivative(h, stage, Complex(0.0, -fm), k3);

    for (std::size_t j = 0; j < dim; ++j) stage[j] = y[j] + step_h * k3[j];
    std::fill(k4.begin(), k4.end(), Complex{});
    add_scaled_derivative(h, stage, Complex(0.0, -f1), k4);

    const double w = step_h / 6.0;
    for (std::size_t j = 0; j < dim; ++j)
      y[j] += w * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return Ket(dim, std::move(y));
}

StagePlan StagePlan::sequential(int n, double gamma, double dt_per_stage) {
  StagePlan plan{n, gamma, dt_per_stage, {}};
  for (int j = 2; j <= n + 1; ++j) plan.stages.push_back(Stage{1, j});
  plan.validate();
  return plan;
}

void StagePlan::validate() const {
  if (n < 1) throw Error("stage plan: n must be at least 1");
  if (!(dt_per_stage > 0.0)) throw Error("stage plan: dt must be positive");
  if (static_cast<int>(stages.size()) != n)
    throw Error("stage plan: expected exactly n stages");
  std::set<int> targets;
  for (const Stage& s : stages) {
    if (s.control != 1) throw Error("stage plan: control must be qubit 1");
    if (s.target < 2 || s.target > n + 1)
      throw Error("stage plan: target out of range 2..n+1");
    if (!targets.insert(s.target).second)
      throw Error("stage plan: duplicate target");
  }
}

Operator embed_two_qubit(const Operator& gate, int control, int target,
                         int qubits) {
  if (gate.dim() != 4) throw DimMismatch("embed_two_qubit: gate must be 4x4");
  if (control < 1 || control > qubits || target < 1 || target > qubits ||
      control == target)
    throw Error("embed_two_qubit: invalid qubit labels");

  const std::size_t dim = std::size_t{1} << qubits;
  const std::size_t shift_c = static_cast<std::size_t>(qubits - control);
  const std::size_t shift_t = static_cast<std::size_t>(qubits - target);
  const std::size_t mask = ~((std::size_t{1} << shift_c) | (std::size_t{1} << shift_t));

  Operator out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t dc = (col >> shift_c) & 1u;
    const std::size_t dtg = (col >> shift_t) & 1u;
    const std::size_t base = col & mask;
    const std::size_t sub_col = dc * 2 + dtg;
    for (std::size_t sub_row = 0; sub_row < 4; ++sub_row) {
      const Complex v = gate(sub_row, sub_col);
      if (v == Complex{}) continue;
      const std::size_t row =
          base | ((sub_row >> 1) << shift_c) | ((sub_row & 1u) << shift_t);
      out(row, col) = v;
    }
  }
  return out;
}

StagedCopyResult staged_copy(const StagePlan& plan) {
  plan.validate();
  const Operator single =
      propagator(copy_hamiltonian_projector(1, plan.gamma, 1, plan.dt_per_stage),
                 plan.dt_per_stage);
  const int qubits = plan.n + 1;

  StagedCopyResult result{{}, Operator::identity(std::size_t{1} << qubits)};
  result.gates.reserve(plan.stages.size());
  for (const Stage& s : plan.stages) {
    Operator gate = embed_two_qubit(single, s.control, s.target, qubits);
    result.composed = gate * result.composed;
    result.gates.push_back(std::move(gate));
  }
  return result;
}

}  // namespace qcopy
