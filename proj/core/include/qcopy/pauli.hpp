#pragma once

#include <string>
#include <vector>

#include "qcopy/operator.hpp"

namespace qcopy {

/// Single-qubit Pauli letters in the (|1⟩, |0⟩) basis with spin-up first,
/// so Z|1⟩ = +|1⟩.
enum class PauliLetter : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter letter);
PauliLetter letter_from_char(char c);

/// The 2×2 matrix of a letter: I, X=[[0,1],[1,0]], Y=[[0,−i],[i,0]],
/// Z=[[1,0],[0,−1]].
Operator materialize(PauliLetter letter);

/// One weighted Pauli string, qubit 1 first.
struct PauliTerm {
  Complex coefficient;
  std::vector<PauliLetter> letters;
};

/// coefficient × letter₁ ⊗ letter₂ ⊗ … (dim 2^k).
Operator materialize(const PauliTerm& term);

/// Ladder operators in the unnormalized convention σ± = σx ± iσy, with
/// matrix entries 2: σ₊|0⟩ = 2|1⟩ and σ₋|1⟩ = 2|0⟩.
Operator sigma_plus();
Operator sigma_minus();

/// Hilbert–Schmidt projection of an operator onto Pauli strings:
/// c_P = trace(P†h)/2^k. Returns terms with |c_P| > prune, ordered
/// lexicographically (I < X < Y < Z, qubit 1 most significant). Requires a
/// power-of-two dimension.
std::vector<PauliTerm> decompose(const Operator& h, double prune = 1e-13);

/// "±c.cccccccccc LETTERS" with the coefficient's real part to 10 decimals.
std::string format_term(const PauliTerm& term);

}  // namespace qcopy
