#pragma once

// Symplectic representation of the generalized Pauli group on n qudits of
// prime dimension p. An element w^i X(a) Z(b) is stored as a phase exponent
// plus the vector (a|b) in F_p^{2n}; the X factor stands left of the Z
// factor on every coordinate. Also: symplectic inner product and dual,
// shortening of classical codes, stabilizer validation and the stabilizer
// file format.

#include <string>
#include <vector>

#include "qss/errors.hpp"
#include "qss/gfmat.hpp"

namespace qss {

struct PauliElement {
  int p = 2;
  int n = 0;
  int phase_exp = 0;           // exponent i of w = exp(2*pi*I/p)
  std::vector<int> a, b;       // each length n, entries in [0, p)

  static PauliElement identity(int p, int n);
  static PauliElement from_symplectic(int p, const std::vector<int>& row,
                                      int phase_exp = 0);

  // (a|b) as one row vector of length 2n.
  std::vector<int> symplectic_row() const;

  bool is_identity_word() const;  // a = b = 0, any phase
  bool operator==(const PauliElement& other) const = default;
};

// Group product with phase tracking: since Z X = w X Z per coordinate,
// M(a|b) M(c|d) = w^{<b,c>} M(a+c|b+d).
PauliElement pauli_mul(const PauliElement& g, const PauliElement& h);
PauliElement pauli_pow(const PauliElement& g, int t);

// <(a|b),(c|d)>_s = <a,d> - <b,c> mod p. Vectors are full (a|b) rows of even
// length; throws DimensionMismatch on length or p disagreement.
int symplectic_product(const std::vector<int>& u, const std::vector<int>& v,
                       int p);

// Parses either a Pauli word ("XXIZ", powers as "X2" or "X^2" for p > 2; one
// letter per qudit) or a symplectic row "a|b" (digit string, or
// comma-separated for p > 7). Result always has phase_exp = 0.
PauliElement pauli_parse(const std::string& text, int p);

std::string to_string(const PauliElement& g);

// Rows spanning C^perp = {x : <c,x>_s = 0 for all c in C}; dim = 2n - dim C.
GfMatrix symplectic_dual(const GfMatrix& c);

// Shortening at the index set J (1-based qudit indices): the subcode of C
// vanishing on coordinates {i, n+i : i in J}, with those coordinates deleted.
// Returns a canonical (RREF) basis over F_p^{2(n-|J|)}.
GfMatrix shorten(const GfMatrix& c, const std::vector<int>& J);

struct StabilizerCode {
  int p = 2;
  int n = 0;
  std::vector<PauliElement> generators;  // independent, phase_exp = 0
  GfMatrix f_matrix;                     // one row (a|b) per generator
  int k = 0;                             // logical qudits: n - rank(f_matrix)
};

// Checks the stabilizer invariants: uniform p/n, pairwise commutation, the
// +1 phase convention (generator phases zero; for p = 2 additionally
// <a,b> even so that no generator squares to -I), and that no dependent
// combination produces w^i * identity with i != 0. Dependent-but-consistent
// generators are dropped; a note per drop is appended to `warnings`.
StabilizerCode validate_stabilizer(const std::vector<PauliElement>& gens,
                                   std::vector<std::string>* warnings = nullptr);

// Builds a stabilizer directly from rows of a self-orthogonal f-matrix, all
// generator phases zero. Zero rows are dropped; the empty matrix yields the
// trivial stabilizer with k = n.
StabilizerCode stabilizer_from_f_matrix(int p, int n, const GfMatrix& rows);

// The shortened stabilizer at J: the subgroup of S supported off the J
// coordinates, restricted to the remaining registers. Phases are inherited
// from the actual group elements (a recombination of phase-free generators
// can carry a sign), so this is not the same as rebuilding phase-free
// generators from shorten(f_matrix, J).
StabilizerCode shortened_stabilizer(const StabilizerCode& code,
                                    const std::vector<int>& J);

// Stabilizer file format: first content line "p=<prime> n=<count>", then one
// generator per line (either Pauli-word or "a|b" form); '#' starts a comment.
StabilizerCode parse_stabilizer_text(const std::string& text,
                                     std::vector<std::string>* warnings = nullptr);
StabilizerCode read_stabilizer_file(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);

// Sorted ascending, deduplicated, validated against [1, n].
std::vector<int> normalize_index_set(const std::vector<int>& J, int n);
std::vector<int> complement_of(const std::vector<int>& J, int n);

}  // namespace qss
