#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsg/system.hpp"

namespace lsg {

/// Monomial unitary on C^dim, exactly represented: basis vector i maps to
/// omega_q^{phase[i]} times basis vector perm[i], where omega_q is the
/// primitive q-th root of unity.  No floating point anywhere.
struct MonomialOperator {
  long dim = 1;
  long q = 1;
  std::vector<long> perm;  // bijection on [dim]
  std::vector<long> phase; // exponents mod q

  static MonomialOperator identity(long dim, long q);

  friend bool operator==(const MonomialOperator &a, const MonomialOperator &b) {
    return a.dim == b.dim && a.q == b.q && a.perm == b.perm && a.phase == b.phase;
  }

  void check() const; // perm bijective, sizes match, phases canonical
};

/// Clock and shift pair on C^d with phases in Z_q (d must divide q):
/// X shifts basis vectors cyclically, Z multiplies vector i by omega_d^i.
/// They satisfy Z X = omega_d X Z exactly.
std::pair<MonomialOperator, MonomialOperator> weyl_generators(long d, long q);

MonomialOperator multiply(const MonomialOperator &a, const MonomialOperator &b);
MonomialOperator tensor(const MonomialOperator &a, const MonomialOperator &b);
MonomialOperator inverse(const MonomialOperator &a);
MonomialOperator pow(const MonomialOperator &a, const Int &e);

/// Exponent j with a == omega_q^j * identity, when a is scalar.
std::optional<long> is_scalar(const MonomialOperator &a);

/// Candidate operator solution: one monomial operator per variable, shared
/// dimension and phase modulus q with p | q.
struct OperatorAssignment {
  LinearSystem system;
  long dim = 1;
  long q = 1;
  std::map<std::size_t, MonomialOperator> ops; // column -> operator
};

struct OperatorSolutionReport {
  bool passed = false;
  std::vector<std::string> failures;
  std::string system_label;
  Modulus p = Modulus::finite(2);
  std::uint64_t fingerprint = 0; // set when passed
};

/// Exact check of the three operator-solution conditions: commutation within
/// each row first, then row products against omega_p^{b_i}, then order p.
OperatorSolutionReport verify_operator_solution(const OperatorAssignment &a);

} // namespace lsg
