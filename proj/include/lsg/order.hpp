#pragma once

#include <string>
#include <vector>

#include "lsg/pauli.hpp"
#include "lsg/picture.hpp"
#include "lsg/system.hpp"

namespace lsg {

/// Extended natural number for order arithmetic; any positive integer divides
/// infinity.
struct ExtNat {
  bool infinite = false;
  Int v = 0; // >= 0 when finite

  static ExtNat inf() { return {true, 0}; }
  static ExtNat of(Int x) {
    if (x < 0) throw std::invalid_argument("ExtNat: negative value");
    return {false, std::move(x)};
  }
  static ExtNat of_modulus(const Modulus &p) {
    return p.is_finite() ? of(p.value()) : inf();
  }

  bool divides(const ExtNat &other) const {
    if (infinite) return other.infinite;
    if (other.infinite) return true;
    if (v == 0) return other.v == 0;
    return other.v % v == 0;
  }

  std::string str() const { return infinite ? "inf" : v.str(); }

  friend bool operator==(const ExtNat &a, const ExtNat &b) {
    return a.infinite == b.infinite && (a.infinite || a.v == b.v);
  }
  friend ExtNat gcd(const ExtNat &a, const ExtNat &b);
  friend ExtNat lcm(const ExtNat &a, const ExtNat &b);
  friend ExtNat mul(const ExtNat &a, const ExtNat &b);
};

enum class OrderKind { Divides, AtLeast, Exact };

/// A provenance-carrying statement about the order of J in the solution group
/// of (family, b_tag) over Z_p.
struct OrderFact {
  OrderKind kind = OrderKind::Divides;
  ExtNat n;
  std::string family; // tag for the fixed matrix A
  std::string b_tag;  //  "*" matches every colouring
  Modulus p = Modulus::finite(2);
  std::string provenance;

  std::string str() const;
};

/// J^phase = 1 bounds the order: DIVIDES(gcd(phase, p)).
OrderFact upper_from_picture(const Certificate &cert, const std::string &family,
                             const std::string &b_tag);

/// Order exactly p for every colouring when the degree/girth hypothesis holds.
/// Throws when the hypothesis fails.
OrderFact exact_from_theorem(const IntMatrix &a, const Modulus &p, const std::string &family);

/// A verified operator solution pins the order to exactly p.
OrderFact lower_from_operator_solution(const OperatorSolutionReport &report,
                                       const std::string &family, const std::string &b_tag);

/// Transfer along the homomorphism sending x_j to x_j^lambda and J to J^delta,
/// available when q | p*gcd(lambda, delta) and delta*alpha == beta*lambda in
/// Z_q.  Sound direction only: the image order divides the source order.
OrderFact hom_transfer(const Modulus &p, const Modulus &q, const Int &alpha, const Int &beta,
                       const Int &lambda, const Int &delta, const OrderFact &known,
                       const std::string &target_b_tag);

/// Coprime moduli with exact orders combine multiplicatively.
OrderFact crt_combine(const Int &r, const Int &s, const OrderFact &fr, const OrderFact &fs);

enum class BScaleMode { UnitScale, MultipleLift, ZeroB };

/// Colouring arithmetic: unit rescale (t a non-zero-divisor mod p), lift from
/// (p, b) to (tp, tb), and the zero colouring.
OrderFact b_scale_facts(BScaleMode mode, const Int &t, const Modulus &p, const OrderFact &known);

struct DeduceContext {
  bool connected_incidence = false;    // family is I(G) with G connected
  std::map<std::string, Int> b_totals; // |b| per colouring tag
};

struct Deduction {
  std::vector<OrderFact> facts; // closure, deterministic order
  bool consistent = true;
  std::vector<std::string> notes;
};

/// Fixed point of: gcd of upper bounds, max of lower bounds, EXACT when a
/// single divisor survives, CRT splits/merges across coprime factorisations,
/// and colouring transfer for connected incidence systems.  All facts must
/// reference one family.
Deduction deduce(const std::vector<OrderFact> &facts, const DeduceContext &ctx = {});

/// Order of the image of J in the abelianisation, from the Smith form of the
/// relation lattice.  A sound divisor of the order of J; the independent
/// cross-check for derived facts.
ExtNat abelian_order_of_j(const LinearSystem &sys);

std::string to_string(OrderKind k);

} // namespace lsg
