#include "lsg/order.hpp"

#include <algorithm>
#include <sstream>

#include "lsg/hypergraph.hpp"

namespace lsg {

ExtNat gcd(const ExtNat &a, const ExtNat &b) {
  if (a.infinite) return b;
  if (b.infinite) return a;
  return ExtNat::of(egcd(a.v, b.v).g);
}

ExtNat lcm(const ExtNat &a, const ExtNat &b) {
  if (a.infinite || b.infinite) return ExtNat::inf();
  if (a.v == 0 || b.v == 0) return ExtNat::of(0);
  return ExtNat::of(a.v / egcd(a.v, b.v).g * b.v);
}

ExtNat mul(const ExtNat &a, const ExtNat &b) {
  if (a.infinite || b.infinite) return ExtNat::inf();
  return ExtNat::of(a.v * b.v);
}

std::string to_string(OrderKind k) {
  switch (k) {
  case OrderKind::Divides: return "DIVIDES";
  case OrderKind::AtLeast: return "AT_LEAST";
  case OrderKind::Exact: return "EXACT";
  }
  return "?";
}

std::string OrderFact::str() const {
  std::ostringstream os;
  os << to_string(kind) << '(' << n.str() << ") for (" << family << ", " << b_tag << ", p="
     << p.str() << ')';
  if (!provenance.empty()) os << " [" << provenance << ']';
  return os.str();
}

OrderFact upper_from_picture(const Certificate &cert, const std::string &family,
                             const std::string &b_tag) {
  OrderFact f;
  f.kind = OrderKind::Divides;
  f.family = family;
  f.b_tag = b_tag;
  f.p = cert.p;
  if (cert.p.is_finite()) {
    f.n = ExtNat::of(egcd(cert.certified_phase, cert.p.value()).g);
  } else {
    Int ph = cert.certified_phase < 0 ? -cert.certified_phase : cert.certified_phase;
    f.n = ph == 0 ? ExtNat::inf() : ExtNat::of(ph); // phase 0 over Z carries no information
  }
  std::ostringstream os;
  os << "picture " << std::hex << cert.picture_hash << " with phase " << std::dec
     << cert.certified_phase;
  f.provenance = os.str();
  return f;
}

OrderFact exact_from_theorem(const IntMatrix &a, const Modulus &p, const std::string &family) {
  TheoremHypothesis hyp = theorem_hypothesis(hypergraph_from_matrix(a));
  if (hyp == TheoremHypothesis::No)
    throw std::invalid_argument("exact_from_theorem: degree/girth hypothesis not met");
  OrderFact f;
  f.kind = OrderKind::Exact;
  f.n = ExtNat::of_modulus(p);
  f.family = family;
  f.b_tag = "*";
  f.p = p;
  f.provenance = "degree/girth theorem (" + to_string(hyp) + ")";
  return f;
}

OrderFact lower_from_operator_solution(const OperatorSolutionReport &report,
                                       const std::string &family, const std::string &b_tag) {
  if (!report.passed)
    throw std::invalid_argument("lower_from_operator_solution: report did not pass");
  OrderFact f;
  f.kind = OrderKind::Exact;
  f.n = ExtNat::of_modulus(report.p);
  f.family = family;
  f.b_tag = b_tag;
  f.p = report.p;
  std::ostringstream os;
  os << "operator solution " << std::hex << report.fingerprint;
  f.provenance = os.str();
  return f;
}

OrderFact hom_transfer(const Modulus &p, const Modulus &q, const Int &alpha, const Int &beta,
                       const Int &lambda, const Int &delta, const OrderFact &known,
                       const std::string &target_b_tag) {
  if (known.p != p) throw std::invalid_argument("hom_transfer: fact modulus does not match p");

  Int g = egcd(lambda, delta).g;
  bool cond1;
  if (p.is_finite()) {
    Int pg = p.value() * g;
    cond1 = q.is_finite() ? (pg % q.value() == 0) : false;
  } else {
    cond1 = q.is_finite() || g == 0; // p*gcd is infinite (or zero), divisible either way
  }
  if (!cond1) throw std::invalid_argument("hom_transfer: q does not divide p*gcd(lambda, delta)");
  Int lhs = delta * alpha - beta * lambda;
  bool cond2 = q.is_finite() ? (lhs % q.value() == 0) : (lhs == 0);
  if (!cond2) throw std::invalid_argument("hom_transfer: delta*alpha != beta*lambda mod q");

  // J maps to J^delta, so ord(J_target)/gcd(ord, delta) divides the known
  // bound n; hence ord divides n*delta (and q).
  ExtNat info = ExtNat::inf();
  if (delta != 0 && known.kind != OrderKind::AtLeast && !known.n.infinite)
    info = ExtNat::of(known.n.v * (delta < 0 ? -delta : delta));

  OrderFact f;
  f.kind = OrderKind::Divides;
  f.n = gcd(info, ExtNat::of_modulus(q));
  f.family = known.family;
  f.b_tag = target_b_tag;
  f.p = q;
  f.provenance = "hom from (" + known.b_tag + ", p=" + p.str() + "): " + known.str();
  return f;
}

OrderFact crt_combine(const Int &r, const Int &s, const OrderFact &fr, const OrderFact &fs) {
  if (egcd(r, s).g != 1) throw std::invalid_argument("crt_combine: moduli are not coprime");
  if (r < 2 || s < 2) throw std::invalid_argument("crt_combine: moduli must be >= 2");
  if (fr.kind != OrderKind::Exact || fs.kind != OrderKind::Exact)
    throw std::invalid_argument("crt_combine: both facts must be exact");
  if (!(fr.p == Modulus::finite(r)) || !(fs.p == Modulus::finite(s)))
    throw std::invalid_argument("crt_combine: fact moduli do not match r, s");
  if (fr.family != fs.family || fr.b_tag != fs.b_tag)
    throw std::invalid_argument("crt_combine: facts reference different systems");

  OrderFact f;
  f.kind = OrderKind::Exact;
  f.n = mul(fr.n, fs.n);
  f.family = fr.family;
  f.b_tag = fr.b_tag;
  f.p = Modulus::finite(r * s);
  f.provenance = "crt of p=" + r.str() + " and p=" + s.str();
  return f;
}

OrderFact b_scale_facts(BScaleMode mode, const Int &t, const Modulus &p, const OrderFact &known) {
  if (!(known.p == p)) throw std::invalid_argument("b_scale_facts: fact modulus does not match p");
  OrderFact f = known;
  switch (mode) {
  case BScaleMode::UnitScale: {
    if (p.is_finite()) {
      if (egcd(t, p.value()).g != 1)
        throw std::invalid_argument("b_scale_facts: t must be a unit mod finite p");
    } else {
      if (t == 0) throw std::invalid_argument("b_scale_facts: t must be nonzero over Z");
      if (!(known.kind == OrderKind::Exact && known.n.infinite))
        throw std::invalid_argument("b_scale_facts: over Z only the infinite-order fact rescales");
    }
    f.b_tag = t.str() + "*" + known.b_tag;
    f.provenance = "unit rescale t=" + t.str() + " of: " + known.str();
    return f;
  }
  case BScaleMode::MultipleLift: {
    if (!p.is_finite()) throw std::invalid_argument("b_scale_facts: lift needs finite p");
    if (t < 1) throw std::invalid_argument("b_scale_facts: lift needs t >= 1");
    if (known.kind != OrderKind::Exact || known.n.infinite || known.n.v != p.value())
      throw std::invalid_argument("b_scale_facts: lift needs the exact fact |J| = p");
    f.kind = OrderKind::Exact;
    f.n = ExtNat::of(t * p.value());
    f.p = Modulus::finite(t * p.value());
    f.b_tag = t.str() + "*" + known.b_tag;
    f.provenance = "lift t=" + t.str() + " of: " + known.str();
    return f;
  }
  case BScaleMode::ZeroB: {
    f.kind = OrderKind::Exact;
    f.n = ExtNat::of_modulus(p);
    f.p = p;
    f.b_tag = "0";
    f.provenance = "zero colouring";
    return f;
  }
  }
  throw std::invalid_argument("b_scale_facts: unknown mode");
}

namespace {

struct KeyState {
  Modulus p = Modulus::finite(2);
  ExtNat divides = ExtNat::inf();
  ExtNat at_least = ExtNat::of(1);
  std::vector<std::string> sources;

  bool pinned() const {
    return (!divides.infinite && divides == at_least) || (divides.infinite && at_least.infinite);
  }
};

std::vector<Int> divisors(const Int &n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

ExtNat order_in_zp(const Int &k, const Modulus &p) {
  if (p.is_finite()) {
    Int kk = p.reduce(k);
    return ExtNat::of(p.value() / egcd(kk, p.value()).g);
  }
  return k == 0 ? ExtNat::of(1) : ExtNat::inf();
}

} // namespace

Deduction deduce(const std::vector<OrderFact> &facts, const DeduceContext &ctx) {
  Deduction out;
  if (facts.empty()) return out;
  const std::string family = facts[0].family;

  using Key = std::pair<std::string, std::string>; // (b_tag, p string)
  std::map<Key, KeyState> state;

  auto touch = [&](const std::string &b_tag, const Modulus &p) -> KeyState & {
    Key key{b_tag, p.str()};
    auto it = state.find(key);
    if (it == state.end()) {
      KeyState fresh;
      fresh.p = p;
      fresh.divides = ExtNat::of_modulus(p); // |J| divides p when finite
      it = state.emplace(key, std::move(fresh)).first;
    }
    return it->second;
  };

  auto apply = [&](KeyState &st, const OrderFact &f) -> bool {
    ExtNat d = st.divides, al = st.at_least;
    if (f.kind == OrderKind::Divides || f.kind == OrderKind::Exact) d = gcd(d, f.n);
    if (f.kind == OrderKind::AtLeast || f.kind == OrderKind::Exact) {
      if (f.n.infinite)
        al = ExtNat::inf();
      else if (!al.infinite && al.v < f.n.v)
        al = f.n;
    }
    bool changed = !(d == st.divides) || !(al == st.at_least);
    st.divides = d;
    st.at_least = al;
    if (changed && !f.provenance.empty()) st.sources.push_back(f.provenance);
    return changed;
  };

  for (const OrderFact &f : facts) {
    if (f.family != family)
      throw std::invalid_argument("deduce: facts reference different families");
    apply(touch(f.b_tag, f.p), f);
  }

  // Product keys for coprime pairs of present finite moduli (one round is
  // enough; new products only combine existing moduli).
  {
    std::vector<std::pair<std::string, Modulus>> keys;
    for (const auto &[key, st] : state) keys.push_back({key.first, st.p});
    for (const auto &[b1, p1] : keys)
      for (const auto &[b2, p2] : keys)
        if (b1 == b2 && p1.is_finite() && p2.is_finite() && p1.value() < p2.value() &&
            egcd(p1.value(), p2.value()).g == 1)
          touch(b1, Modulus::finite(p1.value() * p2.value()));
  }

  bool changed = true;
  int guard = 0;
  while (changed && ++guard < 64) {
    changed = false;

    // Pin EXACT when a single divisor candidate remains.
    for (auto &[key, st] : state) {
      if (st.divides.infinite) {
        if (st.at_least.infinite) continue; // |J| infinite, pinned
        continue;
      }
      if (st.at_least.infinite) {
        out.consistent = false;
        out.notes.push_back("inconsistent at (" + key.first + ", p=" + key.second +
                            "): infinite lower bound with finite upper bound");
        continue;
      }
      std::vector<Int> cands;
      for (const Int &d : divisors(st.divides.v))
        if (d >= st.at_least.v) cands.push_back(d);
      if (cands.empty()) {
        out.consistent = false;
        out.notes.push_back("inconsistent at (" + key.first + ", p=" + key.second + "): no order" +
                            " divides " + st.divides.v.str() + " and reaches " +
                            st.at_least.v.str());
      } else if (cands.size() == 1 && !(st.at_least == st.divides)) {
        st.at_least = st.divides = ExtNat::of(cands.front());
        changed = true;
      }
    }
    if (!out.consistent) break;

    // CRT merges and splits between keys over the same colouring.
    std::vector<Key> keys;
    for (const auto &[key, st] : state) keys.push_back(key);
    for (const auto &k1 : keys)
      for (const auto &k2 : keys) {
        if (k1.first != k2.first) continue;
        KeyState &s1 = state.at(k1), &s2 = state.at(k2);
        if (!s1.p.is_finite() || !s2.p.is_finite()) continue;
        const Int &p1 = s1.p.value(), &p2 = s2.p.value();
        if (p1 >= p2 || egcd(p1, p2).g != 1) continue;
        const Int prod = p1 * p2;
        auto target = state.find(Key{k1.first, prod.str()});
        if (target == state.end()) continue;
        KeyState &st = target->second;

        if (s1.pinned() && s2.pinned() && !s1.divides.infinite && !s2.divides.infinite) {
          OrderFact f;
          f.kind = OrderKind::Exact;
          f.n = ExtNat::of(s1.divides.v * s2.divides.v);
          f.provenance = "crt merge " + k1.second + " x " + k2.second;
          changed |= apply(st, f);
        }
        // Upper bounds travel both ways along the identity/power maps.
        for (auto *side : {&s1, &s2}) {
          const Int &pr = side->p.value();
          const Int other = prod / pr;
          if (!side->divides.infinite) {
            OrderFact up;
            up.kind = OrderKind::Divides;
            up.n = ExtNat::of(side->divides.v * other);
            up.provenance = "crt upper from p=" + pr.str();
            changed |= apply(st, up);
          }
          if (!st.divides.infinite) {
            OrderFact down;
            down.kind = OrderKind::Divides;
            down.n = gcd(st.divides, ExtNat::of(pr));
            down.provenance = "crt restriction from p=" + prod.str();
            changed |= apply(*side, down);
          }
        }
      }

    // Colouring transfer for connected incidence systems.
    if (ctx.connected_incidence) {
      for (const auto &k1 : keys)
        for (const auto &k2 : keys) {
          if (k1 == k2 || k1.second != k2.second) continue;
          auto t1 = ctx.b_totals.find(k1.first), t2 = ctx.b_totals.find(k2.first);
          if (t1 == ctx.b_totals.end() || t2 == ctx.b_totals.end()) continue;
          KeyState &s1 = state.at(k1), &s2 = state.at(k2);
          const Modulus &p = s1.p;
          if (p.reduce(t1->second) == p.reduce(t2->second)) {
            // equal totals: isomorphic groups, full transfer
            OrderFact d;
            d.kind = OrderKind::Divides;
            d.n = s1.divides;
            d.provenance = "colouring transfer from " + k1.first;
            OrderFact al;
            al.kind = OrderKind::AtLeast;
            al.n = s1.at_least;
            al.provenance = d.provenance;
            changed |= apply(s2, d);
            changed |= apply(s2, al);
          } else if (order_in_zp(t1->second, p) == order_in_zp(t2->second, p)) {
            // equal orders: the full-order property transfers
            if (s1.pinned() && s1.divides == ExtNat::of_modulus(p)) {
              OrderFact f;
              f.kind = OrderKind::Exact;
              f.n = s1.divides;
              f.provenance = "colouring-order transfer from " + k1.first;
              changed |= apply(s2, f);
            }
          }
        }
    }
  }

  for (const auto &[key, st] : state) {
    OrderFact f;
    f.family = family;
    f.b_tag = key.first;
    f.p = st.p;
    std::string prov;
    for (const auto &s : st.sources) prov += (prov.empty() ? "" : "; ") + s;
    f.provenance = prov;
    if (st.pinned()) {
      f.kind = OrderKind::Exact;
      f.n = st.divides;
      out.facts.push_back(f);
    } else {
      f.kind = OrderKind::Divides;
      f.n = st.divides;
      out.facts.push_back(f);
      if (!st.at_least.infinite && st.at_least.v > 1) {
        f.kind = OrderKind::AtLeast;
        f.n = st.at_least;
        out.facts.push_back(f);
      }
    }
  }
  return out;
}

ExtNat abelian_order_of_j(const LinearSystem &sys) {
  sys.check_shape();
  const std::size_t n = sys.cols();
  const std::size_t jcol = n; // column index of J among generators (x_1..x_n, J)
  const bool finite = sys.p.is_finite();
  const std::size_t rows = sys.rows() + (finite ? n + 1 : 0);

  IntMatrix rel(rows, n + 1);
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) rel.at(i, j) = sys.a.at(i, j);
    rel.at(i, jcol) = -sys.b[i];
  }
  if (finite)
    for (std::size_t j = 0; j <= n; ++j) rel.at(sys.rows() + j, j) = sys.p.value();

  SmithNormalForm snf = smith_normal_form(rel);
  // t * e_J lies in the row lattice iff z D = t (e_J V) has an integer
  // solution z; collect the divisibility constraints per column.
  ExtNat order = ExtNat::of(1);
  for (std::size_t j = 0; j <= n; ++j) {
    const Int &c = snf.v.at(jcol, j);
    Int d = j < rows ? snf.d.at(j, j) : Int(0);
    if (d == 0) {
      if (c != 0) return ExtNat::inf();
      continue;
    }
    Int step = d / egcd(d, c).g;
    order = lcm(order, ExtNat::of(step));
  }
  return order;
}

} // namespace lsg
