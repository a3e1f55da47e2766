#include "lsg/pauli.hpp"

#include <numeric>
#include <sstream>

namespace lsg {

MonomialOperator MonomialOperator::identity(long dim, long q) {
  MonomialOperator m;
  m.dim = dim;
  m.q = q;
  m.perm.resize(dim);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  m.phase.assign(dim, 0);
  return m;
}

void MonomialOperator::check() const {
  if (dim < 1 || q < 1) throw std::invalid_argument("MonomialOperator: bad dimensions");
  if (perm.size() != static_cast<std::size_t>(dim) || phase.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("MonomialOperator: table sizes do not match dim");
  std::vector<bool> hit(dim, false);
  for (long p : perm) {
    if (p < 0 || p >= dim || hit[p])
      throw std::invalid_argument("MonomialOperator: perm is not a bijection");
    hit[p] = true;
  }
  for (long ph : phase)
    if (ph < 0 || ph >= q) throw std::invalid_argument("MonomialOperator: phase not canonical");
}

std::pair<MonomialOperator, MonomialOperator> weyl_generators(long d, long q) {
  if (d < 2) throw std::invalid_argument("weyl_generators: d must be >= 2");
  if (q % d != 0) throw std::invalid_argument("weyl_generators: d must divide q");
  MonomialOperator x = MonomialOperator::identity(d, q);
  MonomialOperator z = MonomialOperator::identity(d, q);
  for (long i = 0; i < d; ++i) {
    x.perm[i] = (i + 1) % d;
    z.phase[i] = (q / d) * i % q;
  }
  return {x, z};
}

MonomialOperator multiply(const MonomialOperator &a, const MonomialOperator &b) {
  if (a.dim != b.dim || a.q != b.q)
    throw std::invalid_argument("multiply: operator dim/q mismatch");
  MonomialOperator c;
  c.dim = a.dim;
  c.q = a.q;
  c.perm.resize(a.dim);
  c.phase.resize(a.dim);
  for (long i = 0; i < a.dim; ++i) {
    long mid = b.perm[i];
    c.perm[i] = a.perm[mid];
    c.phase[i] = (b.phase[i] + a.phase[mid]) % a.q;
  }
  return c;
}

MonomialOperator tensor(const MonomialOperator &a, const MonomialOperator &b) {
  if (a.q != b.q) throw std::invalid_argument("tensor: phase modulus mismatch");
  MonomialOperator c;
  c.dim = a.dim * b.dim;
  c.q = a.q;
  c.perm.resize(c.dim);
  c.phase.resize(c.dim);
  for (long i = 0; i < a.dim; ++i)
    for (long j = 0; j < b.dim; ++j) {
      c.perm[i * b.dim + j] = a.perm[i] * b.dim + b.perm[j];
      c.phase[i * b.dim + j] = (a.phase[i] + b.phase[j]) % a.q;
    }
  return c;
}

MonomialOperator inverse(const MonomialOperator &a) {
  MonomialOperator c;
  c.dim = a.dim;
  c.q = a.q;
  c.perm.resize(a.dim);
  c.phase.resize(a.dim);
  for (long i = 0; i < a.dim; ++i) {
    c.perm[a.perm[i]] = i;
    c.phase[a.perm[i]] = (a.q - a.phase[i]) % a.q;
  }
  return c;
}

MonomialOperator pow(const MonomialOperator &a, const Int &e) {
  if (e < 0) return pow(inverse(a), -e);
  MonomialOperator acc = MonomialOperator::identity(a.dim, a.q);
  MonomialOperator base = a;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<long> is_scalar(const MonomialOperator &a) {
  for (long i = 0; i < a.dim; ++i)
    if (a.perm[i] != i || a.phase[i] != a.phase[0]) return std::nullopt;
  return a.phase[0];
}

OperatorSolutionReport verify_operator_solution(const OperatorAssignment &assignment) {
  OperatorSolutionReport report;
  const LinearSystem &sys = assignment.system;
  sys.check_shape();
  report.system_label = sys.name.empty() ? "system" : sys.name;
  report.p = sys.p;

  auto fail = [&report](const std::string &msg) { report.failures.push_back(msg); };

  if (!sys.p.is_finite()) {
    fail("operator verification requires a finite modulus");
    return report;
  }
  const Int &p = sys.p.value();
  if (p > assignment.q || assignment.q % p != 0) {
    fail("phase modulus q must be a multiple of p");
    return report;
  }
  long pl = static_cast<long>(p);

  for (std::size_t j = 0; j < sys.cols(); ++j) {
    auto it = assignment.ops.find(j);
    if (it == assignment.ops.end()) {
      fail("variable " + sys.col_label(j) + " has no operator");
      continue;
    }
    it->second.check();
    if (it->second.dim != assignment.dim || it->second.q != assignment.q)
      fail("variable " + sys.col_label(j) + " has mismatched dim or q");
  }
  if (!report.failures.empty()) return report;

  // Commutation within each row comes first; the row products below read
  // operators in ascending column order, which condition (3) makes canonical.
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    auto support = sys.support(i);
    for (std::size_t x = 0; x < support.size(); ++x)
      for (std::size_t y = x + 1; y < support.size(); ++y) {
        const MonomialOperator &a = assignment.ops.at(support[x]);
        const MonomialOperator &b = assignment.ops.at(support[y]);
        if (!(multiply(a, b) == multiply(b, a)))
          fail("row " + sys.row_label(i) + ": operators " + sys.col_label(support[x]) + " and " +
               sys.col_label(support[y]) + " do not commute");
      }
  }

  for (std::size_t i = 0; i < sys.rows(); ++i) {
    MonomialOperator prod = MonomialOperator::identity(assignment.dim, assignment.q);
    for (std::size_t j : sys.support(i))
      prod = multiply(prod, pow(assignment.ops.at(j), sys.a.at(i, j)));
    auto scalar = is_scalar(prod);
    long want = static_cast<long>(sys.p.reduce(sys.b[i])) * (assignment.q / pl) % assignment.q;
    if (!scalar)
      fail("row " + sys.row_label(i) + ": product is not scalar");
    else if (*scalar != want)
      fail("row " + sys.row_label(i) + ": product phase " + std::to_string(*scalar) +
           " != " + std::to_string(want));
  }

  for (std::size_t j = 0; j < sys.cols(); ++j) {
    MonomialOperator pj = pow(assignment.ops.at(j), p);
    if (!(pj == MonomialOperator::identity(assignment.dim, assignment.q)))
      fail("variable " + sys.col_label(j) + ": operator order does not divide p");
  }

  report.passed = report.failures.empty();
  if (report.passed) {
    std::ostringstream os;
    os << report.system_label << '|' << assignment.dim << '|' << assignment.q << '|';
    for (const auto &[j, op] : assignment.ops) {
      os << j << ':';
      for (long v : op.perm) os << v << ',';
      os << ';';
      for (long v : op.phase) os << v << ',';
      os << '|';
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : os.str()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    report.fingerprint = h;
  }
  return report;
}

} // namespace lsg
