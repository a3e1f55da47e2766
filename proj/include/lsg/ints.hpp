#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lsg {

using Int = boost::multiprecision::cpp_int;

/// Ring modulus: a finite integer p >= 2, or infinite (arithmetic over Z).
class Modulus {
public:
  static Modulus finite(Int p) {
    if (p < 2) throw std::invalid_argument("Modulus: finite value must be >= 2");
    Modulus m;
    m.p_ = std::move(p);
    return m;
  }
  static Modulus inf() { return Modulus{}; }

  bool is_finite() const { return p_.has_value(); }
  bool is_inf() const { return !p_.has_value(); }

  const Int &value() const {
    if (!p_) throw std::logic_error("Modulus: value() on infinite modulus");
    return *p_;
  }

  /// Canonical representative: in [0, p) for finite p, identity over Z.
  Int reduce(const Int &x) const {
    if (!p_) return x;
    Int r = x % *p_;
    if (r < 0) r += *p_;
    return r;
  }

  bool divides(const Int &x) const { return reduce(x) == 0; }

  std::string str() const { return p_ ? p_->str() : "inf"; }

  friend bool operator==(const Modulus &a, const Modulus &b) { return a.p_ == b.p_; }
  friend bool operator!=(const Modulus &a, const Modulus &b) { return !(a == b); }

private:
  Modulus() = default;
  std::optional<Int> p_;
};

} // namespace lsg
