#include "cpt/zmod.hpp"

#include <numeric>
#include <sstream>

namespace cpt {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t n) {
  // Extended Euclid; works on the canonical representative.
  std::int64_t a = mod_reduce(v, n), b = n;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw std::domain_error("mod_inverse: not a unit");
  return mod_reduce(x0, n);
}

bool Residue::is_unit() const { return std::gcd(v_, m_.value()) == 1; }

Residue Residue::inverse() const { return {mod_inverse(v_, mod()), m_}; }

DualNumber DualNumber::inverse() const {
  Residue ai = a_.inverse();
  return {ai, -(ai * ai * b_)};
}

AffineMap AffineMap::invert() const {
  Residue vi = v_.inverse();
  return {-(vi * u_), vi};
}

DualAffineMap DualAffineMap::invert() const {
  DualNumber wi = w_.inverse();
  return {-(wi * t_), wi};
}

std::string DualNumber::to_string() const {
  std::ostringstream out;
  if (b_.value() == 0) {
    out << a_.value();
  } else if (a_.value() == 0) {
    out << "e." << b_.value();
  } else {
    out << a_.value() << "+e." << b_.value();
  }
  return out.str();
}

std::string AffineMap::to_string() const {
  std::ostringstream out;
  if (u_.value() != 0) {
    out << "e^" << u_.value();
    if (v_.value() != 1) out << "." << v_.value();
  } else {
    out << v_.value();
  }
  return out.str();
}

std::string DualAffineMap::to_string() const {
  std::ostringstream out;
  bool has_translation = t_.a().value() != 0 || t_.b().value() != 0;
  if (has_translation) out << "e^(" << t_.to_string() << ").";
  if (w_.b().value() == 0) {
    out << w_.a().value();
  } else {
    out << "(" << w_.to_string() << ")";
  }
  return out.str();
}

}  // namespace cpt
