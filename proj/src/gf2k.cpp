#include "ncng/gf2k.hpp"

#include "ncng/errors.hpp"

#include <string>

namespace ncng {

namespace {

std::uint32_t default_modulus(unsigned degree) {
  switch (degree) {
    case 3: return 0b1011;        // x^3 + x + 1
    case 5: return 0b100101;      // x^5 + x^2 + 1
    case 7: return 0b10000011;    // x^7 + x + 1
    default: throw InvalidSpec("no fixed reduction polynomial for degree " + std::to_string(degree));
  }
}

// Carry-less remainder of a modulo m over GF(2).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = 63 - __builtin_clzll(m);
  while (a != 0) {
    const int da = 63 - __builtin_clzll(a);
    if (da < dm) break;
    a ^= m << (da - dm);
  }
  return a;
}

bool is_irreducible(std::uint32_t modulus, unsigned degree) {
  for (std::uint64_t d = 2; d < (1ull << (degree / 2 + 1)); ++d) {
    if (poly_mod(modulus, d) == 0) return false;
  }
  return true;
}

}  // namespace

GF2kField::GF2kField(unsigned degree) : GF2kField(degree, default_modulus(degree)) {}

GF2kField::GF2kField(unsigned degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > 16) throw InvalidSpec("field degree out of range");
  if ((modulus >> degree) != 1u) throw InvalidSpec("modulus degree does not match field degree");
  if (!is_irreducible(modulus, degree)) throw InvalidSpec("reduction polynomial is reducible");
}

GF2kField::Element GF2kField::mul(Element a, Element b) const {
  Element result = 0;
  while (b != 0) {
    if (b & 1u) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> degree_) a ^= modulus_;
  }
  return result;
}

GF2kField::Element GF2kField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

GF2kField::Element GF2kField::inv(Element a) const {
  if (a == 0) throw InvalidSpec("zero has no multiplicative inverse");
  return pow(a, size() - 2);
}

std::uint64_t GF2kField::multiplicative_order(Element a) const {
  if (a == 0) return 0;
  std::uint64_t k = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

GF2kField::Element GF2kField::primitive_element() const {
  for (Element a = 1; a < size(); ++a) {
    if (multiplicative_order(a) == size() - 1) return a;
  }
  return 1;
}

GF2kField::Element gf_theta(const GF2kField& field, GF2kField::Element a) {
  const unsigned k = field.degree();
  if (k % 2 == 0 || k < 3) throw EvenDegree(k);
  return field.pow(a, std::uint64_t{1} << ((k + 1) / 2));
}

SuzukiPoint suzuki_mul(const GF2kField& field, SuzukiPoint p, SuzukiPoint q) {
  return {p.alpha ^ q.alpha, field.mul(p.alpha, gf_theta(field, q.alpha)) ^ p.beta ^ q.beta};
}

SuzukiPoint suzuki_inverse(const GF2kField& field, SuzukiPoint p) {
  return {p.alpha, field.mul(p.alpha, gf_theta(field, p.alpha)) ^ p.beta};
}

SuzukiPoint suzuki_torus_action(const GF2kField& field, GF2kField::Element kappa, SuzukiPoint p) {
  const auto scale = field.mul(kappa, gf_theta(field, kappa));
  return {field.mul(kappa, p.alpha), field.mul(scale, p.beta)};
}

GF2kField::Element torus_element(const GF2kField& field, unsigned r) {
  const std::uint32_t units = field.size() - 1;
  if (r == 0 || units % r != 0) throw NotPrimitiveDivisor(r, field.degree());
  return field.pow(field.primitive_element(), units / r);
}

}  // namespace ncng
