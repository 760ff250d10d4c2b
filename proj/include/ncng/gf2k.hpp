#pragma once

#include <cstdint>

namespace ncng {

/// GF(2^k) in polynomial basis: element bit i is the coefficient of x^i.
class GF2kField {
 public:
  using Element = std::uint32_t;

  /// Uses the fixed reduction polynomial for `degree` (x^3+x+1, x^5+x^2+1, x^7+x+1).
  explicit GF2kField(unsigned degree);
  /// `modulus` includes the leading x^degree bit and must be irreducible.
  GF2kField(unsigned degree, std::uint32_t modulus);

  unsigned degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << degree_; }

  static Element add(Element a, Element b) { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  /// Smallest element generating the multiplicative group.
  Element primitive_element() const;
  std::uint64_t multiplicative_order(Element a) const;

 private:
  unsigned degree_;
  std::uint32_t modulus_;
};

/// a -> a^(2^((k+1)/2)); squares to the Frobenius map. Throws EvenDegree.
GF2kField::Element gf_theta(const GF2kField& field, GF2kField::Element a);

struct SuzukiPoint {
  GF2kField::Element alpha = 0;
  GF2kField::Element beta = 0;
  friend bool operator==(const SuzukiPoint&, const SuzukiPoint&) = default;
};

/// (a,b)(c,d) = (a+c, a*c^theta + b + d).
SuzukiPoint suzuki_mul(const GF2kField& field, SuzukiPoint p, SuzukiPoint q);
SuzukiPoint suzuki_inverse(const GF2kField& field, SuzukiPoint p);

/// (a,b) -> (kappa*a, kappa^(1+theta)*b), an automorphism of the Suzuki 2-group.
SuzukiPoint suzuki_torus_action(const GF2kField& field, GF2kField::Element kappa, SuzukiPoint p);

/// kappa = w^((2^k-1)/r) for the primitive element w, of multiplicative order r.
/// Throws NotPrimitiveDivisor when r does not divide 2^k-1.
GF2kField::Element torus_element(const GF2kField& field, unsigned r);

}  // namespace ncng
