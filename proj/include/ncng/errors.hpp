#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncng {

/// Base for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderCapExceeded : public Error {
 public:
  OrderCapExceeded(std::size_t order_lower_bound, std::size_t cap)
      : Error("group order " + std::to_string(order_lower_bound) + " exceeds the order cap " +
              std::to_string(cap)),
        order_lower_bound(order_lower_bound),
        cap(cap) {}
  std::size_t order_lower_bound;
  std::size_t cap;
};

class LatticeCapExceeded : public Error {
 public:
  LatticeCapExceeded(std::size_t order, std::size_t cap)
      : Error("group order " + std::to_string(order) + " exceeds the lattice cap " +
              std::to_string(cap)) {}
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class EvenDegree : public Error {
 public:
  explicit EvenDegree(unsigned degree)
      : Error("the Suzuki automorphism needs an odd field degree, got " + std::to_string(degree)) {}
};

class NotPrimitiveDivisor : public Error {
 public:
  NotPrimitiveDivisor(unsigned r, unsigned degree)
      : Error(std::to_string(r) + " does not divide 2^" + std::to_string(degree) + "-1") {}
};

class PrimeNotDividing : public Error {
 public:
  PrimeNotDividing(unsigned p, std::size_t order)
      : Error(std::to_string(p) + " is not a prime dividing the group order " +
              std::to_string(order)) {}
};

class NotAVertex : public Error {
 public:
  using Error::Error;
};

class NoWitness : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a byte offset into the input and the tokens that would have been accepted.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& detail = {});
  std::size_t position;
  std::vector<std::string> expected;
};

}  // namespace ncng
