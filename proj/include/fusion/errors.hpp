#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Raised when an operation's configured size bound is exceeded (brute-force
// canonicalization, digraph generation, exhaustive oracles).
class order_too_large : public std::runtime_error {
 public:
  order_too_large(int order, int bound)
      : std::runtime_error("order " + std::to_string(order) +
                           " exceeds configured bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  int order() const noexcept { return order_; }
  int bound() const noexcept { return bound_; }

 private:
  int order_;
  int bound_;
};

class non_convergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_undirected : public std::invalid_argument {
 public:
  not_undirected() : std::invalid_argument("digraph has an unpaired arc") {}
};

class not_triangle_free : public std::invalid_argument {
 public:
  not_triangle_free() : std::invalid_argument("graph contains a triangle") {}
};

}  // namespace fusion
