#pragma once

#include <cmath>
#include <stdexcept>

namespace burstyic {

// Binary entropy with the 0 log 0 = 0 convention.
inline double h_b(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("h_b: argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Entropy of the XOR of two independent Bernoulli variables,
// H_sum(a,b) = h_b(a(1-b) + (1-a)b). Symmetric under a->1-a and b->1-b.
inline double h_sum(double a, double b) {
  if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0)
    throw std::domain_error("h_sum: argument outside [0,1]");
  return h_b(a * (1.0 - b) + (1.0 - a) * b);
}

}  // namespace burstyic
