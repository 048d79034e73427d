#pragma once

#include <random>
#include <string>
#include <vector>

#include "helbp/error.hpp"
#include "helbp/poly.hpp"
#include "helbp/rational.hpp"

namespace test {

inline helbp::Rational q(const char* text) { return helbp::Rational::parse(text); }

// Polynomial from ascending "num/den" coefficients.
inline helbp::Poly poly(std::initializer_list<const char*> coeffs) {
  std::vector<helbp::Rational> c;
  for (const char* s : coeffs) c.push_back(q(s));
  return helbp::Poly(std::move(c));
}

inline helbp::Rational random_rational(std::mt19937& rng, long span = 60, long den = 30) {
  std::uniform_int_distribution<long> n(-span, span), d(1, den);
  return helbp::Rational(n(rng), d(rng));
}

inline helbp::Poly random_poly(std::mt19937& rng, int degree) {
  std::vector<helbp::Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  return helbp::Poly(std::move(c));
}

}  // namespace test

// Asserts that expr throws helbp::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                                  \
  do {                                                                    \
    bool thrown_ = false;                                                 \
    try {                                                                 \
      (void)(expr);                                                       \
    } catch (const helbp::Error& e_) {                                    \
      thrown_ = true;                                                     \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());                  \
    }                                                                     \
    CHECK_MESSAGE(thrown_, "no helbp::Error from " #expr);                \
  } while (0)
