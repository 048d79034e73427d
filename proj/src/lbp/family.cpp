#include <string>

#include "helbp/error.hpp"
#include "helbp/lbp.hpp"

namespace helbp::lbp {

namespace {

Rational hermite_b(int n, int j) {
  const Rational m = Rational(n + j) + Rational(1, 2);
  return -(m * m) / Rational(static_cast<long>(n + j) * (n + j + 1));
}

}  // namespace

Family Family::hermite() {
  return Family(
      FamilyKind::Hermite, "hermite", [](int n) { return hermite_b(n, 0); }, [](int) { return Rational(-1); });
}

Family Family::associated(int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "associated family needs j >= 0");
  if (j == 0) return hermite();
  Family f(
      FamilyKind::Associated, "associated:" + std::to_string(j), [j](int n) { return hermite_b(n, j); },
      [](int) { return Rational(-1); });
  f.j_ = j;
  return f;
}

Family Family::stieltjes_carlitz(const Rational& p2) {
  if (p2.sign() < 0) throw Error(ErrorCode::InvalidArgument, "Stieltjes-Carlitz needs p^2 >= 0, got " + p2.str());
  Family f(
      FamilyKind::StieltjesCarlitz, "stieltjes-carlitz:" + p2.str(), [](int n) { return hermite_b(n, 0); },
      [p2](int n) { return Rational(-1) - p2 / Rational(4L * (n + 1) * (n + 1)); });
  f.p2_ = p2;
  return f;
}

Family Family::custom(std::string name, Coefficient b, Coefficient d) {
  return Family(FamilyKind::Custom, std::move(name), std::move(b), std::move(d));
}

Family Family::table(std::string name, std::vector<Rational> b, std::vector<Rational> d) {
  auto bt = [b = std::move(b)](int n) {
    if (n < 1 || n >= static_cast<int>(b.size())) {
      throw Error(ErrorCode::CoefficientOutOfRange, "b_" + std::to_string(n) + " is outside the table");
    }
    return b[static_cast<size_t>(n)];
  };
  auto dt = [d = std::move(d)](int n) {
    if (n < 0 || n >= static_cast<int>(d.size())) {
      throw Error(ErrorCode::CoefficientOutOfRange, "d_" + std::to_string(n) + " is outside the table");
    }
    return d[static_cast<size_t>(n)];
  };
  return Family(FamilyKind::Custom, std::move(name), std::move(bt), std::move(dt));
}

Rational Family::b(int n) const {
  if (n < 1) throw Error(ErrorCode::CoefficientOutOfRange, "b_n is defined for n >= 1, got " + std::to_string(n));
  Rational v = b_(n);
  if (v.is_zero()) throw Error(ErrorCode::DegenerateFamily, name_ + ": b_" + std::to_string(n) + " = 0");
  return v;
}

Rational Family::d(int n) const {
  if (n < 0) throw Error(ErrorCode::CoefficientOutOfRange, "d_n is defined for n >= 0, got " + std::to_string(n));
  Rational v = d_(n);
  if (v.is_zero()) throw Error(ErrorCode::DegenerateFamily, name_ + ": d_" + std::to_string(n) + " = 0");
  return v;
}

Family Family::shifted(int k) const {
  Family f(
      FamilyKind::Custom, name_ + "+" + std::to_string(k), [b = b_, k](int n) { return b(n + k); },
      [d = d_, k](int n) { return d(n + k); });
  return f;
}

Family reciprocal_family(const Family& family) {
  if (family.palindromic_by_construction()) return family;
  auto b = [family](int n) { return family.b(n) / (family.d(n - 1) * family.d(n)); };
  auto d = [family](int n) { return Rational(1) / family.d(n); };
  return Family::custom("reciprocal(" + family.name() + ")", b, d);
}

Rational normalization_h(const Family& family, int n) {
  Rational h(1);
  for (int k = 1; k <= n; ++k) h *= family.b(k) / family.d(k);
  return h;
}

}  // namespace helbp::lbp
