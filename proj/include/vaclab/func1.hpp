#pragma once

// Functions of one variable carried together with their first two
// derivatives. These feed the one-variable slots of the axisymmetric
// ansatz and the radial profiles of stationary solutions.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace vaclab {

struct Func1 {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

[[nodiscard]] inline Func1 func1_constant(double v) {
  return {[v](double) { return v; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
}

/// a * x (the linear slot f(x) = a x used when the ansatz collapses to a
/// linear equation).
[[nodiscard]] inline Func1 func1_linear(double a) {
  return {[a](double x) { return a * x; }, [a](double) { return a; }, [](double) { return 0.0; }};
}

/// Polynomial with ascending coefficients: c[0] + c[1] x + c[2] x^2 + ...
[[nodiscard]] inline Func1 func1_poly(std::vector<double> c) {
  auto horner = [](const std::vector<double>& k, double x) {
    double r = 0.0;
    for (std::size_t i = k.size(); i-- > 0;) r = r * x + k[i];
    return r;
  };
  std::vector<double> c1, c2;
  for (std::size_t i = 1; i < c.size(); ++i) c1.push_back(static_cast<double>(i) * c[i]);
  for (std::size_t i = 1; i < c1.size(); ++i) c2.push_back(static_cast<double>(i) * c1[i]);
  return {[c, horner](double x) { return horner(c, x); },
          [c1, horner](double x) { return horner(c1, x); },
          [c2, horner](double x) { return horner(c2, x); }};
}

[[nodiscard]] inline Func1 func1_sin(double amp, double freq, double phase = 0.0) {
  return {[=](double x) { return amp * std::sin(freq * x + phase); },
          [=](double x) { return amp * freq * std::cos(freq * x + phase); },
          [=](double x) { return -amp * freq * freq * std::sin(freq * x + phase); }};
}

[[nodiscard]] inline Func1 func1_cos(double amp, double freq, double phase = 0.0) {
  return func1_sin(amp, freq, phase + std::acos(-1.0) / 2.0);
}

/// amp * exp(rate * x)
[[nodiscard]] inline Func1 func1_exp(double amp, double rate) {
  return {[=](double x) { return amp * std::exp(rate * x); },
          [=](double x) { return amp * rate * std::exp(rate * x); },
          [=](double x) { return amp * rate * rate * std::exp(rate * x); }};
}

[[nodiscard]] inline Func1 func1_gaussian(double amp, double center, double width) {
  return {[=](double x) {
            const double u = (x - center) / width;
            return amp * std::exp(-u * u);
          },
          [=](double x) {
            const double u = (x - center) / width;
            return amp * std::exp(-u * u) * (-2.0 * u / width);
          },
          [=](double x) {
            const double u = (x - center) / width;
            return amp * std::exp(-u * u) * (4.0 * u * u - 2.0) / (width * width);
          }};
}

[[nodiscard]] inline Func1 operator+(const Func1& a, const Func1& b) {
  return {[=](double x) { return a.value(x) + b.value(x); },
          [=](double x) { return a.d1(x) + b.d1(x); },
          [=](double x) { return a.d2(x) + b.d2(x); }};
}

[[nodiscard]] inline Func1 operator*(const Func1& a, const Func1& b) {
  return {[=](double x) { return a.value(x) * b.value(x); },
          [=](double x) { return a.d1(x) * b.value(x) + a.value(x) * b.d1(x); },
          [=](double x) {
            return a.d2(x) * b.value(x) + 2.0 * a.d1(x) * b.d1(x) + a.value(x) * b.d2(x);
          }};
}

[[nodiscard]] inline Func1 scale(const Func1& a, double s) {
  return {[=](double x) { return s * a.value(x); }, [=](double x) { return s * a.d1(x); },
          [=](double x) { return s * a.d2(x); }};
}

}  // namespace vaclab
