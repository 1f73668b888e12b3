#include "qwalk/coin.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "qwalk/error.hpp"

namespace qwalk {

Coin::Coin(std::size_t dim, std::vector<Complex> entries, std::string name)
    : dim_(dim), entries_(std::move(entries)), name_(std::move(name)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) throw_invalid("coin entries must form a square matrix");
  const double err = unitarity_error();
  if (!(err <= kUnitarityTolerance))
    throw_invalid("coin " + name_ + " is not unitary (error " + std::to_string(err) + ")");
}

double Coin::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Complex sum = 0.0;
      for (std::size_t r = 0; r < dim_; ++r) sum += std::conj((*this)(r, j)) * (*this)(r, k);
      if (j == k) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

Coin identity_coin(std::size_t dim) {
  std::vector<Complex> e(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) e[j * dim + j] = 1.0;
  return Coin(dim, std::move(e), "I" + std::to_string(dim));
}

Coin hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return Coin(2, {s, s, s, -s}, "H");
}

Coin hadamard_symmetric() {
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex is{0.0, s};
  return Coin(2, {s, is, is, s}, "Hi");
}

Coin grover(int d) {
  if (d < 2) throw_invalid("Grover coin needs d >= 2, got " + std::to_string(d));
  const auto n = static_cast<std::size_t>(d);
  std::vector<Complex> e(n * n, 2.0 / d);
  for (std::size_t j = 0; j < n; ++j) e[j * n + j] = (2.0 - d) / d;
  return Coin(n, std::move(e), "G" + std::to_string(d));
}

Coin fourier(int d) {
  if (d < 2) throw_invalid("Fourier coin needs d >= 2, got " + std::to_string(d));
  const auto n = static_cast<std::size_t>(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> e(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce the exponent first so large jk does not lose phase accuracy.
      const auto power = static_cast<double>((j * k) % n);
      const double angle = 2.0 * std::numbers::pi * power / d;
      // Exact values on the axes keep F_2 identical to H.
      const std::size_t r = (j * k) % n;
      double c = std::cos(angle), s = std::sin(angle);
      if (r == 0) { c = 1.0; s = 0.0; }
      if (2 * r == n) { c = -1.0; s = 0.0; }
      if (4 * r == n) { c = 0.0; s = 1.0; }
      if (4 * r == 3 * n) { c = 0.0; s = -1.0; }
      e[j * n + k] = Complex(c, s) * norm;
    }
  }
  return Coin(n, std::move(e), "F" + std::to_string(d));
}

Coin tensor(const Coin& a, const Coin& b) {
  const std::size_t n = a.dim() * b.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          e[(i * b.dim() + k) * n + (j * b.dim() + l)] = a(i, j) * b(k, l);
  return Coin(n, std::move(e), a.name() + "x" + b.name());
}

Coin multiply(const Coin& a, const Coin& b) {
  if (a.dim() != b.dim()) throw_invalid("coin dimensions differ");
  const std::size_t n = a.dim();
  std::vector<Complex> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += a(i, k) * b(k, j);
  return Coin(n, std::move(e), a.name() + "*" + b.name());
}

Coin coin_by_name(std::string_view name) {
  if (name == "H") return hadamard();
  if (name == "Hi") return hadamard_symmetric();
  if (name == "HxH") return tensor(hadamard(), hadamard());
  if (name.size() >= 2 && (name[0] == 'G' || name[0] == 'F')) {
    int d = 0;
    const auto* first = name.data() + 1;
    const auto* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec == std::errc() && ptr == last) return name[0] == 'G' ? grover(d) : fourier(d);
  }
  throw_invalid("unknown coin '" + std::string(name) + "' (expected H, Hi, HxH, G<d> or F<d>)");
}

}  // namespace qwalk
