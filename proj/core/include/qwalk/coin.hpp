#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

// Unitary operator on the coin space, stored row-major.
class Coin {
 public:
  // Throws invalid-parameter unless `entries` is dim x dim and unitary to 1e-12.
  Coin(std::size_t dim, std::vector<Complex> entries, std::string name = {});

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }
  const std::string& name() const noexcept { return name_; }

  // max |(C^dagger C - 1)_{jk}|
  double unitarity_error() const;

  friend bool operator==(const Coin& a, const Coin& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
  std::string name_;
};

inline constexpr double kUnitarityTolerance = 1e-12;

Coin identity_coin(std::size_t dim);
// (1/sqrt2) [[1, 1], [1, -1]]
Coin hadamard();
// (1/sqrt2) [[1, i], [i, 1]]
Coin hadamard_symmetric();
// Reflection about the uniform vector: (2 - d)/d on the diagonal, 2/d off it.
Coin grover(int d);
// Discrete Fourier transform, entry (j, k) = w^{jk} / sqrt(d), w = e^{2 pi i/d}.
Coin fourier(int d);
// Kronecker product a (x) b.
Coin tensor(const Coin& a, const Coin& b);

// Names accepted by the CLI: H, Hi, G<d>, F<d>, HxH.
Coin coin_by_name(std::string_view name);

// Product of two coins of equal dimension (used by tests and diagnostics).
Coin multiply(const Coin& a, const Coin& b);

}  // namespace qwalk
