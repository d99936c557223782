#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace tspec {

using Complex = std::complex<double>;

/// Default number of samples on the unit circle.
inline constexpr std::size_t kDefaultGridSize = 8192;

/// Fourier coefficients c_k for k in [-order, order].
class FourierSeries {
 public:
  FourierSeries() = default;
  explicit FourierSeries(int order);
  FourierSeries(int order, std::vector<Complex> coeffs);

  int order() const { return order_; }
  bool contains(int k) const { return k >= -order_ && k <= order_; }

  /// Coefficient c_k; zero outside the stored range.
  Complex operator[](int k) const { return contains(k) ? coeffs_[index(k)] : Complex{}; }
  Complex& at(int k);

  /// Σ_k c_k e^{ikθ}.
  Complex evaluate(double theta) const;
  /// Σ_k c_k z^k for |z| = 1 (or any z != 0).
  Complex evaluate_at(Complex z) const;

  /// Σ_{|k| > cutoff} |c_k|.
  double tail_mass(int cutoff) const;

  /// max_{k >= 1} |c_{-k} - conj(c_k)|, zero for the series of a real function.
  double hermitian_defect() const;

  const std::vector<Complex>& data() const { return coeffs_; }

 private:
  std::size_t index(int k) const { return static_cast<std::size_t>(k + order_); }
  int order_ = 0;
  std::vector<Complex> coeffs_ = {Complex{}};
};

/// Samples of a function on θ_l = 2πl/size.
struct CircleGrid {
  std::vector<Complex> samples;

  std::size_t size() const { return samples.size(); }
  static double angle(std::size_t l, std::size_t size);
  static CircleGrid sample(const std::function<Complex(double)>& fn,
                           std::size_t size = kDefaultGridSize);
};

/// Discrete Fourier coefficients of the grid samples for |k| <= order.
/// Requires a power-of-two grid with size >= 4 * order.
FourierSeries fourier_coeffs(const CircleGrid& grid, int order);

/// Values of the Wiener-Hopf factors b_+(z) = exp(Σ_{k>=1} V_k z^k) and
/// b_-(z) = exp(Σ_{k<=-1} V_k z^k), together with their exponents.
struct WienerHopfFactors {
  Complex b_plus;
  Complex b_minus;
  Complex log_b_plus;
  Complex log_b_minus;
};

WienerHopfFactors wiener_hopf_eval(const FourierSeries& v, Complex z);

/// A truncated series value together with a bound on the omitted part.
struct TruncatedSum {
  Complex value;
  double tail_bound = 0.0;
};

/// Σ_{k>=1} k V_k V_{-k}. The tail bound uses the geometric decay fitted to
/// the last stored coefficients.
TruncatedSum weighted_cross_sum(const FourierSeries& v);

}  // namespace tspec
