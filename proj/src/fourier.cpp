#include "tspec/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "tspec/errors.hpp"

namespace tspec {
namespace {

// FFTW's planner is not thread safe; executing an existing plan on new arrays is.
class ForwardPlans {
 public:
  ~ForwardPlans() {
    for (auto& [size, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t size) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(size); it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(size);
    auto* out = fftw_alloc_complex(size);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(size), in, out, FFTW_FORWARD,
                                      FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(size, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, fftw_plan> plans_;
};

ForwardPlans& forward_plans() {
  static ForwardPlans plans;
  return plans;
}

struct FftwDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

}  // namespace

FourierSeries::FourierSeries(int order)
    : order_(order), coeffs_(static_cast<std::size_t>(2 * order + 1)) {
  if (order < 0) throw PreconditionError("FourierSeries: negative order");
}

FourierSeries::FourierSeries(int order, std::vector<Complex> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(2 * order + 1)) {
    throw PreconditionError("FourierSeries: coefficient count does not match order");
  }
}

Complex& FourierSeries::at(int k) {
  if (!contains(k)) {
    throw PreconditionError("FourierSeries: index " + std::to_string(k) + " out of range");
  }
  return coeffs_[index(k)];
}

Complex FourierSeries::evaluate(double theta) const {
  return evaluate_at(std::polar(1.0, theta));
}

Complex FourierSeries::evaluate_at(Complex z) const {
  // Horner in z for the non-negative part and in 1/z for the negative part.
  Complex pos = 0.0;
  for (int k = order_; k >= 1; --k) pos = (pos + (*this)[k]) * z;
  Complex neg = 0.0;
  const Complex zinv = 1.0 / z;
  for (int k = order_; k >= 1; --k) neg = (neg + (*this)[-k]) * zinv;
  return (*this)[0] + pos + neg;
}

double FourierSeries::tail_mass(int cutoff) const {
  double sum = 0.0;
  for (int k = cutoff + 1; k <= order_; ++k) sum += std::abs((*this)[k]) + std::abs((*this)[-k]);
  return sum;
}

double FourierSeries::hermitian_defect() const {
  double worst = 0.0;
  for (int k = 1; k <= order_; ++k) {
    worst = std::max(worst, std::abs((*this)[-k] - std::conj((*this)[k])));
  }
  return worst;
}

double CircleGrid::angle(std::size_t l, std::size_t size) {
  return 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(size);
}

CircleGrid CircleGrid::sample(const std::function<Complex(double)>& fn, std::size_t size) {
  CircleGrid grid;
  grid.samples.resize(size);
  for (std::size_t l = 0; l < size; ++l) grid.samples[l] = fn(angle(l, size));
  return grid;
}

FourierSeries fourier_coeffs(const CircleGrid& grid, int order) {
  const std::size_t size = grid.size();
  if (size < 4 || !std::has_single_bit(size)) {
    throw PreconditionError("fourier_coeffs: grid size must be a power of two >= 4");
  }
  if (order < 0 || static_cast<std::size_t>(order) * 4 > size) {
    throw PreconditionError("fourier_coeffs: grid of size " + std::to_string(size) +
                            " cannot resolve order " + std::to_string(order));
  }
  std::unique_ptr<fftw_complex[], FftwDeleter> in(fftw_alloc_complex(size));
  std::unique_ptr<fftw_complex[], FftwDeleter> out(fftw_alloc_complex(size));
  static_assert(sizeof(Complex) == sizeof(fftw_complex));
  std::memcpy(in.get(), grid.samples.data(), size * sizeof(fftw_complex));
  fftw_execute_dft(forward_plans().get(size), in.get(), out.get());

  FourierSeries series(order);
  const double scale = 1.0 / static_cast<double>(size);
  for (int k = -order; k <= order; ++k) {
    const std::size_t slot = k >= 0 ? static_cast<std::size_t>(k)
                                    : size - static_cast<std::size_t>(-k);
    series.at(k) = Complex(out[slot][0], out[slot][1]) * scale;
  }
  return series;
}

WienerHopfFactors wiener_hopf_eval(const FourierSeries& v, Complex z) {
  Complex log_plus = 0.0;
  Complex log_minus = 0.0;
  Complex zk = 1.0;
  const Complex zinv = 1.0 / z;
  Complex zmk = 1.0;
  for (int k = 1; k <= v.order(); ++k) {
    zk *= z;
    zmk *= zinv;
    log_plus += v[k] * zk;
    log_minus += v[-k] * zmk;
  }
  return {std::exp(log_plus), std::exp(log_minus), log_plus, log_minus};
}

TruncatedSum weighted_cross_sum(const FourierSeries& v) {
  TruncatedSum result;
  for (int k = 1; k <= v.order(); ++k) {
    result.value += static_cast<double>(k) * v[k] * v[-k];
  }
  // Bound the omitted terms assuming |V_k| keeps decaying at least geometrically
  // with the ratio observed over the last quarter of the stored range.
  const int order = v.order();
  if (order >= 4) {
    const int mid = order - order / 4;
    const double a = std::abs(v[mid]) + std::abs(v[-mid]);
    const double b = std::abs(v[order]) + std::abs(v[-order]);
    if (a > 0.0 && b > 0.0 && b < a) {
      const double ratio = std::pow(b / a, 1.0 / static_cast<double>(order - mid));
      double term = b * b;
      double tail = 0.0;
      for (int k = order + 1; k < order + 10000 && term > 1e-300; ++k) {
        term *= ratio * ratio;
        tail += static_cast<double>(k) * term;
      }
      result.tail_bound = tail;
    } else {
      result.tail_bound = static_cast<double>(order) * b * b;
    }
  }
  return result;
}

}  // namespace tspec
