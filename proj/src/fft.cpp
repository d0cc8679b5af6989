#include "cubevar/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cubevar {

void fft_pow2(std::vector<cplx>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_pow2: size must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? -1.0 : 1.0);
    cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = data[i + k];
        cplx v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    double inv = 1.0 / static_cast<double>(n);
    for (auto& x : data) x *= inv;
  }
}

namespace {

constexpr std::size_t kDirectThreshold = 512;

std::vector<i64> conv3_direct(const std::vector<double>& h) {
  const std::size_t q = h.size();
  std::vector<double> g(q, 0.0);
  for (std::size_t i = 0; i < q; ++i) {
    if (h[i] == 0.0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      std::size_t k = i + j;
      if (k >= q) k -= q;
      g[k] += h[i] * h[j];
    }
  }
  std::vector<double> r(q, 0.0);
  for (std::size_t i = 0; i < q; ++i) {
    if (g[i] == 0.0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      std::size_t k = i + j;
      if (k >= q) k -= q;
      r[k] += g[i] * h[j];
    }
  }
  std::vector<i64> out(q);
  for (std::size_t i = 0; i < q; ++i) out[i] = std::llround(r[i]);
  return out;
}

}  // namespace

std::vector<i64> cyclic_self_conv3(const std::vector<double>& h,
                                   double* max_round_error) {
  const std::size_t q = h.size();
  if (q == 0) throw std::invalid_argument("cyclic_self_conv3: empty input");
  if (max_round_error) *max_round_error = 0.0;
  if (q < kDirectThreshold) return conv3_direct(h);

  std::size_t n = 1;
  while (n < 3 * q - 2) n <<= 1;
  std::vector<cplx> buf(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < q; ++i) buf[i] = cplx{h[i], 0.0};
  fft_pow2(buf, false);
  for (auto& x : buf) x = x * x * x;
  fft_pow2(buf, true);

  std::vector<i64> out(q, 0);
  std::vector<double> folded(q, 0.0);
  for (std::size_t i = 0; i < 3 * q - 2; ++i) folded[i % q] += buf[i].real();
  double worst = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    double v = folded[i];
    i64 r = std::llround(v);
    worst = std::max(worst, std::abs(v - static_cast<double>(r)));
    out[i] = r;
  }
  if (max_round_error) *max_round_error = worst;
  if (worst >= 0.25)
    throw std::runtime_error("cyclic_self_conv3: FFT rounding error >= 0.25");
  return out;
}

}  // namespace cubevar
