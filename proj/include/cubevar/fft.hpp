#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cubevar/common.hpp"

namespace cubevar {

// In-place iterative radix-2 FFT; data.size() must be a power of two.
void fft_pow2(std::vector<cplx>& data, bool inverse);

// Triple cyclic self-convolution of h modulo q:
//   out[a] = sum over (i+j+k) == a (mod q) of h[i]*h[j]*h[k].
// Direct O(q^2) route below a size threshold, otherwise power-of-two padded
// FFT of the linear convolution folded back mod q. Values are rounded to
// nearest integer; max_round_error reports the worst |raw - rounded| seen.
std::vector<i64> cyclic_self_conv3(const std::vector<double>& h,
                                   double* max_round_error = nullptr);

}  // namespace cubevar
