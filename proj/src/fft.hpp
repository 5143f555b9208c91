#pragma once

#include <complex>
#include <span>

namespace ssr::detail {

// Real-to-complex forward transform of length n (n/2+1 outputs) and its
// unnormalized complex-to-real inverse. Plans are cached per length and shared
// across threads.
void rfft(std::span<const double> in, std::span<std::complex<double>> out);
void irfft_unnormalized(std::span<const std::complex<double>> in, std::span<double> out);

}  // namespace ssr::detail
