// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_FFT_HPP
#define EIGENBOUND_FFT_HPP

#include <array>
#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace eigenbound {

/// In-place c2c FFT over the leading d axes of a row-major array.
/// sign = FFTW_FORWARD or FFTW_BACKWARD; the backward transform is not
/// normalized (caller divides by the total size).
inline void fft_inplace(std::vector<std::complex<double>>& a, int d, const std::array<int, 3>& shape,
                        int sign) {
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx); // fftw planning is not thread-safe
    int dims[3] = {shape[0], shape[1], shape[2]};
    fftw_plan plan = fftw_plan_dft(d, dims, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(a.data()), sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

} // namespace eigenbound

#endif
