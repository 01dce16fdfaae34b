#include "skdv/fft.hpp"

#include "skdv/errors.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace skdv {
namespace fft {
namespace {

std::mutex plan_mutex;

fftw_plan plan_for(int n, int sign) {
    // FFTW planning is not thread-safe; cache one reusable plan per shape.
    // FFTW_UNALIGNED lets the cached plan execute on any caller buffer.
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    std::vector<cplx> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

inline double parity(int k) { return (k & 1) ? -1.0 : 1.0; }

} // namespace

void raw_dft(std::vector<cplx>& data, int sign) {
    const int n = static_cast<int>(data.size());
    if (n == 0)
        throw InvalidInputError("empty transform");
    fftw_plan p = plan_for(n, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, buf, buf);
}

std::vector<cplx> centered_forward(const std::vector<cplx>& samples, double h) {
    const int n = static_cast<int>(samples.size());
    std::vector<cplx> work = samples;
    raw_dft(work, -1);
    // u(k_i) = h * (-1)^k * DFT_k, reindexed to signed order.
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        out[i] = h * parity(k) * work[(k + n) % n];
    }
    return out;
}

std::vector<cplx> centered_inverse(const std::vector<cplx>& spectrum, double h) {
    const int n = static_cast<int>(spectrum.size());
    std::vector<cplx> work(n);
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        work[(k + n) % n] = parity(k) * spectrum[i];
    }
    raw_dft(work, +1);
    const double scale = 1.0 / (n * h);
    for (auto& z : work)
        z *= scale;
    return work;
}

} // namespace fft
} // namespace skdv
