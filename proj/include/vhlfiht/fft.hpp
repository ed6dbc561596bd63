///
/// \file fft.hpp
///
/// Thin FFTW wrapper. Plans are created once per length under a global lock
/// and then shared read-only; executing a plan on caller-owned buffers is
/// thread-safe.
///
#ifndef VHLFIHT_FFT_HPP
#define VHLFIHT_FFT_HPP

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "vhlfiht/types.hpp"

namespace vhlfiht
{

class FftPlan
{
public:
    explicit FftPlan(Index size) : m_size(size)
    {
        std::vector<Complex> in(static_cast<std::size_t>(size));
        std::vector<Complex> out(static_cast<std::size_t>(size));
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        m_forward  = fftw_plan_dft_1d(static_cast<int>(size), cast(in.data()),
                                      cast(out.data()), FFTW_FORWARD, flags);
        m_backward = fftw_plan_dft_1d(static_cast<int>(size), cast(in.data()),
                                      cast(out.data()), FFTW_BACKWARD, flags);
    }

    FftPlan(const FftPlan&)            = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    ~FftPlan()
    {
        fftw_destroy_plan(m_forward);
        fftw_destroy_plan(m_backward);
    }

    Index size() const
    {
        return m_size;
    }

    /// Unnormalized forward transform; `in` and `out` must be distinct.
    void forward(const Complex* in, Complex* out) const
    {
        fftw_execute_dft(m_forward, cast(const_cast<Complex*>(in)), cast(out));
    }

    /// Unnormalized inverse transform; `in` and `out` must be distinct.
    void backward(const Complex* in, Complex* out) const
    {
        fftw_execute_dft(m_backward, cast(const_cast<Complex*>(in)), cast(out));
    }

private:
    static fftw_complex* cast(Complex* p)
    {
        return reinterpret_cast<fftw_complex*>(p);
    }

    Index m_size;
    fftw_plan m_forward;
    fftw_plan m_backward;
};

/// Smallest power of two that is >= n.
inline Index next_pow2(Index n)
{
    Index p = 1;
    while (p < n)
    {
        p <<= 1;
    }
    return p;
}

/// Cached plan for the given length (FFTW's planner is not reentrant).
inline std::shared_ptr<const FftPlan> fft_plan(Index size)
{
    static std::mutex mutex;
    static std::map<Index, std::shared_ptr<const FftPlan>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[size];
    if (!slot)
    {
        slot = std::make_shared<const FftPlan>(size);
    }
    return slot;
}

} // namespace vhlfiht

#endif /* VHLFIHT_FFT_HPP */
