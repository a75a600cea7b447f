#include "gkdv/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gkdv::fft {
namespace {

// The FFTW planner is not thread-safe; executes on distinct buffers are.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t n = 0;

    PlanEntry() = default;
    PlanEntry(const PlanEntry&) = delete;
    PlanEntry& operator=(const PlanEntry&) = delete;
    ~PlanEntry() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
};

// One in-place plan per (size, sign), cached per thread.
PlanEntry& plan_for(std::size_t n, int sign) {
    thread_local std::map<std::pair<std::size_t, int>, PlanEntry> cache;
    auto& entry = cache[{n, sign}];
    if (!entry.plan) {
        entry.buf = fftw_alloc_complex(n);
        entry.n = n;
        std::lock_guard<std::mutex> lock(planner_mutex());
        entry.plan = fftw_plan_dft_1d(static_cast<int>(n), entry.buf, entry.buf, sign, FFTW_ESTIMATE);
        if (!entry.plan) throw std::runtime_error("fftw plan creation failed");
    }
    return entry;
}

void run(std::span<const std::complex<double>> in, std::span<std::complex<double>> out, int sign) {
    if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
    if (in.empty()) return;
    auto& entry = plan_for(in.size(), sign);
    std::memcpy(entry.buf, in.data(), in.size() * sizeof(fftw_complex));
    fftw_execute(entry.plan);
    std::memcpy(out.data(), entry.buf, in.size() * sizeof(fftw_complex));
}

}  // namespace

void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    run(in, out, FFTW_FORWARD);
}

void inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    run(in, out, FFTW_BACKWARD);
}

}  // namespace gkdv::fft
