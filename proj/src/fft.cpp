#include "dispersive/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dispersive::fft {
namespace {

struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
    PlanPair() = default;
    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;
    ~PlanPair() {
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
    }
};

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays (fftw_execute_dft) is.
std::mutex planner_mutex;

const PlanPair& plans_for(std::size_t n) {
    static std::map<std::size_t, std::unique_ptr<PlanPair>> cache;
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto pair = std::make_unique<PlanPair>();
    std::vector<std::complex<double>> a(n), b(n);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int len = static_cast<int>(n);
    pair->forward = fftw_plan_dft_1d(len, pa, pb, FFTW_FORWARD, flags);
    pair->backward = fftw_plan_dft_1d(len, pa, pb, FFTW_BACKWARD, flags);
    if (!pair->forward || !pair->backward) throw std::runtime_error("fft: FFTW planning failed");
    return *cache.emplace(n, std::move(pair)).first->second;
}

void execute(fftw_plan plan, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    if (in.size() != out.size()) throw std::invalid_argument("fft: input and output lengths differ");
    // Plans are out-of-place; FFTW requires the same placement at execution.
    if (in.data() == out.data()) {
        std::vector<std::complex<double>> copy(in.begin(), in.end());
        execute(plan, copy, out);
        return;
    }
    // FFTW's new-array interface takes non-const input; it does not write to
    // it for out-of-place complex transforms.
    auto* pin = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan, pin, pout);
}

} // namespace

void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    execute(plans_for(in.size()).forward, in, out);
}

void backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    execute(plans_for(in.size()).backward, in, out);
}

} // namespace dispersive::fft
