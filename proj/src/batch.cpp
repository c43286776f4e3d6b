#include "lorentz/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lorentz/lorentz_exp.hpp"

namespace lorentz::batch {

namespace {

Outcome<MaxwellGen> log_one(const Mat4& m, const Tolerance& tol) {
    Outcome<MaxwellGen> o;
    try {
        o.value = lorentz_log(validate(m, tol), tol);
    } catch (const Error& e) {
        o.error = e;
    }
    return o;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<Mat4> exp_maxwell_serial(std::span<const MaxwellGen> gens, double t) {
    std::vector<Mat4> out(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) out[i] = exp_maxwell(gens[i], t);
    return out;
}

std::vector<Mat4> exp_maxwell_parallel(std::span<const MaxwellGen> gens, double t) {
    std::vector<Mat4> out(gens.size());
    const auto n = static_cast<std::ptrdiff_t>(gens.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = exp_maxwell(gens[i], t);
    return out;
}

std::vector<Mat4> jaws_serial(std::span<const PauliVec> spins) {
    std::vector<Mat4> out(spins.size());
    for (std::size_t i = 0; i < spins.size(); ++i) out[i] = jaws_closed(spins[i]);
    return out;
}

std::vector<Mat4> jaws_parallel(std::span<const PauliVec> spins) {
    std::vector<Mat4> out(spins.size());
    const auto n = static_cast<std::ptrdiff_t>(spins.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = jaws_closed(spins[i]);
    return out;
}

std::vector<Outcome<MaxwellGen>> lorentz_log_serial(std::span<const Mat4> mats, const Tolerance& tol) {
    std::vector<Outcome<MaxwellGen>> out(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) out[i] = log_one(mats[i], tol);
    return out;
}

std::vector<Outcome<MaxwellGen>> lorentz_log_parallel(std::span<const Mat4> mats, const Tolerance& tol) {
    std::vector<Outcome<MaxwellGen>> out(mats.size());
    const auto n = static_cast<std::ptrdiff_t>(mats.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = log_one(mats[i], tol);
    return out;
}

}  // namespace lorentz::batch
