#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lorentz/core4.hpp"
#include "lorentz/lorentz_analysis.hpp"
#include "lorentz/maxwell.hpp"
#include "lorentz/pauli.hpp"

namespace lorentz::batch {

template <class T>
struct Outcome {
    std::optional<T> value;
    std::optional<Error> error;
};

// Runs body(i) for i in [0, n) across OpenMP threads. The first exception
// (lowest index) is rethrown after the loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

int max_threads();

std::vector<Mat4> exp_maxwell_serial(std::span<const MaxwellGen> gens, double t);
std::vector<Mat4> exp_maxwell_parallel(std::span<const MaxwellGen> gens, double t);

std::vector<Mat4> jaws_serial(std::span<const PauliVec> spins);
std::vector<Mat4> jaws_parallel(std::span<const PauliVec> spins);

std::vector<Outcome<MaxwellGen>> lorentz_log_serial(std::span<const Mat4> mats, const Tolerance& tol = {});
std::vector<Outcome<MaxwellGen>> lorentz_log_parallel(std::span<const Mat4> mats, const Tolerance& tol = {});

}  // namespace lorentz::batch
