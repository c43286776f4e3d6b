#include <benchmark/benchmark.h>

#include <random>

#include "lorentz/batch.hpp"
#include "lorentz/lorentz_exp.hpp"

using namespace lorentz;

namespace {

std::mt19937_64& gen() {
    static std::mt19937_64 g(0xbe7c4);
    return g;
}

double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen()); }

Vec3 v3(double r) { return Vec3{{u(-r, r), u(-r, r), u(-r, r)}}; }

std::vector<MaxwellGen> gens(std::size_t n) {
    std::vector<MaxwellGen> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(build(v3(2.0), v3(2.0)));
    return out;
}

std::vector<PauliVec> spins(std::size_t n) {
    std::vector<PauliVec> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 a = v3(1.0), b = v3(1.0);
        out.push_back(PauliVec{cplx(u(-1, 1), u(-1, 1)),
                               Vec3c{{cplx(a[0], b[0]), cplx(a[1], b[1]), cplx(a[2], b[2])}}});
    }
    return out;
}

std::vector<Mat4> lorentz_mats(std::size_t n) {
    std::vector<Mat4> out;
    out.reserve(n);
    for (const auto& g : gens(n)) out.push_back(exp_maxwell(g, 0.5));
    return out;
}

void BM_exp_serial(benchmark::State& st) {
    const auto in = gens(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(batch::exp_maxwell_serial(in, 0.7));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_exp_parallel(benchmark::State& st) {
    const auto in = gens(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(batch::exp_maxwell_parallel(in, 0.7));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_jaws_serial(benchmark::State& st) {
    const auto in = spins(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(batch::jaws_serial(in));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_jaws_parallel(benchmark::State& st) {
    const auto in = spins(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(batch::jaws_parallel(in));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_log_serial(benchmark::State& st) {
    const auto in = lorentz_mats(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(batch::lorentz_log_serial(in));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_log_parallel(benchmark::State& st) {
    const auto in = lorentz_mats(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(batch::lorentz_log_parallel(in));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_exp_serial)->Arg(1 << 10)->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_exp_parallel)->Arg(1 << 10)->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_jaws_serial)->Arg(1 << 10)->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_jaws_parallel)->Arg(1 << 10)->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_log_serial)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();
BENCHMARK(BM_log_parallel)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();

BENCHMARK_MAIN();
