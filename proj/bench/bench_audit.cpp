#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "ospadmm/audit.hpp"
#include "ospadmm/experiment.hpp"
#include "ospadmm/qp.hpp"

using namespace ospadmm;

namespace {

struct Fixture {
    OnlineSetup setup;
    std::vector<CostPtr> costs;
    std::vector<RoundData> rounds;
    RoundContext ctx;
};

std::unique_ptr<Fixture> make_fixture(std::size_t N) {
    QpGeneratorConfig gc;
    gc.n = 10;
    gc.m = 5;
    gc.N = N;
    gc.seed = 1;
    gc.X = SimpleSet::box(10, -1.0, 1.0);
    const auto inst = make_qp_instance(gc);
    const auto cfg = inst.solver_config(1.0);
    auto holder = std::make_unique<Fixture>(
        Fixture{OnlineSetup{inst.stream, inst.g, inst.cc, cfg, inst.initial_state(), inst.closed_form_stepper(cfg)},
                {}, {}, {}});
    auto& f = *holder;
    const auto run = run_online(f.setup.stream, *f.setup.g, f.setup.cc, f.setup.config, f.setup.init, f.setup.stepper);
    for (std::size_t k = 1; k <= N; ++k) f.costs.push_back(f.setup.stream.cost(k));
    f.rounds = collect_rounds(run.trajectory, f.costs, f.setup.config);
    const auto opt = solve_reference(averaged_problem(f.setup.stream, f.setup.g, f.setup.cc));
    // ctx points into the heap-allocated fixture, so it stays valid
    f.ctx = RoundContext{f.setup.g.get(), &f.setup.cc, f.setup.config, opt.x, opt.z};
    return holder;
}

const Fixture& fixture(std::size_t N) {
    static std::map<std::size_t, std::unique_ptr<Fixture>> cache;
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, make_fixture(N)).first;
    return *it->second;
}

void BM_AuditSerial(benchmark::State& state) {
    const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(audit_rounds_serial(f.ctx, f.rounds));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AuditParallel(benchmark::State& state) {
    const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(audit_rounds_parallel(f.ctx, f.rounds));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_AuditSerial)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
