// Reference vs serial vs OpenMP kernels on a 2D periodic grid.
//   igrfv_bench --benchmark_filter=Jacobi

#include "igrfv/boundary.hpp"
#include "igrfv/igr.hpp"
#include "igrfv/integrate.hpp"
#include "igrfv/reference_kernels.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace igrfv;

namespace {

struct Problem {
    Grid grid;
    BoundarySpec bc;
    ConservedField field;
    EllipticLayout layout;
    std::vector<double> rho, source, sigma;
    double alpha = 0.0;
};

Problem make_problem(int m) {
    Problem p;
    p.grid = Grid::rect(0, 1, m, 0, 1, m);
    p.bc = BoundarySpec::uniform(2, BoundaryKind::periodic);
    p.field = ConservedField(p.grid, 1.4);
    const double tau = 2.0 * std::acos(-1.0);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            const double x = p.grid.center(0, i), y = p.grid.center(1, j);
            p.field.set_state(i, j, prim_to_cons({1.0 + 0.3 * std::sin(tau * x) * std::cos(tau * y),
                                                   {0.5 * std::cos(tau * x), 0.2 * std::sin(tau * y)}, 1.0},
                                                  p.field.eos()));
        }
    apply_boundary(p.field, p.bc, 0.0);
    p.layout = EllipticLayout::of(p.grid, p.bc);
    p.alpha = 2.0 * p.grid.max_spacing() * p.grid.max_spacing();
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) p.rho.push_back(p.field.at(kRho, i, j));
    p.source.resize(p.layout.size());
    igr_source_field(p.field, p.alpha, p.source, Exec::serial);
    p.sigma.assign(p.layout.size(), 0.0);
    return p;
}

void BM_JacobiReference(benchmark::State& st) {
    const Problem p = make_problem(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        auto next = reference::jacobi_sweep(p.layout, p.rho, p.source, p.sigma, p.alpha);
        benchmark::DoNotOptimize(next.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(p.layout.size()));
}

void jacobi(benchmark::State& st, Exec exec) {
    const Problem p = make_problem(static_cast<int>(st.range(0)));
    const EllipticOperator op(p.layout, p.rho, p.alpha);
    std::vector<double> next(p.layout.size());
    for (auto _ : st) {
        benchmark::DoNotOptimize(op.sweep(p.source, p.sigma, next, exec));
        benchmark::ClobberMemory();
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(p.layout.size()));
}

void BM_JacobiSerial(benchmark::State& st) { jacobi(st, Exec::serial); }
void BM_JacobiParallel(benchmark::State& st) { jacobi(st, Exec::parallel); }

SchemeConfig bench_scheme(int kind) {
    return default_scheme_config(kind == 0 ? Scheme::plain : Scheme::weno5, 2);
}

void BM_RhsReference(benchmark::State& st) {
    const Problem p = make_problem(static_cast<int>(st.range(0)));
    const SchemeConfig cfg = bench_scheme(static_cast<int>(st.range(1)));
    for (auto _ : st) {
        ConservedField r = reference::semi_discrete_rhs(p.field, cfg, {});
        benchmark::DoNotOptimize(r.data(kRho));
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(p.grid.interior_count()));
}

void rhs(benchmark::State& st, Exec exec) {
    Problem p = make_problem(static_cast<int>(st.range(0)));
    const SchemeConfig cfg = bench_scheme(static_cast<int>(st.range(1)));
    RhsEvaluator op(p.grid, cfg, p.bc, exec);
    ConservedField out(p.grid, 1.4);
    for (auto _ : st) {
        op.evaluate(p.field, 0.0, out);
        benchmark::DoNotOptimize(out.data(kRho));
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(p.grid.interior_count()));
}

void BM_RhsSerial(benchmark::State& st) { rhs(st, Exec::serial); }
void BM_RhsParallel(benchmark::State& st) { rhs(st, Exec::parallel); }

// IGR right-hand side including the warm Sigma solve.
void igr_rhs(benchmark::State& st, Exec exec) {
    Problem p = make_problem(static_cast<int>(st.range(0)));
    RhsEvaluator op(p.grid, default_scheme_config(Scheme::igr, 2), p.bc, exec);
    ConservedField out(p.grid, 1.4);
    op.evaluate(p.field, 0.0, out);
    for (auto _ : st) {
        op.evaluate(p.field, 0.0, out);
        benchmark::DoNotOptimize(out.data(kRho));
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(p.grid.interior_count()));
}

void BM_IgrRhsSerial(benchmark::State& st) { igr_rhs(st, Exec::serial); }
void BM_IgrRhsParallel(benchmark::State& st) { igr_rhs(st, Exec::parallel); }

} // namespace

BENCHMARK(BM_JacobiReference)->Arg(128)->Arg(512);
BENCHMARK(BM_JacobiSerial)->Arg(128)->Arg(512);
BENCHMARK(BM_JacobiParallel)->Arg(128)->Arg(512);
// second argument: 0 plain linear5 + LF, 1 component WENO5 + LF
BENCHMARK(BM_RhsReference)->Args({128, 0})->Args({128, 1});
BENCHMARK(BM_RhsSerial)->Args({128, 0})->Args({128, 1});
BENCHMARK(BM_RhsParallel)->Args({128, 0})->Args({128, 1});
BENCHMARK(BM_IgrRhsSerial)->Arg(128);
BENCHMARK(BM_IgrRhsParallel)->Arg(128);

BENCHMARK_MAIN();
