// Benchmark: serial reference vs OpenMP frontier-parallel flip-graph
// enumeration on the standard polygon families.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stardec/explorer.hpp"

using namespace stardec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

struct Workload {
    std::string name;
    CyclicPolygon polygon;
    BigInt expected_nodes;
};

void run(const Workload& w) {
    auto t0 = Clock::now();
    FlipGraph serial = enumerate_maximal_serial(w.polygon);
    auto t1 = Clock::now();
    FlipGraph parallel = enumerate_maximal(w.polygon);
    auto t2 = Clock::now();

    bool equal = serial.nodes == parallel.nodes && serial.edges == parallel.edges;
    bool counted = BigInt(static_cast<long long>(serial.node_count())) == w.expected_nodes;
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-12s %8zu nodes %9zu edges   serial %8.3fs   parallel %8.3fs   speedup %.2fx   %s\n",
                w.name.c_str(), serial.node_count(), serial.edge_count(), ts, tp, tp > 0 ? ts / tp : 0.0,
                equal && counted ? "match" : "MISMATCH");
    if (!equal || !counted)
        std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    bool large = argc > 1 && std::string(argv[1]) == "--large";
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    // Expected node counts come from the exact counting oracles, so a run
    // doubles as a larger-scale correctness check.
    std::vector<Workload> workloads = {
        {"convex-9", convex_polygon(9), catalan(7)},
        {"convex-10", convex_polygon(10), catalan(8)},
        {"P_9^2", regular_star_polygon(9, 2), jonsson_count(9, 2)},
        {"P_11^3", regular_star_polygon(11, 3), jonsson_count(11, 3)},
    };
    if (large) {
        workloads.push_back({"convex-11", convex_polygon(11), catalan(9)});
        workloads.push_back({"P_11^2", regular_star_polygon(11, 2), jonsson_count(11, 2)});
    }
    for (const Workload& w : workloads)
        run(w);
    return 0;
}
