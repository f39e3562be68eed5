#pragma once

// Umbrella header: WOA, GWO and the WOAGWO hybrid with the benchmark
// catalog, the pressure-vessel problem, run statistics and the experiment
// harness.

#include "prng.hpp"
#include "search_space.hpp"
#include "problem.hpp"
#include "benchmarks.hpp"
#include "pressure_vessel.hpp"
#include "kernels.hpp"
#include "optimizer.hpp"
#include "stats.hpp"
#include "experiment.hpp"
#include "report.hpp"
#include "config_io.hpp"
