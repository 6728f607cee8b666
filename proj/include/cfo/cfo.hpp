#pragma once

// Umbrella header for the library part that has no third-party dependency.
// Reporting (cfo/report.hpp) additionally needs nlohmann/json on the include
// path.

#include "cfo/benchmarks.hpp"
#include "cfo/decision_space.hpp"
#include "cfo/diagnostics.hpp"
#include "cfo/dynamics.hpp"
#include "cfo/error.hpp"
#include "cfo/golden.hpp"
#include "cfo/params.hpp"
#include "cfo/run.hpp"
#include "cfo/sweep.hpp"
