// Copyright 2026 The Vesta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "vesta/extract.hpp"

namespace vesta {

// Extraction timing harness.  The stopwatch covers cycle tracing and
// point/triangle list construction; loading and file output are outside
// it.  Runs are repeated and reported as mean with the standard deviation
// in parentheses over the last shown digit, e.g. 20.44(7).

struct BenchRecord {
    Engine engine;
    PoaMode mode;
    Resolution resolution;
    int threads = 1;
    int repeats = 1;
    CycleCensus census;
    long cycle_sum = 0;
    size_t points = 0;
    size_t triangles = 0;
    double mean_seconds = 0;
    double sigma_seconds = 0;
};

struct BenchConfig {
    std::vector<Engine> engines;
    std::vector<PoaMode> modes;
    std::vector<Resolution> resolutions;
    int repeats = 3;
    int threads = 1;
    bool displace = true;
};

// Every valid engine/mode/resolution combination of the config, in config
// order; marching cubes combinations other than low/disconnect are skipped.
std::vector<BenchRecord> run_bench(const ScalarGrid& g, const IsoConfig& iso,
                                   const BenchConfig& config);

// "20.44(7)": sigma rounded to one significant digit, mean shown to the
// matching decimal.  Plain fixed mean when repeats < 2.
std::string format_mean_sigma(double mean, double sigma, int repeats);

// One column per record; rows for each cycle length (N/A where a mode
// cannot produce that length), cycle sum, points, triangles, and time.
std::string format_bench_table(const std::vector<BenchRecord>& records);

}  // namespace vesta
