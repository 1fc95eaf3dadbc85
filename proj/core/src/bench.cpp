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

#include "vesta/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace vesta {

std::vector<BenchRecord> run_bench(const ScalarGrid& g, const IsoConfig& iso,
                                   const BenchConfig& config) {
    std::vector<BenchRecord> records;
    for (Engine engine : config.engines) {
        const bool mc = engine == Engine::mc_classic || engine == Engine::mc_extended;
        for (PoaMode mode : config.modes) {
            if (mc && mode != PoaMode::disconnect) continue;
            for (Resolution resolution : config.resolutions) {
                if (mc && resolution != Resolution::low) continue;

                ExtractOptions options;
                options.engine = engine;
                options.mode = mode;
                options.resolution = resolution;
                options.displace = config.displace;
                options.threads = config.threads;

                BenchRecord rec;
                rec.engine = engine;
                rec.mode = mode;
                rec.resolution = resolution;
                rec.threads = config.threads;
                rec.repeats = config.repeats < 1 ? 1 : config.repeats;

                double sum = 0;
                double sum_sq = 0;
                for (int r = 0; r < rec.repeats; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    ExtractResult result = extract(g, iso, options);
                    const auto stop = std::chrono::steady_clock::now();
                    const double s = std::chrono::duration<double>(stop - start).count();
                    sum += s;
                    sum_sq += s * s;
                    if (r == 0) {
                        rec.census = census_of(result.cycles);
                        rec.cycle_sum = static_cast<long>(result.cycles.size());
                        rec.points = result.mesh.points.size();
                        rec.triangles = result.mesh.triangles.size();
                    }
                }
                rec.mean_seconds = sum / rec.repeats;
                if (rec.repeats > 1) {
                    const double var =
                        (sum_sq - sum * sum / rec.repeats) / (rec.repeats - 1);
                    rec.sigma_seconds = var > 0 ? std::sqrt(var) : 0;
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

std::string format_mean_sigma(double mean, double sigma, int repeats) {
    std::ostringstream out;
    if (repeats < 2 || sigma <= 0) {
        out << std::fixed << std::setprecision(3) << mean;
        return out.str();
    }
    int e = static_cast<int>(std::floor(std::log10(sigma)));
    long digit = std::lround(sigma / std::pow(10.0, e));
    if (digit >= 10) {
        digit = 1;
        ++e;
    }
    if (e < 0) {
        out << std::fixed << std::setprecision(-e) << mean << '(' << digit << ')';
    } else {
        // Uncertainty at or above one: round the mean to the same power of
        // ten and spell the sigma out in full.
        const double scale = std::pow(10.0, e);
        out << std::fixed << std::setprecision(0) << std::llround(mean / scale) * scale << '('
            << digit * scale << ')';
    }
    return out.str();
}

std::string format_bench_table(const std::vector<BenchRecord>& records) {
    static constexpr int kLengths[] = {3, 4, 5, 6, 7, 8, 9, 12};

    std::vector<std::string> labels;
    labels.push_back("");
    for (int len : kLengths) labels.push_back(std::to_string(len) + "-cycles");
    labels.push_back("Cycle Sum");
    labels.push_back("Points");
    labels.push_back("Triangles");
    labels.push_back("Time [s]");

    std::vector<std::vector<std::string>> columns;
    for (const BenchRecord& r : records) {
        std::vector<std::string> col;
        std::string title = engine_name(r.engine);
        title += ' ';
        title += mode_name(r.mode);
        title += ' ';
        title += resolution_name(r.resolution);
        if (r.threads > 1) title += " t" + std::to_string(r.threads);
        col.push_back(title);
        for (int len : kLengths) {
            if (len > 7 && r.mode != PoaMode::mixed) {
                col.push_back("N/A");
                continue;
            }
            const auto it = r.census.find(len);
            col.push_back(std::to_string(it == r.census.end() ? 0 : it->second));
        }
        col.push_back(std::to_string(r.cycle_sum));
        col.push_back(std::to_string(r.points));
        col.push_back(std::to_string(r.triangles));
        col.push_back(format_mean_sigma(r.mean_seconds, r.sigma_seconds, r.repeats));
        columns.push_back(std::move(col));
    }

    size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    std::vector<size_t> widths(columns.size(), 0);
    for (size_t c = 0; c < columns.size(); ++c)
        for (const auto& cell : columns[c]) widths[c] = std::max(widths[c], cell.size());

    std::ostringstream out;
    for (size_t row = 0; row < labels.size(); ++row) {
        out << std::left << std::setw(static_cast<int>(label_width)) << labels[row];
        for (size_t c = 0; c < columns.size(); ++c)
            out << "  " << std::right << std::setw(static_cast<int>(widths[c]))
                << columns[c][row];
        out << '\n';
        if (row == 0) {
            out << std::string(label_width, '-');
            for (size_t c = 0; c < columns.size(); ++c) out << "  " << std::string(widths[c], '-');
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace vesta
