// Copyright 2026 The narsrel Authors
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

// narsrel: runs the matching-to-sample protocol, or replays a script.
//
//   narsrel --seed 42 --out run/ --trace
//   narsrel --seeds 1..20 --out sweep/
//   narsrel --replay script.nars

#include <cstdint>
#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "narsrel/experiment.hpp"

namespace {

using narsrel::RunConfig;

std::vector<narsrel::PhaseId> parse_phases(const std::string& list) {
  std::vector<narsrel::PhaseId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    if (comma > start) {
      out.push_back(narsrel::parse_phase(list.substr(start, comma - start)));
    }
    start = comma + 1;
  }
  return out;
}

// "a..b", inclusive.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("seed range must look like a..b");
  }
  const std::uint64_t a = std::stoull(s.substr(0, dots));
  const std::uint64_t b = std::stoull(s.substr(dots + 2));
  if (b < a) throw std::invalid_argument("empty seed range " + s);
  return {a, b};
}

bool bc_perfect(const narsrel::RunResult& r) {
  bool any = false;
  for (const auto& m : r.metrics) {
    if (m.phase_id != narsrel::PhaseId::kBC) continue;
    any = true;
    if (m.correct != m.trials) return false;
  }
  return any;
}

int run_single(const RunConfig& cfg) {
  const narsrel::RunResult r = narsrel::run_experiment(cfg);
  narsrel::write_outputs(cfg, r);
  std::cout << narsrel::metrics_csv(r.metrics);
  return 0;
}

int run_sweep(const RunConfig& base, std::uint64_t first, std::uint64_t last) {
  std::vector<std::future<narsrel::RunResult>> jobs;
  std::vector<RunConfig> configs;
  for (std::uint64_t s = first; s <= last; ++s) {
    RunConfig c = base;
    c.seed = s;
    c.output_dir = base.output_dir / ("seed_" + std::to_string(s));
    configs.push_back(c);
  }
  for (const RunConfig& c : configs) {
    jobs.push_back(std::async(std::launch::async,
                              [c] { return narsrel::run_experiment(c); }));
  }
  int perfect = 0;
  std::cout << "seed,bc_perfect\n";
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const narsrel::RunResult r = jobs[i].get();
    narsrel::write_outputs(configs[i], r);
    const bool ok = bc_perfect(r);
    perfect += ok;
    std::cout << configs[i].seed << ',' << (ok ? 1 : 0) << '\n';
  }
  std::cerr << perfect << '/' << jobs.size() << " seeds with perfect BC\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational responding in a non-axiomatic reasoner"};
  RunConfig cfg;
  std::string out = ".";
  std::string phases;
  std::string replay_path;
  std::string seeds;

  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--blocks", cfg.blocks, "blocks per phase")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--trials-per-block", cfg.trials_per_block,
                 "trials per block")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_flag("--trace", cfg.trace, "write trace.log");
  app.add_option("--phases", phases,
                 "comma-separated phases, e.g. XY,YX,YZ,XZ,AB,AC,BC");
  app.add_option("--replay", replay_path, "replay a script and check it");
  app.add_option("--seeds", seeds, "run seeds a..b concurrently")
      ->excludes("--replay");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!replay_path.empty()) {
      const narsrel::ReplayResult r = narsrel::replay_file(replay_path);
      std::cout << r.trace;
      for (const auto& a : r.annotations) {
        std::cerr << (a.passed ? "PASS" : "FAIL") << " line " << a.line
                  << ": " << a.expected << '\n';
      }
      if (!r.ok()) {
        std::cerr << "error: " << r.error << '\n';
        return 1;
      }
      return 0;
    }
    cfg.output_dir = out;
    if (!phases.empty()) cfg.phases = parse_phases(phases);
    if (!seeds.empty()) {
      const auto [a, b] = parse_range(seeds);
      return run_sweep(cfg, a, b);
    }
    return run_single(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
