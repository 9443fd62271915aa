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

#include "narsrel/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace narsrel {

std::pair<double, double> entailment_confidence(
    std::span<const EntailmentHypothesis> hyps) {
  const Term cues[] = {Term::atom(std::string(vocab::kSame)),
                       Term::atom(std::string(vocab::kOpposite))};

  auto slot = [&](EntailmentKind kind, const std::vector<Term>& premises) {
    const EntailmentHypothesis* best = nullptr;
    for (const EntailmentHypothesis& h : hyps) {
      if (h.kind != kind || h.premise_cues() != premises) continue;
      if (!best || expectation(h.truth) > expectation(best->truth)) best = &h;
    }
    return best ? best->truth.confidence : 0.0;
  };

  double mutual = 0.0;
  double combinatorial = 0.0;
  for (const Term& a : cues) {
    mutual += slot(EntailmentKind::kMutual, {a});
    for (const Term& b : cues) {
      combinatorial += slot(EntailmentKind::kCombinatorial, {a, b});
    }
  }
  return {mutual / 2.0, combinatorial / 4.0};
}

RunResult run_experiment(const RunConfig& cfg) {
  if (cfg.blocks <= 0) throw std::invalid_argument("blocks must be positive");
  if (cfg.phases.empty()) throw std::invalid_argument("no phases selected");

  const Networks nets = build_networks();
  std::mt19937_64 env_rng(cfg.seed);
  // The engine draws from its own stream so trial order does not depend on
  // how often it babbles.
  Engine engine(EngineConfig{}, cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  RunResult result;
  std::ostringstream script;
  Tick now = 0;

  for (PhaseId phase : cfg.phases) {
    PhaseConfig pc = default_phase(phase);
    pc.blocks = cfg.blocks;
    pc.trials_per_block = cfg.trials_per_block;
    const StimulusNetwork& net = network_for(phase, nets);

    PhaseSummary summary;
    summary.phase_id = phase;
    const std::size_t feedback_before = engine.feedback_processed();
    const std::size_t babbles_before = engine.babbles();
    script << "// phase " << phase_name(phase) << '\n';

    for (int b = 0; b < pc.blocks; ++b) {
      const std::vector<Trial> block = generate_block(pc, net, b, env_rng);
      BlockMetrics m;
      m.phase_id = phase;
      m.block_idx = b;
      m.trials = static_cast<int>(block.size());
      const std::size_t block_babbles = engine.babbles();
      for (const Trial& trial : block) {
        std::optional<Decision> decision;
        for (const SentenceNode& s : present(trial)) {
          if (s.punctuation == Punctuation::kGoal) {
            // Emitted before the goal so the script replays this choice.
            decision = engine.ingest(s, ++now);
            script << "!action " << side_name(decision->action.side) << '\n';
          }
          else {
            engine.ingest(s, ++now);
          }
          script << print_canonical(s) << '\n';
        }
        const Outcome outcome = judge(trial, decision->action, pc.feedback);
        engine.process_feedback(outcome, ++now);
        script << "!feedback " << outcome_name(outcome) << '\n';
        if (decision->action.side == trial.correct_side) ++m.correct;
        result.trials.push_back(trial);
      }
      m.babbles = static_cast<int>(engine.babbles() - block_babbles);
      m.accuracy = static_cast<double>(m.correct) / m.trials;
      const auto hyps = entailment_hypotheses(engine.memory());
      std::tie(m.mean_conf_mutual, m.mean_conf_combinatorial) =
          entailment_confidence(hyps);
      result.metrics.push_back(m);
    }
    summary.feedback_processed = engine.feedback_processed() - feedback_before;
    summary.babbles = engine.babbles() - babbles_before;
    summary.named = named_relations(engine.memory());
    summary.hypotheses = entailment_hypotheses(engine.memory());
    result.phases.push_back(std::move(summary));
  }
  if (cfg.trace) result.trace = engine.trace().str();
  result.script = script.str();
  return result;
}

std::string metrics_csv(std::span<const BlockMetrics> metrics) {
  std::string out(kMetricsHeader);
  out += '\n';
  char buf[128];
  for (const BlockMetrics& m : metrics) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.4f,%.6f,%.6f\n",
                  std::string(phase_name(m.phase_id)).c_str(), m.block_idx + 1,
                  m.accuracy, m.mean_conf_mutual, m.mean_conf_combinatorial);
    out += buf;
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream f(path, std::ios::binary);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_outputs(const RunConfig& cfg, const RunResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + cfg.output_dir.string() +
                             ": " + ec.message());
  }
  write_file(cfg.output_dir / "metrics.csv", metrics_csv(result.metrics));
  write_file(cfg.output_dir / "replay.nars", result.script);
  if (cfg.trace) write_file(cfg.output_dir / "trace.log", result.trace);
}

ReplayResult replay(std::istream& script, std::uint64_t seed) {
  Engine engine(EngineConfig{}, seed);
  ReplayResult r;
  Tick now = 0;
  std::string raw;
  int lineno = 0;

  auto fail = [&](std::string msg) {
    r.failed_line = lineno;
    r.error = "line " + std::to_string(lineno) + ": " + std::move(msg);
  };

  while (std::getline(script, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    try {
      if (line.starts_with("//expect")) {
        Annotation a{lineno, std::string(trim(line.substr(8))), false};
        a.passed = engine.trace().contains(a.expected) ||
                   engine.trace().contains(normalize_whitespace(a.expected));
        r.annotations.push_back(a);
        if (!a.passed) {
          fail("expected trace to contain '" + a.expected + "'");
          break;
        }
      } else if (line.starts_with("//")) {
        continue;
      } else if (line.starts_with("!action")) {
        engine.force_next_action(parse_side(trim(line.substr(7))));
      } else if (line.starts_with("!feedback")) {
        engine.process_feedback(parse_outcome(trim(line.substr(9))), ++now);
      } else {
        engine.ingest(parse_sentence(line), ++now);
      }
    } catch (const std::exception& e) {
      fail(e.what());
      break;
    }
  }
  r.trace = engine.trace().str();
  return r;
}

ReplayResult replay_file(const std::filesystem::path& path,
                         std::uint64_t seed) {
  std::ifstream f(path);
  if (!f) {
    ReplayResult r;
    r.failed_line = -1;
    r.error = "cannot open " + path.string();
    return r;
  }
  return replay(f, seed);
}

}  // namespace narsrel
