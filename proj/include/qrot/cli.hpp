// Copyright 2026 The qrot Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrot/errors.hpp"
#include "qrot/multirot.hpp"
#include "qrot/rotation.hpp"
#include "qrot/simulator.hpp"

namespace qrot::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kNumeric = 4 };

/// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Argument helpers

/// "x,y,z" with optional surrounding whitespace; DomainError otherwise.
Vec3 parse_vec3(std::string_view text);

/// "ideal", "nisq-lite" or an explicit "p1,pc,pr" triple.
NoiseModel parse_noise(std::string_view text);

// ---------------------------------------------------------------------------
// Vectors file

struct VectorEntry {
  Vec3 vector;              // unit
  double original_norm = 1.0;
  std::size_t line = 0;     // line of the entry's opening bracket
};

/// JSON array of [x, y, z] triples. Non-unit entries are normalized and keep
/// their original norm; zero or non-finite entries raise ParseError.
std::vector<VectorEntry> parse_vectors(std::string_view text);
std::vector<VectorEntry> read_vectors_file(const std::string& path);

// ---------------------------------------------------------------------------
// Sweep

/// `count` log-spaced integers from lo to hi inclusive (rounded).
std::vector<std::uint64_t> log_shot_grid(std::uint64_t lo, std::uint64_t hi, std::size_t count);

struct Backend {
  std::string label;
  NoiseModel noise;
  bool mitigate = false;
};

struct SweepConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  std::vector<std::uint64_t> shots = log_shot_grid(200, 20000, 20);
  std::vector<Backend> backends = {{"ideal", NoiseModel::ideal(), false},
                                   {"nisq-lite", NoiseModel::nisq_lite(), false},
                                   {"nisq-lite+mitigation", NoiseModel::nisq_lite(), true}};
};

struct SweepRecord {
  std::string backend;
  std::size_t trial = 0;
  std::uint64_t shots = 0;
  std::string metric;  // gate_fidelity or angle_deg
  double value = 0.0;
};

/// Random rotation and input vector of a sweep trial.
struct TrialCase {
  RotationSpec spec{{0.0, 0.0, 1.0}, 0.0};
  Vec3 input;
};

/// Axis and input uniform on the sphere, angle uniform in [0, 2π).
TrialCase sweep_trial(std::uint64_t seed, std::size_t trial);

/// Rows ordered by backend, trial, shots, then gate_fidelity before angle_deg.
/// Tomography seeds depend on backend and trial only, so every grid point of
/// a trial reuses the same random stream.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

inline constexpr std::string_view kSweepCsvHeader = "backend,trial,shots,metric,value";
void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);

// ---------------------------------------------------------------------------
// Worked example

struct ExampleReport {
  RotationSpec spec{{0.0, 0.0, 1.0}, 0.0};
  Vec3 input;
  SphericalAngles input_angles;
  SphericalAngles axis_angles;
  std::vector<GateOp> preparation;
  std::vector<GateOp> rotation;
  ErParams classical;
  ErParams from_circuit;
  Vec3 oracle;
  Vec3 extracted;
  double angle_deg = 0.0;
  std::uint64_t shots = 0;
};

/// Axis (2,1,1)/√6, input (1,1,1)/√3, 90° rotation.
ExampleReport run_example(std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed,
                          bool mitigate);

}  // namespace qrot::cli
