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

#include "qrot/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrot/rng.hpp"
#include "qrot/tomography.hpp"

namespace qrot::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr double kRadToDeg = 180.0 / kPi;

std::string fixed(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v == 0.0 ? 0.0 : v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string show(Vec3 v, int precision = 6) {
  return "(" + fixed(v.x, precision) + ", " + fixed(v.y, precision) + ", " + fixed(v.z, precision) + ")";
}

std::string show(const ErParams& p) {
  return "a=" + fixed(p.a) + " b=" + fixed(p.b) + " c=" + fixed(p.c) + " d=" + fixed(p.d);
}

Json to_json(Vec3 v) { return Json::array({v.x, v.y, v.z}); }

Json to_json(const ErParams& p) { return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}}; }

Json to_json(const NoiseModel& n) {
  return Json{{"depol_1q", n.depol_1q}, {"depol_ctrl", n.depol_ctrl}, {"readout_flip", n.readout_flip}};
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(std::string_view text, const char* what) {
  const std::string s = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw DomainError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, std::size_t count, const char* what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(parse_number(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != count) {
    throw DomainError(std::string("invalid ") + what + ": expected " + std::to_string(count) +
                      " comma-separated numbers, got '" + std::string(text) + "'");
  }
  return values;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing " + path);
}

std::vector<GateOp> preparation_ops(Vec3 v) {
  const SphericalAngles a = vec_to_angles(v);
  return {ry(a.theta, 0), rz(a.phi, 0)};
}

Circuit rotate_circuit(Vec3 input, const RotationSpec& spec) {
  Circuit c(1);
  c.append(preparation_ops(input));
  c.append(axis_rotation_sequence(spec, 0));
  return c;
}

// Settings shared by every subcommand.
struct Globals {
  std::uint64_t seed = 0;
  std::optional<std::uint32_t> shots;
  std::string noise = "ideal";
  bool mitigate = false;
  std::string out;
  std::string format;
  bool degrees = false;
  unsigned workers = 1;

  NoiseModel noise_model() const { return parse_noise(noise); }
  double angle(double value) const { return degrees ? value / kRadToDeg : value; }
  std::uint64_t shots_or(std::uint64_t fallback) const { return shots ? *shots : fallback; }

  std::string artifact_format(const char* fallback) const { return format.empty() ? fallback : format; }
};

void emit_json(const Globals& g, const Json& doc, std::ostream& out) {
  if (g.artifact_format("json") != "json") throw DomainError("this command only writes json artifacts");
  if (g.out.empty()) return;
  write_file(g.out, doc.dump(2) + "\n");
  out << "wrote " << g.out << "\n";
}

RotationSpec spec_from(const Globals& g, const std::string& axis, double angle) {
  return RotationSpec::from_axis(parse_vec3(axis), g.angle(angle));
}

void warn_normalized(std::ostream& err, const std::string& what, double original_norm) {
  if (std::fabs(original_norm - 1.0) > kUnitTolerance) {
    err << "warning: " << what << " had norm " << general(original_norm) << "; normalized\n";
  }
}

// ---------------------------------------------------------------------------

struct ErpArgs {
  std::string axis;
  double angle = 0.0;
};

void cmd_erp(const Globals& g, const ErpArgs& a, std::ostream& out) {
  const NoiseModel noise = g.noise_model();
  const RotationSpec spec = spec_from(g, a.axis, a.angle);
  const ErParams classical = erp_from_spec(spec).canonical();
  const ErParams circuit = erp_from_unitary(axis_rotation_unitary(spec));

  out << "axis        " << show(spec.axis()) << "\n";
  out << "angle       " << fixed(spec.angle()) << " rad (" << fixed(spec.angle() * kRadToDeg, 4) << " deg)\n";
  out << "classical   " << show(classical) << "\n";
  out << "circuit     " << show(circuit) << "\n";

  Json doc{{"command", "erp"},
           {"axis", to_json(spec.axis())},
           {"angle_rad", spec.angle()},
           {"classical", to_json(classical)},
           {"circuit", to_json(circuit)}};
  if (g.shots) {
    const ErParams tomo = erp_from_tomography(spec, *g.shots, noise, g.seed, g.mitigate);
    const ErParams delta{tomo.a - classical.a, tomo.b - classical.b, tomo.c - classical.c,
                         tomo.d - classical.d};
    out << "tomography  " << show(tomo) << "  (" << *g.shots << " shots, seed " << g.seed << ")\n";
    out << "delta       " << show(delta) << "\n";
    doc["tomography"] = to_json(tomo);
    doc["delta"] = to_json(delta);
    doc["shots"] = *g.shots;
    doc["seed"] = g.seed;
    doc["noise"] = to_json(noise);
    doc["mitigate"] = g.mitigate;
  }
  emit_json(g, doc, out);
}

struct RotateArgs {
  std::string vector;
  std::string axis;
  double angle = 0.0;
};

void cmd_rotate(const Globals& g, const RotateArgs& a, std::ostream& out, std::ostream& err) {
  const NoiseModel noise = g.noise_model();
  const Normalized input = normalize(parse_vec3(a.vector));
  const RotationSpec spec = spec_from(g, a.axis, a.angle);
  const std::uint64_t shots = g.shots_or(20000);
  warn_normalized(err, "input vector", input.original_norm);

  const Vec3 oracle = rodrigues_rotate(spec, input.unit);
  const StateTomographyResult r =
      state_tomography(rotate_circuit(input.unit, spec), 0, shots, noise, g.seed, g.mitigate);
  const double diff = angle_between(r.bloch, oracle) * kRadToDeg;

  out << "input       " << show(input.unit) << "\n";
  out << "axis        " << show(spec.axis()) << "\n";
  out << "angle       " << fixed(spec.angle()) << " rad (" << fixed(spec.angle() * kRadToDeg, 4) << " deg)\n";
  out << "oracle      " << show(oracle) << "\n";
  out << "extracted   " << show(r.bloch) << "  (" << shots << " shots per basis, seed " << g.seed << ")\n";
  out << "angle diff  " << fixed(diff, 4) << " deg\n";

  emit_json(g,
            Json{{"command", "rotate"},
                 {"input", to_json(input.unit)},
                 {"input_norm", input.original_norm},
                 {"axis", to_json(spec.axis())},
                 {"angle_rad", spec.angle()},
                 {"shots", shots},
                 {"seed", g.seed},
                 {"noise", to_json(noise)},
                 {"mitigate", g.mitigate},
                 {"oracle", to_json(oracle)},
                 {"extracted", to_json(r.bloch)},
                 {"raw_bloch", to_json(r.raw_bloch)},
                 {"angle_deg", diff}},
            out);
}

struct SweepArgs {
  std::size_t trials = 20;
  std::uint64_t shots_min = 200;
  std::uint64_t shots_max = 20000;
  std::size_t points = 20;
};

void cmd_sweep(const Globals& g, const SweepArgs& a, std::ostream& out) {
  SweepConfig config;
  config.seed = g.seed;
  config.trials = a.trials;
  if (config.trials < 1) throw DomainError("--trials must be at least 1");
  if (g.shots) {
    config.shots = {*g.shots};
  } else {
    config.shots = log_shot_grid(a.shots_min, a.shots_max, a.points);
  }
  for (const std::uint64_t s : config.shots) {
    if (s < kMinTomographyShots) {
      throw DomainError("shot counts must be at least " + std::to_string(kMinTomographyShots));
    }
  }
  const NoiseModel noise = g.noise_model();
  config.backends = {{"ideal", NoiseModel::ideal(), false}};
  if (!noise.is_noiseless()) {
    const std::string label = trim(g.noise) == "nisq-lite" ? "nisq-lite" : "custom";
    config.backends.push_back({label, noise, false});
    config.backends.push_back({label + "+mitigation", noise, true});
  }

  const std::string format = g.artifact_format("csv");
  if (format != "csv" && format != "json") throw DomainError("--format must be json or csv");
  // Validate the output path before the long computation.
  if (!g.out.empty()) write_file(g.out, "");

  const std::vector<SweepRecord> records = run_sweep(config);
  std::ostringstream buf;
  if (format == "csv") {
    write_sweep_csv(records, buf);
  } else {
    Json rows = Json::array();
    for (const SweepRecord& r : records) {
      rows.push_back(Json{{"backend", r.backend},
                          {"trial", r.trial},
                          {"shots", r.shots},
                          {"metric", r.metric},
                          {"value", r.value}});
    }
    buf << rows.dump(2) << "\n";
  }
  if (g.out.empty()) {
    out << buf.str();
  } else {
    write_file(g.out, buf.str());
    out << "wrote " << records.size() << " records to " << g.out << "\n";
  }
}

struct MultiArgs {
  std::string vectors;
  std::string axis;
  double angle = 0.0;
};

void cmd_multi(const Globals& g, const MultiArgs& a, std::ostream& out, std::ostream& err) {
  const NoiseModel noise = g.noise_model();
  const RotationSpec spec = spec_from(g, a.axis, a.angle);
  const std::vector<VectorEntry> entries = read_vectors_file(a.vectors);
  std::vector<Vec3> vectors;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    warn_normalized(err, "entry " + std::to_string(i + 1) + " (line " + std::to_string(entries[i].line) + ")",
                    entries[i].original_norm);
    vectors.push_back(entries[i].vector);
  }
  const std::uint64_t k = g.shots_or(20000);
  const MultiRotationPlan plan{VectorBatch(vectors), spec};
  const std::vector<ExtractedVector> extracted = extract_all(plan, k, noise, g.seed, g.workers);

  out << "vectors " << vectors.size() << ", control qubits " << plan.batch.control_qubits() << ", "
      << k * plan.batch.branches() << " shots per basis\n";
  Json rows = Json::array();
  for (const ExtractedVector& e : extracted) {
    const Vec3 input = vectors[e.index - 1];
    const Vec3 oracle = rodrigues_rotate(spec, input);
    Json row{{"index", e.index}, {"input", to_json(input)}, {"oracle", to_json(oracle)}};
    out << "  [" << e.index << "] oracle " << show(oracle);
    if (e.vector) {
      const double diff = angle_between(*e.vector, oracle) * kRadToDeg;
      row["extracted"] = to_json(*e.vector);
      row["angle_deg"] = diff;
      out << " extracted " << show(*e.vector) << " diff " << fixed(diff, 4) << " deg";
    } else {
      row["extracted"] = nullptr;
      row["angle_deg"] = nullptr;
      row["error"] = e.error;
      out << " error: " << e.error;
    }
    row["samples"] = e.samples;
    row["under_sampled"] = e.under_sampled;
    out << " samples " << e.total_samples() << (e.under_sampled ? " (under-sampled)" : "") << "\n";
    rows.push_back(std::move(row));
  }
  emit_json(g,
            Json{{"command", "multi"},
                 {"axis", to_json(spec.axis())},
                 {"angle_rad", spec.angle()},
                 {"shots_per_vector", k},
                 {"seed", g.seed},
                 {"noise", to_json(noise)},
                 {"control_qubits", plan.batch.control_qubits()},
                 {"entries", rows}},
            out);
}

void cmd_example(const Globals& g, std::ostream& out) {
  const NoiseModel noise = g.noise_model();
  const std::uint64_t shots = g.shots_or(20000);
  const ExampleReport r = run_example(shots, noise, g.seed, g.mitigate);

  out << "axis n      " << show(r.spec.axis()) << "  = (2, 1, 1)/sqrt(6)\n";
  out << "vector x    " << show(r.input) << "  = (1, 1, 1)/sqrt(3)\n";
  out << "angle       " << fixed(r.spec.angle() * kRadToDeg, 1) << " deg (" << fixed(r.spec.angle(), 4)
      << " rad)\n";
  out << "init angles theta=" << fixed(r.input_angles.theta, 4) << " phi=" << fixed(r.input_angles.phi, 4)
      << "\n";
  out << "axis angles theta=" << fixed(r.axis_angles.theta, 4) << " phi=" << fixed(r.axis_angles.phi, 4)
      << "\n";
  out << "preparation\n";
  for (const GateOp& op : r.preparation) out << "  " << op.describe(4) << "\n";
  out << "rotation\n";
  for (const GateOp& op : r.rotation) out << "  " << op.describe(4) << "\n";
  out << "classical   " << show(r.classical) << "\n";
  out << "circuit     " << show(r.from_circuit) << "\n";
  out << "oracle      " << show(r.oracle) << "\n";
  out << "extracted   " << show(r.extracted) << "  (" << r.shots << " shots per basis, seed " << g.seed
      << ")\n";
  out << "angle diff  " << fixed(r.angle_deg, 4) << " deg\n";

  Json prep = Json::array();
  for (const GateOp& op : r.preparation) prep.push_back(op.describe(6));
  Json rot = Json::array();
  for (const GateOp& op : r.rotation) rot.push_back(op.describe(6));
  emit_json(g,
            Json{{"command", "example"},
                 {"axis", to_json(r.spec.axis())},
                 {"input", to_json(r.input)},
                 {"angle_rad", r.spec.angle()},
                 {"angle_deg", r.spec.angle() * kRadToDeg},
                 {"init_angles", {{"theta", r.input_angles.theta}, {"phi", r.input_angles.phi}}},
                 {"axis_angles", {{"theta", r.axis_angles.theta}, {"phi", r.axis_angles.phi}}},
                 {"preparation", prep},
                 {"rotation", rot},
                 {"classical", to_json(r.classical)},
                 {"circuit", to_json(r.from_circuit)},
                 {"oracle", to_json(r.oracle)},
                 {"extracted", to_json(r.extracted)},
                 {"angle_diff_deg", r.angle_deg},
                 {"shots", r.shots},
                 {"seed", g.seed},
                 {"noise", to_json(noise)}},
            out);
}

}  // namespace

// ---------------------------------------------------------------------------

Vec3 parse_vec3(std::string_view text) {
  const std::vector<double> v = parse_list(text, 3, "vector");
  return {v[0], v[1], v[2]};
}

NoiseModel parse_noise(std::string_view text) {
  const std::string s = trim(text);
  if (s == "ideal") return NoiseModel::ideal();
  if (s == "nisq-lite") return NoiseModel::nisq_lite();
  if (s.find(',') == std::string::npos) {
    throw DomainError("unknown noise preset '" + s + "' (expected ideal, nisq-lite or p1,pc,pr)");
  }
  const std::vector<double> v = parse_list(s, 3, "noise triple");
  NoiseModel n{v[0], v[1], v[2]};
  n.validate();
  return n;
}

std::vector<std::uint64_t> log_shot_grid(std::uint64_t lo, std::uint64_t hi, std::size_t count) {
  if (lo < 1 || hi < lo || count < 1) throw DomainError("invalid shot grid");
  if (count == 1) return {lo};
  std::vector<std::uint64_t> grid;
  grid.reserve(count);
  const double ratio = static_cast<double>(hi) / static_cast<double>(lo);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    grid.push_back(static_cast<std::uint64_t>(std::llround(static_cast<double>(lo) * std::pow(ratio, t))));
  }
  grid.back() = hi;
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

TrialCase sweep_trial(std::uint64_t seed, std::size_t trial) {
  rng::Stream s(rng::derive(seed, rng::tag_of("sweep-trial")), trial);
  const auto sphere = [&s] {
    const double z = 2.0 * s.uniform() - 1.0;
    const double phi = 2.0 * kPi * s.uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return normalize(Vec3{r * std::cos(phi), r * std::sin(phi), z}).unit;
  };
  const Vec3 axis = sphere();
  const double angle = 2.0 * kPi * s.uniform();
  const Vec3 input = sphere();
  return {RotationSpec(axis, angle), input};
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  if (config.trials < 1) throw DomainError("sweep needs at least one trial");
  if (config.shots.empty()) throw DomainError("sweep needs at least one shot count");
  const std::uint64_t tomo_root = rng::derive(config.seed, rng::tag_of("sweep-tomography"));
  std::vector<SweepRecord> records;
  records.reserve(config.backends.size() * config.trials * config.shots.size() * 2);
  for (const Backend& backend : config.backends) {
    backend.noise.validate();
    for (std::size_t t = 0; t < config.trials; ++t) {
      const TrialCase tc = sweep_trial(config.seed, t);
      const ComplexMatrix exact = axis_rotation_unitary(tc.spec);
      const Vec3 oracle = rodrigues_rotate(tc.spec, tc.input);
      const Circuit circuit = rotate_circuit(tc.input, tc.spec);
      const std::uint64_t trial_seed = rng::derive(tomo_root, t);
      for (const std::uint64_t shots : config.shots) {
        const ProcessTomographyResult p = process_tomography(tc.spec, shots, backend.noise,
                                                             rng::derive(trial_seed, 0), backend.mitigate);
        records.push_back({backend.label, t, shots, "gate_fidelity", gate_fidelity(exact, p.unitary)});
        const StateTomographyResult s =
            state_tomography(circuit, 0, shots, backend.noise, rng::derive(trial_seed, 1), backend.mitigate);
        records.push_back({backend.label, t, shots, "angle_deg", angle_between(s.bloch, oracle) * kRadToDeg});
      }
    }
  }
  return records;
}

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << kSweepCsvHeader << "\n";
  for (const SweepRecord& r : records) {
    out << r.backend << "," << r.trial << "," << r.shots << "," << r.metric << "," << general(r.value) << "\n";
  }
}

ExampleReport run_example(std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed, bool mitigate) {
  ExampleReport r;
  r.spec = RotationSpec::from_axis({2.0, 1.0, 1.0}, kPi / 2.0);
  r.input = normalize({1.0, 1.0, 1.0}).unit;
  r.input_angles = vec_to_angles(r.input);
  r.axis_angles = vec_to_angles(r.spec.axis());
  r.preparation = preparation_ops(r.input);
  r.rotation = axis_rotation_sequence(r.spec, 0);
  r.classical = erp_from_spec(r.spec).canonical();
  r.from_circuit = erp_from_unitary(axis_rotation_unitary(r.spec));
  r.oracle = rodrigues_rotate(r.spec, r.input);
  r.shots = shots;
  r.extracted = state_tomography(rotate_circuit(r.input, r.spec), 0, shots, noise, seed, mitigate).bloch;
  r.angle_deg = angle_between(r.extracted, r.oracle) * kRadToDeg;
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit rotations by Euler-Rodrigues parameters", "qrot"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed (u64)");
  app.add_option("--shots", g.shots, "Shots per circuit (per vector for multi)")->check(CLI::PositiveNumber);
  app.add_option("--noise", g.noise, "ideal, nisq-lite or p1,pc,pr")->capture_default_str();
  app.add_flag("--mitigate", g.mitigate, "Apply readout-error mitigation");
  app.add_option("--out", g.out, "Artifact output path");
  app.add_option("--format", g.format, "Artifact format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--degrees", g.degrees, "Read --angle in degrees");
  app.add_option("--workers", g.workers, "Sampling threads")->check(CLI::Range(1, 256));

  ErpArgs erp;
  CLI::App* erp_cmd = app.add_subcommand("erp", "Euler-Rodrigues parameters of an axis-angle rotation");
  erp_cmd->add_option("--axis", erp.axis, "Rotation axis x,y,z")->required();
  erp_cmd->add_option("--angle", erp.angle, "Rotation angle")->required();

  RotateArgs rot;
  CLI::App* rot_cmd = app.add_subcommand("rotate", "Rotate a vector on a simulated qubit");
  rot_cmd->add_option("--vector", rot.vector, "Vector x,y,z")->required();
  rot_cmd->add_option("--axis", rot.axis, "Rotation axis x,y,z")->required();
  rot_cmd->add_option("--angle", rot.angle, "Rotation angle")->required();

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Tomography accuracy over random rotations and shot counts");
  sweep_cmd->add_option("--trials", sweep.trials, "Random rotations")->capture_default_str();
  sweep_cmd->add_option("--shots-min", sweep.shots_min, "Smallest shot count")->capture_default_str();
  sweep_cmd->add_option("--shots-max", sweep.shots_max, "Largest shot count")->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points, "Log-spaced grid points")->capture_default_str();

  MultiArgs multi;
  CLI::App* multi_cmd = app.add_subcommand("multi", "Rotate a batch of vectors in superposition");
  multi_cmd->add_option("--vectors", multi.vectors, "JSON file of [x, y, z] triples")->required();
  multi_cmd->add_option("--axis", multi.axis, "Rotation axis x,y,z")->required();
  multi_cmd->add_option("--angle", multi.angle, "Rotation angle")->required();

  CLI::App* example_cmd = app.add_subcommand("example", "Worked example: (1,1,1) about (2,1,1) by 90 degrees");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*erp_cmd) {
      cmd_erp(g, erp, out);
    } else if (*rot_cmd) {
      cmd_rotate(g, rot, out, err);
    } else if (*sweep_cmd) {
      cmd_sweep(g, sweep, out);
    } else if (*multi_cmd) {
      cmd_multi(g, multi, out, err);
    } else if (*example_cmd) {
      cmd_example(g, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kOk;
}

}  // namespace qrot::cli
