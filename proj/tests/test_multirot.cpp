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

#include <gtest/gtest.h>

#include "qrot/errors.hpp"
#include "qrot/multirot.hpp"
#include "support/oracles.hpp"

namespace qrot {
namespace {

using testing::kPi;
using testing::Rng;

constexpr double kDeg = 180.0 / kPi;
const RotationSpec kExample = RotationSpec::from_axis({2, 1, 1}, kPi / 2);

std::vector<Vec3> random_vectors(Rng& rng, std::size_t p) {
  std::vector<Vec3> v(p);
  for (auto& x : v) x = testing::random_unit(rng);
  return v;
}

TEST(VectorBatch, ControlQubitCount) {
  const std::pair<std::size_t, unsigned> cases[] = {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {8, 3}, {9, 4}, {1024, 10}};
  for (const auto& [p, n] : cases) {
    const VectorBatch b(std::vector<Vec3>(p, Vec3{0, 0, 1}));
    EXPECT_EQ(b.control_qubits(), n) << "p=" << p;
    EXPECT_LE(b.size(), b.branches());
    if (p > 1) {
      EXPECT_LT(b.branches(), 2 * p);
    }
  }
}

TEST(VectorBatch, Validation) {
  EXPECT_THROW(VectorBatch({}), DomainError);
  EXPECT_THROW(VectorBatch(std::vector<Vec3>(1025, Vec3{0, 0, 1})), DomainError);
  EXPECT_THROW(VectorBatch({{0, 0, 1}, {0, 0, 2}}), DomainError);
}

TEST(BranchControls, PatternOfIndexMinusOne) {
  EXPECT_EQ(branch_controls(1, 2), (std::vector<Control>{{1, 0}, {2, 0}}));
  EXPECT_EQ(branch_controls(2, 2), (std::vector<Control>{{1, 1}, {2, 0}}));
  EXPECT_EQ(branch_controls(4, 2), (std::vector<Control>{{1, 1}, {2, 1}}));
  EXPECT_THROW(branch_controls(5, 2), DomainError);
  EXPECT_THROW(branch_controls(0, 2), DomainError);
  EXPECT_EQ(branch_of_outcome(0b110, 2), 4u);
  EXPECT_EQ(branch_of_outcome(0b011, 2), 2u);
}

TEST(EncodingCircuit, FourVectorLayout) {
  Rng rng(71);
  const Circuit c = build_encoding_circuit(VectorBatch(random_vectors(rng, 4)));
  EXPECT_EQ(c.num_qubits(), 3u);
  ASSERT_EQ(c.size(), 10u);
  EXPECT_EQ(c.ops()[0].kind, GateKind::H);
  EXPECT_EQ(c.ops()[1].kind, GateKind::H);
  for (std::size_t i = 0; i < 4; ++i) {
    const GateOp& y = c.ops()[2 + 2 * i];
    const GateOp& z = c.ops()[3 + 2 * i];
    EXPECT_EQ(y.kind, GateKind::RY);
    EXPECT_EQ(z.kind, GateKind::RZ);
    EXPECT_EQ(y.target, 0u);
    EXPECT_EQ(y.controls, branch_controls(i + 1, 2));
    EXPECT_EQ(z.controls, branch_controls(i + 1, 2));
  }
}

TEST(EncodingCircuit, SingleNorthPoleVector) {
  const VectorBatch b({{0, 0, 1}});
  const Circuit c = build_encoding_circuit(b);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.ops()[1].theta, 0.0);
  EXPECT_EQ(c.ops()[2].theta, 0.0);
  const StateVector out = apply(c, StateVector(2));
  EXPECT_EQ(state_to_bloch(branch_state(out, 1)), (Vec3{0, 0, 1}));
}

TEST(EncodingCircuit, TwoVectorsExact) {
  const MultiRotationPlan plan{VectorBatch({{1, 0, 0}, {0, 1, 0}}), RotationSpec({0, 0, 1}, 0.0)};
  const std::vector<Vec3> v = exact_branch_vectors(plan);
  EXPECT_LE(max_abs_diff(v[0], {1, 0, 0}), 1e-15);
  EXPECT_LE(max_abs_diff(v[1], {0, 1, 0}), 1e-15);
}

TEST(EncodingCircuit, CorrectnessProperty) {
  Rng rng(72);
  for (int t = 0; t < 100; ++t) {
    const std::size_t p = 1 + rng() % 8;
    const VectorBatch batch(random_vectors(rng, p));
    const Circuit c = build_encoding_circuit(batch);
    const StateVector out = apply(c, StateVector(c.num_qubits()));
    const double weight = 1.0 / static_cast<double>(batch.branches());
    for (std::size_t i = 1; i <= batch.branches(); ++i) {
      const std::size_t base = (i - 1) << 1;
      EXPECT_NEAR(std::norm(out[base]) + std::norm(out[base | 1]), weight, 1e-12);
      const Vec3 got = state_to_bloch(branch_state(out, i));
      if (i <= p) {
        EXPECT_LE(max_abs_diff(got, batch.vectors()[i - 1]), 1e-10);
      } else {
        EXPECT_EQ(got, (Vec3{0, 0, 1}));
      }
    }
  }
}

TEST(RotationLayer, UniformIdentity) {
  const MultiRotationPlan plan{VectorBatch({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), RotationSpec({0, 1, 0}, 0.0)};
  const Circuit layer = build_rotation_layer(plan);
  EXPECT_EQ(layer.size(), 5u);
  for (const GateOp& op : layer.ops()) EXPECT_TRUE(op.controls.empty());
  EXPECT_LE(max_abs_diff(compose_single_qubit(layer.ops()), ComplexMatrix::identity(2)), 1e-12);
}

TEST(RotationLayer, UniformWorkedRotationOnFourVectors) {
  Rng rng(73);
  const MultiRotationPlan plan{VectorBatch(random_vectors(rng, 4)), kExample};
  const std::vector<Vec3> got = exact_branch_vectors(plan);
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec3 want = testing::quaternion_rotate(kExample.axis(), kExample.angle(), plan.batch.vectors()[i]);
    EXPECT_LE(max_abs_diff(got[i], want), 1e-10);
  }
}

TEST(RotationLayer, PerIndexRotationsProperty) {
  Rng rng(74);
  for (int t = 0; t < 40; ++t) {
    const std::size_t p = 1 + rng() % 8;
    std::vector<RotationSpec> specs;
    for (std::size_t i = 0; i < p; ++i) specs.push_back(testing::random_spec(rng));
    const MultiRotationPlan plan{VectorBatch(random_vectors(rng, p)), specs};
    EXPECT_EQ(build_rotation_layer(plan).size(), 5 * p);
    const Circuit full = build_multi_rotation_circuit(plan);
    const StateVector out = apply(full, StateVector(full.num_qubits()));
    for (std::size_t i = 1; i <= plan.batch.branches(); ++i) {
      const Vec3 got = state_to_bloch(branch_state(out, i));
      if (i <= p) {
        const Vec3 want = testing::quaternion_rotate(specs[i - 1].axis(), specs[i - 1].angle(),
                                                     plan.batch.vectors()[i - 1]);
        EXPECT_LE(max_abs_diff(got, want), 1e-10);
      } else {
        EXPECT_LE(max_abs_diff(got, {0, 0, 1}), 1e-15);
      }
    }
  }
}

TEST(RotationLayer, PerIndexLengthMismatch) {
  const MultiRotationPlan plan{VectorBatch({{0, 0, 1}, {1, 0, 0}}), std::vector<RotationSpec>{kExample}};
  EXPECT_THROW(build_rotation_layer(plan), DomainError);
  EXPECT_THROW(extract_all(plan, 100, NoiseModel::ideal(), 1), DomainError);
}

TEST(ExtractAll, SampleCountsNearK) {
  Rng rng(75);
  const MultiRotationPlan plan{VectorBatch(random_vectors(rng, 4)), kExample};
  const std::uint64_t k = 2000;
  const std::vector<ExtractedVector> out = extract_all(plan, k, NoiseModel::ideal(), 5);
  ASSERT_EQ(out.size(), 4u);
  const double sigma = std::sqrt(4.0 * k * 0.25 * 0.75);
  for (const ExtractedVector& e : out) {
    for (const std::uint64_t s : e.samples) EXPECT_LE(std::fabs(static_cast<double>(s) - k), 5 * sigma);
    EXPECT_FALSE(e.under_sampled);
    ASSERT_TRUE(e.vector.has_value());
  }
}

TEST(ExtractAll, SingleVectorUsesHalfTheShots) {
  const MultiRotationPlan plan{VectorBatch({{1, 0, 0}}), kExample};
  const std::vector<ExtractedVector> out = extract_all(plan, 1000, NoiseModel::ideal(), 6);
  ASSERT_EQ(out.size(), 1u);
  for (const std::uint64_t s : out[0].samples) EXPECT_LE(std::fabs(static_cast<double>(s) - 1000.0), 5 * std::sqrt(500.0));
  EXPECT_THROW(extract_all(plan, 99, NoiseModel::ideal(), 6), DomainError);
}

TEST(ExtractAll, AccurateAt20000) {
  Rng rng(76);
  const MultiRotationPlan plan{VectorBatch(random_vectors(rng, 4)), kExample};
  const std::vector<ExtractedVector> out = extract_all(plan, 20000, NoiseModel::ideal(), 7);
  for (const ExtractedVector& e : out) {
    const Vec3 want = rodrigues_rotate(kExample, plan.batch.vectors()[e.index - 1]);
    EXPECT_LT(angle_between(*e.vector, want) * kDeg, 1.0) << "index " << e.index;
  }
}

TEST(ExtractAll, WorkerCountDoesNotMatter) {
  Rng rng(77);
  const MultiRotationPlan plan{VectorBatch(random_vectors(rng, 3)), kExample};
  const auto a = extract_all(plan, 500, NoiseModel::nisq_lite(), 8, 1);
  const auto b = extract_all(plan, 500, NoiseModel::nisq_lite(), 8, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].samples, b[i].samples);
    EXPECT_EQ(*a[i].vector, *b[i].vector);
  }
}

TEST(ExtractFromResults, UnderSampledAndMissingIndices) {
  std::array<ShotResult, 3> r;
  for (std::size_t b = 0; b < 3; ++b) {
    r[b].num_qubits = 3;
    r[b].counts = {{0b000, 200}, {0b010, 10}};  // index 1 plenty, index 2 few, index 3 none
    r[b].shots = 210;
  }
  const std::vector<ExtractedVector> out = extract_from_results(r, 3, 2);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_FALSE(out[0].under_sampled);
  ASSERT_TRUE(out[0].vector.has_value());
  EXPECT_TRUE(out[1].under_sampled);
  EXPECT_TRUE(out[1].vector.has_value());
  EXPECT_TRUE(out[2].under_sampled);
  EXPECT_FALSE(out[2].vector.has_value());
  EXPECT_FALSE(out[2].error.empty());
}

TEST(ControlMarginals, UniformWithinFiveSigma) {
  Rng rng(78);
  const MultiRotationPlan plan{VectorBatch(random_vectors(rng, 4)), kExample};
  const Circuit c = build_multi_rotation_circuit(plan);
  const std::uint64_t shots = 40000;
  const ShotResult r = sample(c, {"Z", "Z", "Z"}, shots, NoiseModel::ideal(), 9);
  std::array<std::uint64_t, 4> per{};
  for (const auto& [outcome, count] : r.counts) per[branch_of_outcome(outcome, 2) - 1] += count;
  const double sigma = std::sqrt(shots * 0.25 * 0.75);
  for (const std::uint64_t n : per) EXPECT_LE(std::fabs(static_cast<double>(n) - shots / 4.0), 5 * sigma);
}

}  // namespace
}  // namespace qrot
