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
#include "qrot/kernels.hpp"
#include "qrot/rotation.hpp"
#include "qrot/simulator.hpp"
#include "support/oracles.hpp"

namespace qrot {
namespace {

using testing::kPi;
using testing::Rng;

// |count − n·p| ≤ 5σ
void expect_binomial(std::uint64_t count, std::uint64_t n, double p) {
  const double sigma = std::sqrt(static_cast<double>(n) * p * (1 - p));
  EXPECT_LE(std::fabs(static_cast<double>(count) - static_cast<double>(n) * p), 5 * sigma)
      << count << " of " << n << " at p=" << p;
}

std::uint64_t count_of(const ShotResult& r, std::uint64_t outcome) {
  const auto it = r.counts.find(outcome);
  return it == r.counts.end() ? 0 : it->second;
}

TEST(Circuit, Validation) {
  EXPECT_THROW(Circuit(0), DomainError);
  EXPECT_THROW(Circuit(kMaxQubits + 1), DomainError);
  Circuit c(3);
  EXPECT_THROW(c.add(h(3)), DomainError);
  EXPECT_THROW(c.add(rx(1.0, 0, {{0, 1}})), DomainError);
  EXPECT_THROW(c.add(rx(1.0, 0, {{1, 1}, {1, 0}})), DomainError);
  EXPECT_THROW(c.add(rx(1.0, 0, {{1, 2}})), DomainError);
  EXPECT_THROW(c.add(rx(std::nan(""), 0)), DomainError);
  EXPECT_THROW(compose_single_qubit({rx(1.0, 0, {{1, 1}})}), DomainError);
}

TEST(GateOp, Describe) {
  EXPECT_EQ(rz(-0.46364760900080615, 0, {{1, 0}}).describe(4), "RZ(-0.4636) q0 [c1=0]");
  EXPECT_EQ(h(2).describe(), "H q2");
}

TEST(Apply, EmptyCircuitAndWidthMismatch) {
  Rng rng(51);
  const StateVector psi(testing::random_amplitudes(rng, 8));
  const StateVector out = apply(Circuit(3), psi);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(out[i], psi[i]);
  EXPECT_THROW(apply(Circuit(2), psi), ShapeError);
}

TEST(Apply, HadamardsGiveUniformSuperposition) {
  Circuit c(2);
  c.add(h(0)).add(h(1));
  const StateVector out = apply(c, StateVector(2));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(out[i] - 0.5), 0.0, 1e-15);
}

TEST(Apply, WorkedExampleCircuit) {
  const RotationSpec spec = RotationSpec::from_axis({2, 1, 1}, kPi / 2);
  const SphericalAngles a = vec_to_angles(normalize({1, 1, 1}).unit);
  Circuit c(1);
  c.add(ry(a.theta, 0)).add(rz(a.phi, 0)).append(axis_rotation_sequence(spec));
  EXPECT_LE(max_abs_diff(state_to_bloch(apply(c, StateVector(1))), {0.76980036, 0.14919792, 0.62060244}), 1e-8);
}

TEST(Apply, MatchesDenseOracleProperty) {
  Rng rng(52);
  for (int t = 0; t < 60; ++t) {
    const unsigned width = 1 + static_cast<unsigned>(rng() % 5);
    const Circuit c = testing::random_circuit(rng, width, 25);
    const StateVector psi(testing::random_amplitudes(rng, std::size_t{1} << width));
    const StateVector got = apply(c, psi);
    const StateVector want = apply_matrix(testing::dense_circuit(c), psi);
    for (std::size_t i = 0; i < got.dim(); ++i) EXPECT_LE(std::abs(got[i] - want[i]), 1e-12);
  }
}

TEST(Apply, NormPreservationProperty) {
  Rng rng(53);
  for (unsigned width = 1; width <= 11; ++width) {
    const Circuit c = testing::random_circuit(rng, width, 100);
    const StateVector out = apply(c, StateVector(testing::random_amplitudes(rng, std::size_t{1} << width)));
    EXPECT_NEAR(out.norm(), 1.0, 1e-10);
  }
}

TEST(Apply, InactiveControlLeavesStateExactly) {
  Rng rng(54);
  for (int t = 0; t < 200; ++t) {
    const std::size_t index = rng() % 8;
    const unsigned q = static_cast<unsigned>(rng() % 3);
    const unsigned target = (q + 1) % 3;
    if (index & (std::size_t{1} << q)) continue;
    Circuit c(3);
    c.add(rx(testing::uniform(rng, -3, 3), target, {{q, 1}}));
    const StateVector out = apply(c, StateVector::basis(3, index));
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(out[i], Complex(i == index ? 1.0 : 0.0, 0.0));
  }
}

TEST(Apply, ScalarAndAvx2AgreeBitwise) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not supported by this CPU";
  Rng rng(55);
  const Circuit c = testing::random_circuit(rng, 9, 200);
  const StateVector psi(testing::random_amplitudes(rng, 512));
  kernels::set_isa(kernels::Isa::Scalar);
  const StateVector s = apply(c, psi);
  const ShotResult rs = sample(c, std::vector<std::string>(9, "X"), 3000, NoiseModel::nisq_lite(), 9);
  kernels::set_isa(kernels::Isa::Avx2);
  const StateVector v = apply(c, psi);
  const ShotResult rv = sample(c, std::vector<std::string>(9, "X"), 3000, NoiseModel::nisq_lite(), 9);
  kernels::reset_isa();
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(s[i], v[i]);
  EXPECT_EQ(rs, rv);
}

TEST(Sample, ZeroStateNoiseless) {
  const ShotResult r = sample(Circuit(1), {"Z"}, 777, NoiseModel::ideal(), 1);
  EXPECT_EQ(r.counts, (std::map<std::uint64_t, std::uint64_t>{{0, 777}}));
  EXPECT_EQ(r.shots, 777u);
}

TEST(Sample, PlusStateInZ) {
  Circuit c(1);
  c.add(h(0));
  const ShotResult r = sample(c, {"Z"}, 20000, NoiseModel::ideal(), 2);
  expect_binomial(count_of(r, 0), 20000, 0.5);
  EXPECT_EQ(count_of(r, 0) + count_of(r, 1), 20000u);
}

TEST(Sample, ZeroStateInXAndPlusInX) {
  const ShotResult r = sample(Circuit(1), {"X"}, 20000, NoiseModel::ideal(), 3);
  expect_binomial(count_of(r, 0), 20000, 0.5);
  Circuit c(1);
  c.add(h(0));
  EXPECT_EQ(count_of(sample(c, {"x"}, 5000, NoiseModel::ideal(), 4), 0), 5000u);
}

TEST(Sample, YBasisEigenstate) {
  Circuit c(1);
  c.add(h(0)).add(rz(kPi / 2, 0));  // |+i⟩ up to phase
  EXPECT_EQ(count_of(sample(c, {"Y"}, 4000, NoiseModel::ideal(), 5), 0), 4000u);
  Circuit m(1);
  m.add(h(0)).add(rz(-kPi / 2, 0));
  EXPECT_EQ(count_of(sample(m, {"Y"}, 4000, NoiseModel::ideal(), 5), 1), 4000u);
}

TEST(Sample, BitOrderQubitZeroIsLeastSignificant) {
  Circuit c(3);
  c.add(x(0));
  const ShotResult r = sample(c, {"Z", "Z", "Z"}, 10, NoiseModel::ideal(), 6);
  EXPECT_EQ(count_of(r, 1), 10u);
  EXPECT_EQ(r.bitstring_counts(), (std::map<std::string, std::uint64_t>{{"001", 10}}));
  EXPECT_EQ(bitstring(6, 4), "0110");
}

TEST(Sample, InvalidArguments) {
  EXPECT_THROW(sample(Circuit(1), {"W"}, 10, NoiseModel::ideal(), 1), DomainError);
  EXPECT_THROW(sample(Circuit(2), {"Z"}, 10, NoiseModel::ideal(), 1), DomainError);
  EXPECT_THROW(sample(Circuit(1), {"Z"}, 0, NoiseModel::ideal(), 1), DomainError);
  EXPECT_THROW(sample(Circuit(1), {"Z"}, 10, NoiseModel{1.5, 0, 0}, 1), DomainError);
  EXPECT_THROW(parse_basis("xy"), DomainError);
}

TEST(Sample, DeterministicAndWorkerIndependent) {
  Rng rng(56);
  const Circuit c = testing::random_circuit(rng, 4, 30);
  const std::vector<std::string> basis = {"X", "Y", "Z", "X"};
  const NoiseModel noise{0.01, 0.05, 0.03};
  const ShotResult a = sample(c, basis, 5000, noise, 99, 1);
  EXPECT_EQ(a, sample(c, basis, 5000, noise, 99, 1));
  EXPECT_EQ(a, sample(c, basis, 5000, noise, 99, 4));
  EXPECT_EQ(a, sample(c, basis, 5000, noise, 99, 3));
  EXPECT_NE(a, sample(c, basis, 5000, noise, 100, 1));
}

TEST(Sample, FullDepolarizationShrinksBlochVector) {
  Circuit c(1);
  c.add(rz(0.0, 0));
  const NoiseModel noise{1.0, 0.0, 0.0};
  const ShotResult z = sample(c, {"Z"}, 20000, noise, 7);
  // X or Y flips |0⟩ with probability 2/3, so ⟨Z⟩ ≈ −1/3 before twirling of the other axes.
  const Vec3 v{expectation_from_counts(sample(c, {"X"}, 20000, noise, 8), 0),
               expectation_from_counts(sample(c, {"Y"}, 20000, noise, 9), 0), expectation_from_counts(z, 0)};
  EXPECT_LE(std::fabs(v.x), 0.1);
  EXPECT_LE(std::fabs(v.y), 0.1);
  EXPECT_NEAR(v.z, -1.0 / 3.0, 5 * std::sqrt(1.0 / 20000));
}

TEST(Sample, ReadoutFlipHalfIsUniform) {
  const ShotResult r = sample(Circuit(1), {"Z"}, 20000, NoiseModel{0, 0, 0.5}, 10);
  expect_binomial(count_of(r, 0), 20000, 0.5);
}

TEST(Sample, ControlledGateNoiseOnlyOnControlledOps) {
  Circuit c(2);
  c.add(x(0, {{1, 0}}));
  const ShotResult r = sample(c, {"Z", "Z"}, 20000, NoiseModel{0.0, 0.3, 0.0}, 11);
  // A Z error leaves |1⟩ in place; X or Y flips it back.
  expect_binomial(count_of(r, 0), 20000, 0.2);
  const ShotResult clean = sample(c, {"Z", "Z"}, 5000, NoiseModel{0.3, 0.0, 0.0}, 11);
  EXPECT_EQ(count_of(clean, 1), 5000u);
}

TEST(NoisyTrajectory, NoiselessEqualsApply) {
  Rng rng(57);
  const Circuit c = testing::random_circuit(rng, 3, 20);
  rng::Stream s(1, 2);
  const StateVector a = noisy_trajectory(c, NoiseModel::ideal(), s);
  const StateVector b = apply(c, StateVector(3));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Expectation, Examples) {
  ShotResult r{1, {PauliBasis::Z}, {{0, 750}, {1, 250}}, 1000};
  EXPECT_DOUBLE_EQ(expectation_from_counts(r, 0), 0.5);
  r.counts = {{0, 10}};
  r.shots = 10;
  EXPECT_EQ(expectation_from_counts(r, 0), 1.0);
  r.counts = {{1, 10}};
  EXPECT_EQ(expectation_from_counts(r, 0), -1.0);
  ShotResult two{2, {PauliBasis::Z, PauliBasis::Z}, {{2, 30}, {1, 10}}, 40};
  EXPECT_DOUBLE_EQ(expectation_from_counts(two, 0), 0.5);
  EXPECT_DOUBLE_EQ(expectation_from_counts(two, 1), -0.5);
}

TEST(Rng, ReferenceValuesAndStreams) {
  EXPECT_EQ(rng::mix64(0), 0u);
  rng::Stream a(5, 0), b(5, 0), c(5, 1);
  const std::uint64_t first = a.next();
  EXPECT_EQ(first, b.next());
  EXPECT_NE(first, c.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(a.below(3), 3u);
  }
  EXPECT_NE(rng::tag_of("a"), rng::tag_of("b"));
}

}  // namespace
}  // namespace qrot
