// Copyright 2026 The hamlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamlearn/pauli.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "hamlearn/errors.hpp"
#include "reference.hpp"

namespace hamlearn {
namespace {

using testing::kron_pauli;

TEST(PauliString, LetterRoundTrip) {
  for (const char* s : {"I", "X", "Y", "Z", "XIZY", "YYYY", "IIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIIX"}) {
    EXPECT_EQ(PauliString::from_letters(s).to_letters(), s);
  }
  const PauliString y = PauliString::from_letters("Y");
  EXPECT_TRUE(y.x(0));
  EXPECT_TRUE(y.z(0));
  EXPECT_THROW(PauliString::from_letters("XQ"), UsageError);
}

TEST(PauliString, IdentityAndWeight) {
  EXPECT_TRUE(PauliString::identity(5).is_identity());
  const PauliString p = PauliString::from_letters("XIZYI");
  EXPECT_FALSE(p.is_identity());
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.y_count(), 1);
}

TEST(Symplectic, SmallCases) {
  const auto X = PauliString::from_letters("X");
  const auto Z = PauliString::from_letters("Z");
  EXPECT_EQ(symplectic_product(X, Z), 1);
  EXPECT_EQ(symplectic_product(X, X), 0);
  EXPECT_EQ(symplectic_product(PauliString::from_letters("XX"), PauliString::from_letters("ZZ")), 0);
  EXPECT_THROW(symplectic_product(X, PauliString::from_letters("XX")), UsageError);
}

TEST(Symplectic, MatchesDenseCommutationExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = all_pauli_strings(n);
    for (const auto& p : all) {
      const Eigen::MatrixXcd dp = kron_pauli(p.to_letters());
      for (const auto& q : all) {
        const Eigen::MatrixXcd dq = kron_pauli(q.to_letters());
        const bool dense_commute = (dp * dq - dq * dp).cwiseAbs().maxCoeff() == 0.0;
        ASSERT_EQ(commutes(p, q), dense_commute) << p.to_letters() << " " << q.to_letters();
      }
    }
  }
}

TEST(Multiply, KnownProducts) {
  const auto X = PauliString::from_letters("X");
  const auto Y = PauliString::from_letters("Y");
  const auto Z = PauliString::from_letters("Z");
  const PauliProduct xz = multiply(X, Z);
  EXPECT_EQ(xz.pauli, Y);
  EXPECT_EQ(xz.phase.value(), std::complex<double>(0, -1));
  const PauliProduct yy = multiply(Y, Y);
  EXPECT_TRUE(yy.pauli.is_identity());
  EXPECT_EQ(yy.phase.value(), std::complex<double>(1, 0));
  const PauliProduct xi = multiply(X, PauliString::identity(1));
  EXPECT_EQ(xi.pauli, X);
  EXPECT_EQ(xi.phase.value(), std::complex<double>(1, 0));
}

TEST(Multiply, MatchesDenseExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = all_pauli_strings(n);
    for (const auto& p : all) {
      for (const auto& q : all) {
        const PauliProduct pq = multiply(p, q);
        const Eigen::MatrixXcd lhs = kron_pauli(p.to_letters()) * kron_pauli(q.to_letters());
        const Eigen::MatrixXcd rhs = pq.phase.value() * kron_pauli(pq.pauli.to_letters());
        ASSERT_EQ((lhs - rhs).cwiseAbs().maxCoeff(), 0.0) << p.to_letters() << " " << q.to_letters();
      }
    }
  }
}

TEST(Multiply, AssociativeWithPhases) {
  const auto all = all_pauli_strings(2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        const PauliProduct ab = multiply(a, b);
        const PauliProduct ab_c = multiply(ab.pauli, c);
        const PauliProduct bc = multiply(b, c);
        const PauliProduct a_bc = multiply(a, bc.pauli);
        ASSERT_EQ(ab_c.pauli, a_bc.pauli);
        ASSERT_EQ(ab.phase.value() * ab_c.phase.value(), bc.phase.value() * a_bc.phase.value());
      }
    }
  }
}

TEST(Dense, MatchesKroneckerAndIsInvolution) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : all_pauli_strings(n)) {
      const Eigen::MatrixXcd d = dense(p);
      ASSERT_EQ((d - kron_pauli(p.to_letters())).cwiseAbs().maxCoeff(), 0.0) << p.to_letters();
      ASSERT_EQ((d - d.adjoint()).cwiseAbs().maxCoeff(), 0.0);
      ASSERT_EQ((d * d - Eigen::MatrixXcd::Identity(d.rows(), d.cols())).cwiseAbs().maxCoeff(), 0.0);
      if (!p.is_identity()) ASSERT_EQ(d.trace(), std::complex<double>(0, 0));
    }
  }
  Eigen::Matrix2cd y;
  y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  EXPECT_EQ(dense(PauliString::from_letters("Y")), Eigen::MatrixXcd(y));
  EXPECT_THROW(dense(PauliString::identity(13)), CapacityError);
  EXPECT_THROW(dense(PauliString::identity(5), 4), CapacityError);
}

TEST(RandomUniform, ReplayAndFrequencies) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(random_uniform(7, a), random_uniform(7, b));

  Rng rng(7);
  const int draws = 100000;
  int xs = 0;
  int anti = 0;
  const auto fixed = PauliString::from_letters("XZY");
  for (int i = 0; i < draws; ++i) {
    if (random_uniform(1, rng).to_letters() == "X") ++xs;
    if (!commutes(fixed, random_uniform(3, rng))) ++anti;
  }
  EXPECT_NEAR(xs / double(draws), 0.25, 0.01);
  EXPECT_NEAR(anti / double(draws), 0.5, 0.01);
}

TEST(RandomCommuting, CommutesAndIsUniform) {
  Rng rng(11);
  const auto z = PauliString::from_letters("Z");
  int identities = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const PauliString q = random_commuting(z, rng);
    ASSERT_TRUE(commutes(z, q));
    if (q.is_identity()) ++identities;
  }
  EXPECT_NEAR(identities / double(draws), 0.5, 0.01);

  const auto zz = PauliString::from_letters("ZZ");
  std::map<std::string, int> counts;
  for (int i = 0; i < draws; ++i) ++counts[random_commuting(zz, rng).to_letters()];
  EXPECT_EQ(counts.size(), 8u);
  for (const auto& [s, c] : counts) EXPECT_NEAR(c / double(draws), 1.0 / 8.0, 0.01) << s;

  // Uniform over the commutant of a generic 3-qubit string: 32 outcomes.
  const auto p = PauliString::from_letters("XYZ");
  std::map<std::string, int> wide;
  for (int i = 0; i < draws; ++i) ++wide[random_commuting(p, rng).to_letters()];
  EXPECT_EQ(wide.size(), 32u);
  for (const auto& [s, c] : wide) EXPECT_NEAR(c / double(draws), 1.0 / 32.0, 0.003) << s;
}

TEST(AllPauliStrings, Enumeration) {
  const auto two = all_pauli_strings(2);
  ASSERT_EQ(two.size(), 16u);
  EXPECT_TRUE(two.front().is_identity());
  const std::set<PauliString> unique(two.begin(), two.end());
  EXPECT_EQ(unique.size(), 16u);
}

}  // namespace
}  // namespace hamlearn
