// Copyright 2026 The noisyhg Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "sampling.hpp"
#include "stability.hpp"
#include "support/fixtures.hpp"

using namespace nhg;

namespace {

// Small random full game with distinct values, for brute-force cross-checks.
HedonicGame random_full_game(int n, std::uint64_t seed) {
  HedonicGame g(n, Coverage::full);
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      Coalition c(m);
      if (!c.contains(i)) continue;
      g.set_value(i, c, 1.0 + static_cast<double>(rng.below(100000)) / 7.0);
    }
  }
  return g;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(Partition::from_rgs(rgs));
    int i = n - 1;
    for (; i >= 1; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j] + 1);
      if (rgs[i] < cap) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("coalition basics") {
  Coalition c = Coalition::of({0, 2, 5});
  CHECK(c.size() == 3);
  CHECK(c.contains(2));
  CHECK(!c.contains(1));
  CHECK(c.members() == std::vector<int>{0, 2, 5});
  CHECK(c.lowest_member() == 0);
  CHECK(Coalition::full(3).mask() == 0b111);
  CHECK(c.minus(Coalition::of({2})).members() == std::vector<int>{0, 5});
  CHECK(c.str() == "{0,2,5}");
}

TEST_CASE("game value storage and errors") {
  HedonicGame g(3, Coverage::partial);
  Coalition c01 = Coalition::of({0, 1});
  g.set_value(0, c01, 2.5);
  CHECK(g.value(0, c01) == 2.5);
  CHECK(g.has_value(0, c01));
  CHECK(!g.has_value(1, c01));
  CHECK_THROWS_AS(g.value(1, c01), Error);          // absent -> missing_value
  CHECK_THROWS_AS(g.value(2, c01), Error);          // not a member
  CHECK_THROWS_AS(g.set_value(0, c01, 0.0), Error); // values strictly positive
  CHECK_THROWS_AS(g.set_value(0, Coalition(), 1.0), Error);

  try {
    g.value(1, c01);
    FAIL("expected missing_value");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::missing_value);
  }
  try {
    g.value(2, c01);
    FAIL("expected agent_not_member");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::agent_not_member);
  }
}

TEST_CASE("partition construction and canonical encoding") {
  Partition pi(3, {Coalition::of({2}), Coalition::of({0, 1})});
  CHECK(pi.blocks().size() == 2);
  CHECK(pi.blocks()[0] == Coalition::of({0, 1}));  // canonical order
  CHECK(pi.block_of(2) == Coalition::of({2}));
  CHECK(pi.rgs() == std::vector<int>{0, 0, 1});
  CHECK(pi == fixtures::pair_and_loner());
  CHECK(Partition::singletons(2).rgs() == std::vector<int>{0, 1});

  CHECK_THROWS_AS(Partition(3, {Coalition::of({0, 1})}), Error);                      // not a cover
  CHECK_THROWS_AS(Partition(3, {Coalition::of({0, 1}), Coalition::of({1, 2})}), Error);  // overlap
}

TEST_CASE("prefers on the motivating noise-free game") {
  HedonicGame g = fixtures::motivating_noise_free();
  // Agent 0 ranks staying alone above pairing with 1.
  CHECK(prefers(g, 0, Coalition::of({0}), Coalition::of({0, 1})) == Preference::first_better);
  CHECK(prefers(g, 1, Coalition::of({0, 1}), Coalition::of({1})) == Preference::first_better);
  CHECK(prefers(g, 0, Coalition::of({0}), Coalition::of({0})) == Preference::indifferent);
}

TEST_CASE("prefers agrees with raw table lookups on a random game") {
  HedonicGame g = random_full_game(4, 11);
  for (std::uint32_t s = 1; s < 16; ++s) {
    for (std::uint32_t t = 1; t < 16; ++t) {
      for (int i = 0; i < 4; ++i) {
        Coalition cs(s), ct(t);
        if (!cs.contains(i) || !ct.contains(i)) continue;
        Preference expected = g.value(i, cs) > g.value(i, ct)   ? Preference::first_better
                              : g.value(i, ct) > g.value(i, cs) ? Preference::second_better
                                                                : Preference::indifferent;
        CHECK(prefers(g, i, cs, ct) == expected);
      }
    }
  }
}

TEST_CASE("core blocking on the motivating games") {
  HedonicGame noise_free = fixtures::motivating_noise_free();
  Partition pair = fixtures::pair_and_loner();
  CHECK(core_blocks(noise_free, pair, Coalition::of({0})));  // 0 walks away
  CHECK(!core_blocks(noise_free, pair, Coalition::of({0, 1})));  // own block never blocks
  for (const Coalition& b : pair.blocks()) CHECK(!core_blocks(noise_free, pair, b));
}

TEST_CASE("core_blocks equals its definition on a random 4-agent game") {
  HedonicGame g = random_full_game(4, 23);
  for (const Partition& pi : all_partitions(4)) {
    for (std::uint32_t m = 1; m < 16; ++m) {
      Coalition t(m);
      bool expected = true;
      for (int i : t.members()) {
        expected = expected && g.value(i, t) > g.value(i, pi.block_of(i));
      }
      CHECK(core_blocks(g, pi, t) == expected);
    }
  }
}

TEST_CASE("core stability of the motivating fixtures") {
  HedonicGame noisy = fixtures::motivating_noisy();
  HedonicGame noise_free = fixtures::motivating_noise_free();
  Partition pair = fixtures::pair_and_loner();
  Partition alone = Partition::singletons(3);

  CHECK(is_core_stable(noisy, pair));
  CHECK(is_core_stable(noise_free, alone));
  CHECK(!is_core_stable(noise_free, pair));
}

TEST_CASE("is_core_stable matches the double-loop definition on n=5") {
  HedonicGame g = random_full_game(5, 37);
  for (const Partition& pi : all_partitions(5)) {
    bool expected = true;
    for (std::uint32_t m = 1; m < 32 && expected; ++m) {
      if (core_blocks(g, pi, Coalition(m))) expected = false;
    }
    CHECK(is_core_stable(g, pi) == expected);
  }
}

TEST_CASE("singleton-optimal game keeps the singleton partition stable") {
  HedonicGame g(3, Coverage::full);
  for (int i = 0; i < 3; ++i) {
    for (std::uint32_t m = 1; m < 8; ++m) {
      Coalition c(m);
      if (!c.contains(i)) continue;
      g.set_value(i, c, c.size() == 1 ? 10.0 : 1.0 + 0.25 * m);
    }
  }
  CHECK(is_core_stable(g, Partition::singletons(3)));
}

TEST_CASE("find_core_partition on the motivating fixtures") {
  auto noisy = find_core_partition(fixtures::motivating_noisy());
  REQUIRE(noisy.has_value());
  CHECK(*noisy == fixtures::pair_and_loner());

  auto noise_free = find_core_partition(fixtures::motivating_noise_free());
  REQUIRE(noise_free.has_value());
  CHECK(*noise_free == Partition::singletons(3));

  HedonicGame one(1, Coverage::full);
  one.set_value(0, Coalition::of({0}), 1.0);
  auto single = find_core_partition(one);
  REQUIRE(single.has_value());
  CHECK(*single == Partition::singletons(1));
}

TEST_CASE("find_core_partition result is stable; empty core only when none exists") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    HedonicGame g = random_full_game(4, seed * 101);
    auto found = find_core_partition(g);
    if (found.has_value()) {
      CHECK(is_core_stable(g, *found));
    } else {
      for (const Partition& pi : all_partitions(4)) CHECK(!is_core_stable(g, pi));
    }
  }
}

TEST_CASE("ordinal invariance under a common positive scaling") {
  HedonicGame g = random_full_game(4, 91);
  HedonicGame scaled = g.scaled(37.5);
  Partition pi = all_partitions(4)[7];
  for (std::uint32_t m = 1; m < 16; ++m) {
    CHECK(core_blocks(g, pi, Coalition(m)) == core_blocks(scaled, pi, Coalition(m)));
  }
  CHECK(is_core_stable(g, pi) == is_core_stable(scaled, pi));
  auto a = find_core_partition(g);
  auto b = find_core_partition(scaled);
  REQUIRE(a.has_value() == b.has_value());
  if (a.has_value()) CHECK(*a == *b);
}

TEST_CASE("size caps raise instance_too_large") {
  HedonicGame g(13, Coverage::full);
  CHECK_THROWS_AS(find_core_partition(g), Error);
}

TEST_CASE("sampling: determinism, m=0, fixed-list frequencies") {
  SamplingSpec spec = SamplingSpec::uniform_nonempty(4, 99);
  CHECK(sample_coalitions(spec, 0).empty());
  auto a = sample_coalitions(spec, 50);
  auto b = sample_coalitions(spec, 50);
  CHECK(a == b);
  for (Coalition c : a) CHECK(!c.empty());

  SamplingSpec other = SamplingSpec::uniform_nonempty(4, 100);
  CHECK(sample_coalitions(other, 50) != a);

  std::vector<Coalition> list = {Coalition::of({0}), Coalition::of({1}), Coalition::of({0, 1})};
  SamplingSpec list_spec = SamplingSpec::fixed_list(2, list, 7);
  const std::size_t m = 10000;
  std::map<std::uint32_t, int> counts;
  for (Coalition c : sample_coalitions(list_spec, m)) counts[c.mask()]++;
  // three-sigma binomial band around m/3
  double mean = static_cast<double>(m) / 3.0;
  double sigma = std::sqrt(m * (1.0 / 3.0) * (2.0 / 3.0));
  for (Coalition c : list) {
    CHECK(std::abs(counts[c.mask()] - mean) < 3.0 * sigma);
  }
}

TEST_CASE("weighted sampling validates and draws by weight") {
  std::vector<Coalition> list = {Coalition::of({0}), Coalition::of({1})};
  CHECK_THROWS_AS(SamplingSpec::weighted(2, list, {0.5, 0.6}, 1), Error);
  CHECK_THROWS_AS(SamplingSpec::weighted(2, list, {-0.1, 1.1}, 1), Error);
  SamplingSpec spec = SamplingSpec::weighted(2, list, {0.9, 0.1}, 5);
  int first = 0;
  auto draws = sample_coalitions(spec, 5000);
  for (Coalition c : draws) {
    if (c == list[0]) ++first;
  }
  CHECK(first > 4200);
  CHECK(first < 4800);
}
