// Copyright 2026 The faultex Authors
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


// Walks through the main entry points: a ring with two faults, the worst
// case of Algorithm Ring, and the adversarial configuration on K_5.

#include <iostream>

#include "faultex/faultex.hpp"

int main() {
  using namespace faultex;

  const auto ring = build_ring(6);
  const auto faults = ring_faults(ring, 0, FaultyRing{2, 3});
  const auto trace = execute(ring, faults, 0, strategy::RingAlgorithm{});
  const auto opt = opt_ring(6, FaultyRing{2, 3}).cost;
  std::cout << "ring(6), faults at distance 2 and 3: cost " << trace.cost << ", opt " << opt << ", ratio "
            << exploration_ratio(trace.cost, opt) << "\n";

  for (std::size_t n : {4, 6, 10, 24}) {
    const auto rep = overhead(build_ring(n), 0, strategy::RingAlgorithm{}, family::RingScenarios{});
    std::cout << "ring(" << n << ") overhead " << rep.overhead << " (closed form "
              << closed_form::ring_overhead(n) << "), worst case " << io::faults_to_json(rep.witness.faults).dump()
              << "\n";
  }

  const auto k5 = build_complete(5);
  const auto bad = adversarial_complete(k5, 0);
  const auto dfs = execute(k5, bad, 0, strategy::DfsAlpha{});
  const auto best = opt_covering_walk(k5, bad, 0);
  std::cout << "K_5 adversary removes " << bad.size() << " edges: DFS pays " << dfs.cost << ", opt "
            << best.cost << ", ratio " << exploration_ratio(dfs.cost, best.cost) << "\n";
  return 0;
}
