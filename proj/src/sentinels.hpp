// Copyright 2026 The spanscore Authors
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

#ifndef SPANSCORE_SENTINELS_HPP
#define SPANSCORE_SENTINELS_HPP

#include <cstdint>
#include <string_view>

#include "core.hpp"

namespace spanscore {

// Controlled corruptions of the hypothesis side. Scoring a system against
// its perturbed self shows how sharply each measure reacts to sloppier
// spans (extend), of missing predictions (drop), and whether an averaging
// scheme rewards deleting output in sparse segments (remove-few).
struct PerturbationSpec {
  enum class Kind { kExtend, kDrop, kRemoveFew };

  Kind kind = Kind::kExtend;
  uint32_t amount = 0;       // extend: characters per side; remove-few: size cap
  double probability = 0.0;  // drop
  uint64_t seed = 0;         // drop
  uint32_t repetitions = 1;  // drop
};

// Parses "extend:<k>", "drop:<p>[:<seed>[:<reps>]]", "remove-few:<t>".
PerturbationSpec parse_perturbation(std::string_view spec);

// Widens every hypothesis span by k characters on each side, clamped to the
// text. Gold spans are never touched.
Segment extend_spans(const Segment& segment, uint32_t k);

// Deletes each hypothesis span independently with the given probability.
// Decisions depend only on (master_seed, segment id, span index) — never on
// iteration order, thread count, or platform — so every run reproduces the
// same corruption byte for byte.
Segment drop_spans(const Segment& segment, double probability,
                   uint64_t master_seed);

// Empties hypothesis sets of size <= threshold, mimicking a system that
// games macro averaging by staying silent wherever it predicted little.
Segment remove_if_few(const Segment& segment, uint64_t threshold);

// Applies the perturbation to every segment. `repetition` selects the seed stream
// for kDrop (repetition r uses splitmix64_at(seed, r)); other kinds are
// deterministic and ignore it.
Dataset apply_perturbation(const Dataset& dataset,
                           const PerturbationSpec& spec, uint32_t repetition);

// The RNG primitives, exposed so tests can pin the exact byte-level scheme:
// stream seed = master ^ fnv1a64(segment id); the j-th draw is
// splitmix64_at(stream, j) mapped to [0, 1) via its top 53 bits; a span is
// dropped when the draw is strictly below the probability.
uint64_t fnv1a64(std::string_view bytes);
uint64_t splitmix64_at(uint64_t seed, uint64_t index);
double unit_from_bits(uint64_t bits);
uint64_t repetition_seed(uint64_t master_seed, uint32_t repetition);

}  // namespace spanscore

#endif  // SPANSCORE_SENTINELS_HPP
