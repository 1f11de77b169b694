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

#ifndef SPANSCORE_MATCHING_HPP
#define SPANSCORE_MATCHING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "core.hpp"
#include "rational.hpp"

namespace spanscore {

// Ceiling on enumeration work per connected component of the overlap graph
// (and on frontier combination). Exceeding it raises BudgetError instead of
// silently approximating.
inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 20;

// The exhaustive oracle refuses instances above this many candidate pairs.
inline constexpr size_t kOracleCandidateLimit = 20;

// Which hypothesis/gold pairs may be matched: identical offsets, or overlap
// of at least tau characters.
enum class PairRule { kExact, kOverlap };

struct CandidatePair {
  uint32_t hyp = 0;
  uint32_t gold = 0;
  uint32_t overlap_len = 0;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

// Admissible pairs in (hyp, gold) index order. tau applies to kOverlap only
// and must be >= 1.
std::vector<CandidatePair> candidate_pairs(const Segment& segment,
                                           PairRule rule, uint32_t tau = 1);

// A one-to-one matching, kept sorted by hypothesis index. Ties between
// equally good matchings are always broken toward the lexicographically
// smallest pair list, which makes every result reproducible.
using PairList = std::vector<std::pair<uint32_t, uint32_t>>;

struct Matching {
  PairList pairs;
};

// Lexicographically smallest maximum-cardinality matching. Cardinality is
// the right target here because F grows strictly with the number of matched
// pairs when every pair is worth full credit.
Matching optimal_matching_em(const Segment& segment);
Matching optimal_matching_mp(const Segment& segment, uint32_t tau);

// Per-pair credit for the partial-credit measures: kPerSpan awards
// (overlap/|hyp span|, overlap/|gold span|), kChars awards the raw overlap
// to both sides.
enum class CreditKind { kPerSpan, kChars };

// One Pareto-maximal (precision-credit, recall-credit) sum, together with
// the lexicographically smallest matching realizing it.
struct FrontierPoint {
  Rational x;  // precision-side credit sum
  Rational y;  // recall-side credit sum
  PairList pairs;
};

// Pareto frontier sorted by ascending x (hence descending y). F is maximized
// somewhere on this frontier for any positive denominators, so keeping only
// the frontier loses nothing while keeping enumeration tractable.
using Frontier = std::vector<FrontierPoint>;

Frontier credit_frontier(const Segment& segment, CreditKind kind,
                         uint64_t budget = kDefaultBudget);

// Frontier of all pairwise sums. Valid whenever the two operands cover
// disjoint hypothesis/gold spans (different components or segments), which
// is what makes corpus-level scores exact rather than greedy.
Frontier combine_frontiers(const Frontier& a, const Frontier& b,
                           uint64_t budget = kDefaultBudget);

struct CreditSolution {
  Matching matching;
  Rational precision;
  Rational recall;
  Rational f;
};

// Evaluates P = x/hyp_denom, R = y/gold_denom (1 when the denominator is
// zero) over the frontier and returns the F-maximizing point.
CreditSolution best_on_frontier(const Frontier& frontier, uint64_t hyp_denom,
                                uint64_t gold_denom);

// F-optimal one-to-one matching under per-span partial credit.
CreditSolution optimal_matching_mpp(const Segment& segment,
                                    uint64_t budget = kDefaultBudget);

// F-optimal one-to-one matching under character-overlap credit.
CreditSolution optimal_matching_chars(const Segment& segment,
                                      uint64_t budget = kDefaultBudget);

// How the oracle scores a complete matching.
enum class PairScorer { kCounts, kPerSpanCredit, kCharOverlap };

struct OracleResult {
  Matching matching;
  Rational precision;
  Rational recall;
  Rational f;
};

// Independent check: enumerates every one-to-one matching over the full
// candidate set without any of the shortcuts above (no cardinality argument,
// no component decomposition, no Pareto pruning) and returns the F-best,
// lexicographically smallest one. Intended for tests; throws BudgetError
// beyond kOracleCandidateLimit candidates.
OracleResult brute_force_matching(const Segment& segment, PairRule rule,
                                  uint32_t tau, PairScorer scorer);

}  // namespace spanscore

#endif  // SPANSCORE_MATCHING_HPP
