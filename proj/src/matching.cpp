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

#include "matching.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "errors.hpp"

namespace spanscore {

namespace {

// hyp index -> ascending gold indices (with per-edge overlap for credits)
struct Adjacency {
  std::vector<std::vector<uint32_t>> gold_of;
  std::vector<std::vector<uint32_t>> overlap_of;
  size_t n_hyp = 0;
  size_t n_gold = 0;
};

Adjacency build_adjacency(const Segment& segment,
                          const std::vector<CandidatePair>& cands) {
  Adjacency adj;
  adj.n_hyp = segment.hypothesis.size();
  adj.n_gold = segment.gold.size();
  adj.gold_of.resize(adj.n_hyp);
  adj.overlap_of.resize(adj.n_hyp);
  for (const CandidatePair& c : cands) {  // already in (hyp, gold) order
    adj.gold_of[c.hyp].push_back(c.gold);
    adj.overlap_of[c.hyp].push_back(c.overlap_len);
  }
  return adj;
}

// Kuhn's augmenting-path algorithm over the non-banned nodes.
class MatchSizeSolver {
 public:
  explicit MatchSizeSolver(const Adjacency& adj) : adj_(adj) {}

  size_t size(const std::vector<char>& hyp_banned,
              const std::vector<char>& gold_banned) {
    match_gold_.assign(adj_.n_gold, -1);
    size_t matched = 0;
    for (size_t h = 0; h < adj_.n_hyp; ++h) {
      if (hyp_banned[h] || adj_.gold_of[h].empty()) continue;
      visited_.assign(adj_.n_gold, 0);
      if (augment(h, hyp_banned, gold_banned)) ++matched;
    }
    return matched;
  }

 private:
  bool augment(size_t h, const std::vector<char>& hyp_banned,
               const std::vector<char>& gold_banned) {
    for (uint32_t g : adj_.gold_of[h]) {
      if (gold_banned[g] || visited_[g]) continue;
      visited_[g] = 1;
      if (match_gold_[g] < 0 ||
          augment(static_cast<size_t>(match_gold_[g]), hyp_banned,
                  gold_banned)) {
        match_gold_[g] = static_cast<int64_t>(h);
        return true;
      }
    }
    return false;
  }

  const Adjacency& adj_;
  std::vector<int64_t> match_gold_;
  std::vector<char> visited_;
};

// Fixes pairs greedily in (hyp, gold) order, keeping each tentative pair
// only if a maximum matching can still be completed around it. The result is
// the lexicographically smallest maximum matching.
Matching lexmin_maximum_matching(const Segment& segment,
                                 const std::vector<CandidatePair>& cands) {
  const Adjacency adj = build_adjacency(segment, cands);
  MatchSizeSolver solver(adj);
  std::vector<char> hyp_banned(adj.n_hyp, 0), gold_banned(adj.n_gold, 0);
  const size_t target = solver.size(hyp_banned, gold_banned);

  Matching result;
  for (size_t h = 0; h < adj.n_hyp && result.pairs.size() < target; ++h) {
    for (uint32_t g : adj.gold_of[h]) {
      if (gold_banned[g]) continue;
      hyp_banned[h] = 1;
      gold_banned[g] = 1;
      const size_t rest = solver.size(hyp_banned, gold_banned);
      if (result.pairs.size() + 1 + rest == target) {
        result.pairs.emplace_back(static_cast<uint32_t>(h), g);
        break;
      }
      hyp_banned[h] = 0;
      gold_banned[g] = 0;
    }
  }
  return result;
}

struct Edge {
  uint32_t hyp;
  uint32_t gold;
  Rational x_credit;
  Rational y_credit;
};

// All one-to-one matchings of one connected component, visited by deciding
// each hypothesis span in turn (leave unmatched, or take any free gold).
class ComponentEnumerator {
 public:
  ComponentEnumerator(const std::vector<uint32_t>& hyps,
                      const std::vector<std::vector<Edge>>& edges_of,
                      uint64_t budget, uint64_t& steps)
      : hyps_(hyps), edges_of_(edges_of), budget_(budget), steps_(steps) {}

  std::vector<FrontierPoint> run() {
    gold_used_.clear();
    current_.pairs.clear();
    current_.x = 0;
    current_.y = 0;
    walk(0);
    return std::move(points_);
  }

 private:
  void walk(size_t depth) {
    if (++steps_ > budget_) {
      throw BudgetError(
          "matching enumeration budget exceeded (component of " +
          std::to_string(hyps_.size()) + " hypothesis spans; raise --budget "
          "or simplify the annotation)");
    }
    if (depth == hyps_.size()) {
      points_.push_back(current_);
      return;
    }
    const uint32_t h = hyps_[depth];
    walk(depth + 1);  // h stays unmatched
    for (const Edge& e : edges_of_[h]) {
      if (std::find(gold_used_.begin(), gold_used_.end(), e.gold) !=
          gold_used_.end()) {
        continue;
      }
      gold_used_.push_back(e.gold);
      current_.pairs.emplace_back(e.hyp, e.gold);
      current_.x += e.x_credit;
      current_.y += e.y_credit;
      walk(depth + 1);
      current_.x -= e.x_credit;
      current_.y -= e.y_credit;
      current_.pairs.pop_back();
      gold_used_.pop_back();
    }
  }

  const std::vector<uint32_t>& hyps_;
  const std::vector<std::vector<Edge>>& edges_of_;
  const uint64_t budget_;
  uint64_t& steps_;
  std::vector<uint32_t> gold_used_;
  FrontierPoint current_;
  std::vector<FrontierPoint> points_;
};

// Keeps, for every Pareto-maximal (x, y), the lexicographically smallest
// pair list that attains it; returns points sorted by ascending x.
Frontier pareto_prune(std::vector<FrontierPoint> points) {
  std::sort(points.begin(), points.end(),
            [](const FrontierPoint& a, const FrontierPoint& b) {
              if (a.x != b.x) return a.x > b.x;
              if (a.y != b.y) return a.y > b.y;
              return a.pairs < b.pairs;
            });
  Frontier keep;
  std::optional<Rational> best_y;
  for (FrontierPoint& p : points) {
    if (!best_y || p.y > *best_y) {
      best_y = p.y;
      keep.push_back(std::move(p));
    }
  }
  std::reverse(keep.begin(), keep.end());
  return keep;
}

struct DisjointSet {
  std::vector<size_t> parent;

  explicit DisjointSet(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), size_t{0});
  }
  size_t find(size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

Rational pair_f(const Rational& p, const Rational& r) {
  const Rational sum = p + r;
  if (sum == 0) return Rational(0);
  return 2 * p * r / sum;
}

}  // namespace

std::vector<CandidatePair> candidate_pairs(const Segment& segment,
                                           PairRule rule, uint32_t tau) {
  if (rule == PairRule::kOverlap && tau < 1) {
    throw ConfigError("overlap threshold must be at least 1");
  }
  std::vector<CandidatePair> out;
  for (uint32_t h = 0; h < segment.hypothesis.size(); ++h) {
    const Span hs = segment.hypothesis[h].span;
    for (uint32_t g = 0; g < segment.gold.size(); ++g) {
      const Span gs = segment.gold[g].span;
      if (rule == PairRule::kExact) {
        if (hs == gs) out.push_back({h, g, span_length(hs)});
      } else {
        const uint32_t ov = overlap(hs, gs);
        if (ov >= tau) out.push_back({h, g, ov});
      }
    }
  }
  return out;
}

Matching optimal_matching_em(const Segment& segment) {
  return lexmin_maximum_matching(segment,
                                 candidate_pairs(segment, PairRule::kExact));
}

Matching optimal_matching_mp(const Segment& segment, uint32_t tau) {
  return lexmin_maximum_matching(
      segment, candidate_pairs(segment, PairRule::kOverlap, tau));
}

Frontier credit_frontier(const Segment& segment, CreditKind kind,
                         uint64_t budget) {
  const auto cands = candidate_pairs(segment, PairRule::kOverlap, 1);
  Frontier total{{Rational(0), Rational(0), {}}};
  if (cands.empty()) return total;

  const size_t n_hyp = segment.hypothesis.size();
  const size_t n_gold = segment.gold.size();
  DisjointSet dsu(n_hyp + n_gold);
  std::vector<std::vector<Edge>> edges_of(n_hyp);
  for (const CandidatePair& c : cands) {
    dsu.unite(c.hyp, n_hyp + c.gold);
    Edge e{c.hyp, c.gold, Rational(0), Rational(0)};
    if (kind == CreditKind::kPerSpan) {
      e.x_credit = Rational(c.overlap_len,
                            span_length(segment.hypothesis[c.hyp].span));
      e.y_credit =
          Rational(c.overlap_len, span_length(segment.gold[c.gold].span));
    } else {
      e.x_credit = Rational(c.overlap_len);
      e.y_credit = Rational(c.overlap_len);
    }
    edges_of[c.hyp].push_back(e);
  }

  // Hypothesis spans of each component, in ascending order so that the
  // lexicographic tie-break is applied consistently everywhere.
  std::vector<std::vector<uint32_t>> component_hyps;
  {
    std::vector<size_t> root_to_component(n_hyp + n_gold, SIZE_MAX);
    for (uint32_t h = 0; h < n_hyp; ++h) {
      if (edges_of[h].empty()) continue;
      const size_t root = dsu.find(h);
      if (root_to_component[root] == SIZE_MAX) {
        root_to_component[root] = component_hyps.size();
        component_hyps.emplace_back();
      }
      component_hyps[root_to_component[root]].push_back(h);
    }
  }

  uint64_t steps = 0;
  for (const auto& hyps : component_hyps) {
    ComponentEnumerator enumerator(hyps, edges_of, budget, steps);
    Frontier component = pareto_prune(enumerator.run());
    total = combine_frontiers(total, component, budget);
  }
  return total;
}

Frontier combine_frontiers(const Frontier& a, const Frontier& b,
                           uint64_t budget) {
  if (a.size() > budget / (b.empty() ? 1 : b.size())) {
    throw BudgetError("frontier combination budget exceeded (" +
                      std::to_string(a.size()) + " x " +
                      std::to_string(b.size()) + " points)");
  }
  std::vector<FrontierPoint> sums;
  sums.reserve(a.size() * b.size());
  for (const FrontierPoint& pa : a) {
    for (const FrontierPoint& pb : b) {
      FrontierPoint p;
      p.x = pa.x + pb.x;
      p.y = pa.y + pb.y;
      p.pairs.resize(pa.pairs.size() + pb.pairs.size());
      std::merge(pa.pairs.begin(), pa.pairs.end(), pb.pairs.begin(),
                 pb.pairs.end(), p.pairs.begin());
      sums.push_back(std::move(p));
    }
  }
  return pareto_prune(std::move(sums));
}

CreditSolution best_on_frontier(const Frontier& frontier, uint64_t hyp_denom,
                                uint64_t gold_denom) {
  if (frontier.empty()) {
    throw InternalError("credit frontier must contain at least one point");
  }
  CreditSolution best;
  bool have = false;
  for (const FrontierPoint& pt : frontier) {
    const Rational p = hyp_denom ? pt.x / hyp_denom : Rational(1);
    const Rational r = gold_denom ? pt.y / gold_denom : Rational(1);
    const Rational f = pair_f(p, r);
    if (!have || f > best.f ||
        (f == best.f && pt.pairs < best.matching.pairs)) {
      best.matching.pairs = pt.pairs;
      best.precision = p;
      best.recall = r;
      best.f = f;
      have = true;
    }
  }
  return best;
}

CreditSolution optimal_matching_mpp(const Segment& segment, uint64_t budget) {
  return best_on_frontier(credit_frontier(segment, CreditKind::kPerSpan,
                                          budget),
                          segment.hypothesis.size(), segment.gold.size());
}

CreditSolution optimal_matching_chars(const Segment& segment,
                                      uint64_t budget) {
  uint64_t hyp_chars = 0, gold_chars = 0;
  for (const AnnotatedSpan& s : segment.hypothesis) {
    hyp_chars += span_length(s.span);
  }
  for (const AnnotatedSpan& s : segment.gold) {
    gold_chars += span_length(s.span);
  }
  return best_on_frontier(credit_frontier(segment, CreditKind::kChars,
                                          budget),
                          hyp_chars, gold_chars);
}

OracleResult brute_force_matching(const Segment& segment, PairRule rule,
                                  uint32_t tau, PairScorer scorer) {
  const auto cands = candidate_pairs(segment, rule, tau);
  if (cands.size() > kOracleCandidateLimit) {
    throw BudgetError("oracle limited to " +
                      std::to_string(kOracleCandidateLimit) +
                      " candidate pairs, got " + std::to_string(cands.size()));
  }

  const size_t n_hyp = segment.hypothesis.size();
  uint64_t hyp_chars = 0, gold_chars = 0;
  for (const AnnotatedSpan& s : segment.hypothesis) {
    hyp_chars += span_length(s.span);
  }
  for (const AnnotatedSpan& s : segment.gold) {
    gold_chars += span_length(s.span);
  }
  const uint64_t p_denom =
      scorer == PairScorer::kCharOverlap ? hyp_chars : n_hyp;
  const uint64_t r_denom =
      scorer == PairScorer::kCharOverlap ? gold_chars : segment.gold.size();

  std::vector<std::vector<Edge>> edges_of(n_hyp);
  for (const CandidatePair& c : cands) {
    Edge e{c.hyp, c.gold, Rational(0), Rational(0)};
    switch (scorer) {
      case PairScorer::kCounts:
        e.x_credit = Rational(1);
        e.y_credit = Rational(1);
        break;
      case PairScorer::kPerSpanCredit:
        e.x_credit = Rational(c.overlap_len,
                              span_length(segment.hypothesis[c.hyp].span));
        e.y_credit =
            Rational(c.overlap_len, span_length(segment.gold[c.gold].span));
        break;
      case PairScorer::kCharOverlap:
        e.x_credit = Rational(c.overlap_len);
        e.y_credit = Rational(c.overlap_len);
        break;
    }
    edges_of[c.hyp].push_back(e);
  }

  OracleResult best;
  bool have = false;
  PairList current;
  std::vector<uint32_t> gold_used;
  Rational x(0), y(0);

  auto score_leaf = [&]() {
    const Rational p = p_denom ? x / p_denom : Rational(1);
    const Rational r = r_denom ? y / r_denom : Rational(1);
    const Rational f = pair_f(p, r);
    if (!have || f > best.f || (f == best.f && current < best.matching.pairs)) {
      best.matching.pairs = current;
      best.precision = p;
      best.recall = r;
      best.f = f;
      have = true;
    }
  };

  auto walk = [&](auto&& self, size_t h) -> void {
    if (h == n_hyp) {
      score_leaf();
      return;
    }
    self(self, h + 1);
    for (const Edge& e : edges_of[h]) {
      if (std::find(gold_used.begin(), gold_used.end(), e.gold) !=
          gold_used.end()) {
        continue;
      }
      gold_used.push_back(e.gold);
      current.emplace_back(e.hyp, e.gold);
      x += e.x_credit;
      y += e.y_credit;
      self(self, h + 1);
      x -= e.x_credit;
      y -= e.y_credit;
      current.pop_back();
      gold_used.pop_back();
    }
  };
  walk(walk, 0);
  return best;
}

}  // namespace spanscore
