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

#include "sentinels.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"

namespace spanscore {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    const size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(std::string("invalid ") + what + " \"" + std::string(s) +
                      "\"");
  }
  return value;
}

double parse_probability(std::string_view s) {
  // std::from_chars for doubles is still spotty across libstdc++ versions'
  // corner cases; strtod on a bounded copy is unambiguous enough here.
  const std::string copy(s);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  // The negated comparison also rejects NaN, which strtod happily parses.
  if (end != copy.c_str() + copy.size() || copy.empty() ||
      !(value >= 0.0 && value <= 1.0)) {
    throw ConfigError("drop probability must be a number in [0, 1], got \"" +
                      copy + "\"");
  }
  return value;
}

}  // namespace

PerturbationSpec parse_perturbation(std::string_view spec) {
  const auto parts = split(spec, ':');
  PerturbationSpec out;
  if (parts[0] == "extend") {
    if (parts.size() != 2) {
      throw ConfigError("expected extend:<k>, got \"" + std::string(spec) +
                        "\"");
    }
    out.kind = PerturbationSpec::Kind::kExtend;
    out.amount = parse_number<uint32_t>(parts[1], "extension width");
  } else if (parts[0] == "drop") {
    if (parts.size() < 2 || parts.size() > 4) {
      throw ConfigError("expected drop:<p>[:<seed>[:<reps>]], got \"" +
                        std::string(spec) + "\"");
    }
    out.kind = PerturbationSpec::Kind::kDrop;
    out.probability = parse_probability(parts[1]);
    if (parts.size() > 2) out.seed = parse_number<uint64_t>(parts[2], "seed");
    if (parts.size() > 3) {
      out.repetitions = parse_number<uint32_t>(parts[3], "repetition count");
      if (out.repetitions < 1) {
        throw ConfigError("repetition count must be at least 1");
      }
    }
  } else if (parts[0] == "remove-few") {
    if (parts.size() != 2) {
      throw ConfigError("expected remove-few:<t>, got \"" + std::string(spec) +
                        "\"");
    }
    out.kind = PerturbationSpec::Kind::kRemoveFew;
    out.amount = parse_number<uint32_t>(parts[1], "size threshold");
  } else {
    throw ConfigError("unknown perturbation \"" + std::string(spec) +
                      "\" (expected extend:<k>, drop:<p>:<seed>:<reps>, or "
                      "remove-few:<t>)");
  }
  return out;
}

Segment extend_spans(const Segment& segment, uint32_t k) {
  Segment out = segment;
  const auto n = static_cast<uint64_t>(segment.text.size());
  for (AnnotatedSpan& s : out.hypothesis) {
    s.span.start = s.span.start > k ? s.span.start - k : 0;
    const uint64_t widened = static_cast<uint64_t>(s.span.end) + k;
    s.span.end = static_cast<uint32_t>(widened < n ? widened : n);
  }
  return out;
}

Segment drop_spans(const Segment& segment, double probability,
                   uint64_t master_seed) {
  Segment out = segment;
  out.hypothesis.clear();
  const uint64_t stream = master_seed ^ fnv1a64(segment.id);
  for (size_t j = 0; j < segment.hypothesis.size(); ++j) {
    const double u = unit_from_bits(splitmix64_at(stream, j));
    if (u < probability) continue;
    out.hypothesis.push_back(segment.hypothesis[j]);
  }
  return out;
}

Segment remove_if_few(const Segment& segment, uint64_t threshold) {
  Segment out = segment;
  if (!out.hypothesis.empty() && out.hypothesis.size() <= threshold) {
    out.hypothesis.clear();
  }
  return out;
}

Dataset apply_perturbation(const Dataset& dataset,
                           const PerturbationSpec& spec, uint32_t repetition) {
  Dataset out;
  out.segments.reserve(dataset.segments.size());
  const uint64_t seed = repetition_seed(spec.seed, repetition);
  for (const Segment& segment : dataset.segments) {
    switch (spec.kind) {
      case PerturbationSpec::Kind::kExtend:
        out.segments.push_back(extend_spans(segment, spec.amount));
        break;
      case PerturbationSpec::Kind::kDrop:
        out.segments.push_back(drop_spans(segment, spec.probability, seed));
        break;
      case PerturbationSpec::Kind::kRemoveFew:
        out.segments.push_back(remove_if_few(segment, spec.amount));
        break;
    }
  }
  return out;
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

uint64_t splitmix64_at(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double unit_from_bits(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

uint64_t repetition_seed(uint64_t master_seed, uint32_t repetition) {
  return splitmix64_at(master_seed, repetition);
}

}  // namespace spanscore
