#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace tutorkit {

// FNV-1a, 64 bit. Reference vectors: "" -> 0xcbf29ce484222325,
// "a" -> 0xaf63dc4c8601ec8c.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint32_t kAssignmentBuckets = 10000;

// Session-sticky assignment bucket; the simulator and the serving layer must
// agree on this value, so both call here.
inline std::uint32_t session_bucket(std::string_view session_id) {
  return static_cast<std::uint32_t>(fnv1a64(session_id) % kAssignmentBuckets);
}

// Maps a bucket onto an entry of a weight vector by cumulative ranges
// [edge(i-1), edge(i)) with edge(i) = round(10000 * cumsum(i)). Weights are
// assumed normalized; the final edge is forced to cover every bucket.
inline std::size_t weighted_bucket_index(std::uint32_t bucket,
                                         std::span<const double> weights) {
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    cum += weights[i];
    auto edge = static_cast<std::uint32_t>(std::llround(cum * kAssignmentBuckets));
    if (bucket < edge) return i;
  }
  return weights.empty() ? 0 : weights.size() - 1;
}

// Seed for per-decision randomness, stable across replays of the same
// (session, question) pair. 0x1f keeps the two ids unambiguous.
inline std::uint64_t decision_seed(std::string_view session_id,
                                   std::string_view question_id) {
  std::string key;
  key.reserve(session_id.size() + 1 + question_id.size());
  key.append(session_id);
  key.push_back('\x1f');
  key.append(question_id);
  return fnv1a64(key);
}

}  // namespace tutorkit
