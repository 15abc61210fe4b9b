#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ipd/match.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

struct TournamentConfig {
  std::vector<CatalogEntry> corpus;
  int turns = 2000;
  int repetitions = 60;
  std::uint64_t master_seed = 0;
  PayoffParams payoffs = standard_payoffs();
  bool include_self_interactions = false;
};

struct InteractionRecord {
  int pair_index;
  int a;  // corpus index, a <= b
  int b;
  int repetition;
  MatchHistory history;  // from a's perspective
};

// Unordered pairs (i, j) with i <= j (or i < j when self-play is off), in
// lexicographic order. The position in this list is the pair index used for
// seed derivation.
std::vector<std::pair<int, int>> pair_list(int n, bool include_self);

// Round-robin: every pair is played `repetitions` times, match seed
// derive_seed(master_seed, pair_index, repetition). Records are returned in
// canonical (pair_index, repetition) order for any thread count.
std::vector<InteractionRecord> run_tournament(const TournamentConfig& cfg,
                                              int threads = 1);

// Streaming flavour: invokes `sink` for each record in canonical order.
void run_tournament(const TournamentConfig& cfg, int threads,
                    const std::function<void(const InteractionRecord&)>& sink);

}  // namespace ipd
