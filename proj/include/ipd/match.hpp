#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "ipd/actions.hpp"
#include "ipd/payoffs.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

// Plays `turns` rounds of a vs b. The result is a pure function of the
// arguments: each player draws from an independent stream derived from `seed`,
// so changing one player's strategy never perturbs the other's draws.
MatchHistory play_match(const StrategySpec& a, const StrategySpec& b, int turns,
                        std::uint64_t seed);

struct MatchScore {
  double total_focal = 0.0;
  double total_opponent = 0.0;
  double per_turn_focal = 0.0;
  double per_turn_opponent = 0.0;
};

// Sums per-turn payoffs: (C,C) -> (R,R), (C,D) -> (S,T), (D,C) -> (T,S),
// (D,D) -> (P,P).
MatchScore score_history(const MatchHistory& h, const PayoffParams& payoffs);

// Empirical frequencies of (CC, CD, DC, DD) over the match.
Eigen::Vector4d state_distribution(const MatchHistory& h);

}  // namespace ipd
