#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ipd {

// The two moves. C < D is fixed and used for serialization and state indexing.
enum class Action : std::uint8_t { C = 0, D = 1 };

inline char to_char(Action a) { return a == Action::C ? 'C' : 'D'; }

inline Action action_from_char(char c) {
  if (c == 'C') return Action::C;
  if (c == 'D') return Action::D;
  throw std::invalid_argument("action must be 'C' or 'D'");
}

// One turn of a match, the focal player's action first.
struct JointAction {
  Action focal;
  Action opponent;
  friend bool operator==(const JointAction&, const JointAction&) = default;
};

// Ordered joint actions of one complete match. Treated as immutable once the
// match has been played.
using MatchHistory = std::vector<JointAction>;

// Joint-state index CC=0, CD=1, DC=2, DD=3 (focal action first).
inline int state_index(const JointAction& s) {
  return (static_cast<int>(s.focal) << 1) | static_cast<int>(s.opponent);
}

inline MatchHistory transposed(const MatchHistory& h) {
  MatchHistory out;
  out.reserve(h.size());
  for (const JointAction& t : h) out.push_back({t.opponent, t.focal});
  return out;
}

}  // namespace ipd
