#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ipd/actions.hpp"

namespace ipd {

// Memory-one strategy: cooperation probabilities conditional on the previous
// joint state (CC, CD, DC, DD), own action listed first.
struct MemoryOneSpec {
  Eigen::Vector4d p;
  double initial_cooperation = 1.0;
};

// Deterministic strategy of memory `depth`: the first `depth` moves come from
// `opening`, afterwards the move is looked up from the window of the last
// `depth` joint actions. The table is total over its domain: entry k covers
// the window whose base-4 encoding (oldest turn first, state_index digits)
// equals k, so it has exactly 4^depth entries.
struct LookupTableSpec {
  int depth = 1;
  std::vector<Action> opening;
  std::vector<Action> table;
};

enum class Classic {
  Cooperator,
  Defector,
  TitForTat,
  Alternator,
  Grudger,
  WinStayLoseShift,
  Random,
};

struct ClassicSpec {
  Classic kind;
  double random_p = 0.5;  // only used by Classic::Random
};

using StrategySpec = std::variant<MemoryOneSpec, LookupTableSpec, ClassicSpec>;

// Throws std::invalid_argument if probabilities leave [0,1], the lookup table
// is not total, or the opening length does not match the depth.
void validate(const StrategySpec& spec);

// Number of most recent turns the spec can condition on (0 for history-free
// strategies; Grudger conditions on the whole history and reports -1).
int memory_depth(const StrategySpec& spec);

struct CatalogEntry {
  std::string name;
  StrategySpec spec;
  bool uses_match_length = false;  // flagged entries are excluded from dynamics
};

inline constexpr const char* kCatalogVersion = "catalog-1";

// The built-in corpus: every named classic plus the memory-one and lookup
// strategies used in the tournaments. Names are stable identifiers.
const std::vector<CatalogEntry>& default_catalog();

std::optional<CatalogEntry> find_in_catalog(const std::string& name);

// Parses a JSON corpus file (array of entries; see README for the schema).
std::vector<CatalogEntry> load_corpus_file(const std::string& path);

// Plays one side of a match. All strategy state is derived incrementally from
// the observed turns, and random draws come only from the player's own stream,
// so a player's actions are a pure function of (spec, seed, opponent actions).
class Player {
 public:
  Player(const StrategySpec& spec, std::uint64_t stream_seed);

  Action act();
  void observe(Action own, Action opponent);

 private:
  const StrategySpec* spec_;
  std::mt19937_64 rng_;
  int turn_ = 0;
  JointAction last_{Action::C, Action::C};
  bool opponent_defected_ = false;  // Grudger trigger
  int window_key_ = 0;              // rolling lookup-table key
  int window_mask_ = 0;
};

}  // namespace ipd
