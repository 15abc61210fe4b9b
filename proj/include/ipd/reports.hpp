#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ipd/dynamics.hpp"
#include "ipd/stats.hpp"
#include "ipd/tournament.hpp"
#include "ipd/zd.hpp"

namespace ipd::io {

// One measured side of one match: player_a is the measured (focal) player.
struct DetectionRow {
  std::string player_a;
  std::string player_b;
  int repetition = 0;
  zd::MeasuredProfile profile;
  zd::ZDFit fit;
  Eigen::Vector4d states = Eigen::Vector4d::Zero();  // P(CC..DD), focal first
  double score_per_turn_a = 0.0;
  double score_per_turn_b = 0.0;
  std::string winner;  // "a", "b" or "tie" by total match score
  zd::Verdict verdict = zd::Verdict::NotExtortionate;
};

// Both sides of every record (focal = a then focal = b), optionally skipping
// self-interactions; rows follow the record order.
std::vector<DetectionRow> detection_rows(
    const std::vector<InteractionRecord>& records,
    const std::vector<std::string>& names, const PayoffParams& payoffs,
    const zd::Imputation& imputation, double sse_threshold,
    bool include_self);

// A history read back from an interaction CSV.
struct HistoryEntry {
  std::string a;
  std::string b;
  int repetition = 0;
  MatchHistory history;
};

std::vector<HistoryEntry> read_interactions_csv(const std::string& path);

std::vector<DetectionRow> detection_rows(const std::vector<HistoryEntry>& entries,
                                         const PayoffParams& payoffs,
                                         const zd::Imputation& imputation,
                                         double sse_threshold);

// --- writers; every file is written atomically ---

// `player_a,player_b,repetition,turn,action_a,action_b`, one row per turn.
void write_interactions_csv(const std::string& path,
                            const std::vector<InteractionRecord>& records,
                            const std::vector<std::string>& names);

void write_detection_csv(const std::string& path,
                         const std::vector<DetectionRow>& rows);

void write_verdicts_csv(const std::string& path,
                        const std::vector<DetectionRow>& rows);

// `strategy,metric,count,...` distribution summaries per measured strategy;
// metrics: sse, chi (finite values only), score_per_turn, P_DD.
void write_summary_csv(const std::string& path,
                       const std::vector<DetectionRow>& rows);

void write_fig1_csv(const std::string& path,
                    const std::vector<DetectionRow>& rows,
                    const stats::RankTables& ranks);

void write_fig2_csv(const std::string& path,
                    const std::vector<DetectionRow>& rows);

void write_payoff_matrix_csv(const std::string& path, const Eigen::MatrixXd& S,
                             const std::vector<std::string>& names);

Eigen::MatrixXd read_payoff_matrix_csv(const std::string& path,
                                       std::vector<std::string>& names);

// `strategy,score_rank,stationary_probability`, ordered by score rank (mean
// payoff over the matrix row).
void write_stationary_csv(const std::string& path,
                          const std::vector<std::string>& names,
                          const Eigen::MatrixXd& S, const Eigen::VectorXd& x);

struct FixationRow {
  std::string strategy_a;
  std::string strategy_b;
  dynamics::FixationResult result;
};

void write_fixation_csv(const std::string& path,
                        const std::vector<FixationRow>& rows);

void write_regression_report(const std::string& path,
                             const stats::RegressionResult& fit,
                             const std::vector<std::string>& feature_names,
                             const std::string& target_name, std::size_t n_rows);

}  // namespace ipd::io
