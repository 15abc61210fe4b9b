#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "ipd/actions.hpp"
#include "ipd/payoffs.hpp"

namespace ipd::zd {

template <class Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <class Scalar>
using Mat42 = Eigen::Matrix<Scalar, 4, 2>;

// (p1, p2, p3, p4): cooperation probabilities conditional on (CC, CD, DC, DD),
// focal action first.
using MemoryOneVector = Eigen::Vector4d;

// Transformed coordinates p~ = (p1 - 1, p2 - 1, p3, p4). This is also the
// least-squares target p*; the convention is fixed by requiring known
// extortionate strategies to fit with zero residual.
using TransformedVector = Eigen::Vector4d;

template <class Scalar>
Vec4<Scalar> transformed(const Vec4<Scalar>& p) {
  Vec4<Scalar> pt;
  pt << p[0] - Scalar(1), p[1] - Scalar(1), p[2], p[3];
  return pt;
}

// Design matrix whose column space contains, in transformed coordinates,
// every memory-one vector enforcing a score relation pinned at P:
//   rows (R-P, R-P), (S-P, T-P), (T-P, S-P), (0, 0).
// Rank 2 for any valid payoffs.
template <class Scalar>
Mat42<Scalar> design_matrix(const PayoffsT<Scalar>& g) {
  Mat42<Scalar> C;
  C << g.R - g.P, g.R - g.P,
       g.S - g.P, g.T - g.P,
       g.T - g.P, g.S - g.P,
       Scalar(0), Scalar(0);
  return C;
}

template <class Scalar>
struct ZDFitT {
  Scalar alpha{};
  Scalar beta{};
  Scalar gamma{};  // -P (alpha + beta)
  Scalar chi{};    // -beta / alpha
  Scalar sse{};    // squared residual norm of the projection
  Vec4<Scalar> projected = Vec4<Scalar>::Zero();  // C x*, in transformed coords
};

using ZDFit = ZDFitT<double>;

// Orthogonal projection of p onto the ZD subspace:
//   x* = (C^T C)^{-1} C^T p*,  SSE = ||C x* - p*||^2.
// The 2x2 normal equations are solved in closed form; C^T C is well
// conditioned for valid payoffs.
template <class Scalar>
ZDFitT<Scalar> fit_zd(const Vec4<Scalar>& p, const PayoffsT<Scalar>& g) {
  const Mat42<Scalar> C = design_matrix(g);
  const Vec4<Scalar> pstar = transformed(p);

  const Eigen::Matrix<Scalar, 2, 2> M = C.transpose() * C;
  const Scalar det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  if constexpr (std::is_floating_point_v<Scalar>) {
    if (!(std::abs(det) > Scalar(1e-12) * M(0, 0) * M(1, 1)))
      throw std::domain_error("degenerate payoffs");
  } else {
    if (det == Scalar(0)) throw std::domain_error("degenerate payoffs");
  }

  const Eigen::Matrix<Scalar, 2, 1> rhs = C.transpose() * pstar;
  Eigen::Matrix<Scalar, 2, 1> x;
  x[0] = (M(1, 1) * rhs[0] - M(0, 1) * rhs[1]) / det;
  x[1] = (M(0, 0) * rhs[1] - M(1, 0) * rhs[0]) / det;

  ZDFitT<Scalar> fit;
  fit.alpha = x[0];
  fit.beta = x[1];
  fit.gamma = -g.P * (x[0] + x[1]);
  fit.chi = -fit.beta / fit.alpha;  // +-inf when alpha == 0
  fit.projected = C * x;
  fit.sse = (fit.projected - pstar).squaredNorm();
  return fit;
}

// Nearest point of the ZD subspace in transformed coordinates (idempotent).
template <class Scalar>
Vec4<Scalar> project_onto_plane(const Vec4<Scalar>& p, const PayoffsT<Scalar>& g) {
  return fit_zd(p, g).projected;
}

// Closed-form extortion factor
//   chi = (p~2 (P-T) + p~3 (S-P)) / (p~2 (P-S) + p~3 (T-P)).
// Throws std::domain_error("chi undefined") when the denominator vanishes.
template <class Scalar>
Scalar chi_closed_form(const Vec4<Scalar>& p, const PayoffsT<Scalar>& g) {
  const Vec4<Scalar> pt = transformed(p);
  const Scalar num = pt[1] * (g.P - g.T) + pt[2] * (g.S - g.P);
  const Scalar den = pt[1] * (g.P - g.S) + pt[2] * (g.T - g.P);
  if (den == Scalar(0)) throw std::domain_error("chi undefined");
  return num / den;
}

enum class PlaneCondition {
  None,              // all conditions hold
  P1Equation,        // p1 != ((R-P)(p2+p3) - R + T + S - P) / (S + T - 2P)
  P4Zero,            // p4 != 0
  CooperationBound,  // p2 + p3 >= 1
};

struct PlaneCheck {
  bool extortionate = false;
  PlaneCondition failed = PlaneCondition::None;
  double p1_rhs = 0.0;  // right-hand side of the p1 condition, for diagnostics
};

// Exact membership test for the extortion plane: the p1 equation and p4 = 0
// within tol, and p2 + p3 < 1 by a margin greater than tol.
PlaneCheck is_extortionate_exact(const MemoryOneVector& p,
                                 const PayoffParams& g, double tol);

struct Imputation {
  enum class Kind { OverallCooperationRate, FixedValue };
  Kind kind = Kind::OverallCooperationRate;
  double fixed_value = 0.5;

  static Imputation overall_rate() { return {}; }
  static Imputation fixed(double v) { return {Kind::FixedValue, v}; }
};

struct MeasuredProfile {
  std::array<std::int64_t, 4> cooperation_counts{};
  std::array<std::int64_t, 4> visit_counts{};
  MemoryOneVector p_hat = MemoryOneVector::Zero();
  std::array<bool, 4> imputed{};
  double overall_cooperation_rate = 0.0;
};

enum class Side { Focal, Opponent };

// Empirical memory-one vector of one side of a match: for each joint state,
// the fraction of visits followed by that side cooperating. States never
// visited get the side's overall cooperation rate (or a fixed value).
// Requires at least two turns.
MeasuredProfile measure_memory_one(const MatchHistory& h, Side side,
                                   const Imputation& imputation);

enum class Verdict { Extortionate, Boundary, NotExtortionate };

// Threshold test on a fit: extortionate when the vector is close to the ZD
// subspace (sse <= threshold) and enforces chi > 1 with the extortion
// orientation (alpha > 0, -beta > alpha); boundary when chi = 1 within 1e-9.
// If alpha < 0 while the projection is numerically zero the sign of
// (alpha, beta) is unidentifiable and is normalized first.
Verdict detect_extortion(const ZDFit& fit, double sse_threshold);

const char* to_string(Verdict v);

}  // namespace ipd::zd
