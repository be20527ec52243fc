#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyptrace/isometry.hpp"

namespace hyptrace {

enum class Sidedness { OneSided, TwoSided };

/// Closed geodesic on a non-orientable surface, described by its length and sidedness.
struct CurveData {
  double length = 1.0;
  Sidedness sided = Sidedness::TwoSided;
};

enum class SmoothingTag { Essential, PunctureLoop, SubUnit };

std::string_view to_string(SmoothingTag tag);

/// Free homotopy class obtained by smoothing a crossing of two closed geodesics.
struct SmoothingOutcome {
  SmoothingTag tag = SmoothingTag::Essential;
  /// Length of the geodesic representative. Present for Essential outcomes,
  /// except when the mixed-sidedness product degenerates to a reflection.
  std::optional<double> length;
  /// Mixed sidedness with a vanishing half-trace: the product is a reflection
  /// and no length is asserted.
  bool reflection_degenerate = false;
  /// The half-trace the outcome was decided from.
  double half_trace = 0.0;
};

/// Smooths the crossing of alpha and beta at forward angle theta.
SmoothingOutcome smooth(const CurveData& alpha, const CurveData& beta, double theta,
                        double tol = kDefaultTol);

/// |sinh(la/2) sinh(lb/2) + cosh(la/2) cosh(lb/2) cos(theta)|; equal to 1 exactly
/// when smoothing two one-sided geodesics gives a puncture loop.
double puncture_quantity(double l_alpha, double l_beta, double theta);

/// Shape of f(t) = |r sinh t + s cosh t|, by the sign pattern of s against +-r.
enum class FCase { I, II, III, IV, V };

std::string_view to_string(FCase c);

FCase classify_f_case(double r, double s, double tol = kDefaultTol);

/// All t with |r sinh t + s cosh t| = 1, ascending and deduplicated.
std::vector<double> unit_level_crossings(double r, double s);

struct PunctureSearchResult {
  /// Odd m with alpha^m smoothed against beta a puncture loop; ascending, at most two.
  std::vector<int> ms;
  FCase f_case = FCase::I;
  double r = 0.0;
  double s = 0.0;
};

/// Odd powers m, |m| <= m_cap, for which smoothing alpha^m with beta (both
/// one-sided) gives a puncture loop. Solved in closed form through
/// unit_level_crossings of r = sinh(lb/2), s = cosh(lb/2) cos(theta).
PunctureSearchResult find_puncture_m(double l_alpha, double l_beta, double theta,
                                     double tol = kDefaultTol, int m_cap = 1'000'000);

enum class AngleRelation { Greater, Equal, Less, NotApplicable };

std::string_view to_string(AngleRelation r);

/// For even m with exactly {m-1, m+1} found by find_puncture_m, how theta
/// compares with pi/2; NotApplicable otherwise.
AngleRelation consecutive_angle_relation(int m, double l_alpha, double l_beta, double theta,
                                         double tol = kDefaultTol);

/// The relation predicted for a consecutive pair {m-1, m+1} by the sign of m.
AngleRelation expected_angle_relation(int m);

struct ConsecutiveWitness {
  double l_beta = 0.0;
  double theta = 0.0;
};

/// Finds (l_beta, theta) making both alpha^{m-1} and alpha^{m+1} puncture loops.
std::optional<ConsecutiveWitness> solve_consecutive_pair(int m, double l_alpha);

}  // namespace hyptrace
