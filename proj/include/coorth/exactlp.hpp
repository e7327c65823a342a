#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coorth/rational.hpp"

namespace coorth {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
    RatVec coeffs;
    Relation rel = Relation::LessEq;
    Rat rhs = 0;
};

enum class Sense { Maximize, Minimize };

/// Variables are free (may take any sign).  With no objective the
/// problem is a pure feasibility question.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<LinearConstraint> constraints;
    std::optional<RatVec> objective;
    Sense sense = Sense::Maximize;
};

enum class LpStatus { Optimal, Feasible, Infeasible, Unbounded };

/// Returned points satisfy every constraint exactly; lp_solve re-checks
/// them before returning and the optimal value is exact.
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::optional<RatVec> point;
    std::optional<Rat> value;
};

/// Two-phase primal simplex over the rationals, Bland's rule throughout.
LpOutcome lp_solve(const LinearProgram& lp);

enum class StrictRelation { Less, LessEq, Equal, Greater, GreaterEq };

struct StrictCondition {
    RatVec coeffs;
    StrictRelation rel = StrictRelation::Less;
    Rat rhs = 0;
};

struct StrictPoint {
    RatVec point;
    Rat margin;  // shared slack realized on every strict condition, > 0
};

/// Decides a finite system of strict/non-strict linear conditions by
/// slack maximization: each strict <a,x> < b becomes <a,x> <= b - t and
/// the shared slack t (capped at 1) is maximized.  A point is returned
/// iff the optimum is positive, so "open" memberships come with an
/// exact margin instead of a perturbation.
std::optional<StrictPoint> strict_feasible(std::size_t num_vars,
                                           const std::vector<StrictCondition>& conditions);

/// Indices of the extreme points of conv(points): a point is kept iff it
/// is not a convex combination of the others, one membership LP each.
/// Duplicate points keep the first occurrence.
std::vector<std::size_t> hull_vertices(const std::vector<RatVec>& points);

/// A nonzero point of the cone {x : homogeneous constraints}, or nullopt
/// when the cone is exactly {0}.  Decided by 2n feasibility LPs fixing
/// each coordinate to +1 and -1 in turn.
std::optional<RatVec> nonzero_cone_point(std::size_t num_vars,
                                         const std::vector<LinearConstraint>& homogeneous);

}  // namespace coorth
