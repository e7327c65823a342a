#include "coorth/exactlp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace coorth {

namespace {

// Full-tableau two-phase simplex on exact rationals.  Free variables are
// split x = u - w, every row is an equality with rhs >= 0, artificials
// complete the starting basis.  Bland's rule (lowest eligible index in
// and out) guards against cycling; problem sizes are desk-scale so the
// dense tableau is fine.
class Simplex {
  public:
    Simplex(const LinearProgram& lp) : lp_(lp), n_(lp.num_vars) {
        for (const LinearConstraint& c : lp.constraints) {
            if (c.coeffs.size() != n_) throw InputError("lp_solve: constraint arity mismatch");
        }
        if (lp.objective && lp.objective->size() != n_)
            throw InputError("lp_solve: objective arity mismatch");
        build();
    }

    LpOutcome run() {
        if (!phase1()) return {LpStatus::Infeasible, std::nullopt, std::nullopt};
        if (!lp_.objective) {
            LpOutcome out{LpStatus::Feasible, extract(), std::nullopt};
            verify(out);
            return out;
        }
        if (!phase2()) {
            return {LpStatus::Unbounded, std::nullopt, std::nullopt};
        }
        LpOutcome out{LpStatus::Optimal, extract(), std::nullopt};
        out.value = dot(*lp_.objective, *out.point);
        verify(out);
        return out;
    }

  private:
    const LinearProgram& lp_;
    std::size_t n_;                 // original variables
    std::size_t split_cols_ = 0;    // 2n split columns
    std::size_t slack_cols_ = 0;
    std::size_t total_cols_ = 0;    // split + slack + artificial
    std::size_t first_artificial_ = 0;
    std::vector<RatVec> rows_;      // m x total_cols_
    RatVec rhs_;                    // >= 0
    std::vector<std::size_t> basis_;
    RatVec cost_;                   // reduced-cost row of current phase
    std::vector<bool> is_artificial_;

    void build() {
        split_cols_ = 2 * n_;
        for (const LinearConstraint& c : lp_.constraints)
            if (c.rel != Relation::Equal) ++slack_cols_;

        const std::size_t m = lp_.constraints.size();
        first_artificial_ = split_cols_ + slack_cols_;
        total_cols_ = first_artificial_;  // artificials appended below as needed
        rows_.assign(m, RatVec(first_artificial_, Rat(0)));
        rhs_.assign(m, Rat(0));
        basis_.assign(m, 0);

        std::size_t slack_at = split_cols_;
        std::vector<long> slack_sign(m, 0);
        std::vector<std::size_t> slack_col(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const LinearConstraint& c = lp_.constraints[i];
            for (std::size_t j = 0; j < n_; ++j) {
                rows_[i][2 * j] = c.coeffs[j];
                rows_[i][2 * j + 1] = -c.coeffs[j];
            }
            rhs_[i] = c.rhs;
            if (c.rel != Relation::Equal) {
                const long sign = (c.rel == Relation::LessEq) ? 1 : -1;
                rows_[i][slack_at] = sign;
                slack_sign[i] = sign;
                slack_col[i] = slack_at;
                ++slack_at;
            }
            if (rhs_[i] < 0) {
                for (Rat& v : rows_[i]) v = -v;
                rhs_[i] = -rhs_[i];
                slack_sign[i] = -slack_sign[i];
            }
        }

        // Starting basis: the slack column when it survived normalization
        // with coefficient +1, an artificial otherwise.
        for (std::size_t i = 0; i < m; ++i) {
            if (slack_sign[i] == 1) {
                basis_[i] = slack_col[i];
            } else {
                for (std::size_t k = 0; k < m; ++k) rows_[k].push_back(Rat(k == i ? 1 : 0));
                basis_[i] = total_cols_;
                ++total_cols_;
            }
        }
        is_artificial_.assign(total_cols_, false);
        for (std::size_t j = first_artificial_; j < total_cols_; ++j) is_artificial_[j] = true;
    }

    void price_out(RatVec& cost) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat c = cost[basis_[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < total_cols_; ++j) cost[j] -= c * rows_[i][j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat inv = 1 / rows_[row][col];
        for (std::size_t j = 0; j < total_cols_; ++j) rows_[row][j] *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            const Rat f = rows_[i][col];
            for (std::size_t j = 0; j < total_cols_; ++j) rows_[i][j] -= f * rows_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        if (cost_[col] != 0) {
            const Rat f = cost_[col];
            for (std::size_t j = 0; j < total_cols_; ++j) cost_[j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    // Minimizes the priced-out cost_ row.  Returns false on unboundedness.
    bool iterate(bool allow_artificial) {
        for (;;) {
            std::size_t entering = total_cols_;
            for (std::size_t j = 0; j < total_cols_; ++j) {
                if (!allow_artificial && is_artificial_[j]) continue;
                if (cost_[j] < 0) {
                    entering = j;
                    break;  // Bland: lowest index
                }
            }
            if (entering == total_cols_) return true;

            std::size_t leaving = rows_.size();
            Rat best_ratio = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][entering] <= 0) continue;
                const Rat ratio = rhs_[i] / rows_[i][entering];
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_.size()) return false;
            pivot(leaving, entering);
        }
    }

    bool phase1() {
        cost_.assign(total_cols_, Rat(0));
        for (std::size_t j = first_artificial_; j < total_cols_; ++j) cost_[j] = 1;
        price_out(cost_);
        iterate(true);  // bounded below by 0, never unbounded
        Rat infeas = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (is_artificial_[basis_[i]]) infeas += rhs_[i];
        if (infeas > 0) return false;

        // Drive zero-valued artificials out of the basis; a row with no
        // usable pivot is redundant and is dropped.
        for (std::size_t i = 0; i < rows_.size();) {
            if (!is_artificial_[basis_[i]]) {
                ++i;
                continue;
            }
            std::size_t col = total_cols_;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == total_cols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, col);
                ++i;
            }
        }
        return true;
    }

    bool phase2() {
        cost_.assign(total_cols_, Rat(0));
        for (std::size_t j = 0; j < n_; ++j) {
            const Rat c = (lp_.sense == Sense::Maximize) ? Rat(-(*lp_.objective)[j])
                                                         : (*lp_.objective)[j];
            cost_[2 * j] = c;
            cost_[2 * j + 1] = -c;
        }
        price_out(cost_);
        return iterate(false);
    }

    RatVec extract() const {
        RatVec full(total_cols_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) full[basis_[i]] = rhs_[i];
        RatVec x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = full[2 * j] - full[2 * j + 1];
        return x;
    }

    void verify(const LpOutcome& out) const {
        const RatVec& x = *out.point;
        for (const LinearConstraint& c : lp_.constraints) {
            const Rat lhs = dot(c.coeffs, x);
            const bool ok = (c.rel == Relation::LessEq && lhs <= c.rhs) ||
                            (c.rel == Relation::Equal && lhs == c.rhs) ||
                            (c.rel == Relation::GreaterEq && lhs >= c.rhs);
            if (!ok) throw std::logic_error("lp_solve: returned point violates a constraint");
        }
    }
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
    return Simplex(lp).run();
}

std::optional<StrictPoint> strict_feasible(std::size_t num_vars,
                                           const std::vector<StrictCondition>& conditions) {
    LinearProgram lp;
    lp.num_vars = num_vars + 1;  // trailing variable is the shared slack t
    for (const StrictCondition& c : conditions) {
        if (c.coeffs.size() != num_vars) throw InputError("strict_feasible: arity mismatch");
        LinearConstraint row;
        row.coeffs = c.coeffs;
        row.rhs = c.rhs;
        switch (c.rel) {
            case StrictRelation::Less:
                row.coeffs.push_back(1);
                row.rel = Relation::LessEq;
                break;
            case StrictRelation::LessEq:
                row.coeffs.push_back(0);
                row.rel = Relation::LessEq;
                break;
            case StrictRelation::Equal:
                row.coeffs.push_back(0);
                row.rel = Relation::Equal;
                break;
            case StrictRelation::Greater:
                row.coeffs.push_back(-1);
                row.rel = Relation::GreaterEq;
                break;
            case StrictRelation::GreaterEq:
                row.coeffs.push_back(0);
                row.rel = Relation::GreaterEq;
                break;
        }
        lp.constraints.push_back(std::move(row));
    }
    // Cap t so the slack LP is never unbounded; only t's sign matters.
    LinearConstraint cap;
    cap.coeffs.assign(num_vars + 1, Rat(0));
    cap.coeffs[num_vars] = 1;
    cap.rel = Relation::LessEq;
    cap.rhs = 1;
    lp.constraints.push_back(cap);

    RatVec obj(num_vars + 1, Rat(0));
    obj[num_vars] = 1;
    lp.objective = obj;
    lp.sense = Sense::Maximize;

    const LpOutcome out = lp_solve(lp);
    if (out.status != LpStatus::Optimal || *out.value <= 0) return std::nullopt;
    StrictPoint result;
    result.point.assign(out.point->begin(), out.point->begin() + static_cast<std::ptrdiff_t>(num_vars));
    result.margin = *out.value;
    return result;
}

std::vector<std::size_t> hull_vertices(const std::vector<RatVec>& points) {
    if (points.empty()) throw InputError("hull_vertices: empty point list");
    const std::size_t dim = points[0].size();
    for (const RatVec& p : points)
        if (p.size() != dim) throw InputError("hull_vertices: mixed dimensions");

    // One representative per distinct point, first occurrence wins.
    std::map<RatVec, std::size_t> first_seen;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (first_seen.emplace(points[i], i).second) candidates.push_back(i);
    }

    std::vector<std::size_t> kept;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        std::vector<std::size_t> others;
        for (std::size_t cj = 0; cj < candidates.size(); ++cj)
            if (cj != ci) others.push_back(candidates[cj]);
        if (others.empty()) {
            kept.push_back(candidates[ci]);
            continue;
        }
        // Membership LP: is points[candidates[ci]] a convex combination of
        // the other representatives?
        LinearProgram lp;
        lp.num_vars = others.size();
        for (std::size_t d = 0; d < dim; ++d) {
            LinearConstraint row;
            row.coeffs.resize(others.size());
            for (std::size_t k = 0; k < others.size(); ++k) row.coeffs[k] = points[others[k]][d];
            row.rel = Relation::Equal;
            row.rhs = points[candidates[ci]][d];
            lp.constraints.push_back(std::move(row));
        }
        LinearConstraint sum;
        sum.coeffs.assign(others.size(), Rat(1));
        sum.rel = Relation::Equal;
        sum.rhs = 1;
        lp.constraints.push_back(std::move(sum));
        for (std::size_t k = 0; k < others.size(); ++k) {
            LinearConstraint nonneg;
            nonneg.coeffs.assign(others.size(), Rat(0));
            nonneg.coeffs[k] = 1;
            nonneg.rel = Relation::GreaterEq;
            nonneg.rhs = 0;
            lp.constraints.push_back(std::move(nonneg));
        }
        if (lp_solve(lp).status == LpStatus::Infeasible) kept.push_back(candidates[ci]);
    }
    return kept;
}

std::optional<RatVec> nonzero_cone_point(std::size_t num_vars,
                                         const std::vector<LinearConstraint>& homogeneous) {
    for (const LinearConstraint& c : homogeneous) {
        if (c.coeffs.size() != num_vars) throw InputError("nonzero_cone_point: arity mismatch");
        if (c.rhs != 0) throw InputError("nonzero_cone_point: constraints must be homogeneous");
    }
    for (std::size_t i = 0; i < num_vars; ++i) {
        for (const long sign : {1L, -1L}) {
            LinearProgram lp;
            lp.num_vars = num_vars;
            lp.constraints = homogeneous;
            LinearConstraint fix;
            fix.coeffs.assign(num_vars, Rat(0));
            fix.coeffs[i] = 1;
            fix.rel = Relation::Equal;
            fix.rhs = sign;
            lp.constraints.push_back(std::move(fix));
            const LpOutcome out = lp_solve(lp);
            if (out.status == LpStatus::Feasible) return out.point;
        }
    }
    return std::nullopt;
}

}  // namespace coorth
