#include "coorth/subspace.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "coorth/rng.hpp"

namespace coorth {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

struct Interval {
    Rat lo, hi;
};

Interval extension_interval(const Subspace& y, std::size_t facet, const RatVec& x) {
    const auto& duals = y.ambient().dual_vertices();
    const auto& ext = y.facets().extension_sets[facet];
    Interval iv{dot(duals[ext[0]], x), dot(duals[ext[0]], x)};
    for (std::size_t idx : ext) {
        const Rat v = dot(duals[idx], x);
        iv.lo = std::min(iv.lo, v);
        iv.hi = std::max(iv.hi, v);
    }
    return iv;
}

// dist(0, [lo, hi]): the least |value| attainable over the convex hull.
Rat interval_gap(const Interval& iv) {
    Rat gap = 0;
    if (iv.lo > 0) gap = iv.lo;
    if (iv.hi < 0) gap = -iv.hi;
    return gap;
}

// Odometer over per-facet digit ranges, most significant digit first.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radices) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radices[i]) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

Subspace::Subspace(PolyhedralNormSpace ambient, RatMat basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    if (basis_.empty()) throw InputError("subspace: empty basis");
    if (basis_.size() > ambient_.dim())
        throw InputError("subspace: more basis vectors than ambient dimensions");
    for (const RatVec& b : basis_)
        if (b.size() != ambient_.dim()) throw InputError("subspace: basis dimension mismatch");
    if (rank(basis_) != basis_.size())
        throw InputError("subspace: basis vectors are linearly dependent");

    const auto& duals = ambient_.dual_vertices();
    std::map<RatVec, std::size_t> index_of;
    for (std::size_t i = 0; i < duals.size(); ++i) index_of.emplace(duals[i], i);
    antipode_.resize(duals.size());
    for (std::size_t i = 0; i < duals.size(); ++i) antipode_[i] = index_of.at(negated(duals[i]));

    // Facet decomposition of B_Y: restrict, prune to hull vertices, pick
    // lex-positive representatives, gather exact extension sets, then
    // find one interior point per facet by slack maximization.
    std::vector<RatVec> restrictions;
    restrictions.reserve(duals.size());
    for (const RatVec& f : duals) restrictions.push_back(restrict_functional(f));

    std::vector<RatVec> rep_values;
    for (std::size_t idx : hull_vertices(restrictions))
        if (lex_positive(restrictions[idx])) rep_values.push_back(restrictions[idx]);
    std::sort(rep_values.begin(), rep_values.end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });

    const std::size_t m = basis_.size();
    if (rep_values.size() < m)
        throw std::logic_error("facet decomposition: fewer facet pairs than dim Y");

    for (const RatVec& g : rep_values) {
        std::vector<std::size_t> extensions;
        for (std::size_t a = 0; a < duals.size(); ++a)
            if (restrictions[a] == g) extensions.push_back(a);
        if (extensions.empty()) throw std::logic_error("facet decomposition: empty extension set");

        std::vector<StrictCondition> conditions;
        conditions.push_back({g, StrictRelation::Equal, Rat(1)});
        for (const RatVec& other : rep_values) {
            if (other == g) {
                conditions.push_back({negated(other), StrictRelation::Less, Rat(1)});
            } else {
                conditions.push_back({other, StrictRelation::Less, Rat(1)});
                conditions.push_back({negated(other), StrictRelation::Less, Rat(1)});
            }
        }
        const auto witness = strict_feasible(m, conditions);
        if (!witness)
            throw std::logic_error("facet decomposition: facet interior unexpectedly empty");

        facets_.facet_functionals.push_back(g);
        facets_.extension_sets.push_back(std::move(extensions));
        facets_.interior_witnesses.push_back(witness->point);
        facets_.witness_margins.push_back(witness->margin);
    }
}

Subspace Subspace::from_spanning(PolyhedralNormSpace ambient, const RatMat& spanning) {
    RatMat independent;
    for (const RatVec& v : spanning) {
        independent.push_back(v);
        if (rank(independent) != independent.size()) independent.pop_back();
    }
    if (independent.empty()) throw InputError("subspace: spanning set is all zero");
    return Subspace(std::move(ambient), std::move(independent));
}

RatVec Subspace::to_ambient(const RatVec& coeffs) const {
    if (coeffs.size() != basis_.size()) throw InputError("to_ambient: coefficient arity mismatch");
    RatVec out(ambient_.dim(), Rat(0));
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (std::size_t d = 0; d < out.size(); ++d) out[d] += coeffs[j] * basis_[j][d];
    return out;
}

std::optional<RatVec> Subspace::coefficients_of(const RatVec& ambient_vec) const {
    if (ambient_vec.size() != ambient_.dim())
        throw InputError("coefficients_of: dimension mismatch");
    // Solve basis^T c = ambient_vec (n equations, m unknowns).
    RatMat rows(ambient_.dim(), RatVec(basis_.size()));
    for (std::size_t d = 0; d < ambient_.dim(); ++d)
        for (std::size_t j = 0; j < basis_.size(); ++j) rows[d][j] = basis_[j][d];
    return solve_linear(std::move(rows), ambient_vec);
}

RatVec Subspace::restrict_functional(const RatVec& f) const {
    RatVec g(basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) g[j] = dot(f, basis_[j]);
    return g;
}

FacetDecomposition facet_decomposition(const Subspace& y) { return y.facets(); }

SubspaceOrthogonality subspace_bj_orthogonal(const Subspace& y, const RatVec& x) {
    if (x.size() != y.ambient().dim())
        throw InputError("subspace_bj_orthogonal: dimension mismatch");
    SubspaceOrthogonality result;
    const std::size_t r = y.facets().pair_count();
    std::vector<Interval> intervals(r);
    for (std::size_t i = 0; i < r; ++i) {
        intervals[i] = extension_interval(y, i, x);
        if (intervals[i].lo > 0 || intervals[i].hi < 0) {
            result.orthogonal = false;
            result.violating_facet = i;
            result.violating_lo = intervals[i].lo;
            result.violating_hi = intervals[i].hi;
            return result;
        }
    }
    result.orthogonal = true;
    for (std::size_t i = 0; i < r; ++i) {
        result.certificates.push_back(
            functional_on_hull_with_value(y.ambient(), y.facets().extension_sets[i], x, Rat(0)));
    }
    return result;
}

bool subspace_eps_orthogonal(const Subspace& y, const RatVec& x, const Rat& eps) {
    if (eps < 0 || eps >= 1) throw InputError("epsilon out of range");
    if (x.size() != y.ambient().dim())
        throw InputError("subspace_eps_orthogonal: dimension mismatch");
    if (is_zero_vec(x)) throw InputError("subspace_eps_orthogonal: x must be nonzero");
    const Rat band = eps * norm(y.ambient(), x);
    for (std::size_t i = 0; i < y.facets().pair_count(); ++i) {
        const Interval iv = extension_interval(y, i, x);
        if (iv.lo > band || iv.hi < -band) return false;
    }
    return true;
}

Rat rho(const Subspace& y, const RatVec& x) {
    if (is_zero_vec(x)) throw InputError("rho: undefined for x = 0");
    Rat worst = 0;
    for (std::size_t i = 0; i < y.facets().pair_count(); ++i)
        worst = std::max(worst, interval_gap(extension_interval(y, i, x)));
    return worst / norm(y.ambient(), x);
}

DirectionSearch find_orthogonal_direction(const Subspace& y, const SearchLimits& limits) {
    if (!y.is_proper())
        throw InputError("find_orthogonal_direction: subspace must be proper");
    const auto& duals = y.ambient().dual_vertices();
    const std::size_t r = y.facets().pair_count();
    const std::size_t n = y.ambient().dim();

    DirectionSearch result;
    std::vector<std::size_t> radices(r);
    result.pattern_total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t k = y.facets().extension_sets[i].size();
        radices[i] = k * k;
        result.pattern_total = sat_mul(result.pattern_total, radices[i]);
    }

    std::vector<std::size_t> digits(r, 0);
    do {
        if (result.patterns_examined >= limits.max_patterns) {
            result.status = DirectionSearch::Status::CapacityExceeded;
            return result;
        }
        ++result.patterns_examined;
        std::vector<LinearConstraint> cone;
        std::vector<std::pair<std::size_t, std::size_t>> chosen(r);
        for (std::size_t i = 0; i < r; ++i) {
            const auto& ext = y.facets().extension_sets[i];
            const std::size_t minus = ext[digits[i] / ext.size()];
            const std::size_t plus = ext[digits[i] % ext.size()];
            chosen[i] = {minus, plus};
            cone.push_back({duals[minus], Relation::LessEq, Rat(0)});
            cone.push_back({duals[plus], Relation::GreaterEq, Rat(0)});
        }
        const auto point = nonzero_cone_point(n, cone);
        if (point) {
            result.status = DirectionSearch::Status::DirectionFound;
            result.direction = *point;
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<std::size_t> pair_idx{chosen[i].first, chosen[i].second};
                result.selection_image.push_back(
                    functional_on_hull_with_value(y.ambient(), pair_idx, *point, Rat(0)));
            }
            return result;
        }
    } while (advance(digits, radices));

    result.status = DirectionSearch::Status::NoneExists;
    return result;
}

CoverageEntry coverage_probe(const Subspace& y, std::size_t vertex_idx) {
    const auto& duals = y.ambient().dual_vertices();
    const std::size_t m = y.dim();
    CoverageEntry entry;
    entry.vertex = vertex_idx;

    // maximize t subject to <g_a, c> = 1 and <g_b, c> <= 1 - t for b != a:
    // t > 0 iff some y in Y lies in the interior of the ambient facet of
    // dual vertex a, i.e. J_X(y) = {duals[a]}.
    LinearProgram lp;
    lp.num_vars = m + 1;
    RatVec g_a = y.restrict_functional(duals[vertex_idx]);
    g_a.push_back(0);
    lp.constraints.push_back({g_a, Relation::Equal, Rat(1)});
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < duals.size(); ++b) {
        if (b == vertex_idx) continue;
        others.push_back(b);
        RatVec row = y.restrict_functional(duals[b]);
        row.push_back(1);
        lp.constraints.push_back({row, Relation::LessEq, Rat(1)});
    }
    RatVec cap(m + 1, Rat(0));
    cap[m] = 1;
    lp.constraints.push_back({cap, Relation::LessEq, Rat(1)});
    lp.objective = cap;
    lp.sense = Sense::Maximize;

    const LpOutcome out = lp_solve(lp);
    if (out.status != LpStatus::Optimal) {
        entry.covered = false;  // the restriction vanishes on Y
        return entry;
    }
    entry.margin = *out.value;
    RatVec coeffs(out.point->begin(), out.point->begin() + static_cast<std::ptrdiff_t>(m));
    if (*out.value > 0) {
        entry.covered = true;
        entry.witness = y.to_ambient(coeffs);
        entry.witness_coeffs = std::move(coeffs);
    } else {
        entry.covered = false;
        const Rat level = 1 - *out.value;
        for (std::size_t b : others) {
            if (dot(y.restrict_functional(duals[b]), coeffs) == level) entry.blocking.push_back(b);
        }
    }
    return entry;
}

namespace {

// Exact eps_min by enumeration: for each norming vertex h (one per
// antipodal pair) minimize tau over the cone {<h,x> = 1 >= <h',x>} with a
// per-facet choice of extensions bounding the interval gap by tau.  A
// facet whose extension set is a single +-h forces gap 1 on the whole
// cone, which settles that cone without any LP.
struct ThresholdResult {
    Rat value;
    std::optional<RatVec> direction;
};

ThresholdResult eps_min_exact(const Subspace& y) {
    const auto& duals = y.ambient().dual_vertices();
    const std::size_t r = y.facets().pair_count();
    const std::size_t n = y.ambient().dim();

    Rat best = 1;  // rho <= 1 everywhere
    std::optional<RatVec> best_dir;

    for (std::size_t h = 0; h < duals.size(); ++h) {
        if (!lex_positive(duals[h])) continue;
        const std::size_t h_neg = y.antipode(h);
        bool settled = false;
        for (std::size_t i = 0; i < r && !settled; ++i) {
            const auto& ext = y.facets().extension_sets[i];
            settled = ext.size() == 1 && (ext[0] == h || ext[0] == h_neg);
        }
        if (settled) continue;  // cone minimum is exactly 1

        std::vector<std::size_t> radices(r);
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t k = y.facets().extension_sets[i].size();
            radices[i] = k * k;
        }
        std::vector<std::size_t> digits(r, 0);
        do {
            LinearProgram lp;
            lp.num_vars = n + 1;  // x and tau
            for (std::size_t b = 0; b < duals.size(); ++b) {
                RatVec row = duals[b];
                row.push_back(0);
                lp.constraints.push_back(
                    {std::move(row), b == h ? Relation::Equal : Relation::LessEq, Rat(1)});
            }
            RatVec tau_row(n + 1, Rat(0));
            tau_row[n] = 1;
            lp.constraints.push_back({tau_row, Relation::GreaterEq, Rat(0)});
            lp.constraints.push_back({tau_row, Relation::LessEq, best});
            for (std::size_t i = 0; i < r; ++i) {
                const auto& ext = y.facets().extension_sets[i];
                RatVec minus_row = duals[ext[digits[i] / ext.size()]];
                minus_row.push_back(-1);  // <f-, x> <= tau
                lp.constraints.push_back({std::move(minus_row), Relation::LessEq, Rat(0)});
                RatVec plus_row = duals[ext[digits[i] % ext.size()]];
                plus_row.push_back(1);  // <f+, x> >= -tau
                lp.constraints.push_back({std::move(plus_row), Relation::GreaterEq, Rat(0)});
            }
            lp.objective = tau_row;
            lp.sense = Sense::Minimize;
            const LpOutcome out = lp_solve(lp);
            if (out.status == LpStatus::Optimal && *out.value < best) {
                best = *out.value;
                best_dir = RatVec(out.point->begin(),
                                  out.point->begin() + static_cast<std::ptrdiff_t>(n));
            }
        } while (advance(digits, radices));
    }
    if (best_dir && rho(y, *best_dir) != best)
        throw std::logic_error("eps_min enumeration: witness does not attain the minimum");
    return {best, best < 1 ? best_dir : std::nullopt};
}

// Budget-exceeded fallback: an upper bound on eps_min from evaluated
// directions.  When coverage fails, the interior of the ambient facet of
// any uncovered vertex provably has rho < 1, so the bound still settles
// the (eps_min = 1) question; random directions refine it.
ThresholdResult eps_min_sampled(const Subspace& y, const std::vector<CoverageEntry>& coverage) {
    const auto& duals = y.ambient().dual_vertices();
    const std::size_t n = y.ambient().dim();
    Rat best = 1;
    std::optional<RatVec> best_dir;
    const auto consider = [&](const RatVec& x) {
        const Rat value = rho(y, x);
        if (value < best) {
            best = value;
            best_dir = x;
        }
    };
    for (const CoverageEntry& entry : coverage) {
        if (entry.covered) continue;
        std::vector<StrictCondition> conditions;
        conditions.push_back({duals[entry.vertex], StrictRelation::Equal, Rat(1)});
        for (std::size_t b = 0; b < duals.size(); ++b)
            if (b != entry.vertex) conditions.push_back({duals[b], StrictRelation::Less, Rat(1)});
        const auto point = strict_feasible(n, conditions);
        if (point) consider(point->point);
    }
    Lcg rng(0x5eedULL);
    for (int k = 0; k < 64; ++k) consider(rng.next_nonzero_vector(n));
    return {best, best < 1 ? best_dir : std::nullopt};
}

}  // namespace

StrongReport strong_report(const Subspace& y, const SearchLimits& limits) {
    if (!y.is_proper()) throw InputError("strong_report: subspace must be proper");
    StrongReport report;
    const std::size_t vertex_count = y.ambient().dual_vertices().size();
    report.verdict = true;
    for (std::size_t a = 0; a < vertex_count; ++a) {
        report.coverage.push_back(coverage_probe(y, a));
        report.verdict = report.verdict && report.coverage.back().covered;
    }

    std::uint64_t estimate = vertex_count / 2;
    for (const auto& ext : y.facets().extension_sets)
        estimate = sat_mul(estimate, static_cast<std::uint64_t>(ext.size() * ext.size()));
    if (estimate <= limits.max_patterns) {
        const ThresholdResult threshold = eps_min_exact(y);
        report.eps_min = threshold.value;
        report.eps_min_exact = true;
        report.eps_direction = threshold.direction;
    } else {
        const ThresholdResult threshold = eps_min_sampled(y, report.coverage);
        report.eps_min = threshold.value;
        report.eps_min_exact = false;
        report.eps_direction = threshold.direction;
    }
    return report;
}

CoapproxResult best_coapproximation(const Subspace& y, const RatVec& x,
                                    const SearchLimits& limits) {
    if (!y.is_proper()) throw InputError("best_coapproximation: subspace must be proper");
    if (x.size() != y.ambient().dim())
        throw InputError("best_coapproximation: dimension mismatch");
    const auto& duals = y.ambient().dual_vertices();
    const std::size_t r = y.facets().pair_count();
    const std::size_t m = y.dim();

    CoapproxResult result;
    std::vector<std::size_t> radices(r);
    result.pattern_total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t k = y.facets().extension_sets[i].size();
        radices[i] = k * k;
        result.pattern_total = sat_mul(result.pattern_total, radices[i]);
    }

    RatVec lo, hi;
    bool any_feasible = false;
    std::vector<std::size_t> digits(r, 0);
    do {
        if (result.patterns_examined >= limits.max_patterns) {
            result.status = CoapproxResult::Status::CapacityExceeded;
            result.unique = std::nullopt;
            return result;
        }
        ++result.patterns_examined;

        // Feasibility in coefficients c:  <f-, x - Bc> <= 0 <= <f+, x - Bc>.
        LinearProgram lp;
        lp.num_vars = m;
        std::vector<std::pair<std::size_t, std::size_t>> chosen(r);
        for (std::size_t i = 0; i < r; ++i) {
            const auto& ext = y.facets().extension_sets[i];
            const std::size_t minus = ext[digits[i] / ext.size()];
            const std::size_t plus = ext[digits[i] % ext.size()];
            chosen[i] = {minus, plus};
            lp.constraints.push_back(
                {y.restrict_functional(duals[minus]), Relation::GreaterEq, dot(duals[minus], x)});
            lp.constraints.push_back(
                {y.restrict_functional(duals[plus]), Relation::LessEq, dot(duals[plus], x)});
        }
        LpOutcome feasible = lp_solve(lp);
        if (feasible.status != LpStatus::Feasible) continue;

        if (!result.solution) {
            CoapproxSolution sol;
            sol.coeffs = *feasible.point;
            sol.point = y.to_ambient(sol.coeffs);
            const RatVec residual = vec_sub(x, sol.point);
            for (std::size_t i = 0; i < r; ++i) {
                const RatVec& f_minus = duals[chosen[i].first];
                const RatVec& f_plus = duals[chosen[i].second];
                if (dot(f_minus, residual) > 0 || dot(f_plus, residual) < 0)
                    throw std::logic_error("best_coapproximation: certificate check failed");
                sol.certificates.emplace_back(f_minus, f_plus);
            }
            result.solution = std::move(sol);
            result.status = CoapproxResult::Status::Solution;
        }

        // Exact per-coefficient range of this pattern's solution cell;
        // the union over patterns is the full solution set.  Cells are
        // bounded because every feasible point is a best coapproximation.
        for (std::size_t j = 0; j < m; ++j) {
            RatVec obj(m, Rat(0));
            obj[j] = 1;
            lp.objective = obj;
            lp.sense = Sense::Minimize;
            const LpOutcome at_min = lp_solve(lp);
            lp.sense = Sense::Maximize;
            const LpOutcome at_max = lp_solve(lp);
            if (at_min.status != LpStatus::Optimal || at_max.status != LpStatus::Optimal)
                throw std::logic_error("best_coapproximation: unbounded solution cell");
            if (!any_feasible && j == 0) {
                lo.assign(m, Rat(0));
                hi.assign(m, Rat(0));
            }
            if (!any_feasible) {
                lo[j] = *at_min.value;
                hi[j] = *at_max.value;
            } else {
                lo[j] = std::min(lo[j], *at_min.value);
                hi[j] = std::max(hi[j], *at_max.value);
            }
        }
        any_feasible = true;
    } while (advance(digits, radices));

    if (!any_feasible) {
        result.status = CoapproxResult::Status::NoSolution;
        return result;
    }
    result.coeff_min = lo;
    result.coeff_max = hi;
    result.unique = (lo == hi);
    return result;
}

CoproxCertificate coproximinal_certificate(const Subspace& y, const SearchLimits& limits) {
    const auto& duals = y.ambient().dual_vertices();
    const std::size_t r = y.facets().pair_count();
    const std::size_t m = y.dim();

    // DFS over one-extension-per-facet choices, tracking the span of the
    // chosen functionals incrementally; a prefix of rank > m is dead.
    struct Echelon {
        std::vector<RatVec> rows;  // each with leading 1 at its pivot column
        std::vector<std::size_t> pivots;

        bool push(RatVec v) {
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (v[pivots[k]] != 0) {
                    const Rat f = v[pivots[k]];
                    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
                }
            }
            std::size_t p = 0;
            while (p < v.size() && v[p] == 0) ++p;
            if (p == v.size()) return false;  // dependent, rank unchanged
            const Rat inv = 1 / v[p];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] *= inv;
            rows.push_back(std::move(v));
            pivots.push_back(p);
            return true;
        }
        void pop() {
            rows.pop_back();
            pivots.pop_back();
        }
    };

    CoproxCertificate result;
    Echelon span;
    std::vector<std::size_t> choice(r, 0);
    std::uint64_t nodes = 0;

    const auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (span.rows.size() > m) return false;
        if (i == r) return span.rows.size() == m;
        const auto& ext = y.facets().extension_sets[i];
        for (std::size_t k = 0; k < ext.size(); ++k) {
            if (++nodes > limits.max_patterns) {
                result.search_completed = false;
                return false;
            }
            choice[i] = k;
            const bool grew = span.push(duals[ext[k]]);
            if (self(self, i + 1)) return true;
            if (grew) span.pop();
            if (!result.search_completed) return false;
        }
        return false;
    };

    if (dfs(dfs, 0)) {
        std::vector<std::size_t> chosen(r);
        for (std::size_t i = 0; i < r; ++i) chosen[i] = y.facets().extension_sets[i][choice[i]];
        result.choice = std::move(chosen);
    }
    return result;
}

CoproximinalReport coproximinal_probe(const Subspace& y, std::size_t sample_count,
                                      std::uint64_t seed, const SearchLimits& limits) {
    if (!y.is_proper()) throw InputError("coproximinal_probe: subspace must be proper");
    CoproximinalReport report;
    report.seed = seed;
    report.samples_requested = sample_count;

    const CoproxCertificate cert = coproximinal_certificate(y, limits);
    report.sufficient_test_completed = cert.search_completed;
    if (cert.choice) {
        report.outcome = CoproximinalReport::Outcome::Certified;
        report.certified_choice = cert.choice;
    }

    // Sampling runs in both branches: under a certificate it can only
    // confirm (a missing solution would contradict the certificate and is
    // treated as a defect), and it feeds the co-Chebyshev sub-report.
    Lcg rng(seed);
    bool all_unique = true;
    for (std::size_t k = 0; k < sample_count; ++k) {
        const RatVec x = rng.next_vector(y.ambient().dim());
        const CoapproxResult res = best_coapproximation(y, x, limits);
        if (res.status == CoapproxResult::Status::Solution) {
            ++report.samples_solved;
            all_unique = all_unique && res.unique.value_or(false);
        } else if (res.status == CoapproxResult::Status::NoSolution) {
            if (report.outcome == CoproximinalReport::Outcome::Certified)
                throw std::logic_error(
                    "coproximinal_probe: certified subspace produced a sample without solution");
            report.outcome = CoproximinalReport::Outcome::Counterexample;
            report.counterexample = x;
            return report;
        } else {
            all_unique = false;  // budget truncation: uniqueness unknown
        }
    }
    report.co_chebyshev_all_unique = report.samples_solved > 0 && all_unique;
    return report;
}

}  // namespace coorth
