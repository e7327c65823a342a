#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coorth/normcore.hpp"

namespace coorth {

/// Enumeration budget shared by the pattern searches.  The CLI lets
/// COORTH_MAX_PATTERNS override the default.
struct SearchLimits {
    std::uint64_t max_patterns = 1'000'000;
};

/// The facet structure of the unit ball induced on a subspace Y.
///
/// Restricting the ambient dual vertices to Y and pruning to hull
/// vertices yields +-g_1, ..., +-g_r, the facet functionals of B_Y (one
/// representative per antipodal pair, lexicographically positive and
/// sorted).  V_i collects the ambient dual vertices whose restriction
/// equals g_i exactly; they are the vertices of the set of norm-preserving
/// extensions of g_i, and equal J_X(w_i) for the interior witness w_i
/// (a point of Y with J_Y(w_i) = {g_i}).
struct FacetDecomposition {
    std::vector<RatVec> facet_functionals;               // g_i on subspace coordinates
    std::vector<std::vector<std::size_t>> extension_sets; // V_i: ambient dual vertex indices
    std::vector<RatVec> interior_witnesses;               // subspace coefficients
    std::vector<Rat> witness_margins;

    std::size_t pair_count() const { return facet_functionals.size(); }
};

/// A subspace of a polyhedral space given by an exact rational basis.
/// Construction validates linear independence and eagerly computes the
/// facet decomposition; afterwards every query is pure and const.
class Subspace {
  public:
    Subspace(PolyhedralNormSpace ambient, RatMat basis);

    /// Reduces a spanning list to the greedily-first independent subset.
    static Subspace from_spanning(PolyhedralNormSpace ambient, const RatMat& spanning);

    const PolyhedralNormSpace& ambient() const { return ambient_; }
    const RatMat& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_proper() const { return dim() < ambient_.dim(); }

    const FacetDecomposition& facets() const { return facets_; }

    RatVec to_ambient(const RatVec& coeffs) const;
    /// Coefficients of an ambient vector in this basis, or nullopt when
    /// the vector lies outside the subspace.
    std::optional<RatVec> coefficients_of(const RatVec& ambient_vec) const;
    /// g with g_j = <f, b_j>.
    RatVec restrict_functional(const RatVec& f) const;
    /// Index of -dual_vertices[idx] in the ambient vertex list.
    std::size_t antipode(std::size_t idx) const { return antipode_[idx]; }

  private:
    PolyhedralNormSpace ambient_;
    RatMat basis_;
    FacetDecomposition facets_;
    std::vector<std::size_t> antipode_;
};

FacetDecomposition facet_decomposition(const Subspace& y);

/// Y |_B x: every facet's extension values on x must bracket zero.
/// Exact for all of Y by the facet-interior reduction: support faces on
/// lower-dimensional faces of B_Y contain the adjacent facets' faces.
struct SubspaceOrthogonality {
    bool orthogonal = false;
    std::vector<RatVec> certificates;       // per facet pair, on success
    std::optional<std::size_t> violating_facet;
    std::optional<Rat> violating_lo, violating_hi;
};
SubspaceOrthogonality subspace_bj_orthogonal(const Subspace& y, const RatVec& x);

/// Y |_B^eps x: every facet's value interval must meet
/// [-eps*||x||, eps*||x||].
bool subspace_eps_orthogonal(const Subspace& y, const RatVec& x, const Rat& eps);

/// rho(x) = max_i dist(0, [min, max] of <f, x> over conv V_i) / ||x||.
/// Y is strongly anti-coproximinal iff inf over nonzero x of rho is 1.
Rat rho(const Subspace& y, const RatVec& x);

/// Searches for a nonzero x with Y |_B x, which exists iff Y is NOT
/// anti-coproximinal.  Enumerates per-facet certificate pairs
/// lexicographically; each pattern is a homogeneous cone probed by
/// nonzero_cone_point.
struct DirectionSearch {
    enum class Status { DirectionFound, NoneExists, CapacityExceeded };
    Status status = Status::NoneExists;
    std::optional<RatVec> direction;
    /// Per facet pair, a functional in conv(V_i) vanishing on the found
    /// direction: the image of a selection map whose span misses x.
    std::vector<RatVec> selection_image;
    std::uint64_t patterns_examined = 0;
    std::uint64_t pattern_total = 0;
};
DirectionSearch find_orthogonal_direction(const Subspace& y, const SearchLimits& limits = {});

struct CoverageEntry {
    std::size_t vertex = 0;    // ambient dual vertex index
    bool covered = false;
    std::optional<RatVec> witness_coeffs;
    std::optional<RatVec> witness;  // ambient vector
    Rat margin = 0;                 // strict-domination slack when covered
    std::vector<std::size_t> blocking;  // tight vertices when not covered
};

/// Both characterizations of strong anti-coproximinality, computed
/// independently: (a) coverage: every ambient dual vertex x* admits a
/// y in Y with J_X(y) = {x*}; (b) threshold: eps_min = inf rho.  The two
/// must satisfy verdict <=> (eps_min = 1); tests enforce the agreement.
struct StrongReport {
    bool verdict = false;  // coverage branch
    std::vector<CoverageEntry> coverage;
    Rat eps_min = 0;
    bool eps_min_exact = false;  // false when the enumeration was out of caps
    std::optional<RatVec> eps_direction;  // rho(direction) = eps_min when < 1
};
StrongReport strong_report(const Subspace& y, const SearchLimits& limits = {});

/// Coverage probe for a single ambient dual vertex (shared by
/// strong_report and selection_report).
CoverageEntry coverage_probe(const Subspace& y, std::size_t vertex_idx);

struct CoapproxSolution {
    RatVec coeffs;
    RatVec point;  // ambient
    /// Per facet pair: extensions (f-, f+) with <f-, x-y0> <= 0 <= <f+, x-y0>.
    std::vector<std::pair<RatVec, RatVec>> certificates;
};

struct CoapproxResult {
    enum class Status { Solution, NoSolution, CapacityExceeded };
    Status status = Status::NoSolution;
    std::optional<CoapproxSolution> solution;
    /// Whether the full solution set is a single point; nullopt when the
    /// pattern scan was cut short by the budget.
    std::optional<bool> unique;
    /// Exact per-coefficient range of the solution set (when fully scanned).
    std::optional<RatVec> coeff_min, coeff_max;
    std::uint64_t patterns_examined = 0;
    std::uint64_t pattern_total = 0;
};
CoapproxResult best_coapproximation(const Subspace& y, const RatVec& x,
                                    const SearchLimits& limits = {});

/// Single-extension-per-facet choice whose span has dimension dim Y,
/// when one exists: a certificate of coproximinality.
struct CoproxCertificate {
    std::optional<std::vector<std::size_t>> choice;  // extension index per facet
    bool search_completed = true;
};
CoproxCertificate coproximinal_certificate(const Subspace& y, const SearchLimits& limits = {});

struct CoproximinalReport {
    enum class Outcome { Certified, Counterexample, Undecided };
    Outcome outcome = Outcome::Undecided;
    std::optional<std::vector<std::size_t>> certified_choice;
    std::optional<RatVec> counterexample;
    std::uint64_t seed = 0;
    std::size_t samples_requested = 0;
    std::size_t samples_solved = 0;
    bool sufficient_test_completed = true;
    bool co_chebyshev_all_unique = false;  // among solved samples
};
CoproximinalReport coproximinal_probe(const Subspace& y, std::size_t sample_count,
                                      std::uint64_t seed, const SearchLimits& limits = {});

}  // namespace coorth
