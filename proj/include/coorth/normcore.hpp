#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coorth/exactlp.hpp"
#include "coorth/rational.hpp"

namespace coorth {

/// A finite-dimensional real polyhedral normed space, represented by the
/// vertex set of its dual unit ball.  The list is symmetric (f present
/// iff -f present), spans the full functional space, contains only
/// genuine hull vertices, and is sorted lexicographically so that equal
/// spaces compare equal.  The norm is ||x|| = max_f <f, x>.
///
/// Spaces built as linf-sums additionally carry their component spaces
/// and coordinate offsets, which is what gives product elements and
/// norm-attainment sets their meaning.
class PolyhedralNormSpace {
  public:
    /// Symmetrizes, prunes to hull vertices and validates spanning.
    /// Throws InputError("degenerate norm ...") when the functionals do
    /// not span.
    static PolyhedralNormSpace from_dual_functionals(const std::vector<RatVec>& functionals);

    /// l1^n: dual vertices are all 2^n sign vectors (n <= 10).
    static PolyhedralNormSpace l1(std::size_t n);

    /// linf^n: dual vertices are the signed coordinate functionals.
    static PolyhedralNormSpace linf(std::size_t n);

    /// linf-sum of the components: every component dual vertex embedded
    /// in its coordinate block, all other blocks zero.
    static PolyhedralNormSpace linf_sum(std::vector<PolyhedralNormSpace> components);

    std::size_t dim() const { return dim_; }
    const std::vector<RatVec>& dual_vertices() const { return dual_vertices_; }

    bool is_sum() const { return !components_.empty(); }
    std::size_t block_count() const { return components_.size(); }
    const PolyhedralNormSpace& block_space(std::size_t k) const { return components_[k]; }
    std::size_t block_offset(std::size_t k) const { return block_offsets_[k]; }

    bool operator==(const PolyhedralNormSpace& other) const {
        return dim_ == other.dim_ && dual_vertices_ == other.dual_vertices_;
    }

  private:
    PolyhedralNormSpace() = default;
    std::size_t dim_ = 0;
    std::vector<RatVec> dual_vertices_;
    std::vector<PolyhedralNormSpace> components_;
    std::vector<std::size_t> block_offsets_;
};

/// J(x) stored as the dual-ball vertices attaining <f, x> = ||x||; the
/// face itself is their convex hull.  Singleton iff x lies in the
/// interior of one facet of ||x|| * B_X.
struct SupportFace {
    RatVec base_point;
    Rat norm_value;
    std::vector<std::size_t> vertex_indices;
};

/// An element of an linf-sum space, one vector per coordinate block.
struct ProductElement {
    std::vector<RatVec> blocks;
};

Rat norm(const PolyhedralNormSpace& space, const RatVec& x);

/// Exact support face J(x); x must be nonzero.
SupportFace support_face(const PolyhedralNormSpace& space, const RatVec& x);

/// Flattens a product element into ambient coordinates (block sizes checked).
RatVec flatten(const PolyhedralNormSpace& sum_space, const ProductElement& f);

/// M_f: the blocks whose norm equals the product norm (0-based indices).
/// f must be nonzero and the space an linf-sum.
std::vector<std::size_t> norm_attainment(const PolyhedralNormSpace& sum_space,
                                         const ProductElement& f);

struct Orthogonality {
    bool orthogonal = false;
    /// A functional in J(x) witnessing the verdict: <cert, y> = 0 for the
    /// plain relation, |<cert, y>| <= eps*||y|| for the approximate one.
    /// Absent when the verdict is negative, and by convention when y = 0.
    std::optional<RatVec> certificate;
    SupportFace face;
};

/// Birkhoff-James orthogonality x |_B y, decided on J(x): true iff the
/// values <f, y> over the face vertices bracket zero.  x must be nonzero.
Orthogonality bj_orthogonal(const PolyhedralNormSpace& space, const RatVec& x, const RatVec& y);

/// eps-orthogonality, eps in [0,1): true iff [min, max] of <f, y> over
/// J(x) meets [-eps*||y||, eps*||y||].
Orthogonality eps_orthogonal(const PolyhedralNormSpace& space, const RatVec& x, const RatVec& y,
                             const Rat& eps);

/// A functional in conv{dual_vertices[i] : i in indices} taking the
/// exact value `target` on y; target must lie between the min and max
/// attained over the listed vertices.
RatVec functional_on_hull_with_value(const PolyhedralNormSpace& space,
                                     const std::vector<std::size_t>& indices, const RatVec& y,
                                     const Rat& target);

}  // namespace coorth
