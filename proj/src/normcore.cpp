#include "coorth/normcore.hpp"

#include <algorithm>
#include <set>

namespace coorth {

namespace {

std::vector<RatVec> symmetrize_and_prune(std::vector<RatVec> functionals) {
    const std::size_t count = functionals.size();
    for (std::size_t i = 0; i < count; ++i) functionals.push_back(negated(functionals[i]));
    const std::vector<std::size_t> kept = hull_vertices(functionals);
    std::vector<RatVec> vertices;
    vertices.reserve(kept.size());
    for (std::size_t idx : kept) vertices.push_back(functionals[idx]);
    std::sort(vertices.begin(), vertices.end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
    return vertices;
}

}  // namespace

PolyhedralNormSpace PolyhedralNormSpace::from_dual_functionals(
    const std::vector<RatVec>& functionals) {
    if (functionals.empty()) throw InputError("make_space: empty functional list");
    const std::size_t n = functionals[0].size();
    if (n == 0) throw InputError("make_space: zero-dimensional functionals");
    for (const RatVec& f : functionals)
        if (f.size() != n) throw InputError("make_space: mixed functional dimensions");

    PolyhedralNormSpace space;
    space.dim_ = n;
    space.dual_vertices_ = symmetrize_and_prune(functionals);
    if (rank(space.dual_vertices_) < n)
        throw InputError("degenerate norm: dual functionals do not span");
    return space;
}

PolyhedralNormSpace PolyhedralNormSpace::l1(std::size_t n) {
    if (n < 1) throw InputError("l1_space: dimension must be positive");
    if (n > 10) throw InputError("l1_space: dimension capped at 10 (2^n dual vertices)");
    std::vector<RatVec> signs;
    signs.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        RatVec f(n);
        for (std::size_t j = 0; j < n; ++j) f[j] = (mask >> j) & 1 ? Rat(1) : Rat(-1);
        signs.push_back(std::move(f));
    }
    PolyhedralNormSpace space;
    space.dim_ = n;
    // Every sign vector is a vertex of the cube; skip the membership LPs.
    std::sort(signs.begin(), signs.end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
    space.dual_vertices_ = std::move(signs);
    return space;
}

PolyhedralNormSpace PolyhedralNormSpace::linf(std::size_t n) {
    if (n < 1) throw InputError("linf_space: dimension must be positive");
    std::vector<RatVec> funcs;
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rat(0));
        e[j] = 1;
        funcs.push_back(e);
        funcs.push_back(negated(e));
    }
    PolyhedralNormSpace space;
    space.dim_ = n;
    std::sort(funcs.begin(), funcs.end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
    space.dual_vertices_ = std::move(funcs);
    return space;
}

PolyhedralNormSpace PolyhedralNormSpace::linf_sum(std::vector<PolyhedralNormSpace> components) {
    if (components.empty()) throw InputError("linf_sum: no components");
    std::size_t total = 0;
    std::vector<std::size_t> offsets;
    for (const PolyhedralNormSpace& c : components) {
        offsets.push_back(total);
        total += c.dim();
    }
    // The dual of an linf-sum is the l1-sum of the duals: its ball's
    // vertices are the per-block embeddings of component dual vertices.
    std::vector<RatVec> funcs;
    for (std::size_t k = 0; k < components.size(); ++k) {
        for (const RatVec& f : components[k].dual_vertices()) {
            RatVec embedded(total, Rat(0));
            for (std::size_t j = 0; j < f.size(); ++j) embedded[offsets[k] + j] = f[j];
            funcs.push_back(std::move(embedded));
        }
    }
    std::sort(funcs.begin(), funcs.end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
    PolyhedralNormSpace space;
    space.dim_ = total;
    space.dual_vertices_ = std::move(funcs);
    space.components_ = std::move(components);
    space.block_offsets_ = std::move(offsets);
    return space;
}

Rat norm(const PolyhedralNormSpace& space, const RatVec& x) {
    if (x.size() != space.dim()) throw InputError("norm: dimension mismatch");
    Rat best = 0;  // the vertex list is symmetric, so max <f,x> >= 0
    for (const RatVec& f : space.dual_vertices()) {
        const Rat v = dot(f, x);
        if (v > best) best = v;
    }
    return best;
}

SupportFace support_face(const PolyhedralNormSpace& space, const RatVec& x) {
    if (x.size() != space.dim()) throw InputError("support_face: dimension mismatch");
    if (is_zero_vec(x)) throw InputError("support_face: undefined for x = 0");
    SupportFace face;
    face.base_point = x;
    face.norm_value = norm(space, x);
    for (std::size_t i = 0; i < space.dual_vertices().size(); ++i) {
        if (dot(space.dual_vertices()[i], x) == face.norm_value) face.vertex_indices.push_back(i);
    }
    return face;
}

RatVec flatten(const PolyhedralNormSpace& sum_space, const ProductElement& f) {
    if (!sum_space.is_sum()) throw InputError("flatten: space is not an linf-sum");
    if (f.blocks.size() != sum_space.block_count())
        throw InputError("flatten: block count mismatch");
    RatVec out(sum_space.dim(), Rat(0));
    for (std::size_t k = 0; k < f.blocks.size(); ++k) {
        if (f.blocks[k].size() != sum_space.block_space(k).dim())
            throw InputError("flatten: block dimension mismatch");
        for (std::size_t j = 0; j < f.blocks[k].size(); ++j)
            out[sum_space.block_offset(k) + j] = f.blocks[k][j];
    }
    return out;
}

std::vector<std::size_t> norm_attainment(const PolyhedralNormSpace& sum_space,
                                         const ProductElement& f) {
    if (!sum_space.is_sum()) throw InputError("norm_attainment: space is not an linf-sum");
    if (f.blocks.size() != sum_space.block_count())
        throw InputError("norm_attainment: block count mismatch");
    std::vector<Rat> block_norms;
    Rat total = 0;
    for (std::size_t k = 0; k < f.blocks.size(); ++k) {
        block_norms.push_back(norm(sum_space.block_space(k), f.blocks[k]));
        if (block_norms.back() > total) total = block_norms.back();
    }
    if (total == 0) throw InputError("norm_attainment: undefined for the zero element");
    std::vector<std::size_t> attained;
    for (std::size_t k = 0; k < block_norms.size(); ++k)
        if (block_norms[k] == total) attained.push_back(k);
    return attained;
}

RatVec functional_on_hull_with_value(const PolyhedralNormSpace& space,
                                     const std::vector<std::size_t>& indices, const RatVec& y,
                                     const Rat& target) {
    std::size_t lo = indices[0];
    std::size_t hi = indices[0];
    Rat lo_val = dot(space.dual_vertices()[lo], y);
    Rat hi_val = lo_val;
    for (std::size_t idx : indices) {
        const Rat v = dot(space.dual_vertices()[idx], y);
        if (v < lo_val) {
            lo_val = v;
            lo = idx;
        }
        if (v > hi_val) {
            hi_val = v;
            hi = idx;
        }
    }
    if (target < lo_val || target > hi_val)
        throw std::logic_error("functional_on_hull_with_value: target outside attained range");
    if (lo_val == hi_val) return space.dual_vertices()[lo];
    // weight * lo_val + (1-weight) * hi_val = target
    const Rat weight = (hi_val - target) / (hi_val - lo_val);
    return vec_add(scaled(space.dual_vertices()[lo], weight),
                   scaled(space.dual_vertices()[hi], 1 - weight));
}

Orthogonality bj_orthogonal(const PolyhedralNormSpace& space, const RatVec& x, const RatVec& y) {
    if (y.size() != space.dim()) throw InputError("bj_orthogonal: dimension mismatch");
    if (x.size() != space.dim() || is_zero_vec(x))
        throw InputError("bj_orthogonal: base point must be nonzero");
    Orthogonality result;
    result.face = support_face(space, x);
    if (is_zero_vec(y)) {
        result.orthogonal = true;  // any supporting functional annihilates 0
        result.certificate = space.dual_vertices()[result.face.vertex_indices[0]];
        return result;
    }
    Rat lo = dot(space.dual_vertices()[result.face.vertex_indices[0]], y);
    Rat hi = lo;
    for (std::size_t idx : result.face.vertex_indices) {
        const Rat v = dot(space.dual_vertices()[idx], y);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo <= 0 && 0 <= hi) {
        result.orthogonal = true;
        result.certificate = functional_on_hull_with_value(space, result.face.vertex_indices, y, Rat(0));
    }
    return result;
}

Orthogonality eps_orthogonal(const PolyhedralNormSpace& space, const RatVec& x, const RatVec& y,
                             const Rat& eps) {
    if (eps < 0 || eps >= 1) throw InputError("epsilon out of range");
    if (y.size() != space.dim()) throw InputError("eps_orthogonal: dimension mismatch");
    if (x.size() != space.dim() || is_zero_vec(x))
        throw InputError("eps_orthogonal: base point must be nonzero");
    Orthogonality result;
    result.face = support_face(space, x);
    if (is_zero_vec(y)) {
        result.orthogonal = true;
        result.certificate = space.dual_vertices()[result.face.vertex_indices[0]];
        return result;
    }
    const Rat band = eps * norm(space, y);
    Rat lo = dot(space.dual_vertices()[result.face.vertex_indices[0]], y);
    Rat hi = lo;
    for (std::size_t idx : result.face.vertex_indices) {
        const Rat v = dot(space.dual_vertices()[idx], y);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo <= band && hi >= -band) {
        result.orthogonal = true;
        // Any value in [lo, hi] intersect [-band, band]; take the one
        // closest to zero.
        Rat target = 0;
        if (lo > 0) target = lo;
        if (hi < 0) target = hi;
        result.certificate = functional_on_hull_with_value(space, result.face.vertex_indices, y, target);
    }
    return result;
}

}  // namespace coorth
