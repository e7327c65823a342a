#pragma once

#include "coorth/subspace.hpp"

namespace coorth {

/// The bundled worked example: the linf-sum of two copies of l1^3 and
/// the 5-dimensional strongly anti-coproximinal subspace spanned by
/// eight block pairs.

PolyhedralNormSpace worked_example_space();

/// The eight spanning pairs (u_i, v_i), flattened to 6-vectors.
RatMat worked_example_pairs();

Subspace worked_example_subspace();

}  // namespace coorth
