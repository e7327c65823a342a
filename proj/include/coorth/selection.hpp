#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coorth/subspace.hpp"

namespace coorth {

/// Vertex-valued selection-map structure of a subspace.  A dual vertex
/// is forced when some y in Y has J_X(y) = {x*}: every selection map
/// must then pick x* at y.  A minimal selection map (image contained in
/// every image) exists under the vertex-valued convention iff every
/// facet functional has a unique norm-preserving extension.
struct SelectionReport {
    std::vector<std::size_t> forced_vertices;  // ambient dual vertex indices
    std::size_t facet_pairs = 0;               // r
    std::vector<bool> extension_unique;        // |V_i| == 1, per facet
    bool minimal_exists = false;
    std::optional<std::size_t> minimal_image_size;  // 2r when minimal_exists
    std::vector<std::size_t> chosen_image;  // lex-least extension per facet
};
SelectionReport selection_report(const Subspace& y);

/// zeta(y) = (f_1(y), ..., f_r(y)) with one chosen extension per facet
/// functional: an exact isometry of Y into linf^r.
struct EmbeddingReport {
    RatMat zeta;  // r x n, rows are the chosen extensions
    std::size_t facet_count = 0;        // 2r
    bool isometric_linf_n = false;      // r == dim Y
};
EmbeddingReport embed_linf(const Subspace& y);

/// Consistency checks tying the embedding together: the facet count is
/// 2r; no isometric embedding into linf^m with m < r exists (each facet
/// witness is normed by exactly one row, so r distinct rows are needed);
/// zeta is exactly isometric on the witnesses and on seeded samples; and
/// when r = dim Y the coproximinality sufficient test must succeed.
struct ConsistencyRecord {
    std::size_t r = 0;
    bool facet_count_ok = false;
    bool lower_embedding_bound_ok = false;
    bool isometry_ok = false;
    bool coproximinal_chain_applicable = false;
    bool coproximinal_chain_ok = false;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};
ConsistencyRecord check_embedding_consistency(const Subspace& y, std::uint64_t seed = 0x715EC7ULL,
                                        std::size_t samples = 1000);

}  // namespace coorth
