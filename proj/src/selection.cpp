#include "coorth/selection.hpp"

#include <stdexcept>

#include "coorth/rng.hpp"

namespace coorth {

SelectionReport selection_report(const Subspace& y) {
    SelectionReport report;
    const std::size_t vertex_count = y.ambient().dual_vertices().size();
    for (std::size_t a = 0; a < vertex_count; ++a) {
        if (coverage_probe(y, a).covered) report.forced_vertices.push_back(a);
    }
    const FacetDecomposition& facets = y.facets();
    report.facet_pairs = facets.pair_count();
    report.minimal_exists = true;
    for (const auto& ext : facets.extension_sets) {
        report.extension_unique.push_back(ext.size() == 1);
        report.minimal_exists = report.minimal_exists && ext.size() == 1;
        report.chosen_image.push_back(ext.front());  // vertex list is lex-sorted
    }
    if (report.minimal_exists) report.minimal_image_size = 2 * report.facet_pairs;
    return report;
}

EmbeddingReport embed_linf(const Subspace& y) {
    EmbeddingReport report;
    for (const auto& ext : y.facets().extension_sets)
        report.zeta.push_back(y.ambient().dual_vertices()[ext.front()]);
    report.facet_count = 2 * y.facets().pair_count();
    report.isometric_linf_n = y.facets().pair_count() == y.dim();
    return report;
}

namespace {

Rat embedded_sup_norm(const RatMat& zeta, const RatVec& v) {
    Rat best = 0;
    for (const RatVec& row : zeta) {
        const Rat value = abs(Rat(dot(row, v)));
        if (value > best) best = value;
    }
    return best;
}

}  // namespace

ConsistencyRecord check_embedding_consistency(const Subspace& y, std::uint64_t seed,
                                        std::size_t samples) {
    ConsistencyRecord record;
    record.seed = seed;
    record.samples = samples;
    const FacetDecomposition& facets = y.facets();
    const EmbeddingReport embedding = embed_linf(y);
    record.r = facets.pair_count();
    record.facet_count_ok = embedding.facet_count == 2 * record.r;

    // Each facet witness must be normed by exactly its own row: the
    // norming-row assignment is a permutation, so no isometric embedding
    // into fewer than r coordinate pairs can exist.
    record.lower_embedding_bound_ok = true;
    record.isometry_ok = true;
    for (std::size_t i = 0; i < record.r; ++i) {
        const RatVec witness = y.to_ambient(facets.interior_witnesses[i]);
        const Rat witness_norm = norm(y.ambient(), witness);
        for (std::size_t j = 0; j < record.r; ++j) {
            const Rat value = abs(Rat(dot(embedding.zeta[j], witness)));
            const bool norming = value == witness_norm;
            if (norming != (i == j)) record.lower_embedding_bound_ok = false;
        }
        if (embedded_sup_norm(embedding.zeta, witness) != witness_norm) record.isometry_ok = false;
    }

    Lcg rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const RatVec coeffs = rng.next_vector(y.dim());
        const RatVec v = y.to_ambient(coeffs);
        if (embedded_sup_norm(embedding.zeta, v) != norm(y.ambient(), v)) record.isometry_ok = false;
    }

    record.coproximinal_chain_applicable = record.r == y.dim();
    if (record.coproximinal_chain_applicable)
        record.coproximinal_chain_ok = coproximinal_certificate(y).choice.has_value();
    return record;
}

}  // namespace coorth
