#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coorth/subspace.hpp"

namespace coorth {

// Insertion-ordered JSON keeps emission deterministic and readable.
using Json = nlohmann::ordered_json;

/// Rationals travel as exact strings "p/q" (or "p"); plain JSON integers
/// are also accepted on input.  Floating-point numbers are rejected.
Rat parse_rat_json(const Json& value, const std::string& where);
Json rat_json(const Rat& value);

RatVec parse_vector_json(const Json& value, const std::string& where);
Json vec_json(const RatVec& value);
RatMat parse_matrix_json(const Json& value, const std::string& where);
Json mat_json(const RatMat& value);

/// Space documents:
///   {"kind": "dual-vertices", "functionals": [[...], ...]}
///   {"kind": "l1", "n": 3} | {"kind": "linf", "n": 2}
///   {"kind": "linf-sum", "components": [<space>, ...]}
PolyhedralNormSpace parse_space(const Json& doc, const std::string& where = "space");

/// Canonical emission: kind dual-vertices with the sorted vertex list
/// (plus informational block dimensions for linf-sums).  Re-parsing
/// yields a space with the identical dual vertex set.
Json emit_space(const PolyhedralNormSpace& space);

/// Subspace documents: {"space": <space>?, "basis": [[...], ...]} or
/// {"space": ..., "span": [[...], ...]} (a spanning list to be reduced).
/// An explicit ambient space (from --space) takes precedence over the
/// embedded one.
Subspace parse_subspace(const Json& doc, std::optional<PolyhedralNormSpace> ambient,
                        const std::string& where = "subspace");

/// A comma-separated list of rationals, e.g. "1,-1/2,3".
RatVec parse_vector_arg(const std::string& text);

/// Everything a command needs, assembled from the CLI arguments and the
/// referenced files before dispatch (all vectors dimension-checked).
struct QueryDocument {
    std::string command;
    std::optional<PolyhedralNormSpace> space;
    std::optional<Subspace> subspace;
    std::optional<RatVec> x, y;
    std::optional<Rat> eps;
    std::uint64_t seed = 1;
    std::size_t sample_count = 20;
    SearchLimits limits;
};

}  // namespace coorth
