#include "coorth/json_io.hpp"

#include <sstream>

namespace coorth {

Rat parse_rat_json(const Json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rat(value.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return Rat(value.get<long>());
    throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

Json rat_json(const Rat& value) { return rat_str(value); }

RatVec parse_vector_json(const Json& value, const std::string& where) {
    if (!value.is_array()) throw InputError(where + ": expected an array");
    RatVec out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(parse_rat_json(value[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Json vec_json(const RatVec& value) {
    Json out = Json::array();
    for (const Rat& q : value) out.push_back(rat_json(q));
    return out;
}

RatMat parse_matrix_json(const Json& value, const std::string& where) {
    if (!value.is_array()) throw InputError(where + ": expected an array of vectors");
    RatMat out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(parse_vector_json(value[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Json mat_json(const RatMat& value) {
    Json out = Json::array();
    for (const RatVec& row : value) out.push_back(vec_json(row));
    return out;
}

namespace {

std::size_t parse_count(const Json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<long>() < 1)
        throw InputError(where + ": expected a positive integer");
    return static_cast<std::size_t>(value.get<long>());
}

}  // namespace

PolyhedralNormSpace parse_space(const Json& doc, const std::string& where) {
    if (!doc.is_object()) throw InputError(where + ": expected an object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw InputError(where + ".kind: expected a string");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "dual-vertices") {
        if (!doc.contains("functionals"))
            throw InputError(where + ".functionals: missing");
        return PolyhedralNormSpace::from_dual_functionals(
            parse_matrix_json(doc["functionals"], where + ".functionals"));
    }
    if (kind == "l1") {
        if (!doc.contains("n")) throw InputError(where + ".n: missing");
        return PolyhedralNormSpace::l1(parse_count(doc["n"], where + ".n"));
    }
    if (kind == "linf") {
        if (!doc.contains("n")) throw InputError(where + ".n: missing");
        return PolyhedralNormSpace::linf(parse_count(doc["n"], where + ".n"));
    }
    if (kind == "linf-sum") {
        if (!doc.contains("components") || !doc["components"].is_array())
            throw InputError(where + ".components: expected an array");
        std::vector<PolyhedralNormSpace> components;
        for (std::size_t i = 0; i < doc["components"].size(); ++i)
            components.push_back(parse_space(doc["components"][i],
                                             where + ".components[" + std::to_string(i) + "]"));
        return PolyhedralNormSpace::linf_sum(std::move(components));
    }
    throw InputError(where + ".kind: unknown kind '" + kind + "'");
}

Json emit_space(const PolyhedralNormSpace& space) {
    Json out;
    if (space.is_sum()) {
        out["kind"] = "linf-sum";
        Json components = Json::array();
        for (std::size_t k = 0; k < space.block_count(); ++k)
            components.push_back(emit_space(space.block_space(k)));
        out["components"] = std::move(components);
        return out;
    }
    out["kind"] = "dual-vertices";
    Json funcs = Json::array();
    for (const RatVec& f : space.dual_vertices()) funcs.push_back(vec_json(f));
    out["functionals"] = std::move(funcs);
    return out;
}

Subspace parse_subspace(const Json& doc, std::optional<PolyhedralNormSpace> ambient,
                        const std::string& where) {
    if (!doc.is_object()) throw InputError(where + ": expected an object");
    if (!ambient) {
        if (!doc.contains("space"))
            throw InputError(where + ".space: missing (provide --space or embed one)");
        ambient = parse_space(doc["space"], where + ".space");
    }
    const bool has_basis = doc.contains("basis");
    const bool has_span = doc.contains("span");
    if (has_basis == has_span)
        throw InputError(where + ": provide exactly one of \"basis\" or \"span\"");
    try {
        if (has_basis)
            return Subspace(std::move(*ambient),
                            parse_matrix_json(doc["basis"], where + ".basis"));
        return Subspace::from_spanning(std::move(*ambient),
                                       parse_matrix_json(doc["span"], where + ".span"));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

RatVec parse_vector_arg(const std::string& text) {
    RatVec out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw InputError("empty vector argument");
    return out;
}

}  // namespace coorth
