#include "coorth/worked_example.hpp"

namespace coorth {

PolyhedralNormSpace worked_example_space() {
    std::vector<PolyhedralNormSpace> blocks;
    blocks.push_back(PolyhedralNormSpace::l1(3));
    blocks.push_back(PolyhedralNormSpace::l1(3));
    return PolyhedralNormSpace::linf_sum(std::move(blocks));
}

RatMat worked_example_pairs() {
    const long data[8][6] = {
        {1, 1, 1, 1, 1, 0},    //
        {1, -1, -1, 0, 0, 1},  //
        {1, -1, 1, 0, 0, 1},   //
        {1, 1, -1, -1, 1, 0},  //
        {2, 0, 0, 1, 1, 1},    //
        {-2, 0, 0, 1, -1, -1}, //
        {0, 0, 0, 1, -1, 1},   //
        {0, 2, 0, 1, 1, -1},   //
    };
    RatMat pairs;
    for (const auto& row : data) {
        RatVec v(6);
        for (int j = 0; j < 6; ++j) v[static_cast<std::size_t>(j)] = row[j];
        pairs.push_back(std::move(v));
    }
    return pairs;
}

Subspace worked_example_subspace() {
    return Subspace::from_spanning(worked_example_space(), worked_example_pairs());
}

}  // namespace coorth
