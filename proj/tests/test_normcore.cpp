#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coorth/normcore.hpp"
#include "coorth/rng.hpp"
#include "coorth/worked_example.hpp"
#include "test_util.hpp"

using namespace coorth;
using namespace coorth::testing;

TEST_CASE("make_space: linf^2 from the coordinate functionals") {
    const auto space = PolyhedralNormSpace::from_dual_functionals({rv({1, 0}), rv({0, 1})});
    CHECK(space.dim() == 2);
    CHECK(space.dual_vertices().size() == 4);  // symmetrized
    CHECK(space == PolyhedralNormSpace::linf(2));
}

TEST_CASE("make_space: all sign vectors of length 3 give l1^3") {
    std::vector<RatVec> signs;
    for (long a : {-1, 1})
        for (long b : {-1, 1})
            for (long c : {-1, 1}) signs.push_back(rv({a, b, c}));
    const auto space = PolyhedralNormSpace::from_dual_functionals(signs);
    CHECK(space == PolyhedralNormSpace::l1(3));
    CHECK(space.dual_vertices().size() == 8);
}

TEST_CASE("make_space rejects non-spanning functionals") {
    CHECK_THROWS_WITH_AS(PolyhedralNormSpace::from_dual_functionals({rv({1, 0}), rv({1, 0})}),
                         doctest::Contains("degenerate norm"), InputError);
}

TEST_CASE("make_space prunes non-vertex functionals") {
    const auto space = PolyhedralNormSpace::from_dual_functionals(
        {rv({1, 0}), rv({0, 1}), {rat(1, 2), rat(1, 2)}});
    CHECK(space.dual_vertices().size() == 4);
}

TEST_CASE("constructed spaces have irredundant vertex lists") {
    // hull_vertices run on the stored list keeps everything.
    for (const auto& space :
         {PolyhedralNormSpace::l1(3), PolyhedralNormSpace::linf(3), worked_example_space()}) {
        CHECK(hull_vertices(space.dual_vertices()).size() == space.dual_vertices().size());
    }
}

TEST_CASE("linf_space(1) equals l1_space(1)") {
    CHECK(PolyhedralNormSpace::linf(1) == PolyhedralNormSpace::l1(1));
    CHECK(PolyhedralNormSpace::l1(1).dual_vertices().size() == 2);
}

TEST_CASE("l1 dimension cap") {
    CHECK_THROWS_AS(PolyhedralNormSpace::l1(11), InputError);
}

TEST_CASE("linf_sum of two l1^3 blocks") {
    const auto space = worked_example_space();
    CHECK(space.dim() == 6);
    CHECK(space.dual_vertices().size() == 16);
    CHECK(space.block_count() == 2);
}

TEST_CASE("single-block linf_sum has the component norm") {
    auto sum = PolyhedralNormSpace::linf_sum({PolyhedralNormSpace::linf(2)});
    CHECK(sum == PolyhedralNormSpace::linf(2));
}

TEST_CASE("norm values") {
    CHECK(norm(PolyhedralNormSpace::l1(3), rv({1, 1, 1})) == 3);
    CHECK(norm(PolyhedralNormSpace::linf(2), rv({1, -2})) == 2);
    const auto sum = worked_example_space();
    CHECK(norm(sum, rv({2, 0, 0, 1, 1, 1})) == 3);  // max of block l1 norms
    CHECK(norm(sum, RatVec(6, Rat(0))) == 0);
    CHECK_THROWS_AS(norm(PolyhedralNormSpace::l1(2), rv({1})), InputError);
}

TEST_CASE("support faces") {
    const auto l13 = PolyhedralNormSpace::l1(3);
    const auto face = support_face(l13, rv({1, 1, 1}));
    REQUIRE(face.vertex_indices.size() == 1);
    CHECK(l13.dual_vertices()[face.vertex_indices[0]] == rv({1, 1, 1}));

    const auto linf2 = PolyhedralNormSpace::linf(2);
    const auto diag = support_face(linf2, rv({1, 1}));
    REQUIRE(diag.vertex_indices.size() == 2);
    CHECK(linf2.dual_vertices()[diag.vertex_indices[0]] == rv({0, 1}));
    CHECK(linf2.dual_vertices()[diag.vertex_indices[1]] == rv({1, 0}));

    const auto e1 = support_face(linf2, rv({1, 0}));
    REQUIRE(e1.vertex_indices.size() == 1);
    CHECK(linf2.dual_vertices()[e1.vertex_indices[0]] == rv({1, 0}));

    CHECK_THROWS_AS(support_face(linf2, rv({0, 0})), InputError);
}

TEST_CASE("support face vertices attain the norm exactly, others strictly less") {
    Lcg rng(11);
    const auto space = random_space(rng, 3, 5);
    for (int k = 0; k < 50; ++k) {
        const RatVec x = rng.next_nonzero_vector(3);
        const auto face = support_face(space, x);
        CHECK(face.norm_value == norm(space, x));
        std::vector<bool> in_face(space.dual_vertices().size(), false);
        for (std::size_t idx : face.vertex_indices) in_face[idx] = true;
        for (std::size_t i = 0; i < space.dual_vertices().size(); ++i) {
            const Rat v = dot(space.dual_vertices()[i], x);
            if (in_face[i])
                CHECK(v == face.norm_value);
            else
                CHECK(v < face.norm_value);
        }
    }
}

TEST_CASE("norm_attainment on the worked-example space") {
    const auto sum = worked_example_space();
    ProductElement f{{rv({2, 0, 0}), rv({1, 1, 1})}};
    CHECK(norm_attainment(sum, f) == std::vector<std::size_t>{1});
    ProductElement tie{{rv({1, 0, 0}), rv({0, 1, 0})}};
    CHECK(norm_attainment(sum, tie) == std::vector<std::size_t>{0, 1});
    ProductElement zero{{rv({0, 0, 0}), rv({0, 0, 0})}};
    CHECK_THROWS_AS(norm_attainment(sum, zero), InputError);

    auto single = PolyhedralNormSpace::linf_sum({PolyhedralNormSpace::l1(2)});
    CHECK(norm_attainment(single, ProductElement{{rv({1, 1})}}) == std::vector<std::size_t>{0});
}

TEST_CASE("linf_sum norm equals max of block norms on samples") {
    const auto sum = worked_example_space();
    Lcg rng(5);
    for (int k = 0; k < 100; ++k) {
        const RatVec u = rng.next_vector(3);
        const RatVec v = rng.next_vector(3);
        const RatVec flat = flatten(sum, ProductElement{{u, v}});
        const Rat expected = std::max(norm(sum.block_space(0), u), norm(sum.block_space(1), v));
        CHECK(norm(sum, flat) == expected);
    }
}

TEST_CASE("bj orthogonality on linf^2") {
    const auto linf2 = PolyhedralNormSpace::linf(2);

    const auto yes = bj_orthogonal(linf2, rv({1, 1}), rv({1, -1}));
    CHECK(yes.orthogonal);
    REQUIRE(yes.certificate.has_value());
    CHECK(*yes.certificate == RatVec{rat(1, 2), rat(1, 2)});
    CHECK(dot(*yes.certificate, rv({1, -1})) == 0);
    CHECK(dot(*yes.certificate, rv({1, 1})) == norm(linf2, rv({1, 1})));

    const auto no = bj_orthogonal(linf2, rv({1, 0}), rv({1, 1}));
    CHECK(!no.orthogonal);
    CHECK(grid_refute_bj(linf2, rv({1, 0}), rv({1, 1})).has_value());

    const auto trivial = bj_orthogonal(linf2, rv({1, 0}), rv({0, 0}));
    CHECK(trivial.orthogonal);
    REQUIRE(trivial.certificate.has_value());
    CHECK(dot(*trivial.certificate, rv({1, 0})) == 1);
    CHECK_THROWS_AS(bj_orthogonal(linf2, rv({0, 0}), rv({1, 0})), InputError);
}

TEST_CASE("eps orthogonality on linf^2") {
    const auto linf2 = PolyhedralNormSpace::linf(2);
    const auto yes = eps_orthogonal(linf2, rv({1, 0}), rv({1, 2}), rat(1, 2));
    CHECK(yes.orthogonal);
    REQUIRE(yes.certificate.has_value());
    CHECK(abs(Rat(dot(*yes.certificate, rv({1, 2})))) <= rat(1, 2) * norm(linf2, rv({1, 2})));

    CHECK(!eps_orthogonal(linf2, rv({1, 0}), rv({1, 1}), rat(9, 10)).orthogonal);
    CHECK_THROWS_WITH_AS(eps_orthogonal(linf2, rv({1, 0}), rv({1, 1}), rat(3, 2)),
                         doctest::Contains("epsilon out of range"), InputError);
    CHECK_THROWS_AS(eps_orthogonal(linf2, rv({1, 0}), rv({1, 1}), rat(-1, 10)), InputError);
}

namespace {

std::vector<PolyhedralNormSpace> oracle_families() {
    std::vector<PolyhedralNormSpace> families;
    families.push_back(PolyhedralNormSpace::l1(2));
    families.push_back(PolyhedralNormSpace::linf(2));
    families.push_back(PolyhedralNormSpace::l1(3));
    families.push_back(PolyhedralNormSpace::linf(3));
    families.push_back(worked_example_space());
    return families;
}

}  // namespace

TEST_CASE("grid oracle agrees with bj_orthogonal across families") {
    for (const auto& space : oracle_families()) {
        Lcg rng(31 + space.dim());
        for (int k = 0; k < 120; ++k) {
            const RatVec x = rng.next_nonzero_vector(space.dim());
            const RatVec y = rng.next_vector(space.dim());
            const auto verdict = bj_orthogonal(space, x, y);
            const auto refuted = grid_refute_bj(space, x, y);
            if (verdict.orthogonal) {
                CHECK(!refuted.has_value());
                if (verdict.certificate) {
                    CHECK(dot(*verdict.certificate, y) == 0);
                    CHECK(dot(*verdict.certificate, x) == norm(space, x));
                }
            } else {
                CHECK(refuted.has_value());
            }
        }
    }
}

TEST_CASE("homogeneity of bj and eps orthogonality") {
    const auto space = PolyhedralNormSpace::l1(3);
    Lcg rng(17);
    const std::vector<Rat> scalars = {rat(2), rat(1, 2), rat(-1), rat(-3, 4)};
    for (int k = 0; k < 60; ++k) {
        const RatVec x = rng.next_nonzero_vector(3);
        const RatVec y = rng.next_vector(3);
        const bool base = bj_orthogonal(space, x, y).orthogonal;
        const bool base_eps = eps_orthogonal(space, x, y, rat(1, 3)).orthogonal;
        for (const Rat& a : scalars) {
            for (const Rat& b : scalars) {
                CHECK(bj_orthogonal(space, scaled(x, a), scaled(y, b)).orthogonal == base);
                CHECK(eps_orthogonal(space, scaled(x, a), scaled(y, b), rat(1, 3)).orthogonal ==
                      base_eps);
            }
        }
    }
}

TEST_CASE("eps = 0 coincides with bj; eps is monotone") {
    const auto space = PolyhedralNormSpace::linf(3);
    Lcg rng(41);
    for (int k = 0; k < 100; ++k) {
        const RatVec x = rng.next_nonzero_vector(3);
        const RatVec y = rng.next_vector(3);
        CHECK(eps_orthogonal(space, x, y, Rat(0)).orthogonal ==
              bj_orthogonal(space, x, y).orthogonal);
        const bool small = eps_orthogonal(space, x, y, rat(1, 4)).orthogonal;
        const bool large = eps_orthogonal(space, x, y, rat(3, 4)).orthogonal;
        if (small) CHECK(large);
    }
}
