#include <doctest.h>

#include "spincount/orbits.hpp"

using namespace spincount;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
DualOrbit O(std::vector<int> v, std::optional<Label> l = std::nullopt) {
    return {Partition(std::move(v)), l};
}
} // namespace

TEST_CASE("group parsing and validation") {
    GroupSpec g = parse_group("Spin(3,2)");
    CHECK(g.family == GroupFamily::RealSpin);
    CHECK(g.m == 5);
    CHECK(g.rank() == 2);
    CHECK_FALSE(g.tilde_equals_group());
    CHECK(parse_group("Spin*(8)").rank() == 4);
    CHECK(parse_group("Spin*(8)").tilde_equals_group());
    CHECK(parse_group("SpinC(7)").family == GroupFamily::ComplexSpin);
    CHECK(parse_group("Spin(5,0)").tilde_equals_group());
    CHECK_THROWS_AS(parse_group("Spin(1,1)"), InputError);  // m = 2 degenerate
    CHECK_THROWS_AS(parse_group("Spin*(6x)"), InputError);
    CHECK_THROWS_AS(parse_group("SO(3,2)"), InputError);
    CHECK_THROWS_AS(parse_group("Spin*(7)"), InputError);
}

TEST_CASE("dual group data") {
    CHECK(dual_group(parse_group("Spin(3,2)")).type == NilpotentType::C);
    CHECK(dual_group(parse_group("Spin(3,2)")).partition_size == 4);
    CHECK(dual_group(parse_group("Spin*(8)")).type == NilpotentType::D);
    CHECK(dual_group(parse_group("Spin*(8)")).partition_size == 8);
    CHECK(dual_group(parse_group("SpinC(7)")).type == NilpotentType::C);
    CHECK(dual_group(parse_group("SpinC(7)")).partition_size == 6);
}

TEST_CASE("orbit parsing and label rules") {
    DualOrbit o = parse_orbit("4,2,2:I");
    CHECK(o.shape == P({4, 2, 2}));
    CHECK(o.label == Label::I);
    CHECK_THROWS_AS(parse_orbit("2,2:III"), InputError);

    GroupSpec m4 = parse_group("Spin(2,2)");
    CHECK_NOTHROW(validate_orbit(m4, O({2, 2}, Label::I)));
    CHECK_THROWS_AS(validate_orbit(m4, O({2, 2})), InputError);        // label required
    CHECK_THROWS_AS(validate_orbit(m4, O({3, 1}, Label::I)), InputError); // label forbidden
    CHECK_THROWS_AS(validate_orbit(m4, O({2, 1, 1})), InputError);     // invalid for the dual
    CHECK_THROWS_AS(validate_orbit(m4, O({2, 2, 1, 1})), InputError);  // wrong size
    GroupSpec m5 = parse_group("Spin(3,2)");
    CHECK_NOTHROW(validate_orbit(m5, O({2, 2})));
    CHECK_NOTHROW(validate_orbit(m5, O({2, 1, 1}))); // even parts are unconstrained here
    CHECK_THROWS_AS(validate_orbit(m5, O({2, 2}, Label::I)), InputError); // no labels, m odd
    CHECK_THROWS_AS(validate_orbit(m5, O({3, 1})), InputError);
}

TEST_CASE("duality map") {
    CHECK(bv_dual(O({2, 2}), parse_group("Spin(3,2)")) == P({3, 1, 1}));
    CHECK(bv_dual(O({1, 1, 1, 1}), parse_group("Spin(3,2)")) == P({5}));
    CHECK(bv_dual(O({2, 2}, Label::I), parse_group("Spin(2,2)")) == P({2, 2}));

    // the zero orbit maps to the principal partition
    for (int m = 3; m <= 14; ++m) {
        GroupSpec g = m % 2 ? GroupSpec::real_spin(m, 0)
                            : GroupSpec::real_spin(m / 2, m / 2);
        int sz = dual_group(g).partition_size;
        DualOrbit zero{P(std::vector<int>(sz, 1)), std::nullopt};
        Partition expect = m % 2 ? P({m}) : collapse(P({m}), NilpotentType::D);
        CHECK(bv_dual(zero, g) == expect);
    }

    // very even orbits dualize to their transpose (even case)
    for (int m = 4; m <= 14; m += 2) {
        GroupSpec g = GroupSpec::real_spin(m / 2, m / 2);
        for (const DualOrbit& o : enumerate_orbits(g)) {
            if (!o.shape.is_very_even()) continue;
            CHECK(bv_dual(o, g) == o.shape.transpose());
        }
    }
}

TEST_CASE("relevance and real form counts") {
    GroupSpec s4 = parse_group("Spin*(4)");
    CHECK(relevant(O({2, 2}, Label::I), s4));
    CHECK_FALSE(relevant(O({2, 2}, Label::II), s4));
    GroupSpec s12 = parse_group("Spin*(12)");
    CHECK(relevant(O({4, 4, 2, 2}, Label::I), s12));

    CHECK(count_real_forms(O({2, 2, 2, 2}, Label::I), parse_group("Spin*(8)")) == 2);
    CHECK(count_real_forms(O({4, 4, 2, 2}, Label::I), s12) == 4);
    CHECK(count_real_forms(O({2, 2}, Label::II), s4) == 0);
    CHECK_THROWS_AS(count_real_forms(O({2, 2}, Label::I), parse_group("Spin(2,2)")), InputError);
}

TEST_CASE("row splits") {
    RowSplit a = row_split(O({2, 2}), parse_group("Spin(3,2)"));
    CHECK_FALSE(a.even_case);
    CHECK(a.l == 0);
    CHECK(a.k == 2);
    CHECK(a.r_double_prime == std::vector<int>{1, 1, 0, 0});
    CHECK(a.nb == 0);
    CHECK(a.ng == 2);
    CHECK(a.rows_pair_up());

    RowSplit b = row_split(O({3, 3}), parse_group("Spin(3,3)"));
    CHECK(b.even_case);
    CHECK(b.l == 0);
    CHECK(b.k == 1);
    CHECK(b.r_double_prime == std::vector<int>{1, 1});
    CHECK(b.nb == 0);
    CHECK(b.ng == 3);

    RowSplit c = row_split(O({2, 2, 1, 1}), parse_group("Spin(3,3)"));
    CHECK(c.even_case);
    CHECK(c.l == 1);
    CHECK(c.r_prime == std::vector<int>{1});
    CHECK(c.k == 1);
    CHECK(c.r_double_prime == std::vector<int>{0, 0});
    CHECK(c.nb == 2);
    CHECK(c.ng == 1);
}

TEST_CASE("row splits reconstruct the rows and fill the rank (m <= 14)") {
    for (int m = 3; m <= 14; ++m) {
        GroupSpec g =
            m % 2 ? GroupSpec::real_spin((m + 1) / 2, m / 2) : GroupSpec::real_spin(m / 2, m / 2);
        for (const DualOrbit& o : enumerate_orbits(g)) {
            RowSplit sp = row_split(o, g);
            CHECK(sp.nb + sp.ng == g.rank());
            std::vector<int> rows;
            for (int x : sp.r_prime) {
                int v = sp.even_case ? 2 * x : 2 * x + 1;
                rows.push_back(v);
                rows.push_back(v);
            }
            for (int x : sp.r_double_prime) rows.push_back(sp.even_case ? 2 * x + 1 : 2 * x);
            CHECK(Partition(rows) == o.shape);
        }
    }
}

TEST_CASE("infinitesimal characters") {
    auto ic = infinitesimal_character(O({2, 2}), parse_group("Spin(3,2)"));
    CHECK(ic.twice_entries == std::vector<int>{1, 1});
    CHECK(ic.str() == "(1/2,1/2)");
    auto ic2 = infinitesimal_character(O({1, 1, 1, 1}), parse_group("Spin(3,2)"));
    CHECK(ic2.twice_entries == std::vector<int>{0, 0});
    auto ic3 = infinitesimal_character(O({3, 3}), parse_group("Spin(3,3)"));
    CHECK(ic3.twice_entries == std::vector<int>{2, 2, 0});
}

TEST_CASE("coordinate parities match the block ranks (m <= 14)") {
    for (int m = 3; m <= 14; ++m) {
        GroupSpec g =
            m % 2 ? GroupSpec::real_spin((m + 1) / 2, m / 2) : GroupSpec::real_spin(m / 2, m / 2);
        for (const DualOrbit& o : enumerate_orbits(g)) {
            RowSplit sp = row_split(o, g);
            auto ic = infinitesimal_character(o, g);
            int halves = ic.half_integer_count();
            CHECK(halves == (m % 2 ? sp.ng : sp.nb));
        }
    }
}

TEST_CASE("Levi descriptors") {
    CHECK(levi_descriptor(O({2, 2}), parse_group("Spin(3,2)")) == "GL_2(R)");
    CHECK(levi_descriptor(O({2, 2, 2, 2}, Label::I), parse_group("Spin*(8)")) ==
          "GL_1(H) x GL_1(H)");
    CHECK(levi_descriptor(O({1, 1, 1, 1}), parse_group("Spin(2,2)")) == "GL_1(R) x GL_1(R)");
    CHECK_THROWS_AS(levi_descriptor(O({3, 1}), parse_group("Spin(2,2)")), InputError);
}

TEST_CASE("orbit enumeration is ordered and label-expanded") {
    auto orbits = enumerate_orbits(parse_group("Spin(3,3)"));
    REQUIRE(orbits.size() == 5);
    CHECK(orbits[0].shape == P({1, 1, 1, 1, 1, 1}));
    CHECK(orbits[4].shape == P({5, 1}));
    auto quat = enumerate_orbits(parse_group("Spin*(4)"));
    REQUIRE(quat.size() == 4);
    CHECK(quat[1] == O({2, 2}, Label::I));
    CHECK(quat[2] == O({2, 2}, Label::II));
}
