#include <doctest.h>

#include "spincount/counting.hpp"

#include <atomic>
#include <thread>

using namespace spincount;

namespace {
DualOrbit O(std::vector<int> v, std::optional<Label> l = std::nullopt) {
    return {Partition(std::move(v)), l};
}
GroupSpec R(int p, int q) { return GroupSpec::real_spin(p, q); }
} // namespace

TEST_CASE("covering group counts") {
    CHECK(count_tilde(R(3, 2), O({2, 2})) == 1);
    CHECK(count_tilde(R(3, 3), O({3, 3})) == 2);
    CHECK(count_tilde(R(2, 2), O({2, 2}, Label::I)) == 1); // p=q, very even
    CHECK(count_tilde(R(4, 1), O({2, 2})) == 0);
    CHECK(count_tilde(R(3, 2), O({2, 1, 1})) == 0); // odd multiplicity
    CHECK(count_tilde(GroupSpec::quaternionic(8), O({2, 2, 2, 2}, Label::I)) == 2);
    CHECK(count_tilde(GroupSpec::quaternionic(8), O({2, 2, 2, 2}, Label::II)) == 0);
    CHECK(count_tilde(GroupSpec::quaternionic(4), O({3, 1})) == 0);
    CHECK(count_tilde(R(5, 4), O({4, 4})) == 1);
}

TEST_CASE("spin group counts") {
    CHECK(count_spin(R(3, 2), O({2, 2})) == 2);
    CHECK(count_spin(R(3, 3), O({3, 3})) == 1);
    CHECK(count_spin(R(2, 2), O({1, 1, 1, 1})) == 4);
    CHECK(count_spin(R(2, 2), O({2, 2}, Label::I)) == 2);
    CHECK(count_spin(R(4, 1), O({2, 2})) == 0);
    CHECK(count_spin(R(5, 4), O({4, 4})) == 2);
    CHECK(count_spin(GroupSpec::quaternionic(8), O({2, 2, 2, 2}, Label::I)) == 2);
}

TEST_CASE("complex spin groups carry nothing") {
    GroupSpec c7 = GroupSpec::complex_spin(7);
    CHECK(count_complex(c7, O({2, 2, 2}), O({2, 2, 1, 1})) == 0);
    GroupSpec c8 = GroupSpec::complex_spin(8);
    CHECK(count_complex(c8, O({3, 3, 1, 1}), O({5, 1, 1, 1})) == 0);
    GroupSpec c4 = GroupSpec::complex_spin(4);
    CHECK(count_complex(c4, O({1, 1, 1, 1}), O({2, 2}, Label::I)) == 0);
    CHECK_THROWS_AS(count_complex(c7, O({3, 1, 1, 1}), O({2, 2, 2})), InputError);
}

TEST_CASE("sign twist fixedness") {
    CHECK_FALSE(sgn_twist_fixed(R(3, 3), O({3, 3})));
    CHECK(sgn_twist_fixed(R(3, 2), O({2, 2})));
    CHECK(sgn_twist_fixed(GroupSpec::quaternionic(8), O({2, 2, 2, 2}, Label::I)));
    CHECK_THROWS_AS(sgn_twist_fixed(R(4, 1), O({2, 2})), InputError);
}

TEST_CASE("cell route matches the spec examples") {
    CHECK(count_via_cells(R(3, 2), O({2, 2})) == 1);
    CHECK(count_via_cells(R(4, 1), O({2, 2})) == 0);
    CHECK(count_via_cells(GroupSpec::quaternionic(4), O({2, 2}, Label::I)) == 2);
    CHECK(count_via_cells(GroupSpec::quaternionic(4), O({2, 2}, Label::II)) == 0);
}

TEST_CASE("classification reports") {
    CountReport r = classify(R(3, 3), O({3, 3}));
    CHECK(r.count_tilde == 2);
    CHECK(r.count_g == 1);
    CHECK(r.verified);
    CHECK(r.cell_count == 2);
    CHECK(r.sgn_twist_fixed == false);
    CHECK(r.descriptor.n_characters == 2);
    CHECK(r.descriptor.levi == "GL_3(R)");
    CHECK(r.descriptor.structure.find("chi1") != std::string::npos);

    CountReport s = classify(GroupSpec::quaternionic(8), O({2, 2, 2, 2}, Label::I));
    CHECK(s.count_tilde == 2);
    CHECK(s.count_g == 2);
    CHECK(s.descriptor.n_characters == 1);
    CHECK(s.descriptor.structure.find("pi_o") != std::string::npos);

    CountReport t = classify(R(5, 4), O({4, 4}));
    CHECK(t.count_tilde == 1);
    CHECK(t.count_g == 2);
    CHECK(t.verified); // rank 4 is within the default cutoff
}

TEST_CASE("verification modes") {
    CountReport def = classify(R(5, 4), O({4, 4}), VerifyMode::Default);
    CHECK(def.verified); // rank 4 <= default cutoff
    CountReport off = classify(R(5, 4), O({4, 4}), VerifyMode::Off);
    CHECK_FALSE(off.verified);
    CHECK_FALSE(off.cell_count.has_value());
    // rank above the hard cutoff cannot be forced
    GroupSpec big = R(9, 8);
    DualOrbit o{Partition({8, 8}), std::nullopt};
    CHECK_THROWS_AS(classify(big, o, VerifyMode::Force), InputError);
    CountReport untouched = classify(big, o, VerifyMode::Default);
    CHECK_FALSE(untouched.verified);
    CHECK(untouched.count_tilde == 1);
}

TEST_CASE("Clifford pattern on nonzero counts (m <= 10)") {
    for (int m = 3; m <= 10; ++m) {
        for (int p = 0; p <= m; ++p) {
            GroupSpec g = R(p, m - p);
            for (const DualOrbit& o : enumerate_orbits(g)) {
                long long ct = count_tilde(g, o);
                long long cg = count_spin(g, o);
                if (ct == 0) {
                    CHECK(cg == 0);
                    continue;
                }
                if (g.tilde_equals_group())
                    CHECK(cg == ct);
                else if (sgn_twist_fixed(g, o))
                    CHECK(cg == 2 * ct);
                else
                    CHECK(2 * cg == ct);
            }
        }
    }
}

TEST_CASE("engine agreement at the top of the verification range") {
    // rank 6 and 7, forced through the hard-cutoff path
    CountReport a = classify(R(7, 6), O({4, 4, 2, 2}), VerifyMode::Force);
    CHECK(a.count_tilde == 1);
    CHECK(a.cell_count == 1);
    CountReport b = classify(R(7, 7), O({7, 7}), VerifyMode::Force);
    CHECK(b.count_tilde == 2);
    CHECK(b.count_g == 1);
    CHECK(b.cell_count == 2);
    CountReport c = classify(GroupSpec::quaternionic(12), O({4, 4, 2, 2}, Label::I),
                             VerifyMode::Force);
    CHECK(c.count_tilde == 4);
    CHECK(c.cell_count == 4);
}

TEST_CASE("odd row multiplicities empty every count (m <= 14)") {
    for (int m = 3; m <= 14; ++m) {
        std::vector<GroupSpec> groups;
        for (int p = 0; p <= m; ++p) groups.push_back(R(p, m - p));
        if (m % 2 == 0) groups.push_back(GroupSpec::quaternionic(m));
        for (const GroupSpec& g : groups)
            for (const DualOrbit& o : enumerate_orbits(g)) {
                if (o.shape.all_rows_even_multiplicity()) continue;
                CHECK(count_tilde(g, o) == 0);
                CHECK(count_spin(g, o) == 0);
            }
    }
}

TEST_CASE("the second label never contributes (m <= 12)") {
    for (int m = 4; m <= 12; m += 2) {
        GroupSpec g = GroupSpec::quaternionic(m);
        for (const DualOrbit& o : enumerate_orbits(g)) {
            if (o.label != Label::II) continue;
            CHECK(count_tilde(g, o) == 0);
            DualOrbit one{o.shape, Label::I};
            CHECK(count_tilde(g, one) + count_tilde(g, o) == count_tilde(g, one));
        }
    }
}

TEST_CASE("classification is deterministic across worker counts") {
    std::vector<std::pair<GroupSpec, DualOrbit>> jobs;
    for (int p = 0; p <= 7; ++p) {
        GroupSpec g = R(p, 7 - p);
        for (const DualOrbit& o : enumerate_orbits(g)) jobs.emplace_back(g, o);
    }
    auto run = [&](unsigned nthreads) {
        std::vector<std::pair<long long, long long>> out(jobs.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) break;
                CountReport r = classify(jobs[i].first, jobs[i].second);
                out[i] = {r.count_tilde, *r.cell_count};
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        return out;
    };
    CHECK(run(1) == run(4));
}

TEST_CASE("report JSON round trip") {
    for (CountReport r :
         {classify(R(3, 2), O({2, 2})), classify(GroupSpec::quaternionic(4), O({2, 2}, Label::I)),
          classify(R(4, 1), O({2, 2})),
          classify_complex(GroupSpec::complex_spin(7), O({2, 2, 2}), O({1, 1, 1, 1, 1, 1}))}) {
        CountReport back = report_from_json(report_to_json(r));
        CHECK(back == r);
    }
}
