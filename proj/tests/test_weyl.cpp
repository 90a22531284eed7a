#include <doctest.h>

#include "spincount/weyl.hpp"

#include <map>

using namespace spincount;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
} // namespace

TEST_CASE("conjugacy classes and sizes") {
    const RankData& rd0 = rank_data(0);
    CHECK(rd0.classes.size() == 1);
    CHECK(rd0.class_sizes[0] == 1);

    const RankData& rd1 = rank_data(1);
    CHECK(rd1.classes.size() == 2);
    CHECK(rd1.class_sizes[0] == 1);
    CHECK(rd1.class_sizes[1] == 1);

    const RankData& rd2 = rank_data(2);
    CHECK(rd2.classes.size() == 5);
    long long total = 0;
    for (long long s : rd2.class_sizes) total += s;
    CHECK(total == 8);
}

TEST_CASE("class sizes match element enumeration for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        std::map<ConjClassLabel, long long> counts;
        for_each_element(n, [&](const SignedPerm& w) { ++counts[class_of(w)]; });
        const RankData& rd = rank_data(n);
        REQUIRE(counts.size() == rd.classes.size());
        for (size_t c = 0; c < rd.classes.size(); ++c)
            CHECK(counts.at(rd.classes[c]) == rd.class_sizes[c]);
    }
}

TEST_CASE("signed permutation arithmetic") {
    SignedPerm a = SignedPerm::identity(3);
    a.perm = {1, 0, 2};
    a.sign = {1, -1, 1};
    SignedPerm b = SignedPerm::identity(3);
    b.perm = {2, 1, 0};
    b.sign = {-1, 1, 1};
    CHECK((a * a.inverse()) == SignedPerm::identity(3));
    CHECK((b * b.inverse()) == SignedPerm::identity(3));
    CHECK(((a * b) * (b.inverse() * a.inverse())) == SignedPerm::identity(3));
    CHECK(a.sign_product() == -1);
    CHECK(a.underlying_sign() == -1);
}

TEST_CASE("symmetric group characters by hook removal") {
    CHECK(sym_char(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(sym_char(P({2, 1}), P({3})) == -1);
    CHECK(sym_char(P({2, 1}), P({2, 1})) == 0);
    CHECK(sym_char(P({3}), P({2, 1})) == 1);
    CHECK(sym_char(P({1, 1, 1}), P({2, 1})) == -1);
    CHECK(sym_char(P({}), P({})) == 1);
}

TEST_CASE("character conventions") {
    for (int n = 1; n <= 4; ++n) {
        const RankData& rd = rank_data(n);
        BiPartition triv{P({n}), P({})};
        BiPartition det{P({}), P(std::vector<int>(n, 1))};
        for (size_t c = 0; c < rd.classes.size(); ++c) {
            const ConjClassLabel& cl = rd.classes[c];
            CHECK(rd.irr_values[rd.irrep_index.at(triv)][c] == 1);
            int la = cl.positive.length(), lb = cl.negative.length();
            long long expect = ((n - la - lb) % 2 ? -1 : 1) * ((lb % 2) ? -1 : 1);
            CHECK(rd.irr_values[rd.irrep_index.at(det)][c] == expect);
        }
    }
    // the unique two-dimensional irreducible at rank 2
    CHECK(rank_data(2).dimension({P({1}), P({1})}) == 2);
}

TEST_CASE("orthogonality and the dimension identity for n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        const RankData& rd = rank_data(n);
        long long dimsq = 0;
        for (const BiPartition& bp : rd.irreps) {
            ClassFunction f = ClassFunction::irreducible(n, bp);
            dimsq += rd.dimension(bp) * rd.dimension(bp);
            for (const BiPartition& bq : rd.irreps) {
                Rat ip = f.inner(ClassFunction::irreducible(n, bq));
                CHECK(ip == Rat(bp == bq ? 1 : 0));
            }
        }
        CHECK(dimsq == rd.order);
    }
}

TEST_CASE("column orthogonality at rank 3") {
    const RankData& rd = rank_data(3);
    for (size_t c1 = 0; c1 < rd.classes.size(); ++c1)
        for (size_t c2 = 0; c2 < rd.classes.size(); ++c2) {
            long long sum = 0;
            for (size_t i = 0; i < rd.irreps.size(); ++i)
                sum += rd.irr_values[i][c1] * rd.irr_values[i][c2];
            long long expect = c1 == c2 ? rd.order / rd.class_sizes[c1] : 0;
            CHECK(sum == expect);
        }
}

TEST_CASE("class function decomposition") {
    // the regular character decomposes with multiplicity = dimension
    const int n = 2;
    const RankData& rd = rank_data(n);
    ClassFunction reg(n);
    ConjClassLabel id{P({1, 1}), P({})};
    reg[rd.index_of(id)] = Rat(rd.order);
    auto dec = reg.decompose();
    for (const BiPartition& bp : rd.irreps)
        CHECK(dec.at(bp) == rd.dimension(bp));
}
