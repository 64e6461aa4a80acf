#include "sgpa/connections.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace sgpa;
using namespace sgpa::testing;

namespace {

struct Ctx {
    GradedAlgebra algebra;
    StarTable table;
    explicit Ctx(GradedAlgebra a) : algebra(std::move(a)), table(StarTable::build(algebra)) {}
};

std::vector<ExtLabel> all_ext(const StarTable& t) {
    std::vector<ExtLabel> out;
    for (bool tilded : {false, true})
        for (LabelId l = 0; l < t.label_count(); ++l) out.push_back({l, tilded});
    return out;
}

std::set<ExtLabel> tilde_image(const std::set<ExtLabel>& s) {
    std::set<ExtLabel> out;
    for (const auto& x : s) out.insert(flip(x));
    return out;
}

}  // namespace

TEST_CASE("star on m2-cartan") {
    const Ctx ctx(load_corpus("m2-cartan"));
    const LabelId z = 0, p = 1, m = 2;

    CHECK(ctx.table.star(plain(p), plain(m)) == std::vector<LabelId>{z});
    CHECK(ctx.table.star(plain(p), plain(p)).empty());
    CHECK(ctx.table.star(tilde(p), plain(z)) == std::vector<LabelId>{m});
    // tilde against tilde is always empty
    for (LabelId a = 0; a < 3; ++a)
        for (LabelId b = 0; b < 3; ++b) CHECK(ctx.table.star(tilde(a), tilde(b)).empty());
}

TEST_CASE("star table refuses incoherent algebras") {
    const AlgebraDocument doc = make_doc(
        "incoherent", {{"s", 1}, {"t", 1}, {"u", 1}}, std::nullopt,
        {entry(0, 1, {{0, 1}})}, {entry(0, 1, {{2, 1}})});
    CHECK_THROWS_AS(StarTable::build(load_spec(doc)), std::invalid_argument);
}

TEST_CASE("propagation step on m2-cartan") {
    const Ctx ctx(load_corpus("m2-cartan"));
    const LabelId z = 0, p = 1, m = 2;

    CHECK(propagate(ctx.table, {}, plain(m)).empty());
    // p * m = {z} and the zero label is removed
    CHECK(propagate(ctx.table, {plain(p)}, plain(m)).empty());
    CHECK(propagate(ctx.table, {tilde(p)}, plain(z)) ==
          std::set<ExtLabel>{plain(m), tilde(m)});
    CHECK_THROWS_AS(propagate(ctx.table, {plain(z)}, plain(p)), std::invalid_argument);
    CHECK_THROWS_AS(propagate(ctx.table, {tilde(z)}, plain(p)), std::invalid_argument);
}

TEST_CASE("propagation is tilde-closed and distributes over unions") {
    for (const auto& [name, algebra] : corpus_suite()) {
        CAPTURE(name);
        const StarTable table = StarTable::build(algebra);
        std::mt19937 rng(3);
        const auto ext = all_ext(table);
        for (int round = 0; round < 40; ++round) {
            std::set<ExtLabel> omega1, omega2;
            for (const auto& x : ext) {
                if (table.zero_label() && x.base == *table.zero_label()) continue;
                if (rng() % 3 == 0) omega1.insert(x);
                if (rng() % 3 == 0) omega2.insert(x);
            }
            const ExtLabel a = ext[rng() % ext.size()];

            const auto p1 = propagate(table, omega1, a);
            CHECK(p1 == tilde_image(p1));

            std::set<ExtLabel> unioned = omega1;
            unioned.insert(omega2.begin(), omega2.end());
            std::set<ExtLabel> expect = p1;
            const auto p2 = propagate(table, omega2, a);
            expect.insert(p2.begin(), p2.end());
            CHECK(propagate(table, unioned, a) == expect);
        }
    }
}

TEST_CASE("second-bullet duality of star") {
    for (const auto& [name, algebra] : corpus_suite()) {
        CAPTURE(name);
        const StarTable table = StarTable::build(algebra);
        for (LabelId lam = 0; lam < table.label_count(); ++lam) {
            for (LabelId mu = 0; mu < table.label_count(); ++mu) {
                const auto lookup = table.star(plain(lam), tilde(mu));
                for (LabelId eta = 0; eta < table.label_count(); ++eta) {
                    const bool in_lookup =
                        std::find(lookup.begin(), lookup.end(), eta) != lookup.end();
                    const bool direct = table.plain(eta, mu) == lam;
                    CHECK(in_lookup == direct);
                }
            }
        }
    }
}

TEST_CASE("reachable sets of the corpus") {
    const Ctx m2(load_corpus("m2-cartan"));
    CHECK(reachable(m2.table, 1).closure ==
          std::set<ExtLabel>{plain(1), tilde(1), plain(2), tilde(2)});

    const Ctx heis(load_corpus("heis3"));
    CHECK(reachable(heis.table, 1).closure ==
          std::set<ExtLabel>{plain(1), tilde(1), plain(2), tilde(2)});

    const Ctx dbl(load_corpus("m2-double"));
    const auto r = reachable(dbl.table, 1);  // p1
    CHECK(r.closure == std::set<ExtLabel>{plain(1), tilde(1), plain(2), tilde(2)});

    CHECK_THROWS_AS(reachable(m2.table, 0), std::invalid_argument);   // zero label
    CHECK_THROWS_AS(reachable(m2.table, 9), std::invalid_argument);
}

TEST_CASE("connection witnesses") {
    const Ctx m2(load_corpus("m2-cartan"));
    const auto family = connection_family(m2.table, 1, 2);  // p to m
    REQUIRE(family.has_value());
    CHECK(*family == ConnectionFamily{tilde(1), plain(0)});
    CHECK(replay_family(m2.table, *family, 1, 2));

    const auto self = connection_family(m2.table, 2, 2);
    REQUIRE(self.has_value());
    CHECK(*self == ConnectionFamily{plain(2)});
    CHECK(replay_family(m2.table, *self, 2, 2));

    const Ctx dbl(load_corpus("m2-double"));
    CHECK(!connection_family(dbl.table, 1, 3).has_value());  // p1 vs p2

    CHECK_THROWS_AS(connection_family(m2.table, 0, 1), std::invalid_argument);
}

TEST_CASE("connection classes of the corpus") {
    const Ctx m2(load_corpus("m2-cartan"));
    CHECK(connection_classes(m2.table).classes ==
          std::vector<std::vector<LabelId>>{{1, 2}});

    const Ctx heis(load_corpus("heis3"));
    CHECK(connection_classes(heis.table).classes ==
          std::vector<std::vector<LabelId>>{{1, 2}});

    const Ctx dbl(load_corpus("m2-double"));
    CHECK(connection_classes(dbl.table).classes ==
          std::vector<std::vector<LabelId>>{{1, 2}, {3, 4}});
}

TEST_CASE("single-label algebra has an empty partition") {
    const GradedAlgebra a =
        load_spec(make_doc("just-zero", {{"z", 1}}, "z", {}, {}));
    const StarTable table = StarTable::build(a);
    CHECK(connection_classes(table).classes.empty());
}

TEST_CASE("stored witnesses replay") {
    for (const auto& [name, algebra] : corpus_suite()) {
        CAPTURE(name);
        const StarTable table = StarTable::build(algebra);
        const ConnectionPartition partition = connection_classes(table);
        for (const auto& [pair, family] : partition.witness)
            CHECK(replay_family(table, family, pair.first, pair.second));
    }
}

TEST_CASE("connection relation is an equivalence on the corpus") {
    for (const auto& [name, algebra] : corpus_suite()) {
        CAPTURE(name);
        const StarTable table = StarTable::build(algebra);
        std::vector<LabelId> support;
        for (LabelId l = 0; l < algebra.label_count(); ++l)
            if (!algebra.zero_label() || l != *algebra.zero_label()) support.push_back(l);
        std::map<LabelId, ReachableSet> reach;
        for (LabelId l : support) reach.emplace(l, reachable(table, l));
        for (LabelId lam : support) {
            CHECK(reach.at(lam).reaches(lam));
            for (LabelId mu : support) {
                CHECK(reach.at(lam).reaches(mu) == reach.at(mu).reaches(lam));
                for (LabelId tau : support)
                    if (reach.at(lam).reaches(mu) && reach.at(mu).reaches(tau))
                        CHECK(reach.at(lam).reaches(tau));
            }
        }
    }
}
