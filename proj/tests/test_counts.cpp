#include <catch2/catch_amalgamated.hpp>

#include "ortholab/counts.hpp"
#include "ortholab/sampling.hpp"

using namespace ortholab;
using namespace ortholab::counts;

TEST_CASE("expected dimensions") {
    for (long long g = 2; g <= 12; ++g) {
        CHECK(expected_dim_iq(4, 2, 0, 1 - g, g) == 0);
        CHECK(expected_dim_iq(3, 1, 0, 1 - g, g) == 0);
    }
    CHECK(expected_dim_iq(6, 3, 0, -3, 3) == 0);
    CHECK(expected_dim_iq(5, 2, 0, -6, 5) == 0);
    // positive expected dimension below the critical degree
    CHECK(expected_dim_iq(4, 2, 0, -5, 5) == 1);
    // odd rank requires an even value-line degree
    CHECK_THROWS_AS(expected_dim_iq(5, 2, 1, 0, 3), std::domain_error);
    CHECK_THROWS_AS(expected_dim_iq(4, 1, 0, 0, 3), std::domain_error);
}

TEST_CASE("zero-dimensional degrees") {
    CHECK_FALSE(zero_dim_degree(5, 0, 4).has_value());
    CHECK(*zero_dim_degree(5, 0, 5) == -6);
    for (long long g = 2; g <= 10; ++g) {
        CHECK(*zero_dim_degree(3, 0, g) == rat(1 - g));
        CHECK(*zero_dim_degree(4, 0, g) == rat(1 - g));
        CHECK(*zero_dim_degree(4, 2, g) == rat(3 - g));
    }
    CHECK_FALSE(zero_dim_degree(6, 0, 4).has_value());
    CHECK(*zero_dim_degree(6, 0, 5) == -6);
    CHECK(*zero_dim_degree(6, 3, 4) == 0);
    CHECK_THROWS_AS(zero_dim_degree(4, 1, 5), std::domain_error);
    CHECK_THROWS_AS(zero_dim_degree(5, 2, 5), std::domain_error);

    // wherever the table speaks, the expected dimension vanishes there
    for (long long g = 2; g <= 14; ++g)
        for (int r = 3; r <= 6; ++r)
            for (long long ell : {0LL, static_cast<long long>(r / 2)}) {
                if (r % 2 == 1 && ell != 0) continue;
                auto e = zero_dim_degree(r, ell, g);
                if (!e) continue;
                REQUIRE(e->get_den() == 1);
                CHECK(expected_dim_iq(r, r / 2, ell, e->get_num().get_si(), g) == 0);
            }
}

TEST_CASE("maximal line subbundle counts") {
    auto [c2, d2] = max_line_count(2, 3, 0);
    CHECK(c2 == 8);
    CHECK(d2 == -1);

    auto [c4, d4] = max_line_count(4, 5, 0);
    CHECK(c4 == int_pow(4, 5));
    CHECK(d4 == -3);

    auto [c3, d3] = max_line_count(3, 4, 0);
    CHECK(c3 == 81);
    CHECK(d3 == -2);

    CHECK_THROWS_AS(max_line_count(4, 4, 0), std::domain_error);
}

TEST_CASE("rank-4 tables") {
    auto a = count_rank4_planes(3, 0);
    REQUIRE(a.has_value());
    CHECK(a->kind == CountResult::Kind::finite);
    CHECK(a->count == 16);
    CHECK(a->max_degree == -2);

    auto b = count_rank4_planes(2, 0);
    REQUIRE(b.has_value());
    CHECK(b->kind == CountResult::Kind::infinite);
    CHECK(b->max_degree == -2);

    auto c = count_rank4_planes(2, 1);
    CHECK(c->kind == CountResult::Kind::finite);
    CHECK(c->count == 8);
    CHECK(c->max_degree == -1);

    auto d = count_rank4_planes(3, 1);
    CHECK(d->kind == CountResult::Kind::infinite);
    CHECK(d->max_degree == -3);

    auto tw = count_rank4_planes_twisted(4);
    CHECK(tw->count == 16);
    CHECK(tw->max_degree == -2);

    CHECK(count_rank4_lines(3)->count == 64);
    CHECK(count_rank4_lines(3)->max_degree == -2);
    CHECK(count_rank4_lines(5)->count == 1024);
    CHECK(count_rank4_lines(5)->max_degree == -4);
    CHECK_FALSE(count_rank4_lines(4).has_value());
}

TEST_CASE("rank-3 table") {
    CHECK(count_rank3_lines(2, 1)->count == 4);
    CHECK(count_rank3_lines(2, 1)->max_degree == -1);
    CHECK(count_rank3_lines(3, 0)->count == 8);
    CHECK(count_rank3_lines(3, 0)->max_degree == -2);
    CHECK_FALSE(count_rank3_lines(2, 0).has_value());
    CHECK_FALSE(count_rank3_lines(3, 1).has_value());
}

TEST_CASE("rank-6 tables") {
    auto a = count_rank6(5, Rank6Variant::rank3_w0);
    REQUIRE(a.has_value());
    CHECK(a->count == 2048);
    CHECK(a->max_degree == -6);
    CHECK_FALSE(count_rank6(4, Rank6Variant::rank3_w0).has_value());
    CHECK_FALSE(count_rank6(3, Rank6Variant::rank3_w0).has_value());

    auto b = count_rank6(3, Rank6Variant::rank3_w1);
    REQUIRE(b.has_value());
    CHECK(b->count == 128);
    CHECK(b->max_degree == -3);

    auto c = count_rank6(13, Rank6Variant::rank2_w0);
    REQUIRE(c.has_value());
    CHECK(c->count == int_pow(12, 13));
    CHECK(c->max_degree == -20);
    CHECK_FALSE(count_rank6(5, Rank6Variant::rank2_w0).has_value());

    auto d = count_rank6(2, Rank6Variant::lines_w0);
    REQUIRE(d.has_value());
    CHECK(d->count == 24);
    CHECK(d->max_degree == -1);

    auto e = count_rank6(2, Rank6Variant::rank3_odd_det);
    REQUIRE(e.has_value());
    CHECK(e->count == 16);
    CHECK(e->max_degree == 0);
    auto e4 = count_rank6(4, Rank6Variant::rank3_odd_det);
    CHECK(e4->count == 256);
    CHECK(e4->max_degree == -3);
    CHECK_FALSE(count_rank6(3, Rank6Variant::rank3_odd_det).has_value());
}

TEST_CASE("gaussian-rational line count identity") {
    CHECK(holla_sum(2) == 24);
    CHECK(holla_sum(3) == 288);
    for (long long g = 2; g <= 20; ++g) {
        Int expect = int_pow(2, static_cast<unsigned long>(3 * g - 1));
        Int corr = int_pow(2, static_cast<unsigned long>(2 * g - 1));
        if (g % 2 == 0)
            expect -= corr;
        else
            expect += corr;
        CHECK(holla_sum(g) == expect);
    }
}

TEST_CASE("rank-5 line table") {
    CHECK(count_rank5_lines(2, 0).count == 16);
    CHECK(count_rank5_lines(2, 0).max_degree == -1);
    CHECK(count_rank5_lines(2, 1).count == 20);
    CHECK(count_rank5_lines(3, 0).count == 112);
    CHECK(count_rank5_lines(3, 1).count == 104);
    CHECK(count_rank5_lines(3, 0).max_degree == -2);
}

TEST_CASE("conjectural rank-5 plane count is flagged") {
    auto c = count_rank5_planes_conjectural(5, 0);
    REQUIRE(c.has_value());
    CHECK(c->count == 1024);
    CHECK(c->max_degree == -6);
    CHECK(c->conjectural);
    CHECK_FALSE(count_rank5_planes_conjectural(5, 1).has_value());
    CHECK(count_rank5_planes_conjectural(3, 1).has_value());
}

TEST_CASE("finite counts sit at expected dimension zero") {
    for (long long g = 2; g <= 10; ++g) {
        std::vector<std::optional<CountResult>> rows = {
            count_rank4_planes(g, 0), count_rank4_planes(g, 1), count_rank4_planes_twisted(g),
            count_rank3_lines(g, 0),  count_rank3_lines(g, 1),
            count_rank6(g, Rank6Variant::rank3_w0), count_rank6(g, Rank6Variant::rank3_w1),
            count_rank6(g, Rank6Variant::rank3_odd_det),
            count_rank5_planes_conjectural(g, 0), count_rank5_planes_conjectural(g, 1)};
        for (const auto& row : rows) {
            if (!row) continue;
            if (row->sub_rank != row->rank / 2) continue;
            REQUIRE(row->max_degree.get_den() == 1);
            long long e = row->max_degree.get_num().get_si();
            long long dim = expected_dim_iq(row->rank, row->rank / 2, row->ell, e, g);
            if (row->kind == CountResult::Kind::finite)
                CHECK(dim == 0);
            else
                CHECK(dim > 0);
        }
    }
}

TEST_CASE("parity rules") {
    auto rep = parity_rules(4, 0, 1);
    CHECK(rep.single_parity);
    CHECK(rep.w2 == 1);
    CHECK(rep.rank4_rule);

    auto rep2 = parity_rules(6, 1, 0);
    CHECK(rep2.both_parities);
    CHECK_FALSE(rep2.single_parity);

    CHECK(rank3_line_parity_ok(-2, 0, 0));
    CHECK_FALSE(rank3_line_parity_ok(1, 0, 0));
}

TEST_CASE("hirschowitz bound tops the isotropic maximum") {
    CHECK(hirschowitz_rank2_bound(4) == -4);
    CHECK(rank6_isotropic_rank2_max(4) == -5);
    CHECK(hirschowitz_rank2_bound(2) == Rat(-4) / 3);
    for (long long g = 2; g <= 20; ++g)
        CHECK(hirschowitz_rank2_bound(g) > rank6_isotropic_rank2_max(g));
}

TEST_CASE("dimension crosschecks on random parameters") {
    SplitMix64 rng(606);
    for (int i = 0; i < 100; ++i) {
        long long g = 2 + static_cast<long long>(rng.below(25));
        long long ell = static_cast<long long>(rng.below(11)) - 5;
        long long e = static_cast<long long>(rng.below(41)) - 20;
        long long d1 = static_cast<long long>(rng.below(11)) - 5;
        CHECK(crosscheck_rank4(g, ell, e, d1));

        long long m = static_cast<long long>(rng.below(9)) - 4;
        long long d = static_cast<long long>(rng.below(11)) - 5;
        CHECK(crosscheck_rank3(g, m, e, d));

        CHECK(crosscheck_rank6(g, ell, d));
    }
    for (long long g = 2; g <= 20; ++g) CHECK(rank6_rank2_degree_decomposition(g));
}

TEST_CASE("query dispatch routes to the tables") {
    CountQuery q{4, 3, 0, 0, 2};
    auto r = count_query(q);
    REQUIRE(r.has_value());
    CHECK(r->count == 16);
    CHECK(count_query({4, 4, 1, 0, 2})->count == 16);
    CHECK(count_query({6, 2, 0, 0, 1})->count == 24);
    CHECK(count_query({5, 5, 0, 0, 2})->conjectural);
    CHECK_FALSE(count_query({3, 2, 0, 0, 1}).has_value());
    CHECK_THROWS_AS(count_query({6, 5, 1, 1, 3}), std::domain_error);
    CHECK_THROWS_AS(count_query({2, 5, 0, 0, 1}), std::domain_error);
}

TEST_CASE("doubling across neighboring ranks") {
    for (long long g = 2; g <= 20; ++g) {
        auto rep = conjecture_checks(g);
        if (g % 2 == 1) {
            CHECK(rep.pair43_applicable);
            CHECK(rep.pair43_holds);
        } else {
            CHECK_FALSE(rep.pair43_applicable);
        }
        if (g % 4 == 1) {
            CHECK(rep.pair65_applicable);
            CHECK(rep.pair65_holds);
            CHECK(rep.pair65_conjectural);
        } else {
            CHECK_FALSE(rep.pair65_applicable);
        }
    }
}
