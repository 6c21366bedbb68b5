#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "emo/scores.hpp"
#include "oracles.hpp"

using namespace emo;

namespace {

const ObjectiveSpace min2 = ObjectiveSpace::minimize(2);
const std::vector<oracle::Vec> kSample{{1, 4}, {2, 3}, {3, 2}, {2, 4}, {4, 4}};

std::vector<double> fitness_of(const Population& pop) {
    std::vector<double> out;
    for (const auto& x : pop)
        out.push_back(*x.fitness);
    return out;
}

} // namespace

TEST_CASE("dominance rank") {
    Population pop = oracle::population_from(kSample);
    assign_dominance_rank(pop, min2, rel::Pareto{});
    CHECK(*pop[0].fitness == 0);  // (1,4) is nondominated
    CHECK(*pop[3].fitness == -2); // (2,4) is dominated by (1,4) and (2,3)
    CHECK(*pop[4].fitness == -4); // (4,4) is dominated by everything else
}

TEST_CASE("dominance rank matches brute force on random populations") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 30; ++iter) {
        ObjectiveSpace space = oracle::random_space(3, rng);
        std::vector<oracle::Vec> pts;
        for (int i = 0; i < 40; ++i)
            pts.push_back(oracle::random_vector(3, rng));
        Population pop = oracle::population_from(pts);
        assign_dominance_rank(pop, space, rel::Pareto{});
        for (std::size_t i = 0; i < pts.size(); ++i) {
            long r = 0;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (oracle::dominates(pts[j], pts[i], space))
                    ++r;
            CHECK(*pop[i].fitness == -static_cast<double>(r));
        }
    }
}

TEST_CASE("dominance count") {
    Population pop = oracle::population_from(kSample);
    assign_dominance_count(pop, min2, rel::Pareto{});
    CHECK(*pop[1].fitness == 2); // (2,3) dominates (2,4) and (4,4)
    CHECK(*pop[4].fitness == 0);

    Population singleton = oracle::population_from({{1, 1}});
    assign_dominance_count(singleton, min2, rel::Pareto{});
    CHECK(*singleton[0].fitness == 0);
}

TEST_CASE("dominance depth fronts") {
    Population pop = oracle::population_from(kSample);
    FrontPartition fronts = assign_dominance_depth(pop, min2, rel::Pareto{});
    REQUIRE(fronts.size() == 3);
    CHECK(fronts[0] == std::vector<std::size_t>{0, 1, 2});
    CHECK(fronts[1] == std::vector<std::size_t>{3});
    CHECK(fronts[2] == std::vector<std::size_t>{4});
    CHECK(fitness_of(pop) == std::vector<double>{0, 0, 0, -1, -2});

    SUBCASE("mutually incomparable set is one front") {
        Population flat = oracle::population_from({{1, 4}, {2, 3}, {3, 2}, {4, 1}});
        CHECK(assign_dominance_depth(flat, min2, rel::Pareto{}).size() == 1);
    }
    SUBCASE("chain gives singleton fronts") {
        Population chain = oracle::population_from({{1, 1}, {2, 2}, {3, 3}, {4, 4}});
        FrontPartition f = assign_dominance_depth(chain, min2, rel::Pareto{});
        REQUIRE(f.size() == 4);
        for (const auto& layer : f)
            CHECK(layer.size() == 1);
    }
}

TEST_CASE("dominance depth equals the peeling oracle and bounds the rank") {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<std::size_t> size_dist(2, 120);
        std::uniform_int_distribution<std::size_t> obj_dist(2, 4);
        std::size_t n_obj = obj_dist(rng);
        ObjectiveSpace space = oracle::random_space(n_obj, rng);
        std::vector<oracle::Vec> pts;
        std::size_t n = size_dist(rng);
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(oracle::random_vector(n_obj, rng, 0.0, 1.0));
        Population pop = oracle::population_from(pts);
        FrontPartition fronts = assign_dominance_depth(pop, space, rel::Pareto{});
        auto expected = oracle::peel_fronts(pts, space);
        REQUIRE(fronts.size() == expected.size());
        for (std::size_t f = 0; f < fronts.size(); ++f) {
            auto got = fronts[f];
            auto want = expected[f];
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
        // front index <= raw dominance rank
        Population ranked = oracle::population_from(pts);
        assign_dominance_rank(ranked, space, rel::Pareto{});
        for (std::size_t f = 0; f < fronts.size(); ++f)
            for (std::size_t i : fronts[f])
                CHECK(static_cast<double>(f) <= -*ranked[i].fitness);
    }
}

TEST_CASE("spea2 fitness hand example") {
    Population pop = oracle::population_from({{1, 1}, {2, 2}});
    Population archive;
    assign_spea2_fitness(pop, archive, min2, rel::Pareto{});
    double d = 1.0 / (std::sqrt(2.0) + 2.0);
    CHECK(*pop[0].fitness == doctest::Approx(-d));
    CHECK(*pop[1].fitness == doctest::Approx(-(1.0 + d)));

    SUBCASE("mutually incomparable: ordering decided by density alone") {
        Population flat = oracle::population_from({{0, 10}, {1, 9}, {1.1, 8.9}, {10, 0}});
        Population none;
        assign_spea2_fitness(flat, none, min2, rel::Pareto{});
        for (const auto& x : flat)
            CHECK(*x.fitness > -1.0); // raw part is zero everywhere
        // the clustered points are more dense, so score worse than (10,0)
        CHECK(*flat[3].fitness > *flat[2].fitness);
    }
    SUBCASE("singleton union") {
        Population one = oracle::population_from({{3, 3}});
        Population none;
        assign_spea2_fitness(one, none, min2, rel::Pareto{});
        CHECK(*one[0].fitness == 0.0);
    }
    SUBCASE("archive members are scored too") {
        Population p = oracle::population_from({{1, 1}});
        Population a = oracle::population_from({{2, 2}});
        assign_spea2_fitness(p, a, min2, rel::Pareto{});
        CHECK(*p[0].fitness == doctest::Approx(-d));
        CHECK(*a[0].fitness == doctest::Approx(-(1.0 + d)));
    }
}

TEST_CASE("indicator-based fitness") {
    SUBCASE("dominating member scores higher") {
        Population pop = oracle::population_from({{0, 0}, {1, 1}});
        assign_indicator_fitness(pop, min2, AdditiveEpsilonIndicator{}, 0.05);
        // normalized points are (0,0) and (1,1); I((1,1),(0,0)) = 1, I((0,0),(1,1)) = -1
        CHECK(*pop[0].fitness == doctest::Approx(-std::exp(-1.0 / 0.05)));
        CHECK(*pop[1].fitness == doctest::Approx(-std::exp(1.0 / 0.05)));
        CHECK(*pop[0].fitness > *pop[1].fitness);
    }
    SUBCASE("singleton population") {
        Population pop = oracle::population_from({{4, 2}});
        assign_indicator_fitness(pop, min2, AdditiveEpsilonIndicator{}, 0.05);
        CHECK(*pop[0].fitness == 0.0);
    }
    SUBCASE("duplicates get equal fitness") {
        Population pop = oracle::population_from({{1, 2}, {1, 2}, {0, 3}});
        assign_indicator_fitness(pop, min2, AdditiveEpsilonIndicator{}, 0.05);
        CHECK(*pop[0].fitness == *pop[1].fitness);
    }
    SUBCASE("kappa must be positive") {
        Population pop = oracle::population_from({{1, 2}});
        CHECK_THROWS_AS(assign_indicator_fitness(pop, min2, AdditiveEpsilonIndicator{}, 0.0),
                        std::invalid_argument);
    }
    SUBCASE("ordering is translation invariant") {
        std::mt19937_64 rng(23);
        std::vector<oracle::Vec> pts;
        for (int i = 0; i < 15; ++i)
            pts.push_back(oracle::random_vector(2, rng));
        Population pop = oracle::population_from(pts);
        assign_indicator_fitness(pop, min2, AdditiveEpsilonIndicator{}, 0.05);
        std::vector<oracle::Vec> shifted = pts;
        for (auto& p : shifted)
            for (auto& x : p)
                x += 17.25;
        Population pop2 = oracle::population_from(shifted);
        assign_indicator_fitness(pop2, min2, AdditiveEpsilonIndicator{}, 0.05);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j)
                CHECK((*pop[i].fitness < *pop[j].fitness) ==
                      (*pop2[i].fitness < *pop2[j].fitness));
    }
}

TEST_CASE("achievement scalarizing fitness") {
    ObjectiveVector ref{3, 3};
    std::vector<double> w{1, 1};
    SUBCASE("reference point scores zero") {
        Population pop = oracle::population_from({{3, 3}, {4, 3}, {1, 1}});
        assign_achievement_scalarizing(pop, min2, w, ref, 0.0);
        CHECK(*pop[0].fitness == 0.0);
        CHECK(*pop[1].fitness == -1.0);
        CHECK(*pop[2].fitness == 2.0);
    }
    SUBCASE("scaling all weights rescales fitness, preserving order") {
        std::mt19937_64 rng(24);
        std::vector<oracle::Vec> pts;
        for (int i = 0; i < 10; ++i)
            pts.push_back(oracle::random_vector(2, rng));
        Population a = oracle::population_from(pts);
        Population b = oracle::population_from(pts);
        assign_achievement_scalarizing(a, min2, {1, 1}, ref, 0.01);
        assign_achievement_scalarizing(b, min2, {3, 3}, ref, 0.01);
        for (std::size_t i = 0; i < pts.size(); ++i)
            CHECK(*b[i].fitness == doctest::Approx(3.0 * *a[i].fitness));
    }
    SUBCASE("weights must be positive") {
        Population pop = oracle::population_from({{1, 1}});
        CHECK_THROWS_AS(assign_achievement_scalarizing(pop, min2, {1, 0}, ref, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("crowding distances") {
    Population pop = oracle::population_from({{1, 4}, {2, 3}, {3, 2}});
    FrontPartition fronts{{0, 1, 2}};
    assign_crowding(pop, min2, fronts);
    CHECK(*pop[0].diversity == std::numeric_limits<double>::infinity());
    CHECK(*pop[2].diversity == std::numeric_limits<double>::infinity());
    CHECK(*pop[1].diversity == doctest::Approx(2.0));

    SUBCASE("two-point front is all infinite") {
        Population two = oracle::population_from({{1, 4}, {2, 3}});
        assign_crowding(two, min2, {{0, 1}});
        CHECK(*two[0].diversity == std::numeric_limits<double>::infinity());
        CHECK(*two[1].diversity == std::numeric_limits<double>::infinity());
    }
    SUBCASE("not a partition") {
        Population two = oracle::population_from({{1, 4}, {2, 3}});
        CHECK_THROWS_AS(assign_crowding(two, min2, {{0}}), std::invalid_argument);
        CHECK_THROWS_AS(assign_crowding(two, min2, {{0, 1, 1}}), std::invalid_argument);
    }
    SUBCASE("permutation invariance and duplicate equality") {
        std::mt19937_64 rng(25);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<oracle::Vec> pts;
            for (int i = 0; i < 12; ++i)
                pts.push_back(oracle::random_vector(2, rng, 0.0, 1.0));
            pts.push_back(pts[0]); // forced duplicate
            Population a = oracle::population_from(pts);
            FrontPartition fa = assign_dominance_depth(a, min2, rel::Pareto{});
            assign_crowding(a, min2, fa);
            CHECK(*a[0].diversity == *a[pts.size() - 1].diversity);

            std::vector<std::size_t> perm(pts.size());
            std::iota(perm.begin(), perm.end(), 0u);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<oracle::Vec> shuffled;
            for (std::size_t i : perm)
                shuffled.push_back(pts[i]);
            Population b = oracle::population_from(shuffled);
            FrontPartition fb = assign_dominance_depth(b, min2, rel::Pareto{});
            assign_crowding(b, min2, fb);
            for (std::size_t i = 0; i < perm.size(); ++i)
                CHECK(*b[i].diversity == *a[perm[i]].diversity);
        }
    }
}

TEST_CASE("sharing niche counts") {
    SUBCASE("isolated point") {
        Population pop = oracle::population_from({{0, 0}, {100, 100}});
        assign_sharing(pop, min2, 1.0, 1.0);
        CHECK(*pop[0].diversity == -1.0);
        CHECK(*pop[1].diversity == -1.0);
    }
    SUBCASE("coincident points") {
        Population pop = oracle::population_from({{1, 1}, {1, 1}});
        assign_sharing(pop, min2, 1.0, 1.0);
        CHECK(*pop[0].diversity == -2.0);
    }
    SUBCASE("half-sigma distance") {
        Population pop = oracle::population_from({{0, 0}, {0.5, 0}});
        assign_sharing(pop, min2, 1.0, 1.0);
        CHECK(*pop[0].diversity == doctest::Approx(-1.5));
        CHECK(*pop[1].diversity == doctest::Approx(-1.5));
    }
}

TEST_CASE("k-nearest-neighbor density") {
    SUBCASE("pair") {
        Population pop = oracle::population_from({{0, 0}, {3, 4}});
        assign_knn_density(pop, min2, 1);
        CHECK(*pop[0].diversity == doctest::Approx(5.0));
        CHECK(*pop[1].diversity == doctest::Approx(5.0));
    }
    SUBCASE("collinear equally spaced") {
        Population pop = oracle::population_from({{0, 0}, {1, 0}, {2, 0}});
        assign_knn_density(pop, min2, 1);
        CHECK(*pop[0].diversity == doctest::Approx(1.0));
        CHECK(*pop[1].diversity == doctest::Approx(1.0));
        CHECK(*pop[2].diversity == doctest::Approx(1.0));
    }
    SUBCASE("k clamps to population size minus one") {
        Population pop = oracle::population_from({{0, 0}, {1, 0}, {2, 0}});
        assign_knn_density(pop, min2, 10);
        CHECK(*pop[0].diversity == doctest::Approx(2.0));
    }
    SUBCASE("too small population") {
        Population pop = oracle::population_from({{0, 0}});
        CHECK_THROWS_AS(assign_knn_density(pop, min2, 1), std::invalid_argument);
    }
}

TEST_CASE("assignment passes never touch genotypes or objectives") {
    std::mt19937_64 rng(26);
    std::vector<oracle::Vec> pts;
    for (int i = 0; i < 10; ++i)
        pts.push_back(oracle::random_vector(2, rng));
    Population pop = oracle::population_from(pts);
    Population before = pop;
    assign_scores(pop, min2, fitness::DominanceDepth{}, diversity::Crowding{});
    assign_scores(pop, min2, fitness::IndicatorBased{}, diversity::NearestNeighbor{});
    for (std::size_t i = 0; i < pop.size(); ++i) {
        CHECK(pop[i].genotype == before[i].genotype);
        CHECK(*pop[i].objectives == *before[i].objectives);
    }
}

TEST_CASE("invalid members are rejected") {
    Population pop = oracle::population_from({{1, 1}, {2, 2}});
    pop[1].invalidate();
    CHECK_THROWS_AS(assign_dominance_rank(pop, min2, rel::Pareto{}), std::invalid_argument);
    CHECK_THROWS_AS(assign_dominance_depth(pop, min2, rel::Pareto{}), std::invalid_argument);
    CHECK_THROWS_AS(assign_sharing(pop, min2, 1.0, 1.0), std::invalid_argument);
}
