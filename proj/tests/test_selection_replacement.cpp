#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "emo/replacement.hpp"
#include "emo/scores.hpp"
#include "emo/selection.hpp"
#include "oracles.hpp"

using namespace emo;

namespace {

const ObjectiveSpace min2 = ObjectiveSpace::minimize(2);

// Population of n individuals with fitness n-1, n-2, ..., 0 (index 0 best)
// and zero diversity; objectives tag each member with its index.
Population scored_population(std::size_t n) {
    Population pop;
    for (std::size_t i = 0; i < n; ++i) {
        Individual ind;
        ind.genotype = BitVector{{true}};
        ind.objectives = ObjectiveVector{static_cast<double>(i), 0.0};
        ind.fitness = static_cast<double>(n - 1 - i);
        ind.diversity = 0.0;
        ind.valid = true;
        pop.push_back(std::move(ind));
    }
    return pop;
}

std::size_t tag_of(const Individual& ind) {
    return static_cast<std::size_t>((*ind.objectives)[0]);
}

std::vector<std::size_t> draw_histogram(const Population& pop, const Population* archive,
                                        const SelectionScheme& scheme, std::size_t draws,
                                        Rng& rng) {
    std::vector<std::size_t> counts(pop.size() + (archive ? archive->size() : 0), 0);
    for (std::size_t i = 0; i < draws; ++i)
        ++counts[tag_of(select(pop, archive, scheme, rng))];
    return counts;
}

// 3-sigma band for a binomial count.
bool within_band(double count, double n, double p) {
    double sigma = std::sqrt(n * p * (1.0 - p));
    return std::abs(count - n * p) <= 3.0 * sigma;
}

} // namespace

TEST_CASE("random selection is uniform") {
    Population pop = scored_population(4);
    Rng rng(31);
    auto counts = draw_histogram(pop, nullptr, select_scheme::Random{}, 10000, rng);
    for (std::size_t c : counts)
        CHECK(within_band(static_cast<double>(c), 10000, 0.25));
}

TEST_CASE("deterministic binary tournament matches its sampling distribution") {
    // With replacement over K individuals of distinct fitness, the i-th best
    // (0-based) wins a binary tournament with probability ((K-i)^2-(K-i-1)^2)/K^2.
    const std::size_t k = 4;
    Population pop = scored_population(k);
    Rng rng(32);
    auto counts =
        draw_histogram(pop, nullptr, select_scheme::DeterministicTournament{2}, 20000, rng);
    for (std::size_t i = 0; i < k; ++i) {
        double better = static_cast<double>(k - i);
        double p = (better * better - (better - 1) * (better - 1)) / (k * k);
        CHECK(within_band(static_cast<double>(counts[i]), 20000, p));
    }
}

TEST_CASE("larger tournaments concentrate on the best") {
    Population pop = scored_population(5);
    Rng rng(33);
    auto m2 = draw_histogram(pop, nullptr, select_scheme::DeterministicTournament{2}, 10000, rng);
    auto m5 = draw_histogram(pop, nullptr, select_scheme::DeterministicTournament{5}, 10000, rng);
    CHECK(m5[0] > m2[0]);
    // selection pressure is monotone in fitness for both
    for (std::size_t i = 0; i + 1 < pop.size(); ++i) {
        CHECK(m2[i] > m2[i + 1]);
        CHECK(m5[i] >= m5[i + 1]);
    }
}

TEST_CASE("stochastic binary tournament boundaries") {
    Population pop = scored_population(4);
    SUBCASE("p = 0.5 degenerates to uniform") {
        Rng rng(34);
        auto counts = draw_histogram(
            pop, nullptr, select_scheme::StochasticBinaryTournament{0.5}, 10000, rng);
        for (std::size_t c : counts)
            CHECK(within_band(static_cast<double>(c), 10000, 0.25));
    }
    SUBCASE("p = 1 matches the deterministic binary tournament distribution") {
        Rng rng(35);
        auto counts = draw_histogram(
            pop, nullptr, select_scheme::StochasticBinaryTournament{1.0}, 20000, rng);
        for (std::size_t i = 0; i < 4; ++i) {
            double better = static_cast<double>(4 - i);
            double p = (better * better - (better - 1) * (better - 1)) / 16.0;
            CHECK(within_band(static_cast<double>(counts[i]), 20000, p));
        }
    }
    SUBCASE("p outside [0.5, 1] is rejected") {
        Rng rng(36);
        CHECK_THROWS_AS(select(pop, nullptr,
                               select_scheme::StochasticBinaryTournament{0.49}, rng),
                        std::invalid_argument);
        CHECK_THROWS_AS(select(pop, nullptr,
                               select_scheme::StochasticBinaryTournament{1.01}, rng),
                        std::invalid_argument);
    }
}

TEST_CASE("selection argument validation") {
    Rng rng(37);
    Population pop = scored_population(3);
    Population empty;
    CHECK_THROWS_AS(select(empty, nullptr, select_scheme::Random{}, rng), std::invalid_argument);
    CHECK_THROWS_AS(select(pop, nullptr, select_scheme::DeterministicTournament{1}, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(select(pop, nullptr, select_scheme::Elitist{}, rng), std::invalid_argument);
    Population archive = scored_population(2);
    CHECK_THROWS_AS(select(pop, &archive, select_scheme::Elitist{-0.1}, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(select(pop, &archive, select_scheme::Elitist{1.1}, rng),
                    std::invalid_argument);
}

TEST_CASE("selection throws on unscored members") {
    Rng rng(38);
    Population pop = scored_population(3);
    pop[1].fitness.reset();
    CHECK_THROWS_AS(select(pop, nullptr, select_scheme::DeterministicTournament{3}, rng),
                    std::logic_error);
}

TEST_CASE("elitist selection splits between archive and population") {
    Population pop = scored_population(3);      // tags 0..2
    Population archive = scored_population(6);  // tags 0..5; we use tags >= 3 as markers
    archive.erase(archive.begin(), archive.begin() + 3);
    Rng rng(39);
    auto from_archive = [](std::size_t tag) { return tag >= 3; };

    SUBCASE("p_archive = 1 draws only from a nonempty archive") {
        for (int i = 0; i < 200; ++i)
            CHECK(from_archive(tag_of(select(pop, &archive, select_scheme::Elitist{1.0}, rng))));
    }
    SUBCASE("p_archive = 0 never touches the archive") {
        for (int i = 0; i < 200; ++i)
            CHECK_FALSE(
                from_archive(tag_of(select(pop, &archive, select_scheme::Elitist{0.0}, rng))));
    }
    SUBCASE("empty archive falls back to the population") {
        Population none;
        for (int i = 0; i < 200; ++i)
            CHECK_FALSE(
                from_archive(tag_of(select(pop, &none, select_scheme::Elitist{1.0}, rng))));
    }
    SUBCASE("intermediate p_archive splits near the expected rate") {
        std::size_t archive_draws = 0;
        const int n = 10000;
        for (int i = 0; i < n; ++i)
            if (from_archive(tag_of(select(pop, &archive, select_scheme::Elitist{0.3}, rng))))
                ++archive_draws;
        CHECK(within_band(static_cast<double>(archive_draws), n, 0.3));
    }
}

TEST_CASE("comparison key breaks ties by diversity then index") {
    Population pop = scored_population(3);
    for (auto& x : pop)
        x.fitness = 1.0;
    pop[2].diversity = 5.0;
    CHECK(key_best_index(pop) == 2);
    pop[2].diversity = 0.0;
    CHECK(key_best_index(pop) == 0);
    CHECK(key_worst_index(pop) == 2);
}

TEST_CASE("generational replacement") {
    Population parents = scored_population(4);
    Population offspring = scored_population(4);
    Population out = replace(parents, offspring, replace_scheme::Generational{}, 4, nullptr);
    REQUIRE(out.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(tag_of(out[i]) == tag_of(offspring[i]));
    CHECK_THROWS_AS(replace(parents, offspring, replace_scheme::Generational{}, 3, nullptr),
                    std::invalid_argument);
}

TEST_CASE("one-shot elitist keeps the key-best n of the union") {
    Population parents = oracle::population_from({{0, 3}, {3, 0}});
    Population offspring = oracle::population_from({{1, 1}, {4, 4}});
    Refit refit = [](Population& pool) {
        assign_dominance_rank(pool, min2, rel::Pareto{});
        for (auto& x : pool)
            x.diversity = 0.0;
    };
    Population out = replace(parents, offspring, replace_scheme::OneShotElitist{}, 3, refit);
    REQUIRE(out.size() == 3);
    // (4,4) is the only dominated point and must be dropped
    for (const auto& x : out)
        CHECK(*x.objectives != ObjectiveVector{4, 4});
}

TEST_CASE("elitist replacement argument validation") {
    Population parents = scored_population(2);
    Population offspring = scored_population(2);
    Refit noop = [](Population&) {};
    CHECK_THROWS_AS(replace(parents, offspring, replace_scheme::OneShotElitist{}, 5, noop),
                    std::invalid_argument);
    CHECK_THROWS_AS(replace(parents, offspring, replace_scheme::IterativeElitist{}, 2, nullptr),
                    std::invalid_argument);
}

TEST_CASE("one-shot and iterative elitist coincide under a score-preserving refit") {
    std::mt19937_64 orng(40);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<oracle::Vec> pv, ov;
        for (int i = 0; i < 6; ++i)
            pv.push_back(oracle::random_vector(2, orng));
        for (int i = 0; i < 6; ++i)
            ov.push_back(oracle::random_vector(2, orng));
        Population parents = oracle::population_from(pv);
        Population offspring = oracle::population_from(ov);
        // fixed scores derived from the objectives; re-running never changes them
        Refit refit = [](Population& pool) {
            for (auto& x : pool) {
                x.fitness = -(*x.objectives)[0];
                x.diversity = -(*x.objectives)[1];
            }
        };
        Population a = replace(parents, offspring, replace_scheme::OneShotElitist{}, 5, refit);
        Population b = replace(parents, offspring, replace_scheme::IterativeElitist{}, 5, refit);
        REQUIRE(a.size() == b.size());
        std::vector<oracle::Vec> av, bv;
        for (const auto& x : a)
            av.push_back(*x.objectives);
        for (const auto& x : b)
            bv.push_back(*x.objectives);
        std::sort(av.begin(), av.end());
        std::sort(bv.begin(), bv.end());
        CHECK(av == bv);
    }
}

TEST_CASE("iterative elitist matches an independent step-by-step oracle") {
    std::mt19937_64 orng(41);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<oracle::Vec> pv, ov;
        for (int i = 0; i < 4; ++i)
            pv.push_back(oracle::random_vector(2, orng));
        for (int i = 0; i < 4; ++i)
            ov.push_back(oracle::random_vector(2, orng));
        Population parents = oracle::population_from(pv);
        Population offspring = oracle::population_from(ov);
        Refit refit = [](Population& pool) {
            assign_dominance_rank(pool, min2, rel::Pareto{});
            assign_sharing(pool, min2, 2.0, 1.0);
        };
        Population got = replace(parents, offspring, replace_scheme::IterativeElitist{}, 3, refit);

        // oracle: re-derive the whole procedure over bare objective vectors
        std::vector<oracle::Vec> pool = pv;
        pool.insert(pool.end(), ov.begin(), ov.end());
        auto score = [&](const std::vector<oracle::Vec>& pts) {
            std::vector<std::pair<double, double>> keys;
            for (const auto& p : pts) {
                double rank = 0;
                for (const auto& q : pts)
                    if (oracle::dominates(q, p, min2))
                        rank += 1;
                double nc = 0;
                for (const auto& q : pts) {
                    double d = std::hypot(p[0] - q[0], p[1] - q[1]);
                    if (d < 2.0)
                        nc += 1.0 - d / 2.0;
                }
                keys.emplace_back(-rank, -nc);
            }
            return keys;
        };
        while (pool.size() > 3) {
            auto keys = score(pool);
            std::size_t worst = 0;
            // lower index wins ties, so the worst of a tie set is the last one
            for (std::size_t i = 1; i < pool.size(); ++i)
                if (keys[i] <= keys[worst])
                    worst = i;
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(worst));
        }
        std::vector<oracle::Vec> gv;
        for (const auto& x : got)
            gv.push_back(*x.objectives);
        std::sort(gv.begin(), gv.end());
        std::sort(pool.begin(), pool.end());
        CHECK(gv == pool);
    }
}
