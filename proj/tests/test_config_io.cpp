#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "emo/config.hpp"
#include "emo/errors.hpp"
#include "emo/front_io.hpp"

using namespace emo;

TEST_CASE("front files round-trip") {
    Front f{{{0.5, 1.5}, {1.0 / 3.0, 2.0}, {1e-17, 123456.789}},
            ObjectiveSpace::minimize(2)};
    Front g = parse_front(format_front(f));
    CHECK(g.points == f.points);
    CHECK(g.space == f.space);

    SUBCASE("mixed senses survive the header") {
        Front m{{{1, 2}}, ObjectiveSpace{{Sense::Maximize, Sense::Minimize}}};
        Front back = parse_front(format_front(m));
        CHECK(back.space == m.space);
        CHECK(back.points == m.points);
    }
    SUBCASE("file round-trip") {
        std::string path = "test_front_tmp.front";
        write_front(f, path);
        Front back = read_front(path);
        CHECK(back.points == f.points);
        std::remove(path.c_str());
    }
}

TEST_CASE("front parsing") {
    SUBCASE("headerless input assumes minimization") {
        Front f = parse_front("1 2\n3 4\n");
        CHECK(f.points == std::vector<ObjectiveVector>{{1, 2}, {3, 4}});
        CHECK(f.space == ObjectiveSpace::minimize(2));
    }
    SUBCASE("comments and blank lines are skipped") {
        Front f = parse_front("# a comment\n\n1 2\n# another\n3 4\n");
        CHECK(f.points.size() == 2);
    }
    SUBCASE("malformed real names the line") {
        try {
            parse_front("1 2\n1.0 abc\n", "input.front");
            FAIL("expected throw");
        } catch (const ConfigError& e) {
            std::string msg = e.what();
            CHECK(msg.find("input.front:2") != std::string::npos);
        }
    }
    SUBCASE("inconsistent field count rejected") {
        CHECK_THROWS_AS(parse_front("1 2\n1 2 3\n"), ConfigError);
    }
    SUBCASE("non-finite value rejected") {
        CHECK_THROWS_AS(parse_front("1 inf\n"), ConfigError);
        CHECK_THROWS_AS(parse_front("1 nan\n"), ConfigError);
    }
    SUBCASE("missing file is an I/O error") {
        CHECK_THROWS_AS(read_front("no_such.front"), IoError);
    }
}

TEST_CASE("experiment config parsing") {
    SUBCASE("round-trip is the identity") {
        std::string text = "algorithm = nsga2\n"
                           "problem = zdt1\n"
                           "zdt.d = 30\n"
                           "population = 100\n"
                           "seed = 42\n"
                           "max_generations = 100\n";
        ExperimentConfig c = parse_experiment_config(text);
        ExperimentConfig c2 = parse_experiment_config(serialize_experiment_config(c));
        CHECK(c == c2);
        CHECK(serialize_experiment_config(c) == serialize_experiment_config(c2));
    }
    SUBCASE("unknown key names its line") {
        try {
            parse_experiment_config("algorithm = nsga2\nfoo = 1\n", "exp.cfg");
            FAIL("expected throw");
        } catch (const ConfigError& e) {
            std::string msg = e.what();
            CHECK(msg.find("exp.cfg:2") != std::string::npos);
            CHECK(msg.find("foo") != std::string::npos);
        }
    }
    SUBCASE("duplicate key rejected") {
        CHECK_THROWS_AS(parse_experiment_config("seed = 1\nseed = 2\n"), ConfigError);
    }
    SUBCASE("empty value rejected") {
        CHECK_THROWS_AS(parse_experiment_config("seed =\n"), ConfigError);
    }
    SUBCASE("missing equals sign rejected") {
        CHECK_THROWS_AS(parse_experiment_config("seed 1\n"), ConfigError);
    }
    SUBCASE("comments are ignored") {
        ExperimentConfig c = parse_experiment_config("# full line\nseed = 9 # trailing\n");
        CHECK(c.entries.at("seed") == "9");
    }
}

TEST_CASE("build_experiment resolves presets") {
    ExperimentConfig c = parse_experiment_config("algorithm = nsga2\n"
                                                 "problem = zdt1\n"
                                                 "population = 40\n"
                                                 "seed = 7\n"
                                                 "max_generations = 10\n");
    BuiltExperiment built = build_experiment(c);
    CHECK(built.run.population_size == 40);
    CHECK(built.run.seed == 7);
    CHECK(built.run.fitness_strategy ==
          fitness::FitnessStrategy{fitness::DominanceDepth{rel::Pareto{}}});
    CHECK(built.run.stopping == StoppingCriterion{stop::MaxGenerations{10}});

    SUBCASE("resolved config spells out every component and re-parses") {
        const auto& r = built.resolved;
        CHECK(r.entries.at("fitness") == "depth");
        CHECK(r.entries.at("diversity") == "crowding");
        CHECK(r.entries.at("selection") == "tournament:2");
        CHECK(r.entries.at("replacement") == "iterative");
        CHECK(r.entries.at("archive") == "none");
        CHECK(r.entries.at("relation") == "pareto");
        ExperimentConfig again = parse_experiment_config(serialize_experiment_config(r));
        CHECK(again == r);
        // building the resolved config reproduces the same run
        BuiltExperiment rebuilt = build_experiment(again);
        CHECK(rebuilt.run.fitness_strategy == built.run.fitness_strategy);
        CHECK(rebuilt.run.selection == built.run.selection);
        CHECK(rebuilt.run.replacement == built.run.replacement);
        CHECK(rebuilt.run.population_size == built.run.population_size);
    }
    SUBCASE("component overrides on top of a preset") {
        c.set("diversity", "sharing");
        c.set("sharing.sigma", "0.25");
        BuiltExperiment v = build_experiment(c);
        CHECK(v.run.diversity_strategy ==
              diversity::DiversityStrategy{diversity::Sharing{0.25, 1.0}});
        CHECK(v.run.fitness_strategy == built.run.fitness_strategy);
    }
    SUBCASE("relation override propagates into fitness and archive") {
        c.set("relation", "epsilon:0.1,0.1");
        c.set("archive", "unbounded");
        BuiltExperiment v = build_experiment(c);
        CHECK(v.run.fitness_strategy ==
              fitness::FitnessStrategy{fitness::DominanceDepth{rel::Epsilon{{0.1, 0.1}}}});
        REQUIRE(v.run.archive.has_value());
        CHECK(v.run.archive->relation == DominanceRelation{rel::Epsilon{{0.1, 0.1}}});
    }
}

TEST_CASE("build_experiment custom algorithm") {
    ExperimentConfig c = parse_experiment_config("algorithm = custom\n"
                                                 "problem = zdt2\n"
                                                 "population = 20\n"
                                                 "fitness = rank\n"
                                                 "diversity = knn\n"
                                                 "knn.k = 3\n"
                                                 "selection = stochastic:0.8\n"
                                                 "replacement = one_shot\n"
                                                 "max_evaluations = 500\n");
    BuiltExperiment built = build_experiment(c);
    CHECK(built.run.fitness_strategy ==
          fitness::FitnessStrategy{fitness::DominanceRank{rel::Pareto{}}});
    CHECK(built.run.diversity_strategy ==
          diversity::DiversityStrategy{diversity::NearestNeighbor{3}});
    CHECK(built.run.selection ==
          SelectionScheme{select_scheme::StochasticBinaryTournament{0.8}});
    CHECK(built.run.replacement == ReplacementScheme{replace_scheme::OneShotElitist{}});
    CHECK(built.run.stopping == StoppingCriterion{stop::MaxEvaluations{500}});

    SUBCASE("custom requires the component keys") {
        ExperimentConfig incomplete =
            parse_experiment_config("algorithm = custom\nproblem = zdt1\n");
        CHECK_THROWS_AS(build_experiment(incomplete), ConfigError);
    }
}

TEST_CASE("build_experiment error reporting names the offending key") {
    SUBCASE("unknown algorithm mentions `algorithm`") {
        ExperimentConfig c = parse_experiment_config("algorithm = nsga3\nproblem = zdt1\n");
        try {
            build_experiment(c);
            FAIL("expected throw");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("algorithm") != std::string::npos);
        }
    }
    SUBCASE("bad integers name their key") {
        ExperimentConfig c = parse_experiment_config(
            "algorithm = nsga2\nproblem = zdt1\npopulation = ten\n");
        try {
            build_experiment(c);
            FAIL("expected throw");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("population") != std::string::npos);
        }
    }
    SUBCASE("knapsack without an instance path") {
        ExperimentConfig c =
            parse_experiment_config("algorithm = nsga2\nproblem = knapsack\n");
        CHECK_THROWS_AS(build_experiment(c), ConfigError);
    }
    SUBCASE("hvd delta indicator requires hv_ref") {
        ExperimentConfig c = parse_experiment_config(
            "algorithm = nsga2\nproblem = zdt1\narchive = unbounded\ndelta_indicator = hvd\n");
        CHECK_THROWS_AS(build_experiment(c), ConfigError);
    }
}

TEST_CASE("hook keys configure progress recording") {
    ExperimentConfig c = parse_experiment_config("algorithm = nsga2\n"
                                                 "problem = zdt1\n"
                                                 "zdt.d = 6\n"
                                                 "population = 10\n"
                                                 "max_generations = 3\n"
                                                 "archive = unbounded\n"
                                                 "hv_ref = 11,11\n"
                                                 "delta_indicator = eps+\n");
    BuiltExperiment built = build_experiment(c);
    RunResult r = run(built.run);
    CHECK(r.progress_columns == std::vector<std::string>{"hypervolume", "delta_eps+"});
    REQUIRE(r.progress.size() == 3);
    for (const auto& row : r.progress)
        CHECK(row.values.size() == 2);
}
