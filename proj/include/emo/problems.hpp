#pragma once

#include <string>
#include <variant>

#include "emo/variation.hpp"

namespace emo {

struct ZdtSpec {
    int variant = 1;       // 1 or 2
    std::size_t d = 30;    // dimension, >= 2; domain [0,1]^d
    bool operator==(const ZdtSpec&) const = default;
};

struct Dtlz2Spec {
    std::size_t n_obj = 3; // >= 2
    std::size_t k = 10;    // tail length; dimension = n_obj + k - 1
    std::size_t dim() const { return n_obj + k - 1; }
    bool operator==(const Dtlz2Spec&) const = default;
};

struct KnapsackInstance {
    struct Item {
        long weight = 0;
        long profit1 = 0;
        long profit2 = 0;
        bool operator==(const Item&) const = default;
    };
    std::vector<Item> items;
    long capacity = 0;
    bool operator==(const KnapsackInstance&) const = default;
};

ObjectiveVector zdt_evaluate(const RealVector& x, const ZdtSpec& spec);
ObjectiveVector dtlz2_evaluate(const RealVector& x, const Dtlz2Spec& spec);

/// Over-capacity selections are repaired greedily: selected items are
/// dropped in increasing (profit1+profit2)/weight order until feasible.
ObjectiveVector knapsack_evaluate(const BitVector& bits, const KnapsackInstance& inst);

/// Text format: line 1 `capacity <int>`, then `<weight> <profit1>
/// <profit2>` per item; `#` starts a comment. Throws ConfigError naming
/// the offending line, IoError when the file cannot be read.
KnapsackInstance load_knapsack_instance(const std::string& path);

struct KnapsackSpec {
    std::string instance_path;
    bool operator==(const KnapsackSpec&) const = default;
};

using ProblemSpec = std::variant<ZdtSpec, Dtlz2Spec, KnapsackSpec>;

/// A problem bundled with everything the engine needs for it.
struct Problem {
    ObjectiveSpace space;
    Initializer initializer;
    Evaluator evaluator;
    VariationPipeline default_pipeline;
};

Problem make_problem(const ProblemSpec& spec);

} // namespace emo
