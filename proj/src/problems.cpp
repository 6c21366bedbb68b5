#include "emo/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "emo/errors.hpp"

namespace emo {

namespace {

void check_unit_domain(const std::vector<double>& genes, std::size_t expected) {
    if (genes.size() != expected)
        throw std::invalid_argument("genotype dimension mismatch: got " +
                                    std::to_string(genes.size()) + ", expected " +
                                    std::to_string(expected));
    for (double g : genes)
        if (g < 0.0 || g > 1.0)
            throw std::invalid_argument("gene outside [0,1]");
}

} // namespace

ObjectiveVector zdt_evaluate(const RealVector& x, const ZdtSpec& spec) {
    if (spec.variant != 1 && spec.variant != 2)
        throw std::invalid_argument("zdt variant must be 1 or 2");
    if (spec.d < 2)
        throw std::invalid_argument("zdt dimension must be >= 2");
    check_unit_domain(x.genes, spec.d);
    double f1 = x.genes[0];
    double tail = std::accumulate(x.genes.begin() + 1, x.genes.end(), 0.0);
    double g = 1.0 + 9.0 * tail / static_cast<double>(spec.d - 1);
    double ratio = f1 / g;
    double f2 = spec.variant == 1 ? g * (1.0 - std::sqrt(ratio)) : g * (1.0 - ratio * ratio);
    return {f1, f2};
}

ObjectiveVector dtlz2_evaluate(const RealVector& x, const Dtlz2Spec& spec) {
    if (spec.n_obj < 2)
        throw std::invalid_argument("dtlz2 needs at least 2 objectives");
    check_unit_domain(x.genes, spec.dim());
    std::size_t m = spec.n_obj;
    double g = 0.0;
    for (std::size_t i = m - 1; i < x.genes.size(); ++i)
        g += (x.genes[i] - 0.5) * (x.genes[i] - 0.5);
    constexpr double half_pi = std::numbers::pi / 2.0;
    ObjectiveVector f(m);
    for (std::size_t j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (std::size_t i = 0; i + j + 1 < m; ++i)
            v *= std::cos(x.genes[i] * half_pi);
        if (j > 0)
            v *= std::sin(x.genes[m - 1 - j] * half_pi);
        f[j] = v;
    }
    return f;
}

ObjectiveVector knapsack_evaluate(const BitVector& bits, const KnapsackInstance& inst) {
    if (bits.bits.size() != inst.items.size())
        throw std::invalid_argument("knapsack selection length does not match item count");
    std::vector<std::size_t> selected;
    long weight = 0;
    for (std::size_t i = 0; i < bits.bits.size(); ++i)
        if (bits.bits[i]) {
            selected.push_back(i);
            weight += inst.items[i].weight;
        }
    if (weight > inst.capacity) {
        // drop worst profit-per-weight items first; stable on ties
        std::stable_sort(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) {
            const auto& ia = inst.items[a];
            const auto& ib = inst.items[b];
            double ra = static_cast<double>(ia.profit1 + ia.profit2) / static_cast<double>(ia.weight);
            double rb = static_cast<double>(ib.profit1 + ib.profit2) / static_cast<double>(ib.weight);
            return ra < rb;
        });
        std::size_t drop = 0;
        while (weight > inst.capacity && drop < selected.size())
            weight -= inst.items[selected[drop++]].weight;
        selected.erase(selected.begin(), selected.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    long p1 = 0, p2 = 0;
    for (std::size_t i : selected) {
        p1 += inst.items[i].profit1;
        p2 += inst.items[i].profit2;
    }
    return {static_cast<double>(p1), static_cast<double>(p2)};
}

KnapsackInstance load_knapsack_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open knapsack instance: " + path);
    KnapsackInstance inst;
    bool have_capacity = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue; // blank or comment
        auto fail = [&](const std::string& why) -> void {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + why);
        };
        if (!have_capacity) {
            long cap;
            if (first != "capacity" || !(ls >> cap))
                fail("expected `capacity <int>` header");
            if (cap <= 0)
                fail("capacity must be positive");
            inst.capacity = cap;
            have_capacity = true;
            continue;
        }
        KnapsackInstance::Item item;
        std::istringstream is(line);
        if (!(is >> item.weight >> item.profit1 >> item.profit2))
            fail("expected `<weight> <profit1> <profit2>`");
        std::string extra;
        if (is >> extra)
            fail("trailing tokens on item line");
        if (item.weight <= 0 || item.profit1 <= 0 || item.profit2 <= 0)
            fail("item weight and profits must be positive");
        inst.items.push_back(item);
    }
    if (!have_capacity)
        throw ConfigError(path + ": missing `capacity` header");
    if (inst.items.empty())
        throw ConfigError(path + ": no items");
    return inst;
}

Problem make_problem(const ProblemSpec& spec) {
    return std::visit(
        [](const auto& s) -> Problem {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZdtSpec>) {
                if (s.variant != 1 && s.variant != 2)
                    throw std::invalid_argument("zdt variant must be 1 or 2");
                if (s.d < 2)
                    throw std::invalid_argument("zdt dimension must be >= 2");
                ObjectiveSpace space = ObjectiveSpace::minimize(2);
                std::vector<std::pair<double, double>> bounds(s.d, {0.0, 1.0});
                VariationPipeline pipe{sbx_crossover(15.0), 0.9, polynomial_mutation(20.0), 1.0};
                return Problem{space, uniform_real_initializer(bounds),
                               Evaluator{space,
                                         [s](const Genotype& g) {
                                             return zdt_evaluate(std::get<RealVector>(g), s);
                                         },
                                         true},
                               pipe};
            } else if constexpr (std::is_same_v<T, Dtlz2Spec>) {
                if (s.n_obj < 2)
                    throw std::invalid_argument("dtlz2 needs at least 2 objectives");
                if (s.k < 1)
                    throw std::invalid_argument("dtlz2 tail length must be >= 1");
                ObjectiveSpace space = ObjectiveSpace::minimize(s.n_obj);
                std::vector<std::pair<double, double>> bounds(s.dim(), {0.0, 1.0});
                VariationPipeline pipe{sbx_crossover(15.0), 0.9, polynomial_mutation(20.0), 1.0};
                return Problem{space, uniform_real_initializer(bounds),
                               Evaluator{space,
                                         [s](const Genotype& g) {
                                             return dtlz2_evaluate(std::get<RealVector>(g), s);
                                         },
                                         true},
                               pipe};
            } else {
                KnapsackInstance inst = load_knapsack_instance(s.instance_path);
                ObjectiveSpace space(std::vector<Sense>(2, Sense::Maximize));
                std::size_t n = inst.items.size();
                VariationPipeline pipe{one_point_crossover(), 0.8, bit_flip_mutation(), 1.0};
                return Problem{space, random_bits_initializer(n),
                               Evaluator{space,
                                         [inst](const Genotype& g) {
                                             return knapsack_evaluate(std::get<BitVector>(g), inst);
                                         },
                                         true},
                               pipe};
            }
        },
        spec);
}

} // namespace emo
