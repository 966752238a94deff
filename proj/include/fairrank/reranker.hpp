#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairrank/corpus.hpp"
#include "fairrank/costs.hpp"
#include "fairrank/embeddings.hpp"

namespace fairrank {

enum class RankMethod { Greedy, Random, RelevanceOnly };

std::string_view to_string(RankMethod method);
RankMethod parse_method(std::string_view text);  // "greedy"|"random"|"relevance"

/// A permutation of a corpus's record ids with provenance. step_costs holds
/// one breakdown per step for greedy rankings and is empty otherwise.
struct Ranking {
    std::string query;
    RankMethod method = RankMethod::Greedy;
    std::optional<Weights> weights;      // greedy only
    std::optional<std::uint64_t> seed;   // random only
    std::vector<std::string> ordered_ids;
    std::vector<CostBreakdown> step_costs;
};

/// Builds R incrementally from empty; each step appends the remaining record
/// with the minimum w_r * relevance_cost + w_g * KL(p(g, R+{i}) || p(g, I')).
/// Relevance costs are computed once per record; the fairness term uses
/// incremental group counts. Ties break by lower original_rank, then
/// lexicographic id. Deterministic; O(N^2 * |groups|) plus N relevance
/// evaluations.
Ranking rerank_greedy(const QueryCorpus& corpus, const EmbeddingTable& table,
                      const Weights& weights);

/// Records sorted ascending by relevance cost; ties by original_rank, then id.
Ranking rerank_relevance_only(const QueryCorpus& corpus,
                              const EmbeddingTable& table);

/// Uniform random permutation from mt19937_64 + rejection-sampled
/// Fisher-Yates: the same seed reproduces the same permutation on every
/// platform.
Ranking rerank_random(const QueryCorpus& corpus, std::uint64_t seed);

/// Uniform draw from [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return draw % bound;
}

template <typename T>
void portable_shuffle(std::span<T> items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::uint64_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

/// Wire format: {"query", "method", "weights", "seed", "ordered_ids",
/// "step_costs"}; absent provenance fields are null.
nlohmann::ordered_json ranking_to_json(const Ranking& ranking);
Ranking ranking_from_json(const nlohmann::json& j);

void save_ranking(std::ostream& out, const Ranking& ranking);
Ranking load_ranking(std::istream& in);
Ranking load_ranking_file(const std::filesystem::path& path);
void save_ranking_file(const std::filesystem::path& path, const Ranking& ranking);

}  // namespace fairrank
