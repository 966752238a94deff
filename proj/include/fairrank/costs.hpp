#pragma once

#include <Eigen/Core>

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "fairrank/corpus.hpp"
#include "fairrank/embeddings.hpp"
#include "fairrank/error.hpp"

namespace fairrank {

/// Relevance cost assigned to records whose label set carries no embedding
/// signal (empty or fully out-of-vocabulary): the practical maximum of the
/// cosine distance for word vectors. Pushes uninformative images down
/// without excluding them.
inline constexpr double kFallbackRelevanceCost = 1.0;

/// User-defined weight pair: w_r + w_g = 1 within 1e-9, both in [0, 1].
class Weights {
public:
    Weights(double relevance_weight, double fairness_weight);

    static Weights from_relevance(double w_r) { return {w_r, 1.0 - w_r}; }

    double relevance() const { return w_r_; }
    double fairness() const { return w_g_; }

    bool operator==(const Weights&) const = default;

private:
    double w_r_;
    double w_g_;
};

struct CostBreakdown {
    double relevance = 0.0;
    double fairness = 0.0;
    double combined = 0.0;
};

/// Sum_g p(g) * log2(p(g) / q(g)) with the convention 0 * log(0/q) = 0.
/// Nonnegative up to rounding. Throws ValidationError on size mismatch or
/// when p(g) > 0 while q(g) = 0 (absolute continuity).
template <typename DerivedP, typename DerivedQ>
double kl_divergence_bits(const Eigen::MatrixBase<DerivedP>& p,
                          const Eigen::MatrixBase<DerivedQ>& q) {
    if (p.size() != q.size()) {
        throw ValidationError("kl_divergence: group set size mismatch (" +
                              std::to_string(p.size()) + " vs " +
                              std::to_string(q.size()) + ")");
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        const double pi = static_cast<double>(p.derived().coeff(i));
        if (pi == 0.0) continue;
        const double qi = static_cast<double>(q.derived().coeff(i));
        if (qi == 0.0) {
            throw ValidationError(
                "kl_divergence: absolute continuity violated at group index " +
                std::to_string(i));
        }
        sum += pi * std::log2(pi / qi);
    }
    return sum;
}

/// KL over two distributions that must share a group policy.
double kl_divergence(const GroupDistribution& p, const GroupDistribution& q);

/// Mean embedding of the query tokens. Throws CoverageError when the query
/// is fully out of vocabulary: the whole experiment is ill-posed, not one
/// record.
Vector query_embedding(const EmbeddingTable& table, std::string_view query);

/// cosine_distance(mean of the record's object-label terms, query vector).
/// Falls back to kFallbackRelevanceCost when the record's labels are empty,
/// fully out-of-vocabulary, or average to the zero vector.
double relevance_cost(const EmbeddingTable& table, const Vector& query_vector,
                      const ImageRecord& record);
double relevance_cost(const EmbeddingTable& table, std::string_view query,
                      const ImageRecord& record);

/// KL(p(g, prefix + candidate) || corpus_dist). Under BinaryMF, a prefix +
/// candidate with no Male/Female member yields 0: no evidence of unfairness
/// yet. corpus_dist must be computed under the same policy.
double fairness_cost(std::span<const ImageRecord> prefix,
                     const ImageRecord& candidate,
                     const GroupDistribution& corpus_dist,
                     const GroupPolicy& policy);

/// Fast path for ranking loops: counts must already include the candidate.
double fairness_cost_from_counts(const Eigen::VectorXi& counts_with_candidate,
                                 const GroupDistribution& corpus_dist);

/// w_r * relevance + w_g * fairness.
double combined_cost(const Weights& weights, double relevance, double fairness);

CostBreakdown cost_breakdown(const Weights& weights, double relevance,
                             double fairness);

}  // namespace fairrank
