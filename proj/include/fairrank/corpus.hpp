#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairrank/error.hpp"

namespace fairrank {

/// Closed annotation taxonomy. Parsing is case-insensitive; anything else is
/// a ParseError, never a silent Uncertain.
enum class GenderLabel { Male, Female, Both, Uncertain };

GenderLabel parse_gender(std::string_view text);
std::string_view to_string(GenderLabel label);

struct ObjectLabel {
    std::string term;
    double confidence = 1.0;  // in [0, 1]

    bool operator==(const ObjectLabel&) const = default;
};

/// One retrieved image. original_rank is the 1-based engine rank and is the
/// ground truth for bucket relevance. object_labels may be empty, which
/// triggers the relevance-cost fallback downstream.
struct ImageRecord {
    std::string id;
    std::string query;
    int original_rank = 0;
    std::vector<ObjectLabel> object_labels;
    GenderLabel gender = GenderLabel::Uncertain;
    std::string source_ref;  // optional, empty when absent

    bool operator==(const ImageRecord&) const = default;
};

/// Maps the four annotation labels onto the group set used for p(g, .).
/// BinaryMF keeps Male/Female only and renormalizes; Both/Uncertain records
/// still participate in ranking and relevance, just not in distributions.
class GroupPolicy {
public:
    enum class Mode { AllFour, BinaryMF };

    constexpr GroupPolicy() = default;
    constexpr explicit GroupPolicy(Mode mode) : mode_(mode) {}

    Mode mode() const { return mode_; }

    /// Group set in fixed order: Male, Female[, Both, Uncertain].
    std::span<const GenderLabel> groups() const;
    Eigen::Index group_count() const;

    /// Position of the label in groups(), or -1 when the label is outside
    /// the group set (BinaryMF: Both/Uncertain).
    Eigen::Index index_of(GenderLabel label) const;
    bool counts(GenderLabel label) const { return index_of(label) >= 0; }

    /// "all4" | "binary"
    static GroupPolicy parse(std::string_view text);
    std::string_view name() const;

    bool operator==(const GroupPolicy&) const = default;

private:
    Mode mode_ = Mode::AllFour;
};

/// Empirical p(g, .) over a policy's group set, in policy group order.
/// probabilities sum to 1; support_count is the number of records the
/// distribution was requested over (policy-filtered records included, so
/// dropping a Both record under BinaryMF changes support_count but not the
/// probabilities).
struct GroupDistribution {
    GroupPolicy policy;
    Eigen::VectorXd probabilities;
    long support_count = 0;

    double probability_of(GenderLabel label) const;
};

/// The retrieved set I' for one query, sorted by original_rank with
/// contiguous 1..N ranks. Immutable after parse; shared reads are safe.
struct QueryCorpus {
    std::string query;
    std::vector<ImageRecord> records;
    GroupPolicy group_policy;

    std::size_t size() const { return records.size(); }
};

/// Per-group occurrence counts in policy order; out-of-policy records are
/// ignored.
Eigen::VectorXi group_counts(std::span<const ImageRecord> records,
                             const GroupPolicy& policy);

/// Throws CoverageError("empty distribution") when the counts sum to zero.
/// support_count < 0 means "use the counted total".
GroupDistribution distribution_from_counts(const Eigen::VectorXi& counts,
                                           const GroupPolicy& policy,
                                           long support_count = -1);

GroupDistribution group_distribution(std::span<const ImageRecord> records,
                                     const GroupPolicy& policy);

/// Shared corpus invariants: non-empty, unique ids, one query string,
/// contiguous 1..N ranks. Sorts by original_rank. Throws ValidationError
/// naming the offender.
void validate_and_sort(std::vector<ImageRecord>& records);

/// Reads the corpus JSONL wire format, one record object per line:
///   {"id": str, "query": str, "original_rank": int,
///    "gender": "male"|"female"|"both"|"uncertain",
///    "object_labels": [{"term": str, "confidence": float}],
///    "source_ref": str?}
QueryCorpus parse_corpus(std::istream& in, GroupPolicy policy);
QueryCorpus parse_corpus_file(const std::filesystem::path& path, GroupPolicy policy);

/// Inverse of parse_corpus; deterministic bytes for a given corpus.
void serialize_corpus(std::ostream& out, const QueryCorpus& corpus);

}  // namespace fairrank
