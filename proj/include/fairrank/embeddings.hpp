#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairrank/error.hpp"

namespace fairrank {

using Vector = Eigen::VectorXd;

namespace detail {

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

}  // namespace detail

/// Read-only token -> vector map backing the relevance cost.
///
/// Tokens are unique, non-empty and stored lowercase; every vector has the
/// table's dimension and only finite components. Immutable once loaded, so
/// concurrent reads are safe.
class EmbeddingTable {
public:
    EmbeddingTable() = default;

    Eigen::Index dimension() const { return dim_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool contains(std::string_view token) const {
        return entries_.find(token) != entries_.end();
    }

    /// nullptr when absent. The pointer stays valid for the table's lifetime.
    const Vector* find(std::string_view token) const {
        auto it = entries_.find(token);
        return it == entries_.end() ? nullptr : &it->second;
    }

    /// First insert fixes the dimension. Returns false and keeps the existing
    /// entry when the token is already present (first occurrence wins).
    bool insert(std::string token, Vector value);

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    Eigen::Index dim_ = 0;
    std::unordered_map<std::string, Vector, detail::StringHash, std::equal_to<>> entries_;
};

struct LoadStats {
    std::size_t lines_read = 0;
    std::size_t duplicates_skipped = 0;
    bool header_skipped = false;
};

/// Parses the whitespace-delimited text word-vector format: one
/// `<token> <f1> ... <fd>` line per token, UTF-8, no header expected. A
/// leading `<count> <dim>` two-integer header, if present, is skipped.
/// Duplicate tokens keep the first occurrence and are counted in `stats`.
///
/// Throws ParseError on wrong arity, non-numeric or non-finite components
/// (with the line number) and on an empty stream; ValidationError when the
/// file dimension does not match `expected_dimension`.
EmbeddingTable load_embeddings(std::istream& in,
                               std::optional<Eigen::Index> expected_dimension = {},
                               LoadStats* stats = nullptr);

EmbeddingTable load_embeddings_file(const std::filesystem::path& path,
                                    std::optional<Eigen::Index> expected_dimension = {},
                                    LoadStats* stats = nullptr);

/// Writes the table back in the same text format, tokens sorted, with enough
/// digits that load_embeddings reproduces every vector bit-exactly.
void save_embeddings(std::ostream& out, const EmbeddingTable& table);

/// Lowercases (ASCII) and splits on whitespace and hyphens, dropping empty
/// pieces: "Chief Executive-Officer" -> {"chief", "executive", "officer"}.
std::vector<std::string> normalize_tokens(std::string_view text);

struct MeanEmbedding {
    Vector mean;
    std::vector<std::string> skipped;  // normalized tokens missing from the table
};

/// Component-wise arithmetic mean over the vectors of the given tokens.
/// Inputs are run through normalize_tokens first; out-of-vocabulary tokens
/// are skipped and reported. When every surviving token resolves to the same
/// table entry the result is that vector, exactly.
///
/// Throws CoverageError when nothing is left to average ("no coverage").
MeanEmbedding mean_embedding(const EmbeddingTable& table,
                             std::span<const std::string> tokens);

/// 1 - u.v / (|u| |v|); mathematical range [0, 2], symmetric, zero for
/// identical directions. The value is not clamped to [0, 1]: word vectors
/// rarely exceed 1 in practice, but truncating would reorder dissimilar
/// candidates.
///
/// Throws ValidationError on dimension mismatch or a zero-norm input.
template <typename DerivedU, typename DerivedV>
double cosine_distance(const Eigen::MatrixBase<DerivedU>& u,
                       const Eigen::MatrixBase<DerivedV>& v) {
    if (u.size() != v.size()) {
        throw ValidationError("cosine_distance: dimension mismatch (" +
                              std::to_string(u.size()) + " vs " +
                              std::to_string(v.size()) + ")");
    }
    const double norm_u = u.derived().template cast<double>().norm();
    const double norm_v = v.derived().template cast<double>().norm();
    if (norm_u == 0.0 || norm_v == 0.0) {
        throw ValidationError("cosine_distance: zero-norm input");
    }
    const double dot = u.derived().template cast<double>().dot(
        v.derived().template cast<double>());
    return 1.0 - dot / (norm_u * norm_v);
}

}  // namespace fairrank
