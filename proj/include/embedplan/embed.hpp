#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace embedplan {
class Corpus;
}

namespace embedplan::embed {

// id -> unit-norm float vector of a fixed dimension. Immutable once built.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    // Vectors whose norm is off by more than kNormTolerance are rescaled to unit
    // norm; vectors already within tolerance are stored bit-for-bit.
    void add(std::string id, std::span<const float> vec);

    bool contains(std::string_view id) const { return index_.count(std::string(id)) > 0; }
    std::span<const float> get(std::string_view id) const;  // throws MissingText
    const std::vector<std::string>& ids() const { return ids_; }
    std::span<const float> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

    // FNV-1a over ids and vector bytes, for frozen-ness checks.
    std::uint64_t checksum() const;

    bool operator==(const EmbeddingTable& other) const {
        return dim_ == other.dim_ && ids_ == other.ids_ && data_ == other.data_;
    }

    std::string encoder_name;
    std::string created_at;

    static constexpr double kNormTolerance = 1e-5;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> ids_;
    std::vector<float> data_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Little-endian "EMBT" v1: magic, u32 version, u32 dim, u64 count, then per
// entry u16 id_len, id bytes, dim x f32.
void save_table(const EmbeddingTable& table, const std::filesystem::path& path);
EmbeddingTable load_table(const std::filesystem::path& path);
std::vector<std::uint8_t> serialize_table(const EmbeddingTable& table);
EmbeddingTable deserialize_table(std::span<const std::uint8_t> bytes);

struct BuiltinEncoderSpec {
    std::size_t dim = 256;
    std::uint64_t seed = 0x5eed;
    std::size_t hash_buckets = 1u << 16;
    // n-gram orders over whitespace tokens are fixed at {1, 2, 3}.
};

// Hashed token n-gram counts through a seeded Gaussian random projection, L2 normalized.
std::vector<float> builtin_encode(std::string_view text, const BuiltinEncoderSpec& spec);

inline std::string action_key(std::string_view action_id) { return "act:" + std::string(action_id); }

// One entry per distinct state id and one per distinct action ("act:" + id).
EmbeddingTable embed_corpus(const Corpus& corpus, const BuiltinEncoderSpec& spec);

// Throws MissingText if any state or action of the corpus has no vector.
void check_coverage(const EmbeddingTable& table, const Corpus& corpus);

double cosine(std::span<const float> a, std::span<const float> b);

}  // namespace embedplan::embed
