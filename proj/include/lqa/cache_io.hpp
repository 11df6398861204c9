#pragma once

#include "lqa/lr.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lqa {

inline constexpr std::uint32_t cache_format_version = 1;

enum class CacheRecordTag : std::uint8_t { lr = 1, pieri = 2 };

struct CacheRecord {
    CacheRecordTag tag;
    std::vector<std::uint8_t> key;
    std::vector<std::uint8_t> value;
};

/// Raw file layout: "LQAC", u32 version, records {u8 tag, u32 key length, key,
/// u32 value length, value}, then a CRC-32 of everything before it. Integers are
/// little-endian.
std::vector<std::uint8_t> encode_cache(const std::vector<CacheRecord>& records);
std::vector<CacheRecord> decode_cache(const std::vector<std::uint8_t>& bytes);

std::vector<CacheRecord> read_cache_file(const std::filesystem::path& path);
void write_cache_file(const std::filesystem::path& path, const std::vector<CacheRecord>& records);

/// Snapshot of the LR and Pieri memo tables, in key order.
std::vector<CacheRecord> collect_cache_records();
/// Seed the memo tables from records.
void install_cache_records(const std::vector<CacheRecord>& records);

/// Write the current LR and Pieri tables.
void cache_save(const std::filesystem::path& path);
/// Seed the tables from a file. A missing file is a cold start and returns false;
/// a malformed one throws corrupt_cache.
bool cache_load(const std::filesystem::path& path);

// Record payload codecs, exposed for tooling and tests.
std::vector<std::uint8_t> encode_lr_key(const LRKey& key);
LRKey decode_lr_key(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_u64(std::uint64_t v);
std::uint64_t decode_u64(const std::vector<std::uint8_t>& bytes);

} // namespace lqa
