#include "doctest.h"

#include "lqa/cache_io.hpp"
#include "lqa/errors.hpp"
#include "lqa/lr.hpp"
#include "lqa/pieri.hpp"

#include <filesystem>
#include <fstream>

using namespace lqa;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "lqa_cache_tests";
    fs::create_directories(dir);
    fs::remove(dir / name);
    return dir / name;
}

std::vector<std::uint8_t> slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::vector<std::uint8_t>& bytes)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void warm()
{
    lr_cache_clear();
    pieri_cache_clear();
    lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1});
    lr_coefficient(Partition{2}, Partition{1}, Partition{3});
    pieri_expand(Partition{2, 1}, 2);
}

} // namespace

TEST_CASE("key and integer codecs")
{
    const LRKey k{Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}};
    CHECK(decode_lr_key(encode_lr_key(k)) == k);
    for (std::uint64_t v : {0ULL, 1ULL, 255ULL, 1ULL << 40, ~0ULL})
        CHECK(decode_u64(encode_u64(v)) == v);
}

TEST_CASE("encode and decode round trip")
{
    warm();
    const auto records = collect_cache_records();
    REQUIRE(records.size() >= 3);
    const auto bytes = encode_cache(records);
    CHECK(bytes[0] == 'L');
    const auto back = decode_cache(bytes);
    REQUIRE(back.size() == records.size());
    CHECK(encode_cache(back) == bytes);
}

TEST_CASE("save and load restore the memo tables bit-exactly")
{
    warm();
    const auto path = scratch("roundtrip.bin");
    const auto lr = lr_cache_snapshot();
    const auto pieri = pieri_cache_snapshot();
    cache_save(path);
    lr_cache_clear();
    pieri_cache_clear();
    CHECK(cache_load(path));
    CHECK(lr_cache_snapshot() == lr);
    CHECK(pieri_cache_snapshot() == pieri);
    const auto first = slurp(path);
    cache_save(path);
    CHECK(slurp(path) == first);
}

TEST_CASE("missing file is a cold start")
{
    CHECK_FALSE(cache_load(scratch("absent.bin")));
}

TEST_CASE("damaged files are rejected")
{
    warm();
    const auto path = scratch("damaged.bin");
    cache_save(path);
    const auto good = slurp(path);

    auto truncated = good;
    truncated.resize(good.size() / 2);
    spit(path, truncated);
    CHECK_THROWS_AS(cache_load(path), corrupt_cache);

    auto flipped = good;
    flipped[good.size() / 2] ^= 0x40;
    spit(path, flipped);
    CHECK_THROWS_AS(cache_load(path), corrupt_cache);

    auto version = good;
    version[4] = 9;
    spit(path, version);
    CHECK_THROWS_AS(cache_load(path), corrupt_cache);

    spit(path, {});
    CHECK_THROWS_AS(cache_load(path), corrupt_cache);
}

TEST_CASE("loaded values are used as stored")
{
    lr_cache_clear();
    const LRKey key{Partition{2}, Partition{1}, Partition{1}};
    install_cache_records({{CacheRecordTag::lr, encode_lr_key(key), encode_u64(7)}});
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 7);
    lr_cache_clear();
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
}
