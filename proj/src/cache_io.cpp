#include "lqa/cache_io.hpp"

#include "lqa/errors.hpp"
#include "lqa/lr.hpp"
#include "lqa/pieri.hpp"

#include <boost/crc.hpp>

#include <cstring>
#include <fstream>
#include <iterator>

namespace lqa {

namespace {

constexpr char magic[4] = {'L', 'Q', 'A', 'C'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(const std::vector<std::uint8_t>& bytes, std::size_t end)
        : bytes_(bytes), end_(end)
    {
    }

    bool done() const { return pos_ == end_; }

    std::uint8_t u8()
    {
        need(1);
        return bytes_[pos_++];
    }

    std::uint32_t u32()
    {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
        return v;
    }

    std::uint64_t u64()
    {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * i);
        return v;
    }

    std::vector<std::uint8_t> bytes(std::size_t n)
    {
        need(n);
        std::vector<std::uint8_t> out(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                                      bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }

private:
    void need(std::size_t n) const
    {
        if (end_ - pos_ < n)
            throw corrupt_cache("cache record runs past the end of the file");
    }

    const std::vector<std::uint8_t>& bytes_;
    std::size_t end_;
    std::size_t pos_ = 0;
};

void put_partition(std::vector<std::uint8_t>& out, const Partition& p)
{
    put_u32(out, static_cast<std::uint32_t>(p.length()));
    for (int x : p.parts())
        put_u32(out, static_cast<std::uint32_t>(x));
}

Partition get_partition(Reader& r)
{
    const std::uint32_t len = r.u32();
    if (len > 4096)
        throw corrupt_cache("implausible partition length in cache");
    std::vector<int> parts;
    for (std::uint32_t i = 0; i < len; ++i)
        parts.push_back(static_cast<int>(r.u32()));
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw corrupt_cache("cache holds a malformed partition");
    }
}

std::uint32_t crc_of(const std::vector<std::uint8_t>& bytes, std::size_t n)
{
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), n);
    return crc.checksum();
}

} // namespace

std::vector<std::uint8_t> encode_u64(std::uint64_t v)
{
    std::vector<std::uint8_t> out;
    put_u64(out, v);
    return out;
}

std::uint64_t decode_u64(const std::vector<std::uint8_t>& bytes)
{
    if (bytes.size() != 8)
        throw corrupt_cache("LR value must be 8 bytes");
    Reader r(bytes, bytes.size());
    return r.u64();
}

std::vector<std::uint8_t> encode_lr_key(const LRKey& key)
{
    std::vector<std::uint8_t> out;
    put_partition(out, key.outer);
    put_partition(out, key.inner);
    put_partition(out, key.weight);
    return out;
}

LRKey decode_lr_key(const std::vector<std::uint8_t>& bytes)
{
    Reader r(bytes, bytes.size());
    LRKey key;
    key.outer = get_partition(r);
    key.inner = get_partition(r);
    key.weight = get_partition(r);
    if (!r.done())
        throw corrupt_cache("trailing bytes in LR key");
    return key;
}

std::vector<std::uint8_t> encode_cache(const std::vector<CacheRecord>& records)
{
    std::vector<std::uint8_t> out(std::begin(magic), std::end(magic));
    put_u32(out, cache_format_version);
    for (const auto& rec : records) {
        out.push_back(static_cast<std::uint8_t>(rec.tag));
        put_u32(out, static_cast<std::uint32_t>(rec.key.size()));
        out.insert(out.end(), rec.key.begin(), rec.key.end());
        put_u32(out, static_cast<std::uint32_t>(rec.value.size()));
        out.insert(out.end(), rec.value.begin(), rec.value.end());
    }
    put_u32(out, crc_of(out, out.size()));
    return out;
}

std::vector<CacheRecord> decode_cache(const std::vector<std::uint8_t>& bytes)
{
    if (bytes.size() < 12 || std::memcmp(bytes.data(), magic, 4) != 0)
        throw corrupt_cache("not a cache file (bad header)");
    const std::size_t body_end = bytes.size() - 4;
    Reader tail(bytes, bytes.size());
    tail.bytes(body_end);
    if (tail.u32() != crc_of(bytes, body_end))
        throw corrupt_cache("cache checksum mismatch");
    Reader r(bytes, body_end);
    r.bytes(4);
    const std::uint32_t version = r.u32();
    if (version != cache_format_version)
        throw corrupt_cache("unsupported cache version " + std::to_string(version));
    std::vector<CacheRecord> records;
    while (!r.done()) {
        CacheRecord rec;
        const std::uint8_t tag = r.u8();
        if (tag != 1 && tag != 2)
            throw corrupt_cache("unknown cache record tag " + std::to_string(tag));
        rec.tag = static_cast<CacheRecordTag>(tag);
        rec.key = r.bytes(r.u32());
        rec.value = r.bytes(r.u32());
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<CacheRecord> read_cache_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open cache file " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_cache(bytes);
}

void write_cache_file(const std::filesystem::path& path, const std::vector<CacheRecord>& records)
{
    const auto bytes = encode_cache(records);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out)
            throw std::runtime_error("short write on cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::vector<CacheRecord> collect_cache_records()
{
    std::vector<CacheRecord> records;
    for (const auto& [key, value] : lr_cache_snapshot())
        records.push_back({CacheRecordTag::lr, encode_lr_key(key), encode_u64(value)});
    for (const auto& [key, expansion] : pieri_cache_snapshot()) {
        CacheRecord rec{CacheRecordTag::pieri, {}, {}};
        put_partition(rec.key, key.first);
        put_u32(rec.key, static_cast<std::uint32_t>(key.second));
        put_u32(rec.value, static_cast<std::uint32_t>(expansion.size()));
        for (const auto& [lambda, mult] : expansion) {
            put_partition(rec.value, lambda);
            put_u64(rec.value, mult);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void install_cache_records(const std::vector<CacheRecord>& records)
{
    for (const auto& rec : records) {
        if (rec.tag == CacheRecordTag::lr) {
            lr_cache_insert(decode_lr_key(rec.key), decode_u64(rec.value));
            continue;
        }
        Reader k(rec.key, rec.key.size());
        Partition gamma = get_partition(k);
        const int l = static_cast<int>(k.u32());
        if (!k.done())
            throw corrupt_cache("trailing bytes in Pieri key");
        Reader v(rec.value, rec.value.size());
        PieriExpansion expansion;
        const std::uint32_t count = v.u32();
        for (std::uint32_t i = 0; i < count; ++i) {
            Partition lambda = get_partition(v);
            expansion[lambda] = v.u64();
        }
        if (!v.done())
            throw corrupt_cache("trailing bytes in Pieri value");
        pieri_cache_insert(gamma, l, std::move(expansion));
    }
}

void cache_save(const std::filesystem::path& path) { write_cache_file(path, collect_cache_records()); }

bool cache_load(const std::filesystem::path& path)
{
    if (!std::filesystem::exists(path))
        return false;
    install_cache_records(read_cache_file(path));
    return true;
}

} // namespace lqa
