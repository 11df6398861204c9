// Damages a cache file for the CLI tests.
//   bump FILE          every nonzero LR value + 1, rewritten with a valid checksum
//   truncate SRC DST   first half of SRC written to DST

#include "lqa/cache_io.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    const std::string mode = argc > 1 ? argv[1] : "";
    if (mode == "bump" && argc == 3) {
        auto records = lqa::read_cache_file(argv[2]);
        std::size_t changed = 0;
        for (auto& r : records) {
            if (r.tag != lqa::CacheRecordTag::lr)
                continue;
            const auto v = lqa::decode_u64(r.value);
            if (v == 0)
                continue;
            r.value = lqa::encode_u64(v + 1);
            ++changed;
        }
        lqa::write_cache_file(argv[2], records);
        std::cout << changed << " LR records changed\n";
        return changed > 0 ? 0 : 1;
    }
    if (mode == "truncate" && argc == 4) {
        std::ifstream in(argv[2], std::ios::binary);
        std::vector<char> bytes{std::istreambuf_iterator<char>(in), {}};
        std::ofstream out(argv[3], std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
        return bytes.empty() ? 1 : 0;
    }
    std::cerr << "usage: corrupt_cache bump FILE | corrupt_cache truncate SRC DST\n";
    return 2;
}
