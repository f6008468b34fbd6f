#include "cfs/digest.hpp"

#include "cfs/errors.hpp"
#include "cfs/metrics.hpp"

#include <openssl/evp.h>

#include <vector>

namespace cfs {

BitVector expand_digest(std::span<const std::uint8_t> data, std::size_t bits)
{
    count_hash_evaluation();
    std::vector<std::uint8_t> out;
    std::vector<std::uint8_t> buf(data.begin(), data.end());
    buf.resize(data.size() + 4);
    for (std::uint32_t ctr = 0; 8 * out.size() < bits; ++ctr) {
        for (int k = 0; k < 4; ++k)
            buf[data.size() + static_cast<std::size_t>(k)] =
                static_cast<std::uint8_t>(ctr >> (24 - 8 * k));
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(buf.data(), buf.size(), md, &len, EVP_sha256(), nullptr) != 1)
            throw Error("SHA-256 evaluation failed");
        out.insert(out.end(), md, md + len);
    }
    return BitVector::from_bytes(out, bits);
}

} // namespace cfs
