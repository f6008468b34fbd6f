#pragma once

// Line-oriented `key value` records with embedded matrices, shared by the
// key and signature file readers.

#include "cfs/gf2.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cfs::detail {

class TextRecord {
public:
    /// Parses text; the first line must be `<magic> <version>`.
    static TextRecord parse(std::string_view text, std::string_view magic, int version);

    bool has(std::string_view key) const;
    const std::string& field(std::string_view key) const;
    unsigned uint_field(std::string_view key) const;
    std::uint64_t u64_hex_field(std::string_view key) const;
    std::vector<std::uint64_t> uint_list(std::string_view key) const;
    const BitMatrix& matrix(std::string_view name) const;
    bool has_matrix(std::string_view name) const;

private:
    std::map<std::string, std::string, std::less<>> fields_;
    std::map<std::string, BitMatrix, std::less<>> matrices_;
};

class TextWriter {
public:
    TextWriter(std::string_view magic, int version);

    TextWriter& field(std::string_view key, std::string_view value);
    TextWriter& field(std::string_view key, std::uint64_t value);
    TextWriter& u64_hex(std::string_view key, std::uint64_t value);
    template <typename Range>
    TextWriter& list(std::string_view key, const Range& values)
    {
        std::string s;
        for (auto v : values) {
            if (!s.empty())
                s += ' ';
            s += std::to_string(v);
        }
        return field(key, s);
    }
    TextWriter& matrix(std::string_view name, const BitMatrix& m);

    const std::string& str() const { return out_; }

private:
    std::string out_;
};

} // namespace cfs::detail
