#include "text_record.hpp"

#include "cfs/errors.hpp"
#include "cfs/schemes_public.hpp"

#include <charconv>
#include <sstream>

namespace cfs::detail {

namespace {

std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        std::string_view line = text.substr(0, pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

std::uint64_t parse_u64(std::string_view s, int base, std::string_view what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw FormatError("invalid number for '" + std::string(what) + "': '" + std::string(s) +
                          "'");
    return v;
}

} // namespace

TextRecord TextRecord::parse(std::string_view text, std::string_view magic, int version)
{
    auto lines = lines_of(text);
    std::string header = std::string(magic) + " " + std::to_string(version);
    if (lines.empty() || lines[0] != header)
        throw FormatError("expected header '" + header + "'");
    TextRecord rec;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        if (line.empty() || line.front() == '#')
            continue;
        auto sp = line.find(' ');
        std::string key(line.substr(0, sp));
        std::string value = sp == std::string_view::npos ? "" : std::string(line.substr(sp + 1));
        if (key == "matrix") {
            std::istringstream in(value);
            std::string name;
            std::size_t rows = 0, cols = 0;
            if (!(in >> name >> rows >> cols))
                throw FormatError("matrix header needs: name rows cols");
            if (i + rows >= lines.size())
                throw FormatError("matrix '" + name + "' is truncated");
            BitMatrix m(rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                m.row(r) = BitVector::from_hex(lines[i + 1 + r], cols);
            i += rows;
            if (!rec.matrices_.emplace(name, std::move(m)).second)
                throw FormatError("duplicate matrix '" + name + "'");
            continue;
        }
        if (!rec.fields_.emplace(key, value).second)
            throw FormatError("duplicate field '" + key + "'");
    }
    return rec;
}

bool TextRecord::has(std::string_view key) const { return fields_.find(key) != fields_.end(); }

const std::string& TextRecord::field(std::string_view key) const
{
    auto it = fields_.find(key);
    if (it == fields_.end())
        throw FormatError("missing field '" + std::string(key) + "'");
    return it->second;
}

unsigned TextRecord::uint_field(std::string_view key) const
{
    auto v = parse_u64(field(key), 10, key);
    if (v > 0xffffffffu)
        throw FormatError("field '" + std::string(key) + "' out of range");
    return static_cast<unsigned>(v);
}

std::uint64_t TextRecord::u64_hex_field(std::string_view key) const
{
    const std::string& s = field(key);
    if (s.size() != 16)
        throw FormatError("field '" + std::string(key) + "' must be 16 hex digits");
    return parse_u64(s, 16, key);
}

std::vector<std::uint64_t> TextRecord::uint_list(std::string_view key) const
{
    std::vector<std::uint64_t> out;
    std::string_view s = field(key);
    while (!s.empty()) {
        auto sp = s.find(' ');
        out.push_back(parse_u64(s.substr(0, sp), 10, key));
        if (sp == std::string_view::npos)
            break;
        s.remove_prefix(sp + 1);
    }
    return out;
}

const BitMatrix& TextRecord::matrix(std::string_view name) const
{
    auto it = matrices_.find(name);
    if (it == matrices_.end())
        throw FormatError("missing matrix '" + std::string(name) + "'");
    return it->second;
}

bool TextRecord::has_matrix(std::string_view name) const
{
    return matrices_.find(name) != matrices_.end();
}

TextWriter::TextWriter(std::string_view magic, int version)
{
    out_ = std::string(magic) + " " + std::to_string(version) + "\n";
}

TextWriter& TextWriter::field(std::string_view key, std::string_view value)
{
    out_ += key;
    out_ += ' ';
    out_ += value;
    out_ += '\n';
    return *this;
}

TextWriter& TextWriter::field(std::string_view key, std::uint64_t value)
{
    return field(key, std::to_string(value));
}

TextWriter& TextWriter::u64_hex(std::string_view key, std::uint64_t value)
{
    std::uint8_t be[8];
    for (int k = 0; k < 8; ++k)
        be[k] = static_cast<std::uint8_t>(value >> (56 - 8 * k));
    return field(key, bytes_to_hex(be));
}

TextWriter& TextWriter::matrix(std::string_view name, const BitMatrix& m)
{
    out_ += write_matrix(name, m);
    return *this;
}

} // namespace cfs::detail
