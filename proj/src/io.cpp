#include "hcube/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

namespace hcube::io {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'H', 'Q', 'D', 'C'};

template <typename T>
void put_le(std::span<std::uint8_t> out, std::size_t offset, T value)
{
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out[offset + i] = static_cast<std::uint8_t>(value >> (8 * i));
    }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset)
{
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        value |= static_cast<T>(bytes[offset + i]) << (8 * i);
    }
    return value;
}

} // namespace

std::vector<std::uint8_t> serialize(const Decomposition& d)
{
    check_shape(d);
    std::vector<std::uint8_t> out(kHeaderSize + d.labels.size(), 0);
    std::copy(kMagic.begin(), kMagic.end(), out.begin());
    put_le<std::uint32_t>(out, 4, kFormatVersion);
    out[8] = static_cast<std::uint8_t>(d.n);
    out[9] = static_cast<std::uint8_t>(d.k);
    out[10] = static_cast<std::uint8_t>(d.kind);
    put_le<std::uint64_t>(out, 12, d.labels.size());
    std::copy(d.labels.begin(), d.labels.end(), out.begin() + kHeaderSize);
    return out;
}

Decomposition deserialize(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < kHeaderSize) {
        throw ParseError("truncated header: " + std::to_string(bytes.size()) + " bytes");
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw ParseError("bad magic, not a decomposition file");
    }
    if (const auto version = get_le<std::uint32_t>(bytes, 4); version != kFormatVersion) {
        throw ParseError("unsupported format version " + std::to_string(version));
    }
    if (bytes[11] != 0) {
        throw ParseError("reserved header byte is not zero");
    }
    if (bytes[10] > 1) {
        throw ParseError("unknown kind " + std::to_string(bytes[10]));
    }
    Decomposition d;
    d.n = bytes[8];
    d.k = bytes[9];
    d.kind = static_cast<Kind>(bytes[10]);
    if (d.n == 0 || d.n > kHardMaxDimension) {
        throw ParseError("dimension " + std::to_string(d.n) + " out of range");
    }
    const std::uint64_t expected = std::uint64_t{d.n} << (d.n - 1);
    const auto count = get_le<std::uint64_t>(bytes, 12);
    if (count != expected) {
        throw ParseError("label count " + std::to_string(count) + " does not match n=" +
                         std::to_string(d.n));
    }
    const std::size_t body = bytes.size() - kHeaderSize;
    if (body < count) {
        throw ParseError("truncated labels: " + std::to_string(body) + " of " +
                         std::to_string(count) + " bytes");
    }
    if (body > count) {
        throw ParseError("trailing bytes after labels");
    }
    d.labels.assign(bytes.begin() + kHeaderSize, bytes.end());
    try {
        check_shape(d);
    } catch (const StructuralError& e) {
        throw ParseError(e.what());
    }
    return d;
}

void write_file(const std::filesystem::path& path, const Decomposition& d)
{
    const auto bytes = serialize(d);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write to " + path.string() + " failed");
    }
}

Decomposition read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read from " + path.string() + " failed");
    }
    return deserialize(bytes);
}

std::string to_dot(const Decomposition& d)
{
    check_shape(d);
    const Dimension n = d.dimension();
    std::ostringstream os;
    os << "graph Q" << d.n << " {\n";
    for (EdgeId id = 0; id < d.labels.size(); ++id) {
        const Edge e = edge_from_id(id, n);
        os << "  " << e.u << " -- " << e.v() << " [tree=" << unsigned{d.labels[id]} << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_edgelist(const Decomposition& d)
{
    check_shape(d);
    const Dimension n = d.dimension();
    std::ostringstream os;
    for (EdgeId id = 0; id < d.labels.size(); ++id) {
        const Edge e = edge_from_id(id, n);
        os << e.u << ' ' << e.v() << ' ' << unsigned{d.labels[id]} << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const Decomposition& d)
{
    check_shape(d);
    const Dimension n = d.dimension();
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId id = 0; id < d.labels.size(); ++id) {
        const Edge e = edge_from_id(id, n);
        edges.push_back({e.u, e.v()});
    }
    return {
        {"format_version", kFormatVersion},
        {"n", d.n},
        {"k", d.k},
        {"kind", std::string(to_string(d.kind))},
        {"labels", d.labels},
        {"edges", std::move(edges)},
    };
}

nlohmann::json to_json(const VerifyReport& r)
{
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& t : r.trees) {
        trees.push_back({
            {"label", t.label},
            {"edges", t.edges},
            {"cardinality_ok", t.cardinality_ok},
            {"spans_all", t.spans_all},
            {"connected", t.connected},
            {"ok", t.ok()},
        });
    }
    const auto& l = r.leftover;
    return {
        {"n", r.n},
        {"k", r.k},
        {"kind", std::string(to_string(r.kind))},
        {"partition_ok", r.partition_ok},
        {"trees", std::move(trees)},
        {"leftover",
         {
             {"size", l.size},
             {"expected_size", l.expected_size},
             {"is_matching", l.is_matching},
             {"is_forest", l.is_forest},
             {"components", l.components},
             {"expected_components", l.expected_components},
             {"ok", l.ok},
         }},
        {"overall", r.overall},
    };
}

nlohmann::json to_json(const BoundsReport& b)
{
    return {
        {"n", b.n},
        {"vertices", b.vertices},
        {"edges", b.edges},
        {"sigma", b.sigma},
        {"arboricity", b.arboricity},
        {"tau", b.tau},
        {"leftover", b.leftover},
        {"trivial_upper", b.trivial_upper},
        {"trivial_lower", b.trivial_lower},
        {"chain_holds", b.chain_holds()},
    };
}

nlohmann::json to_json(const BroadcastMetrics& m)
{
    return {
        {"root", m.root},
        {"depths", m.depths},
        {"max_link_load", m.max_link_load},
        {"total_time", m.total_time},
    };
}

} // namespace hcube::io
