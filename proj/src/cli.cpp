#include "hcube/cli.hpp"

#include "hcube/bounds.hpp"
#include "hcube/broadcast.hpp"
#include "hcube/construct.hpp"
#include "hcube/io.hpp"
#include "hcube/oracle.hpp"
#include "hcube/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

namespace hcube::cli {
namespace {

struct Options {
    unsigned n = 0;
    unsigned cap = kDefaultMaxDimension;
    std::string output;
    std::string input;
    std::string format;
    std::string which;
    VertexId root = 0;
    unsigned parts = 1;
    double hop_cost = 1.0;
};

class UsageError : public Error {
public:
    using Error::Error;
};

Dimension checked_dimension(const Options& o)
{
    if (o.n == 0) {
        throw UsageError("dimension -n must be at least 1");
    }
    return Dimension(o.n, o.cap);
}

void emit(std::ostream& out, const std::string& text, const std::string& path)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::trunc);
    if (!file || !(file << text)) {
        throw IoError("cannot write " + path);
    }
}

int cmd_construct(const Options& o, std::ostream& out)
{
    const Dimension dim = checked_dimension(o);
    const Decomposition d = construct(dim.value(), o.cap);
    if (!o.output.empty()) {
        io::write_file(o.output, d);
    }
    out << "n=" << d.n << " k=" << d.k << " kind=" << to_string(d.kind) << " edges=" << d.labels.size()
        << " leftover=" << d.count(kLeftover) << '\n';
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const Decomposition d = io::read_file(o.input);
    const VerifyReport report = verify_decomposition(d);
    if (o.format == "json") {
        out << io::to_json(report).dump(2) << '\n';
    } else {
        out << render_text(report);
    }
    return report.overall ? kSuccess : kVerificationFailed;
}

int cmd_info(const Options& o, std::ostream& out)
{
    const Dimension dim = checked_dimension(o);
    const BoundsReport b = bounds_for(dim.value());
    if (o.format == "json") {
        out << io::to_json(b).dump(2) << '\n';
    } else {
        out << render_text(b);
    }
    return kSuccess;
}

int cmd_export(const Options& o, std::ostream& out)
{
    const Decomposition d = io::read_file(o.input);
    std::string text;
    if (o.format == "dot") {
        text = io::to_dot(d);
    } else if (o.format == "edgelist") {
        text = io::to_edgelist(d);
    } else {
        text = io::to_json(d).dump() + '\n';
    }
    emit(out, text, o.output);
    return kSuccess;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    std::ifstream in(o.input);
    if (!in) {
        throw IoError("cannot open " + o.input);
    }
    const oracle::SmallGraph g = oracle::parse_edge_list(in);
    if (o.which == "arboricity") {
        out << "arboricity=" << oracle::nw_arboricity(g) << '\n';
    } else {
        out << "packing=" << oracle::packing_upper_bound(g) << '\n';
    }
    return kSuccess;
}

int cmd_broadcast(const Options& o, std::ostream& out)
{
    Decomposition d;
    if (!o.input.empty()) {
        d = io::read_file(o.input);
    } else {
        d = construct(checked_dimension(o).value(), o.cap);
    }
    const BroadcastMetrics m = broadcast_metrics(d, o.root, o.parts, o.hop_cost);
    if (o.format == "json") {
        out << io::to_json(m).dump(2) << '\n';
        return kSuccess;
    }
    out << "root=" << m.root << '\n' << "depths=";
    for (std::size_t i = 0; i < m.depths.size(); ++i) {
        out << (i ? "," : "") << m.depths[i];
    }
    out << '\n' << "max_link_load=" << m.max_link_load << '\n' << "time=" << m.total_time << '\n';
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Edge-disjoint spanning tree decompositions of hypercubes"};
    app.require_subcommand(1);
    Options o;

    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap-override", o.cap, "raise or lower the dimension cap (expert)")
            ->check(CLI::Range(1u, kHardMaxDimension));
    };

    auto* construct_cmd = app.add_subcommand("construct", "build the decomposition of Q_n");
    construct_cmd->add_option("-n,--dimension", o.n, "cube dimension")->required();
    construct_cmd->add_option("-o,--output", o.output, "decomposition file to write");
    add_cap(construct_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check a decomposition file");
    verify_cmd->add_option("input", o.input, "decomposition file")->required();
    verify_cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    auto* info_cmd = app.add_subcommand("info", "closed-form invariants of Q_n");
    info_cmd->add_option("-n,--dimension", o.n, "cube dimension")->required();
    info_cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    add_cap(info_cmd);

    auto* export_cmd = app.add_subcommand("export", "convert a decomposition file");
    export_cmd->add_option("input", o.input, "decomposition file")->required();
    export_cmd->add_option("--format", o.format, "dot, edgelist or json-doc")
        ->required()
        ->check(CLI::IsMember({"dot", "edgelist", "json-doc"}));
    export_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force invariants of a small graph");
    oracle_cmd->add_option("input", o.input, "edge list, one \"u v\" per line")->required();
    oracle_cmd->add_option("which", o.which, "arboricity or packing")
        ->required()
        ->check(CLI::IsMember({"arboricity", "packing"}));

    auto* broadcast_cmd = app.add_subcommand("broadcast", "multi-tree broadcast metrics");
    auto* bc_input = broadcast_cmd->add_option("input", o.input, "decomposition file");
    auto* bc_n = broadcast_cmd->add_option("-n,--dimension", o.n, "construct Q_n instead of reading a file");
    bc_input->excludes(bc_n);
    broadcast_cmd->add_option("--root", o.root, "root vertex");
    broadcast_cmd->add_option("--parts", o.parts, "chunks per tree")->check(CLI::PositiveNumber);
    broadcast_cmd->add_option("--hop-cost", o.hop_cost, "time per hop")->check(CLI::NonNegativeNumber);
    broadcast_cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    add_cap(broadcast_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (construct_cmd->parsed()) {
            return cmd_construct(o, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out);
        }
        if (info_cmd->parsed()) {
            return cmd_info(o, out);
        }
        if (export_cmd->parsed()) {
            return cmd_export(o, out);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(o, out);
        }
        if (o.input.empty() && o.n == 0) {
            throw UsageError("broadcast needs an input file or -n");
        }
        return cmd_broadcast(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CapError& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace hcube::cli
