#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcube/cli.hpp"
#include "hcube/construct.hpp"
#include "hcube/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace hcube;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "hcube_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

const char* kQ3EdgeList = "0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n3 7\n4 5\n4 6\n5 7\n6 7\n";

} // namespace

TEST_CASE("construct writes a file and prints a summary")
{
    const auto path = scratch("q6.dec");
    const Result r = run({"construct", "-n", "6", "-o", path.string()});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("k=3") != std::string::npos);
    CHECK(r.out.find("edges=192") != std::string::npos);
    const Decomposition d = io::read_file(path);
    CHECK(d.labels.size() == 192);
    CHECK(d.k == 3);
}

TEST_CASE("construct is byte-identical across invocations")
{
    const auto a = scratch("q5a.dec");
    const auto b = scratch("q5b.dec");
    CHECK(run({"construct", "-n", "5", "-o", a.string()}).code == 0);
    CHECK(run({"construct", "--dimension", "5", "--output", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("construct argument errors")
{
    CHECK(run({"construct", "-n", "0"}).code == cli::kUsage);
    CHECK(run({"construct"}).code == cli::kUsage);
    CHECK(run({"construct", "-n", "abc"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"construct", "-n", "25"}).code == cli::kCap);
    CHECK(run({"construct", "-n", "9", "--cap-override", "8"}).code == cli::kCap);
    CHECK(run({"construct", "-n", "3", "-o", "/nonexistent-dir/q.dec"}).code == cli::kIo);
    CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("verify exit codes")
{
    const auto path = scratch("q7.dec");
    CHECK(run({"construct", "-n", "7", "-o", path.string()}).code == 0);
    const Result ok = run({"verify", path.string()});
    CHECK(ok.code == cli::kSuccess);
    CHECK(ok.out.find("overall: PASS") != std::string::npos);

    const Result json = run({"verify", path.string(), "--format", "json"});
    CHECK(json.code == cli::kSuccess);
    CHECK(nlohmann::json::parse(json.out)["overall"] == true);

    std::string bytes = slurp(path);
    const auto truncated = scratch("q7_truncated.dec");
    write_text(truncated, bytes.substr(0, bytes.size() - 5));
    CHECK(run({"verify", truncated.string()}).code == cli::kParse);

    const auto mutated = scratch("q7_mutated.dec");
    bytes[io::kHeaderSize + 10] = static_cast<char>((bytes[io::kHeaderSize + 10] + 1) % 4);
    write_text(mutated, bytes);
    const Result bad = run({"verify", mutated.string()});
    CHECK(bad.code == cli::kVerificationFailed);
    CHECK(bad.out.find("overall: FAIL") != std::string::npos);

    CHECK(run({"verify", scratch("missing.dec").string()}).code == cli::kIo);
}

TEST_CASE("info")
{
    const Result q9 = run({"info", "-n", "9"});
    CHECK(q9.code == 0);
    CHECK(q9.out.find("sigma=4\n") != std::string::npos);
    CHECK(q9.out.find("arboricity=5\n") != std::string::npos);
    CHECK(q9.out.find("tau=5\n") != std::string::npos);
    CHECK(q9.out.find("leftover=260\n") != std::string::npos);
    CHECK(q9.out.find("holds") != std::string::npos);

    const Result q2 = run({"info", "-n", "2"});
    CHECK(q2.out.find("sigma=1\n") != std::string::npos);
    CHECK(q2.out.find("leftover=1\n") != std::string::npos);

    CHECK(run({"info", "-n", "1"}).out.find("sigma=0\n") != std::string::npos);
    CHECK(run({"info", "-n", "0"}).code == cli::kUsage);
    CHECK(nlohmann::json::parse(run({"info", "-n", "4", "--format", "json"}).out)["tau"] == 3);
}

TEST_CASE("export formats")
{
    const auto path = scratch("q2.dec");
    CHECK(run({"construct", "-n", "2", "-o", path.string()}).code == 0);

    const Result edgelist = run({"export", path.string(), "--format", "edgelist"});
    CHECK(edgelist.code == 0);
    CHECK(edgelist.out == "0 1 1\n2 3 1\n0 2 0\n1 3 1\n");

    const Result doc = run({"export", path.string(), "--format", "json-doc"});
    const auto json = nlohmann::json::parse(doc.out);
    CHECK(json["labels"].size() == 4);
    std::multiset<int> labels(json["labels"].begin(), json["labels"].end());
    CHECK(labels == std::multiset<int>{1, 1, 1, 0});

    const auto dot_path = scratch("q2.dot");
    CHECK(run({"export", path.string(), "--format", "dot", "-o", dot_path.string()}).code == 0);
    CHECK(slurp(dot_path).rfind("graph Q2 {", 0) == 0);

    CHECK(run({"export", path.string(), "--format", "svg"}).code == cli::kUsage);
    CHECK(run({"export", path.string()}).code == cli::kUsage);

    const auto q6 = scratch("q6e.dec");
    CHECK(run({"construct", "-n", "6", "-o", q6.string()}).code == 0);
    const std::string lines = run({"export", q6.string(), "--format", "edgelist"}).out;
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 192);
}

TEST_CASE("oracle command")
{
    const auto q3 = scratch("q3.txt");
    write_text(q3, kQ3EdgeList);
    CHECK(run({"oracle", q3.string(), "arboricity"}).out == "arboricity=2\n");
    CHECK(run({"oracle", q3.string(), "packing"}).out == "packing=1\n");

    const auto k4 = scratch("k4.txt");
    write_text(k4, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(run({"oracle", k4.string(), "packing"}).out == "packing=2\n");

    // 11 vertices: within the subset cap, over the partition cap.
    const auto path11 = scratch("path11.txt");
    std::string text;
    for (int i = 0; i < 10; ++i) {
        text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    }
    write_text(path11, text);
    const Result capped = run({"oracle", path11.string(), "packing"});
    CHECK(capped.code == cli::kCap);
    CHECK(capped.err.find("cap is 10") != std::string::npos);
    CHECK(run({"oracle", path11.string(), "arboricity"}).out == "arboricity=1\n");

    const auto garbage = scratch("garbage.txt");
    write_text(garbage, "0 1\nhello\n");
    CHECK(run({"oracle", garbage.string(), "packing"}).code == cli::kParse);
    CHECK(run({"oracle", q3.string(), "treewidth"}).code == cli::kUsage);
}

TEST_CASE("broadcast command")
{
    const Result r = run({"broadcast", "-n", "4", "--root", "0", "--parts", "4", "--hop-cost", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max_link_load=1\n") != std::string::npos);

    const auto path = scratch("q4b.dec");
    CHECK(run({"construct", "-n", "4", "-o", path.string()}).code == 0);
    const Result from_file = run({"broadcast", path.string(), "--parts", "4", "--format", "json"});
    const auto json = nlohmann::json::parse(from_file.out);
    CHECK(json["max_link_load"] == 1);

    CHECK(run({"broadcast", "-n", "1"}).code != 0);
    CHECK(run({"broadcast"}).code == cli::kUsage);
    CHECK(run({"broadcast", "-n", "4", "--parts", "0"}).code == cli::kUsage);
}

TEST_CASE("the installed binary honours the exit-code contract")
{
    const auto path = scratch("bin_q8.dec");
    const std::string bin = HCUBE_CLI_PATH;
    const auto status = [](const std::string& cmd) {
        const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status(bin + " construct -n 8 -o " + path.string()) == 0);
    CHECK(status(bin + " verify " + path.string()) == 0);
    CHECK(status(bin + " construct -n 0") == cli::kUsage);
}
