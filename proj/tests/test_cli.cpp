#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "plim/cli.hpp"
#include "plim/io.hpp"
#include "support.hpp"

using namespace plim;
using namespace plim::test;
namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir;

    Workspace() : dir(fs::temp_directory_path() / ("plim_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir);
        write_file(dir / "t.plm", emit_plmap(tent()));
        write_file(dir / "id.plm", emit_plmap(identity()));
        write_file(dir / "halve.plm", emit_plmap(halve()));
        write_file(dir / "t2.plm", emit_plmap(compose(tent(), tent())));
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string operator()(const char* name) const { return (dir / name).string(); }
};

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = cli::main(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("commute prints the defect") {
    Workspace ws;
    auto r = run({"commute", ws("t.plm"), ws("t.plm")});
    CHECK(r.status == cli::exit_ok);
    CHECK(r.out == "defect 0/1\nwitness 0/1\n");

    auto bad = run({"commute", ws("t.plm"), ws("halve.plm")});
    CHECK(bad.status == cli::exit_hypothesis_failure);
    CHECK(bad.out == "defect 1/1\nwitness 1/1\n");
}

TEST_CASE("fix, eval and compose") {
    Workspace ws;
    CHECK(run({"fix", ws("t.plm")}).out == "{0/1, 2/3}\n");
    CHECK(run({"fix", ws("id.plm")}).out == "{[0/1, 1/1]}\n");
    CHECK(run({"eval", ws("t.plm"), "1/3"}).out == "2/3\n");
    auto c = run({"compose", ws("t.plm"), ws("t.plm")});
    CHECK(c.status == cli::exit_ok);
    CHECK(c.out == emit_plmap(compose(tent(), tent())));
    auto over = run({"compose", ws("t2.plm"), ws("t2.plm"), "--budget", "8"});
    CHECK(over.status == cli::exit_error);
    CHECK(over.err.find("error[budget-exceeded]") != std::string::npos);
}

TEST_CASE("threads writes a lexicographic dump") {
    Workspace ws;
    auto r = run({"threads", ws("t.plm"), "--root", "2/3", "--depth", "2"});
    CHECK(r.status == cli::exit_ok);
    CHECK(r.out == "threads v1 depth=2 root=2/3\n2/3 1/3\n2/3 2/3\n");

    auto cut = run({"threads", ws("t.plm"), "--root", "2/3", "--depth", "4", "--max-branches", "3"});
    CHECK(cut.err.find("truncated") != std::string::npos);
    CHECK(std::count(cut.out.begin(), cut.out.end(), '\n') == 4);

    auto par = run({"threads", ws("t.plm"), "--root", "1/5", "--depth", "9", "--workers", "4"});
    CHECK(par.out == run({"threads", ws("t.plm"), "--root", "1/5", "--depth", "9"}).out);

    CHECK(run({"threads", ws("t.plm"), "--depth", "2"}).status == cli::exit_error);
}

TEST_CASE("induce and mouron over a thread file") {
    Workspace ws;
    auto dump = run({"threads", ws("t2.plm"), "--root", "1/2", "--depth", "4", "--out", ws("th.txt")});
    CHECK(dump.status == cli::exit_ok);
    CHECK(dump.out.empty());

    auto m = run({"mouron", ws("t.plm"), ws("t.plm"), ws("th.txt")});
    CHECK(m.status == cli::exit_ok);
    CHECK(m.out == "mouron 64/64\n");

    auto i = run({"induce", ws("t.plm"), ws("t2.plm"), ws("th.txt")});
    CHECK(i.status == cli::exit_ok);
    CHECK(i.out.rfind("threads v1 depth=4 root=1/1\n", 0) == 0);

    auto nc = run({"induce", ws("halve.plm"), ws("t2.plm"), ws("th.txt")});
    CHECK(nc.status == cli::exit_error);
    CHECK(nc.err.find("error[not-commuting]") != std::string::npos);

    // bonding map of the file is T², not T∘halve
    auto mm = run({"mouron", ws("t.plm"), ws("halve.plm"), ws("th.txt")});
    CHECK(mm.status == cli::exit_error);
}

TEST_CASE("certify-pair exit codes") {
    Workspace ws;
    auto r = run({"certify-pair", ws("t.plm"), ws("t.plm"), "--depth", "3"});
    CHECK(r.status == cli::exit_hypothesis_failure);
    CHECK(r.out.find("\"hypotheses_met\": false") != std::string::npos);
    auto second = run({"certify-pair", ws("t.plm"), ws("t.plm"), "--depth", "3"});
    CHECK(second.out == r.out);

    auto nc = run({"certify-pair", ws("t.plm"), ws("halve.plm")});
    CHECK(nc.status == cli::exit_hypothesis_failure);
    CHECK(nc.out.find("not-applicable") != std::string::npos);
}

TEST_CASE("certify-seq") {
    Workspace ws;
    auto r = run({"certify-seq", ws("t.plm"), ws("t.plm"), ws("t.plm"), ws("t.plm"), "--slope-bound", "1"});
    CHECK(r.status == cli::exit_hypothesis_failure);
    CHECK(r.out.find("stages-commute-exactly") != std::string::npos);
    CHECK(r.out.find("\"slope_bound\": \"1/1\"") != std::string::npos);
    CHECK(run({"certify-seq", ws("t.plm"), ws("t.plm")}).status == cli::exit_error);
    CHECK(run({"certify-seq", ws("t.plm"), ws("t.plm"), ws("t.plm"), ws("t.plm"), "--slope-bound", "0"}).status ==
          cli::exit_error);
}

TEST_CASE("plot") {
    Workspace ws;
    auto r = run({"plot", ws("t.plm")});
    CHECK(r.status == cli::exit_ok);
    CHECK(r.out.find("220.000,20.000") != std::string::npos);
    run({"threads", ws("t.plm"), "--root", "2/3", "--depth", "2", "--out", ws("th.txt")});
    auto s = run({"plot", ws("t.plm"), "--threads", ws("th.txt"), "--out", ws("th.svg")});
    CHECK(s.status == cli::exit_ok);
    auto svg = read_file(ws("th.svg"));
    CHECK(svg.find("class=\"thread\"") != std::string::npos);
}

TEST_CASE("operational errors") {
    Workspace ws;
    auto missing = run({"fix", ws("nope.plm")});
    CHECK(missing.status == cli::exit_error);
    CHECK(missing.err.find("error[io-error]") != std::string::npos);

    write_file(ws("bad.plm"), "plmap v1 2\n0/1 0/1\n1/1 2/2\n");
    auto bad = run({"fix", ws("bad.plm")});
    CHECK(bad.status == cli::exit_error);
    CHECK(bad.err.find("error[parse-error]: line 3, column 5") != std::string::npos);

    CHECK(run({"bogus"}).status == cli::exit_error);
    CHECK(run({}).status == cli::exit_error);
    CHECK(run({"--help"}).status == cli::exit_ok);
    CHECK(run({"threads", ws("t.plm"), "--root", "2/4"}).status == cli::exit_error);
}

TEST_CASE("the installed binary honours the exit-status contract") {
    Workspace ws;
    auto status = [&](const std::string& args) {
        int raw = std::system((std::string(PLIM_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status("commute " + ws("t.plm") + " " + ws("t.plm")) == 0);
    CHECK(status("certify-pair " + ws("t.plm") + " " + ws("t.plm")) == 2);
    CHECK(status("fix " + ws("missing.plm")) == 1);
}
