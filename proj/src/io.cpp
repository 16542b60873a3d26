#include "plim/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "plim/error.hpp"

namespace plim {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number; // 1-based
    std::vector<Token> tokens;
};

// Splits into non-empty logical lines with comments removed.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') {
                ++i;
            }
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (text.empty()) {
            break;
        }
    }
    return lines;
}

Rational rational_token(const Line& line, const Token& tok) {
    auto r = parse_canonical_rational(tok.text);
    if (!r) {
        throw ParseError(line.number, tok.column, "non-canonical rational '" + std::string(tok.text) + "'");
    }
    return *r;
}

std::size_t count_token(const Line& line, const Token& tok, std::string_view prefix = {}) {
    std::string_view digits = tok.text.substr(prefix.size());
    if (tok.text.substr(0, prefix.size()) != prefix || digits.empty() || digits.size() > 18 ||
        (digits.size() > 1 && digits.front() == '0') ||
        digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError(line.number, tok.column, "expected " + std::string(prefix) + "<count>, got '" +
                                                      std::string(tok.text) + "'");
    }
    return std::stoull(std::string(digits));
}

std::string pixel(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.get_d());
    return buf;
}

struct Canvas {
    SvgOptions opt;

    std::string x(const Rational& v) const { return pixel(opt.margin + v * opt.scale); }
    std::string y(const Rational& v) const { return pixel(opt.margin + (1 - v) * opt.scale); }

    std::string header() const {
        int side = opt.scale + 2 * opt.margin;
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\""
            << side << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n"
            << "  <rect class=\"frame\" x=\"" << opt.margin << "\" y=\"" << opt.margin << "\" width=\""
            << opt.scale << "\" height=\"" << opt.scale << "\" fill=\"none\" stroke=\"#888\"/>\n";
        return out.str();
    }

    std::string diagonal() const {
        return "  <line class=\"diagonal\" x1=\"" + x(0) + "\" y1=\"" + y(0) + "\" x2=\"" + x(1) + "\" y2=\"" + y(1) +
               "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
    }
};

} // namespace

PLMap parse_plmap(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing header 'plmap v1 <n>'");
    }
    const Line& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0].text != "plmap" || head.tokens[1].text != "v1") {
        throw ParseError(head.number, head.tokens.front().column, "missing header 'plmap v1 <n>'");
    }
    std::size_t n = count_token(head, head.tokens[2]);
    if (lines.size() - 1 < n) {
        const Line& last = lines.back();
        throw ParseError(last.number + 1, 1, "expected " + std::to_string(n) + " breakpoints, found " +
                                                 std::to_string(lines.size() - 1));
    }
    if (lines.size() - 1 > n) {
        const Line& extra = lines[n + 1];
        throw ParseError(extra.number, extra.tokens.front().column, "unexpected content after breakpoints");
    }
    std::vector<Breakpoint> points;
    for (std::size_t i = 1; i <= n; ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) {
            std::size_t col = line.tokens.size() > 2 ? line.tokens[2].column : line.tokens.back().column;
            throw ParseError(line.number, col, "expected '<x> <y>'");
        }
        Rational x = rational_token(line, line.tokens[0]);
        Rational y = rational_token(line, line.tokens[1]);
        points.push_back({UnitRational(std::move(x)), UnitRational(std::move(y))});
    }
    return make_plmap(std::move(points));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::io_error, "cannot write " + path.string());
    }
    out << contents;
    if (!out) {
        throw Error(ErrorCode::io_error, "write failed for " + path.string());
    }
}

PLMap parse_plmap_file(const std::filesystem::path& path) { return parse_plmap(read_file(path)); }

std::string emit_plmap(const PLMap& m) {
    std::string out = "plmap v1 " + std::to_string(m.breakpoints().size()) + "\n";
    for (const auto& p : m.breakpoints()) {
        out += to_string(p.x) + " " + to_string(p.y) + "\n";
    }
    return out;
}

std::string emit_threads(std::span<const Thread> threads, std::size_t depth, const UnitRational& root) {
    std::string out = "threads v1 depth=" + std::to_string(depth) + " root=" + to_string(root) + "\n";
    for (const auto& t : threads) {
        bool first = true;
        for (const auto& x : t.coords()) {
            if (!first) {
                out += ' ';
            }
            first = false;
            out += to_string(x);
        }
        out += '\n';
    }
    return out;
}

std::string emit_threads(const BranchTree& tree) { return emit_threads(tree.branches, tree.depth, tree.root); }

ThreadDump parse_threads(std::string_view text, const PLMap& bonding) {
    auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing header 'threads v1 depth=<d> root=<p>/<q>'");
    }
    const Line& head = lines.front();
    if (head.tokens.size() != 4 || head.tokens[0].text != "threads" || head.tokens[1].text != "v1" ||
        head.tokens[3].text.substr(0, 5) != "root=") {
        throw ParseError(head.number, head.tokens.front().column,
                         "missing header 'threads v1 depth=<d> root=<p>/<q>'");
    }
    ThreadDump dump;
    dump.depth = count_token(head, head.tokens[2], "depth=");
    if (dump.depth < 1) {
        throw ParseError(head.number, head.tokens[2].column, "depth must be >= 1");
    }
    Token root_tok{head.tokens[3].text.substr(5), head.tokens[3].column + 5};
    dump.root = UnitRational(rational_token(head, root_tok));

    auto shared = std::make_shared<const PLMap>(bonding);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != dump.depth) {
            throw ParseError(line.number, line.tokens.front().column,
                             "expected " + std::to_string(dump.depth) + " coordinates");
        }
        std::vector<UnitRational> coords;
        for (const auto& tok : line.tokens) {
            coords.emplace_back(rational_token(line, tok));
        }
        if (coords.front() != dump.root) {
            throw ParseError(line.number, line.tokens.front().column, "thread does not start at the root");
        }
        dump.threads.push_back(Thread::make(shared, std::move(coords)));
    }
    return dump;
}

ThreadDump parse_threads_file(const std::filesystem::path& path, const PLMap& bonding) {
    return parse_threads(read_file(path), bonding);
}

std::string svg_plot(const PLMap& m, const SvgOptions& options) {
    Canvas c{options};
    std::string out = c.header() + c.diagonal();
    out += "  <polyline class=\"graph\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& p : m.breakpoints()) {
        if (!first) {
            out += ' ';
        }
        first = false;
        out += c.x(p.x.value()) + "," + c.y(p.y.value());
    }
    out += "\"/>\n";
    IntervalSet fix = fixed_points(m);
    for (const auto& iv : fix.intervals()) {
        if (iv.is_point()) {
            out += "  <circle class=\"fixed-point\" cx=\"" + c.x(iv.lo.value()) + "\" cy=\"" + c.y(iv.lo.value()) +
                   "\" r=\"4\" fill=\"#c0392b\"/>\n";
        } else {
            out += "  <line class=\"fixed-interval\" x1=\"" + c.x(iv.lo.value()) + "\" y1=\"" + c.y(iv.lo.value()) +
                   "\" x2=\"" + c.x(iv.hi.value()) + "\" y2=\"" + c.y(iv.hi.value()) +
                   "\" stroke=\"#c0392b\" stroke-width=\"5\"/>\n";
        }
    }
    return out + "</svg>\n";
}

std::string svg_plot(std::span<const Thread> threads, const SvgOptions& options) {
    Canvas c{options};
    std::set<std::pair<UnitRational, UnitRational>> points;
    for (const auto& t : threads) {
        if (t.depth() >= 2) {
            points.emplace(t[0], t[1]);
        }
    }
    std::string out = c.header() + c.diagonal();
    for (const auto& [x1, x2] : points) {
        out += "  <circle class=\"thread\" cx=\"" + c.x(x1.value()) + "\" cy=\"" + c.y(x2.value()) +
               "\" r=\"2\" fill=\"#1f4e9c\"/>\n";
    }
    return out + "</svg>\n";
}

} // namespace plim
