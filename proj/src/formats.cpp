#include "hdesign/formats.hpp"

#include "hdesign/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hdesign {

namespace {

struct Token {
    std::string_view text;
    int line = 0;
};

// Splits into lines of tokens with comments removed; blank lines dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text)
{
    std::vector<std::vector<Token>> lines;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            if (j > i)
                toks.push_back({line.substr(i, j - i), lineno});
            i = j;
        }
        if (!toks.empty())
            lines.push_back(std::move(toks));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

long long to_int(const Token& t)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        fail(t.line, "expected an integer, got '" + std::string(t.text) + "'");
    return v;
}

class Cursor {
public:
    explicit Cursor(std::vector<std::vector<Token>> lines)
        : lines_(std::move(lines))
    {
    }

    const std::vector<Token>& next(const char* what)
    {
        if (at_ >= lines_.size())
            throw ParseError(std::string("unexpected end of input: expected ") + what);
        return lines_[at_++];
    }
    bool done() const { return at_ >= lines_.size(); }
    int line() const { return at_ < lines_.size() ? lines_[at_].front().line : 0; }

private:
    std::vector<std::vector<Token>> lines_;
    std::size_t at_ = 0;
};

void expect_size(const std::vector<Token>& toks, std::size_t n, const char* what)
{
    if (toks.size() != n)
        fail(toks.front().line, std::string("expected ") + what);
}

constexpr long long kMaxVertices = 1 << 20;

SimpleGraph read_graph_body(Cursor& cur, long long n, long long m, int header_line)
{
    if (n < 0 || n > kMaxVertices)
        fail(header_line, "vertex count out of range");
    if (m < 0 || m > n * (n - 1) / 2)
        fail(header_line, "edge count out of range");
    SimpleGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        const auto& toks = cur.next("an edge line");
        expect_size(toks, 2, "'u v'");
        long long u = to_int(toks[0]);
        long long v = to_int(toks[1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(toks[0].line, "endpoint out of range");
        if (u == v)
            fail(toks[0].line, "loop");
        if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
            fail(toks[0].line, "duplicate edge");
    }
    return g;
}

} // namespace

SimpleGraph parse_edge_list(std::string_view text)
{
    Cursor cur(tokenize(text));
    const auto& head = cur.next("header 'n m'");
    expect_size(head, 2, "header 'n m'");
    SimpleGraph g = read_graph_body(cur, to_int(head[0]), to_int(head[1]), head[0].line);
    if (!cur.done())
        fail(cur.line(), "trailing content");
    return g;
}

std::string format_edge_list(const SimpleGraph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Packing parse_packing(std::string_view text)
{
    Cursor cur(tokenize(text));
    const auto& head = cur.next("'packing <host> <copies>'");
    if (head.size() != 3 || head[0].text != "packing")
        fail(head.front().line, "expected 'packing <host> <copies>'");
    long long host = to_int(head[1]);
    long long count = to_int(head[2]);
    if (host < 0 || host > kMaxVertices || count < 0)
        fail(head[0].line, "bad packing header");

    const auto& ph = cur.next("'pattern <order> <edges> <name>'");
    if (ph.size() != 4 || ph[0].text != "pattern")
        fail(ph.front().line, "expected 'pattern <order> <edges> <name>'");
    SimpleGraph pg = read_graph_body(cur, to_int(ph[1]), to_int(ph[2]), ph[0].line);
    std::string name = ph[3].text == "-" ? std::string() : std::string(ph[3].text);
    Packing p;
    p.host = static_cast<int>(host);
    try {
        p.pattern = analyze_pattern(pg, name);
    } catch (const Error& e) {
        fail(ph[0].line, e.what());
    }

    const auto& ch = cur.next("'copies <count>'");
    if (ch.size() != 2 || ch[0].text != "copies")
        fail(ch.front().line, "expected 'copies <count>'");
    if (to_int(ch[1]) != count)
        fail(ch[0].line, "copy count disagrees with header");
    for (long long c = 0; c < count; ++c) {
        const auto& toks = cur.next("a copy line");
        if (static_cast<int>(toks.size()) != pg.order())
            fail(toks.front().line, "copy line must list " + std::to_string(pg.order()) + " vertices");
        Embedding emb;
        for (const Token& t : toks) {
            long long x = to_int(t);
            if (x < 0 || x >= host)
                fail(t.line, "copy vertex out of range");
            emb.image.push_back(static_cast<int>(x));
        }
        p.copies.push_back(std::move(emb));
    }
    if (!cur.done())
        fail(cur.line(), "trailing content");
    return p;
}

std::string format_packing(const Packing& p)
{
    std::ostringstream out;
    out << "packing " << p.host << ' ' << p.copies.size() << '\n';
    out << "pattern " << p.pattern.graph.order() << ' ' << p.pattern.graph.size() << ' '
        << (p.pattern.name.empty() ? std::string("-") : p.pattern.name) << '\n';
    for (const Edge& e : p.pattern.graph.edges())
        out << e.u << ' ' << e.v << '\n';
    out << "copies " << p.copies.size() << '\n';
    for (const Embedding& emb : p.copies) {
        for (std::size_t i = 0; i < emb.size(); ++i)
            out << (i ? " " : "") << emb[i];
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw Error("write failed for " + path.string());
}

} // namespace hdesign
