#include "archcalc/graphbridge.hpp"

#include "archcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace archcalc {

Architecture graph_to_bnc(const Graph& g)
{
    if (g.vertices.empty() && g.edges.empty())
        return empty_architecture();
    Architecture a;
    a.name = "G";
    a.universe.assign(g.vertices.begin(), g.vertices.end());
    Relation e{"E", 2, {}};
    for (const auto& [from, to] : g.edges)
        e.tuples.insert({from, to});
    a.relations.push_back(std::move(e));
    return a;
}

Graph bnc_to_graph(const Architecture& a)
{
    if (!a.functions.empty() || a.relations.size() > 1 || (a.relations.size() == 1 && a.relations[0].arity != 2))
        throw Error(ErrorCode::NotSingleRelationBnc,
                    "expected a B&C architecture with one binary relation, got " + std::to_string(a.relations.size())
                        + " relations and " + std::to_string(a.functions.size()) + " functions");
    Graph g;
    g.vertices = a.universe_set();
    if (!a.relations.empty())
        for (const auto& t : a.relations[0].tuples)
            g.edges.emplace(t[0], t[1]);
    return g;
}

namespace {

enum class Tok { Ident, Arrow, LBrace, RBrace, Semi, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

const char* describe(Tok t)
{
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Arrow: return "'->'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (; k > 0; --k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        std::size_t l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", l, cl});
            advance(2);
            continue;
        }
        if (c == '{' || c == '}' || c == ';') {
            out.push_back({c == '{' ? Tok::LBrace : c == '}' ? Tok::RBrace : Tok::Semi, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

} // namespace

Graph parse_dot_subset(std::string_view text)
{
    auto tokens = tokenize(text);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return tokens[pos]; };
    auto fail = [](const Token& at, const std::string& expected) {
        std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
        throw ParseError(at.line, at.column, "expected " + expected + ", found " + found);
    };
    auto expect = [&](Tok kind) -> const Token& {
        if (peek().kind != kind)
            fail(peek(), describe(kind));
        return tokens[pos++];
    };

    if (peek().kind != Tok::Ident || peek().text != "digraph")
        fail(peek(), "'digraph'");
    ++pos;
    expect(Tok::Ident);
    expect(Tok::LBrace);

    Graph g;
    while (peek().kind != Tok::RBrace) {
        if (peek().kind != Tok::Ident)
            fail(peek(), "identifier or '}'");
        ElementId from(tokens[pos++].text);
        g.vertices.insert(from);
        while (peek().kind == Tok::Arrow) {
            ++pos;
            if (peek().kind != Tok::Ident)
                fail(peek(), "identifier after '->'");
            ElementId to(tokens[pos++].text);
            g.vertices.insert(to);
            g.edges.emplace(from, to);
            from = to;
        }
        if (peek().kind == Tok::Semi)
            ++pos;
        else if (peek().kind != Tok::RBrace)
            fail(peek(), "';', '->' or '}'");
    }
    expect(Tok::RBrace);
    expect(Tok::End);
    return g;
}

namespace {

bool dot_identifier(const std::string& s)
{
    if (s.empty())
        return false;
    auto uc = [](char c) { return static_cast<unsigned char>(c); };
    if (std::isdigit(uc(s[0])))
        return std::all_of(s.begin(), s.end(), [&](char c) { return std::isdigit(uc(c)); });
    return (std::isalpha(uc(s[0])) || s[0] == '_')
        && std::all_of(s.begin(), s.end(), [&](char c) { return std::isalnum(uc(c)) || c == '_'; });
}

} // namespace

std::string to_dot(const Graph& g, std::string_view name)
{
    for (const auto& v : g.vertices)
        if (!dot_identifier(v.str()))
            throw Error(ErrorCode::InvalidArgument, "element '" + v.str() + "' is not a DOT identifier");
    std::string out = "digraph " + std::string(name) + " {\n";
    for (const auto& v : g.vertices)
        out += "  " + v.str() + ";\n";
    for (const auto& [from, to] : g.edges)
        out += "  " + from.str() + " -> " + to.str() + ";\n";
    return out + "}\n";
}

} // namespace archcalc
