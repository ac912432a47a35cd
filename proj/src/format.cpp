#include "archcalc/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <tuple>

namespace archcalc {

namespace {

constexpr std::string_view middle_dot = "\xC2\xB7";

// Length in bytes of the token character starting at `s[i]`, or 0.
std::size_t token_char(std::string_view s, std::size_t i)
{
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isalnum(c) || c == '_' || c == '.' || c == '-')
        return 1;
    if (s.substr(i, middle_dot.size()) == middle_dot)
        return middle_dot.size();
    return 0;
}

std::string sanitize(std::string_view name, std::string_view fallback)
{
    std::string out;
    for (std::size_t i = 0; i < name.size();) {
        if (std::size_t n = token_char(name, i)) {
            out.append(name.substr(i, n));
            i += n;
        }
        else {
            out.push_back('_');
            ++i;
        }
    }
    return out.empty() ? std::string(fallback) : out;
}

std::string element_token(const ElementId& e)
{
    if (!is_format_token(e.str()))
        throw Error(ErrorCode::SchemaError, "element '" + e.str() + "' cannot be written as a token");
    return e.str();
}

std::string tuple_text(const Tuple& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            out += ", ";
        out += element_token(t[i]);
    }
    return out + ")";
}

// Canonical relation/function order plus the unique names assigned to them,
// indexed by their position in the original architecture.
struct CanonicalArch {
    std::string text;
    std::vector<std::string> relation_names;
    std::vector<std::string> function_names;
};

template <class Item, class Key>
std::vector<std::size_t> canonical_order(const std::vector<Item>& items, std::vector<std::string>& names, Key key)
{
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return key(items[a], names[a]) < key(items[b], names[b]);
    });

    std::set<std::string> taken(names.begin(), names.end());
    std::set<std::string> used;
    for (std::size_t i : order) {
        if (used.insert(names[i]).second)
            continue;
        for (std::size_t k = 2;; ++k) {
            std::string candidate = names[i] + "_" + std::to_string(k);
            if (!taken.contains(candidate) && !used.contains(candidate)) {
                names[i] = candidate;
                used.insert(candidate);
                break;
            }
        }
    }
    // Final names are unique; ordering by them keeps re-serialization stable.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    return order;
}

CanonicalArch canonical(const Architecture& arch)
{
    CanonicalArch out;
    for (const auto& r : arch.relations)
        out.relation_names.push_back(sanitize(r.name, "r"));
    for (const auto& f : arch.functions)
        out.function_names.push_back(sanitize(f.name, "f"));

    auto rel_order = canonical_order(arch.relations, out.relation_names, [](const Relation& r, const std::string& n) {
        return std::tie(n, r.arity, r.tuples);
    });
    auto fun_order = canonical_order(arch.functions, out.function_names, [](const FunctionTable& f, const std::string& n) {
        return std::tie(n, f.arity, f.mapping);
    });

    std::string& s = out.text;
    s += "arch " + sanitize(arch.name, "unnamed") + "\n";
    std::vector<ElementId> elems(arch.universe.begin(), arch.universe.end());
    std::sort(elems.begin(), elems.end());
    s += "elements:";
    for (const auto& e : elems)
        s += " " + element_token(e);
    s += "\n";
    for (std::size_t i : rel_order) {
        const auto& r = arch.relations[i];
        s += "rel " + out.relation_names[i] + "/" + std::to_string(r.arity) + ":\n";
        for (const auto& t : r.tuples)
            s += "  " + tuple_text(t) + "\n";
    }
    for (std::size_t i : fun_order) {
        const auto& f = arch.functions[i];
        s += "fun " + out.function_names[i] + "/" + std::to_string(f.arity) + ":\n";
        for (const auto& [args, v] : f.mapping)
            s += "  " + tuple_text(args) + " -> " + element_token(v) + "\n";
    }
    return out;
}

std::string selection_text(const Architecture& parent, const CanonicalArch& names, const ElementSet& elements,
                           const std::set<std::size_t>& rels, const std::set<std::size_t>& funs)
{
    (void)parent;
    std::string s = "elements:";
    for (const auto& e : elements)
        s += " " + element_token(e);
    s += "\nrelations:";
    std::set<std::string> rn;
    for (auto i : rels)
        rn.insert(names.relation_names[i]);
    for (const auto& n : rn)
        s += " " + n;
    s += "\nfunctions:";
    std::set<std::string> fn;
    for (auto i : funs)
        fn.insert(names.function_names[i]);
    for (const auto& n : fn)
        s += " " + n;
    return s + "\n";
}

// ---------------------------------------------------------------------------
// Parsing

struct Line {
    std::size_t number;
    std::string_view text;
};

class Scanner {
public:
    explicit Scanner(const Line& line) : text_(line.text), line_(line.number) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    bool try_literal(std::string_view lit)
    {
        skip_ws();
        if (text_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view lit)
    {
        if (!try_literal(lit))
            fail("'" + std::string(lit) + "'");
    }

    std::string token(const std::string& what)
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size())
            if (std::size_t n = token_char(text_, pos_))
                pos_ += n;
            else
                break;
        if (pos_ == start)
            fail(what);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t number()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start || pos_ - start > 9)
            fail("arity (decimal number)");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    void expect_end()
    {
        if (!at_end())
            fail("end of line");
    }

    [[noreturn]] void fail(const std::string& expected)
    {
        skip_ws();
        std::string found = pos_ >= text_.size() ? "end of line" : "'" + std::string(text_.substr(pos_, 12)) + "'";
        throw ParseError(line_, pos_ + 1, "expected " + expected + ", found " + found);
    }

    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        std::string_view t = trim(raw);
        if (!t.empty() && t.front() != '#')
            lines.push_back({number, raw});
        ++number;
        start = end + 1;
    }
    return lines;
}

bool starts_with_word(const Line& line, std::string_view word)
{
    std::string_view t = trim(line.text);
    if (t.substr(0, word.size()) != word)
        return false;
    return t.size() == word.size() || t[word.size()] == ' ' || t[word.size()] == '\t' || word.back() == ':';
}

Tuple parse_tuple(Scanner& sc)
{
    sc.expect("(");
    Tuple t;
    if (sc.try_literal(")"))
        return t;
    t.emplace_back(sc.token("element"));
    while (!sc.try_literal(")")) {
        sc.expect(",");
        t.emplace_back(sc.token("element"));
    }
    return t;
}

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& options) : lines_(split_lines(text)), options_(options) {}

    Document document()
    {
        if (done())
            throw ParseError(1, 1, "expected document header, found end of input");
        const Line& head = current();
        Document doc;
        if (starts_with_word(head, "arch")) {
            Architecture a = architecture();
            doc.name = a.name;
            doc.payload = std::move(a);
        }
        else if (starts_with_word(head, "partition")) {
            doc.payload = partition(doc.name);
        }
        else if (starts_with_word(head, "hom")) {
            doc.payload = homomorphism(doc.name);
        }
        else if (starts_with_word(head, "viewpoint")) {
            doc.payload = viewpoint(doc.name);
        }
        else if (starts_with_word(head, "view")) {
            doc.payload = view(doc.name);
        }
        else {
            Scanner sc(head);
            sc.fail("'arch', 'partition', 'hom', 'view' or 'viewpoint'");
        }
        if (!done()) {
            Scanner sc(current());
            sc.fail("end of document");
        }
        return doc;
    }

private:
    struct Names {
        std::map<std::string, std::size_t> relations;
        std::map<std::string, std::size_t> functions;
    };

    bool done() const { return pos_ >= lines_.size(); }
    const Line& current() const { return lines_[pos_]; }

    std::string header(std::string_view keyword)
    {
        Scanner sc(current());
        sc.expect(keyword);
        std::string name = sc.token("name");
        sc.expect_end();
        ++pos_;
        return name;
    }

    void marker(std::string_view keyword)
    {
        if (done())
            throw ParseError(lines_.empty() ? 1 : lines_.back().number + 1, 1,
                             "expected '" + std::string(keyword) + "', found end of input");
        Scanner sc(current());
        sc.expect(keyword);
        sc.expect_end();
        ++pos_;
    }

    Architecture architecture(Names* names = nullptr)
    {
        if (done())
            throw ParseError(lines_.empty() ? 1 : lines_.back().number + 1, 1, "expected 'arch', found end of input");
        std::size_t first_line = current().number;
        Architecture a;
        a.name = header("arch");
        Names local;

        enum class Block { None, Rel, Fun } block = Block::None;
        std::map<std::pair<std::size_t, Tuple>, ElementId> seen_args;
        while (!done()) {
            const Line& line = current();
            Scanner sc(line);
            if (sc.try_literal("elements:")) {
                while (!sc.at_end())
                    a.universe.emplace_back(sc.token("element"));
                block = Block::None;
            }
            else if (starts_with_word(line, "rel")) {
                sc.expect("rel");
                std::string name = sc.token("relation name");
                sc.expect("/");
                std::size_t arity = sc.number();
                sc.expect(":");
                sc.expect_end();
                if (!local.relations.emplace(name, a.relations.size()).second)
                    throw ParseError(line.number, 1, "relation name '" + name + "' declared twice");
                a.relations.push_back(Relation{name, arity, {}});
                block = Block::Rel;
            }
            else if (starts_with_word(line, "fun")) {
                sc.expect("fun");
                std::string name = sc.token("function name");
                sc.expect("/");
                std::size_t arity = sc.number();
                sc.expect(":");
                sc.expect_end();
                if (!local.functions.emplace(name, a.functions.size()).second)
                    throw ParseError(line.number, 1, "function name '" + name + "' declared twice");
                FunctionTable f;
                f.name = name;
                f.arity = arity;
                a.functions.push_back(std::move(f));
                block = Block::Fun;
            }
            else if (trim(line.text).front() == '(') {
                if (block == Block::None)
                    sc.fail("'rel' or 'fun' header before tuple lines");
                Tuple t = parse_tuple(sc);
                if (block == Block::Rel) {
                    sc.expect_end();
                    a.relations.back().tuples.insert(std::move(t));
                }
                else {
                    sc.expect("->");
                    ElementId value(sc.token("element"));
                    sc.expect_end();
                    auto& f = a.functions.back();
                    auto [it, fresh] = f.mapping.emplace(t, value);
                    if (!fresh && it->second != value) {
                        ValidationReport report;
                        report.violations.push_back({ViolationCode::PartialMapping,
                                                     "function " + f.name + " maps " + to_string(t) + " to both "
                                                         + it->second.str() + " and " + value.str()});
                        throw SchemaError(line.number, std::move(report), report.violations.front().message);
                    }
                    f.domain.insert(std::move(t));
                }
            }
            else {
                break;
            }
            ++pos_;
        }

        if (options_.check_schema) {
            ValidationReport report = validate(a);
            if (!report.ok()) {
                std::string msg = std::string("architecture ") + a.name + ": " + to_string(report.violations.front().code)
                    + " " + report.violations.front().message;
                throw SchemaError(first_line, std::move(report), msg);
            }
        }
        if (names)
            *names = std::move(local);
        return a;
    }

    TierPartition partition(std::string& name)
    {
        name = header("partition");
        TierPartition p;
        while (!done()) {
            Scanner sc(current());
            if (!sc.try_literal("tier:"))
                break;
            ElementSet tier;
            while (!sc.at_end())
                tier.emplace(sc.token("element"));
            p.tiers.push_back(std::move(tier));
            ++pos_;
        }
        return p;
    }

    static std::size_t resolve(const std::map<std::string, std::size_t>& names, const std::string& name,
                               const char* what, std::size_t line)
    {
        auto it = names.find(name);
        if (it == names.end())
            throw SchemaError(line, {}, std::string("unknown ") + what + " '" + name + "'");
        return it->second;
    }

    Homomorphism homomorphism(std::string& name)
    {
        name = header("hom");
        std::size_t hom_line = lines_[pos_ - 1].number;
        Names src_names, tgt_names;
        marker("source:");
        auto source = std::make_shared<const Architecture>(architecture(&src_names));
        marker("target:");
        auto target = std::make_shared<const Architecture>(architecture(&tgt_names));

        Homomorphism h;
        h.source = source;
        h.target = target;
        std::vector<std::optional<std::size_t>> rel(source->relations.size());
        std::vector<std::optional<std::size_t>> fun(source->functions.size());

        marker("h0:");
        while (!done() && trim(current().text).substr(0, 3) != "hR:") {
            Scanner sc(current());
            ElementId from(sc.token("element"));
            sc.expect("->");
            ElementId to(sc.token("element"));
            sc.expect_end();
            if (!h.elements.emplace(from, to).second)
                throw SchemaError(current().number, {}, "h0 maps " + from.str() + " twice");
            ++pos_;
        }
        marker("hR:");
        while (!done() && trim(current().text).substr(0, 3) != "hF:") {
            Scanner sc(current());
            std::string from = sc.token("relation name");
            sc.expect("->");
            std::string to = sc.token("relation name");
            sc.expect_end();
            std::size_t i = resolve(src_names.relations, from, "source relation", current().number);
            if (rel[i])
                throw SchemaError(current().number, {}, "hR maps " + from + " twice");
            rel[i] = resolve(tgt_names.relations, to, "target relation", current().number);
            ++pos_;
        }
        marker("hF:");
        while (!done()) {
            Scanner sc(current());
            std::string from = sc.token("function name");
            sc.expect("->");
            std::string to = sc.token("function name");
            sc.expect_end();
            std::size_t i = resolve(src_names.functions, from, "source function", current().number);
            if (fun[i])
                throw SchemaError(current().number, {}, "hF maps " + from + " twice");
            fun[i] = resolve(tgt_names.functions, to, "target function", current().number);
            ++pos_;
        }

        for (std::size_t i = 0; i < rel.size(); ++i) {
            if (!rel[i])
                throw SchemaError(hom_line, {}, "hR undefined on " + source->relations[i].name);
            h.relations.push_back(*rel[i]);
        }
        for (std::size_t i = 0; i < fun.size(); ++i) {
            if (!fun[i])
                throw SchemaError(hom_line, {}, "hF undefined on " + source->functions[i].name);
            h.functions.push_back(*fun[i]);
        }
        return h;
    }

    struct Selection {
        std::size_t line;
        ElementSet elements;
        std::vector<std::string> relations;
        std::vector<std::string> functions;
    };

    Selection selection()
    {
        Selection s;
        s.line = done() ? 0 : current().number;
        auto list = [&](std::string_view keyword, auto&& add) {
            if (done())
                throw ParseError(lines_.back().number + 1, 1, "expected '" + std::string(keyword) + "'");
            Scanner sc(current());
            sc.expect(keyword);
            while (!sc.at_end())
                add(sc.token("name"));
            ++pos_;
        };
        list("elements:", [&](std::string t) { s.elements.emplace(std::move(t)); });
        list("relations:", [&](std::string t) { s.relations.push_back(std::move(t)); });
        list("functions:", [&](std::string t) { s.functions.push_back(std::move(t)); });
        return s;
    }

    static UnstructuredView resolve_view(const ArchitecturePtr& parent, const Names& names, const Selection& s)
    {
        std::set<std::size_t> rels, funs;
        for (const auto& r : s.relations)
            rels.insert(resolve(names.relations, r, "relation", s.line));
        for (const auto& f : s.functions)
            funs.insert(resolve(names.functions, f, "function", s.line));
        try {
            return UnstructuredView(parent, s.elements, std::move(rels), std::move(funs));
        }
        catch (const Error& e) {
            throw SchemaError(s.line, {}, e.what());
        }
    }

    UnstructuredView view(std::string& name)
    {
        name = header("view");
        Selection s = selection();
        marker("parent:");
        Names names;
        auto parent = std::make_shared<const Architecture>(architecture(&names));
        return resolve_view(parent, names, s);
    }

    Viewpoint viewpoint(std::string& name)
    {
        name = header("viewpoint");
        std::size_t vp_line = lines_[pos_ - 1].number;
        struct Entry {
            std::string label;
            std::optional<Selection> selection;
            std::optional<Architecture> structured;
        };
        std::vector<Entry> entries;
        while (!done() && !starts_with_word(current(), "parent:")) {
            Scanner sc(current());
            Entry e;
            if (sc.try_literal("structured")) {
                e.label = sc.token("view label");
                sc.expect(":");
                sc.expect_end();
                ++pos_;
                e.structured = architecture();
            }
            else if (sc.try_literal("view")) {
                e.label = sc.token("view label");
                sc.expect(":");
                sc.expect_end();
                ++pos_;
                e.selection = selection();
            }
            else {
                sc.fail("'view', 'structured' or 'parent:'");
            }
            entries.push_back(std::move(e));
        }
        marker("parent:");
        Names names;
        auto parent = std::make_shared<const Architecture>(architecture(&names));

        std::vector<std::pair<std::string, View>> views;
        for (auto& e : entries) {
            if (e.structured)
                views.emplace_back(e.label, std::move(*e.structured));
            else
                views.emplace_back(e.label, resolve_view(parent, names, *e.selection));
        }
        try {
            return make_viewpoint(parent, std::move(views));
        }
        catch (const Error& e) {
            if (e.code() == ErrorCode::DuplicateView)
                throw;
            throw SchemaError(vp_line, {}, e.what());
        }
    }

    std::vector<Line> lines_;
    ParseOptions options_;
    std::size_t pos_ = 0;
};

} // namespace

SchemaError::SchemaError(std::size_t line, ValidationReport report, const std::string& message)
    : Error(ErrorCode::SchemaError, "line " + std::to_string(line) + ": " + message), line_(line),
      report_(std::move(report))
{
}

const char* to_string(DocumentKind kind) noexcept
{
    switch (kind) {
    case DocumentKind::Architecture: return "architecture";
    case DocumentKind::View: return "view";
    case DocumentKind::Viewpoint: return "viewpoint";
    case DocumentKind::Partition: return "partition";
    case DocumentKind::Homomorphism: return "homomorphism";
    }
    return "unknown";
}

bool is_format_token(std::string_view token)
{
    if (token.empty())
        return false;
    for (std::size_t i = 0; i < token.size();) {
        std::size_t n = token_char(token, i);
        if (!n)
            return false;
        i += n;
    }
    return true;
}

std::string serialize(const Architecture& arch)
{
    return canonical(arch).text;
}

std::string serialize(const TierPartition& partition, std::string_view name)
{
    std::string s = "partition " + sanitize(name, "p") + "\n";
    for (const auto& tier : partition.tiers) {
        s += "tier:";
        for (const auto& e : tier)
            s += " " + element_token(e);
        s += "\n";
    }
    return s;
}

std::string serialize(const Homomorphism& h, std::string_view name)
{
    if (!h.source || !h.target)
        throw Error(ErrorCode::InvalidArgument, "homomorphism without source or target");
    CanonicalArch src = canonical(*h.source);
    CanonicalArch tgt = canonical(*h.target);
    std::string s = "hom " + sanitize(name, "h") + "\nsource:\n" + src.text + "target:\n" + tgt.text + "h0:\n";
    for (const auto& [from, to] : h.elements)
        s += "  " + element_token(from) + " -> " + element_token(to) + "\n";

    auto map_lines = [](const std::vector<std::size_t>& map, const std::vector<std::string>& from_names,
                        const std::vector<std::string>& to_names) {
        std::map<std::string, std::string> lines;
        for (std::size_t i = 0; i < map.size(); ++i)
            lines.emplace(from_names.at(i), to_names.at(map[i]));
        std::string out;
        for (const auto& [from, to] : lines)
            out += "  " + from + " -> " + to + "\n";
        return out;
    };
    s += "hR:\n" + map_lines(h.relations, src.relation_names, tgt.relation_names);
    s += "hF:\n" + map_lines(h.functions, src.function_names, tgt.function_names);
    return s;
}

std::string serialize(const Document& doc)
{
    return std::visit(
        [&](const auto& payload) -> std::string {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, Architecture>) {
                return serialize(payload);
            }
            else if constexpr (std::is_same_v<T, TierPartition>) {
                return serialize(payload, doc.name);
            }
            else if constexpr (std::is_same_v<T, Homomorphism>) {
                return serialize(payload, doc.name);
            }
            else if constexpr (std::is_same_v<T, UnstructuredView>) {
                CanonicalArch parent = canonical(*payload.parent());
                return "view " + sanitize(doc.name, "v") + "\n"
                    + selection_text(*payload.parent(), parent, payload.elements(), payload.relation_refs(),
                                     payload.function_refs())
                    + "parent:\n" + parent.text;
            }
            else {
                CanonicalArch parent = canonical(*payload.parent());
                std::map<std::string, std::string> blocks;
                for (const auto& [label, view] : payload.views()) {
                    std::string key = sanitize(label, "v");
                    if (const auto* u = std::get_if<UnstructuredView>(&view))
                        blocks[key] = "view " + key + ":\n"
                            + selection_text(*payload.parent(), parent, u->elements(), u->relation_refs(),
                                             u->function_refs());
                    else
                        blocks[key] = "structured " + key + ":\n" + serialize(std::get<Architecture>(view));
                }
                std::string s = "viewpoint " + sanitize(doc.name, "vp") + "\n";
                for (const auto& [_, text] : blocks)
                    s += text;
                return s + "parent:\n" + parent.text;
            }
        },
        doc.payload);
}

Document parse(std::string_view text, const ParseOptions& options)
{
    return Parser(text, options).document();
}

namespace {

template <class T>
T expect_kind(Document doc, DocumentKind kind)
{
    if (doc.kind() != kind)
        throw ParseError(1, 1, std::string("expected ") + to_string(kind) + " document, found "
                                   + to_string(doc.kind()));
    return std::get<T>(std::move(doc.payload));
}

} // namespace

Architecture parse_architecture(std::string_view text, const ParseOptions& options)
{
    return expect_kind<Architecture>(parse(text, options), DocumentKind::Architecture);
}

TierPartition parse_partition(std::string_view text)
{
    return expect_kind<TierPartition>(parse(text), DocumentKind::Partition);
}

Homomorphism parse_homomorphism(std::string_view text)
{
    return expect_kind<Homomorphism>(parse(text), DocumentKind::Homomorphism);
}

} // namespace archcalc
