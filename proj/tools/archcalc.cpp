// archcalc command-line front end. Talks to the library only through the C API.

#include "archcalc/archcalc.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit : int { holds = 0, fails = 1, usage = 2, budget = 3 };

struct ArchDeleter {
    void operator()(archc_arch* a) const { archc_arch_free(a); }
};
struct HomDeleter {
    void operator()(archc_hom* h) const { archc_hom_free(h); }
};
struct PartitionDeleter {
    void operator()(archc_partition* p) const { archc_partition_free(p); }
};
struct StringDeleter {
    void operator()(char* s) const { archc_string_free(s); }
};

using Arch = std::unique_ptr<archc_arch, ArchDeleter>;
using Hom = std::unique_ptr<archc_hom, HomDeleter>;
using Partition = std::unique_ptr<archc_partition, PartitionDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Carries an exit code out of a command.
struct Failure {
    int code;
};

[[noreturn]] void die(archc_status status, const std::string& context)
{
    std::cerr << "archcalc: " << context << ": " << archc_last_error() << "\n";
    throw Failure{status == ARCHC_BUDGET_EXCEEDED ? budget : usage};
}

void check(archc_status status, const std::string& context)
{
    if (status != ARCHC_OK)
        die(status, context);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "archcalc: cannot read " << path << "\n";
        throw Failure{usage};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!(out << text)) {
        std::cerr << "archcalc: cannot write " << path << "\n";
        throw Failure{usage};
    }
}

std::string take(char* s)
{
    CString owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

Arch load_arch(const std::string& path, unsigned flags = 0)
{
    std::string text = read_file(path);
    archc_arch* a = nullptr;
    check(archc_arch_parse(text.c_str(), flags, &a), path);
    return Arch(a);
}

Hom load_hom(const std::string& path)
{
    std::string text = read_file(path);
    archc_hom* h = nullptr;
    check(archc_hom_parse(text.c_str(), &h), path);
    return Hom(h);
}

std::string serialize(const archc_arch* a)
{
    char* s = nullptr;
    check(archc_arch_serialize(a, &s), "serialize");
    return take(s);
}

std::string serialize(const archc_hom* h)
{
    char* s = nullptr;
    check(archc_hom_serialize(h, &s), "serialize");
    return take(s);
}

std::uint64_t search_budget()
{
    const char* env = std::getenv("ARCHCALC_SEARCH_BUDGET");
    if (!env || !*env)
        return ARCHC_DEFAULT_BUDGET;
    std::string value(env);
    if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 19
        || std::stoull(value) == 0) {
        std::cerr << "archcalc: ARCHCALC_SEARCH_BUDGET must be a positive integer, got '" << value << "'\n";
        throw Failure{usage};
    }
    return std::stoull(value);
}

void emit_dot(const archc_arch* a, const std::string& path)
{
    char* s = nullptr;
    check(archc_emit_dot(a, &s), "--emit-dot");
    write_file(path, take(s));
}

void print_partition(const archc_partition* p)
{
    for (std::size_t i = 0; i < archc_partition_size(p); ++i) {
        char* s = nullptr;
        check(archc_partition_tier(p, i, &s), "partition");
        std::cout << "  tier " << i + 1 << ": " << take(s) << "\n";
    }
}

int cmd_validate(const std::string& file, const std::string& dot)
{
    Arch a = load_arch(file, ARCHC_PARSE_NO_VALIDATE);
    int ok = 0;
    char* report = nullptr;
    check(archc_validate(a.get(), &ok, &report), file);
    std::string text = take(report);
    if (!ok) {
        std::cout << "invalid\n" << text;
        return fails;
    }
    std::cout << "valid\n";
    if (!dot.empty())
        emit_dot(a.get(), dot);
    return holds;
}

int cmd_restrict(const std::string& file, const std::vector<std::string>& elements, const std::string& out)
{
    Arch a = load_arch(file);
    std::vector<const char*> names;
    for (const auto& e : elements)
        names.push_back(e.c_str());
    archc_arch* r = nullptr;
    check(archc_restrict(a.get(), names.data(), names.size(), &r), "restrict");
    Arch restricted(r);
    std::string text = serialize(restricted.get());
    std::cout << text;
    if (!out.empty())
        write_file(out, text);
    return holds;
}

int cmd_subarch(const std::string& fa, const std::string& fb)
{
    Arch a = load_arch(fa);
    Arch b = load_arch(fb);
    int result = 0;
    check(archc_is_sub_architecture(a.get(), b.get(), &result), "subarch");
    std::cout << (result ? "sub-architecture\n" : "not a sub-architecture\n");
    return result ? holds : fails;
}

int cmd_tiers(const std::string& file, const std::string& partition_file, bool max, bool oracle)
{
    Arch a = load_arch(file);
    int bnc = 0;
    check(archc_is_bnc(a.get(), &bnc), file);
    if (!bnc) {
        std::cout << "not a boxes-and-connectors architecture\n";
        return fails;
    }
    int code = holds;
    if (!partition_file.empty()) {
        std::string text = read_file(partition_file);
        archc_partition* p = nullptr;
        check(archc_partition_parse(text.c_str(), &p), partition_file);
        Partition partition(p);
        int ok = 0;
        archc_status s = archc_check_tier_partition(a.get(), partition.get(), &ok);
        if (s == ARCHC_NOT_A_PARTITION) {
            std::cout << "not a partition: " << archc_last_error() << "\n";
            code = fails;
        }
        else {
            check(s, "--check");
            std::cout << (ok ? "valid " : "invalid ") << archc_partition_size(partition.get()) << "-tier partition\n";
            if (!ok)
                code = fails;
        }
    }
    if (max || partition_file.empty()) {
        std::size_t n = 0;
        archc_partition* w = nullptr;
        check(archc_find_max_tiers(a.get(), oracle, search_budget(), &n, &w), "tiers");
        Partition witness(w);
        std::cout << "max tiers: " << n << "\n";
        print_partition(witness.get());
    }
    return code;
}

int cmd_hom(const std::string& fa, const std::string& fb, bool surjective, bool injective, bool iso,
            const std::string& witness_out)
{
    Arch a = load_arch(fa);
    Arch b = load_arch(fb);
    unsigned flags = ARCHC_HOM_ANY;
    std::string kind = "homomorphism";
    if (iso) {
        flags = ARCHC_HOM_ISOMORPHISM;
        kind = "isomorphism";
    }
    else if (surjective && injective) {
        flags = ARCHC_HOM_BIJECTIVE;
        kind = "bijective homomorphism";
    }
    else if (surjective) {
        flags = ARCHC_HOM_SURJECTIVE;
        kind = "surjective homomorphism";
    }
    else if (injective) {
        flags = ARCHC_HOM_INJECTIVE;
        kind = "injective homomorphism";
    }

    archc_hom* h = nullptr;
    archc_status s = archc_find_homomorphism(a.get(), b.get(), flags, search_budget(), &h);
    if (s == ARCHC_NOT_FOUND) {
        std::cout << "no " << kind << "\n";
        return fails;
    }
    if (s == ARCHC_BUDGET_EXCEEDED) {
        std::cout << "search budget exhausted before deciding\n";
        return budget;
    }
    check(s, "hom");
    Hom witness(h);
    std::cout << kind << " found\n";
    if (!witness_out.empty())
        write_file(witness_out, serialize(witness.get()));
    return holds;
}

int cmd_compose(const std::string& f1, const std::string& f2, const std::string& out)
{
    Hom first = load_hom(f1);
    Hom second = load_hom(f2);
    archc_hom* c = nullptr;
    archc_status s = archc_compose(second.get(), first.get(), &c);
    if (s == ARCHC_NOT_COMPOSABLE) {
        std::cout << "not composable: " << archc_last_error() << "\n";
        return fails;
    }
    check(s, "compose");
    Hom composed(c);
    int ok = 0;
    check(archc_check_homomorphism(composed.get(), &ok, nullptr), "compose");
    std::cout << "composed homomorphism" << (ok ? "" : " (not a homomorphism)") << "\n";
    write_file(out, serialize(composed.get()));
    return ok ? holds : fails;
}

int cmd_import_dot(const std::string& file, const std::string& out)
{
    std::string text = read_file(file);
    archc_arch* a = nullptr;
    check(archc_import_dot(text.c_str(), &a), file);
    Arch arch(a);
    std::size_t elements = 0, relations = 0;
    check(archc_arch_counts(arch.get(), &elements, &relations, nullptr), file);
    std::cout << "imported " << elements << " elements, " << relations << " relation(s)\n";
    write_file(out, serialize(arch.get()));
    return holds;
}

int cmd_fixture(const std::string& name, const std::string& out, const std::string& dot)
{
    archc_arch* a = nullptr;
    archc_status s = archc_fixture(name.c_str(), &a);
    check(s, "fixture");
    Arch arch(a);
    std::size_t elements = 0, relations = 0, functions = 0;
    check(archc_arch_counts(arch.get(), &elements, &relations, &functions), name);
    std::cout << name << ": " << elements << " elements, " << relations << " relations, " << functions
              << " functions\n";
    if (!out.empty())
        write_file(out, serialize(arch.get()));
    if (!dot.empty())
        emit_dot(arch.get(), dot);
    return holds;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Calculus of architecture complexes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(archc_version()));

    std::string file, file_b, out, dot, partition, witness, fixture_name;
    std::vector<std::string> elements;
    bool max = false, oracle = false, surjective = false, injective = false, iso = false;

    auto* validate = app.add_subcommand("validate", "Check an architecture against the structural invariants");
    validate->add_option("file", file, "Architecture file")->required();
    validate->add_option("--emit-dot", dot, "Also write the architecture as DOT");

    auto* restrict = app.add_subcommand("restrict", "Maximal structured view on a subset of elements");
    restrict->add_option("file", file, "Architecture file")->required();
    restrict->add_option("--elements", elements, "Comma-separated elements")->required()->delimiter(',');
    restrict->add_option("--out", out, "Write the view to this file");

    auto* subarch = app.add_subcommand("subarch", "Decide whether <a> is a sub-architecture of <b>");
    subarch->add_option("a", file, "Candidate")->required();
    subarch->add_option("b", file_b, "Parent")->required();

    auto* tiers = app.add_subcommand("tiers", "Check or maximize n-tier partitions");
    tiers->add_option("file", file, "Architecture file")->required();
    tiers->add_option("--check", partition, "Partition file to verify");
    tiers->add_flag("--max", max, "Find the maximal tier count (default when --check is absent)");
    tiers->add_flag("--oracle", oracle, "Use exhaustive partition enumeration");

    auto* hom = app.add_subcommand("hom", "Search for a homomorphism from <a> to <b>");
    hom->add_option("a", file, "Source")->required();
    hom->add_option("b", file_b, "Target")->required();
    auto* surj = hom->add_flag("--surjective", surjective);
    auto* inj = hom->add_flag("--injective", injective);
    hom->add_flag("--iso", iso)->excludes(surj)->excludes(inj);
    hom->add_option("--witness", witness, "Write the witness homomorphism to this file");

    auto* compose = app.add_subcommand("compose", "Compose <h2> after <h1>");
    compose->add_option("h1", file, "First homomorphism")->required();
    compose->add_option("h2", file_b, "Second homomorphism")->required();
    compose->add_option("--out", out, "Output file")->required();

    auto* import_dot = app.add_subcommand("import-dot", "Convert a DOT digraph into an architecture");
    import_dot->add_option("file", file, "DOT file")->required();
    import_dot->add_option("--out", out, "Output file")->required();

    auto* fixture = app.add_subcommand("fixture", "Write a built-in architecture");
    fixture->add_option("name", fixture_name, "t0, t1, tn:N, wilkinson, wilkinson-star or torch")->required();
    fixture->add_option("--out", out, "Output file");
    fixture->add_option("--emit-dot", dot, "Also write the architecture as DOT");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? holds : usage;
    }

    try {
        if (*validate)
            return cmd_validate(file, dot);
        if (*restrict)
            return cmd_restrict(file, elements, out);
        if (*subarch)
            return cmd_subarch(file, file_b);
        if (*tiers)
            return cmd_tiers(file, partition, max, oracle);
        if (*hom)
            return cmd_hom(file, file_b, surjective, injective, iso, witness);
        if (*compose)
            return cmd_compose(file, file_b, out);
        if (*import_dot)
            return cmd_import_dot(file, out);
        if (*fixture)
            return cmd_fixture(fixture_name, out, dot);
    }
    catch (const Failure& f) {
        return f.code;
    }
    return usage;
}
