// positroid: command-line front end over the document format.
//
// Exit codes: 0 true/success, 1 false verdict or failed check, 2 input error,
// 3 resource cap exceeded.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "positroid/document.hpp"
#include "positroid/verify.hpp"

namespace {

using namespace positroid;

enum Exit : int { ok = 0, verdict_false = 1, bad_input = 2, over_budget = 3 };

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <typename T>
const T& expect(const Document& doc, const std::string& what)
{
    if (const T* p = std::get_if<T>(&doc.payload)) return *p;
    throw input_error(what + " needs a different document kind, got '" + payload_name(doc.payload) + "'");
}

GrassmannNecklace to_necklace(const Document& doc)
{
    return std::visit(
        [&](const auto& p) -> GrassmannNecklace {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NecklacePayload>) {
                return GrassmannNecklace(p.entries);
            } else if constexpr (std::is_same_v<T, DecoratedPermutation>) {
                return necklace_from_perm(p);
            } else if constexpr (std::is_same_v<T, Filling>) {
                return necklace_from_le(LeDiagram(p));
            } else if constexpr (std::is_same_v<T, BoundsPayload>) {
                return necklace_of(lattice_path_bases(LatticePathBounds(p.lower, p.upper)));
            } else if constexpr (std::is_same_v<T, BasisCollection>) {
                if (!is_positroid(p)) throw input_error("bases do not form a positroid; no necklace exists");
                return necklace_of(p);
            } else {
                throw input_error(std::string("cannot convert a '") + payload_name(doc.payload) + "' document");
            }
        },
        doc.payload);
}

DecoratedPermutation to_perm(const Document& doc)
{
    if (auto b = std::get_if<BoundsPayload>(&doc.payload)) return lp_decorated_perm(LatticePathBounds(b->lower, b->upper));
    if (auto p = std::get_if<DecoratedPermutation>(&doc.payload)) return *p;
    return perm_from_necklace(to_necklace(doc));
}

BasisCollection to_bases(const Document& doc, bool dual)
{
    if (dual) return positroid_from_upper(to_perm(doc));
    if (auto b = std::get_if<BasisCollection>(&doc.payload)) return *b;
    if (auto f = std::get_if<Filling>(&doc.payload)) return enumerate_bases(LeDiagram(*f));
    if (auto b = std::get_if<BoundsPayload>(&doc.payload)) return lattice_path_bases(LatticePathBounds(b->lower, b->upper));
    return positroid_from_necklace(to_necklace(doc));
}

int print_verdict(bool v)
{
    std::cout << (v ? "true" : "false") << '\n';
    return v ? Exit::ok : Exit::verdict_false;
}

int run_check(const std::string& kind, const Document& doc, std::uint64_t seed)
{
    if (kind == "necklace") return print_verdict(is_grassmann_necklace(expect<NecklacePayload>(doc, kind).entries));
    if (kind == "le") return print_verdict(is_le_diagram(expect<Filling>(doc, kind)));
    if (kind == "matroid") return print_verdict(is_matroid(expect<BasisCollection>(doc, kind)));
    if (kind == "positroid") return print_verdict(is_positroid(expect<BasisCollection>(doc, kind)));
    const auto& parts = expect<FlagPayload>(doc, kind).constituents;
    ConcordanceOptions opt;
    opt.seed = seed;
    if (kind == "concordant") {
        auto r = are_concordant(ConstituentList(parts), opt);
        if (r.concordant && !r.certified)
            std::cerr << "note: only " << opt.samples << " sampled orders were tested; not a certificate\n";
        if (r.counterexample) {
            std::cerr << "refuting order:";
            for (int a : *r.counterexample) std::cerr << ' ' << a;
            std::cerr << '\n';
        }
        return print_verdict(r.concordant);
    }
    return print_verdict(is_flag_positroid(parts, opt));
}

nlohmann::ordered_json realization_json(const LatticePathBounds& b, const ExactMatrix& m, const MinorCertificate& cert)
{
    nlohmann::ordered_json j = document_json(make_document(b));
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (const auto& x : m.variables) vars.push_back(x.str());
    j["variables"] = vars;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 1; r <= m.rows; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 1; c <= m.cols; ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    j["matrix"] = rows;
    nlohmann::ordered_json c;
    c["passed"] = cert.passed;
    if (!cert.passed) {
        c["witness"] = cert.witness->elements();
        c["minor"] = cert.witness_minor.str();
        c["reason"] = cert.reason;
    }
    j["certificate"] = c;
    return j;
}

int run_verify(const VerifyOptions& opt)
{
    auto reports = run_verification(opt);
    bool all = true;
    std::cout << std::left << std::setw(32) << "suite" << std::right << std::setw(12) << "instances"
              << std::setw(10) << "failures" << "  result\n";
    for (const auto& r : reports) {
        std::cout << std::left << std::setw(32) << r.name << std::right << std::setw(12) << r.instances
                  << std::setw(10) << r.failures << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
        all = all && r.passed();
    }
    for (const auto& r : reports)
        if (!r.passed()) std::cout << "first failure in " << r.name << ": " << r.first_failure << '\n';
    return all ? Exit::ok : Exit::verdict_false;
}

KSubset parse_subset_flag(const std::string& text, int n)
{
    std::vector<int> elems;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            elems.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw input_error("--subset entry '" + item + "' is not an integer");
        }
    }
    return KSubset(n, elems);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Positroid combinatorics: necklaces, decorated permutations, Le-diagrams, lattice paths"};
    app.require_subcommand(1);

    std::string input;
    std::string kind;
    auto* check = app.add_subcommand("check", "Decide a property; prints true/false");
    check->add_option("kind", kind, "necklace | le | matroid | positroid | concordant | flag-positroid")
        ->required()
        ->check(CLI::IsMember({"necklace", "le", "matroid", "positroid", "concordant", "flag-positroid"}));
    std::uint64_t seed = 0;
    check->add_option("--seed", seed, "Seed for sampled concordance beyond n = 7");

    std::string target;
    bool text = false;
    auto* convert = app.add_subcommand("convert", "Convert between representations");
    convert->add_option("--to", target, "necklace | perm | upper | bases")
        ->required()
        ->check(CLI::IsMember({"necklace", "perm", "upper", "bases"}));
    convert->add_flag("--text", text, "Print the one-line form instead of a document (perm only)");

    bool dual = false;
    auto* bases = app.add_subcommand("bases", "Enumerate the bases of the described positroid");
    bases->add_flag("--dual", dual, "Use the dual Schubert intersection over the upper necklace");

    std::string subset;
    auto* member_cmd = app.add_subcommand("member", "Test a subset against the necklace inequalities");
    member_cmd->add_option("--subset", subset, "Comma-separated elements, e.g. 2,3,4")->required();

    auto* realize_cmd = app.add_subcommand("realize", "Exact matrix realization of a lattice path matroid");

    VerifyOptions vopt;
    bool large = false;
    auto* verify = app.add_subcommand("verify", "Run the cross-oracle suites and print a pass/fail table");
    verify->add_option("--exhaustive-n", vopt.exhaustive_n, "Exhaustive sweeps for n up to N (default 5)")
        ->check(CLI::Range(0, 7));
    verify->add_option("--random", vopt.random_count, "Number of seeded random instances per suite");
    verify->add_option("--seed", vopt.seed, "Random seed");
    verify->add_option("--random-n", vopt.random_n, "Ground size for random instances (default 8)")
        ->check(CLI::Range(1, 16));
    verify->add_flag("--large", large, "Allow --exhaustive-n above 5");

    for (auto* sub : {check, convert, bases, member_cmd, realize_cmd})
        sub->add_option("input", input, "Document file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::bad_input;
    }

    try {
        if (verify->parsed()) {
            if (vopt.exhaustive_n > 5 && !large) throw input_error("--exhaustive-n above 5 requires --large");
            return run_verify(vopt);
        }

        const bool lenient = check->parsed() && (kind == "necklace" || kind == "le");
        const Document doc = parse_document(read_input(input), lenient ? Validation::structural : Validation::full);

        if (check->parsed()) return run_check(kind, doc, seed);

        if (convert->parsed()) {
            if (target == "necklace") {
                std::cout << serialize(make_document(to_necklace(doc)));
            } else if (target == "perm") {
                auto p = to_perm(doc);
                std::cout << (text ? p.to_string() + "\n" : serialize(make_document(p)));
            } else if (target == "upper") {
                std::cout << serialize(make_upper_document(to_perm(doc)));
            } else {
                std::cout << serialize(make_document(to_bases(doc, false)));
            }
            return Exit::ok;
        }

        if (bases->parsed()) {
            std::cout << serialize(make_document(to_bases(doc, dual)));
            return Exit::ok;
        }

        if (member_cmd->parsed()) {
            GrassmannNecklace neck = to_necklace(doc);
            return print_verdict(member(parse_subset_flag(subset, neck.ground_size()), neck));
        }

        const auto& bp = expect<BoundsPayload>(doc, "realize");
        LatticePathBounds b(bp.lower, bp.upper);
        ExactMatrix m = realize(b);
        MinorCertificate cert = certify_minors(m, b);
        std::cout << to_canonical_text(realization_json(b, m, cert));
        return cert.passed ? Exit::ok : Exit::verdict_false;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::over_budget;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::bad_input;
    }
}
