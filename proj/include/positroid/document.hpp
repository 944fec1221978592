#pragma once

// The JSON document format shared by every CLI command. A document holds the
// ground size n, the rank k (omitted for flags) and exactly one payload:
//
//   {"n": 5, "k": 3, "necklace": [[1,2,4], [2,4,5], ...]}
//   {"n": 5, "k": 3, "upper": [[3,4,5], ...]}
//   {"n": 8, "k": 4, "perm": [8,1,4,2,5,7,3,6], "colors": {"5": "+"}}
//   {"n": 4, "k": 2, "le": {"shape": [2,1], "filled": [[1,2], [2,1]]}}
//   {"n": 3, "k": 2, "bounds": {"I": [1,2], "J": [2,3]}}
//   {"n": 3, "k": 2, "bases": [[1,2], [1,3]]}
//   {"n": 3, "flag": [[[1],[2]], [[1,2]]]}
//
// Serialization is canonical: subsets as increasing lists, lists of subsets
// sorted, fixed field order.

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "positroid/flag.hpp"
#include "positroid/lattice_path.hpp"
#include "positroid/le_diagram.hpp"

namespace positroid {

struct NecklacePayload {
    std::vector<KSubset> entries;
    friend bool operator==(const NecklacePayload&, const NecklacePayload&) = default;
};

struct UpperPayload {
    std::vector<KSubset> entries;
    friend bool operator==(const UpperPayload&, const UpperPayload&) = default;
};

struct BoundsPayload {
    KSubset lower;
    KSubset upper;
    friend bool operator==(const BoundsPayload&, const BoundsPayload&) = default;
};

struct FlagPayload {
    std::vector<BasisCollection> constituents;
    friend bool operator==(const FlagPayload&, const FlagPayload&) = default;
};

using Payload = std::variant<NecklacePayload, UpperPayload, DecoratedPermutation, Filling, BoundsPayload,
                             BasisCollection, FlagPayload>;

struct Document {
    int n = 0;
    int k = 0;  ///< unused for flag payloads
    Payload payload;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Input or invariant error in a document. rule names the violated rule.
class document_error : public input_error {
public:
    document_error(std::string rule, const std::string& what)
        : input_error(rule + ": " + what), rule_(std::move(rule))
    {}
    const std::string& rule() const noexcept { return rule_; }

private:
    std::string rule_;
};

/// Which invariant checks parse() applies on top of structural validation.
enum class Validation { full, structural };

inline const char* payload_name(const Payload& p)
{
    static constexpr const char* names[] = {"necklace", "upper", "perm", "le", "bounds", "bases", "flag"};
    return names[p.index()];
}

namespace detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline int get_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer()) throw document_error("syntax", where + " must be an integer");
    return j.get<int>();
}

inline KSubset subset_from_json(const json& j, int n, const std::string& where)
{
    if (!j.is_array()) throw document_error("syntax", where + " must be a list of integers");
    std::vector<int> elems;
    for (std::size_t i = 0; i < j.size(); ++i) elems.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]"));
    try {
        return KSubset(n, elems);
    } catch (const input_error& e) {
        throw document_error("subset", where + ": " + e.what());
    }
}

inline std::vector<KSubset> subsets_from_json(const json& j, int n, const std::string& where)
{
    if (!j.is_array()) throw document_error("syntax", where + " must be a list of subsets");
    std::vector<KSubset> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(subset_from_json(j[i], n, where + "[" + std::to_string(i) + "]"));
    return out;
}

inline void check_rank(std::vector<KSubset> const& subsets, int k, const std::string& where)
{
    for (const auto& s : subsets)
        if (s.size() != k)
            throw document_error("rank", where + ": subset " + s.to_string() + " does not have " + std::to_string(k)
                                             + " elements");
}

inline BasisCollection bases_from_json(const json& j, int n, const std::string& where, std::optional<int> k)
{
    auto subsets = subsets_from_json(j, n, where);
    if (subsets.empty()) throw document_error("nonempty bases", where + " is empty");
    const int rank = k.value_or(subsets.front().size());
    check_rank(subsets, rank, where);
    BasisCollection b(n, rank, subsets);
    if (b.size() != subsets.size()) throw document_error("set semantics", where + " lists a subset twice");
    return b;
}

template <typename F>
auto wrap(const std::string& rule, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const document_error&) {
        throw;
    } catch (const input_error& e) {
        throw document_error(rule, e.what());
    }
}

inline Document document_from_json(const json& j, Validation v)
{
    if (!j.is_object()) throw document_error("syntax", "document must be an object");
    static const std::vector<std::string> payloads = {"necklace", "upper", "perm", "le", "bounds", "bases", "flag"};
    std::string kind;
    for (const auto& [key, value] : j.items()) {
        if (std::find(payloads.begin(), payloads.end(), key) != payloads.end()) {
            if (!kind.empty()) throw document_error("syntax", "document has both '" + kind + "' and '" + key + "'");
            kind = key;
        } else if (key != "n" && key != "k" && key != "colors") {
            throw document_error("syntax", "unknown field '" + key + "'");
        }
    }
    if (kind.empty()) throw document_error("syntax", "document has no payload");
    if (!j.contains("n")) throw document_error("syntax", "missing field 'n'");
    Document doc;
    doc.n = get_int(j["n"], "n");
    wrap("ground size", [&] { check_ground_size(doc.n); return 0; });
    std::optional<int> k;
    if (j.contains("k")) k = get_int(j["k"], "k");
    if (j.contains("colors") && kind != "perm") throw document_error("syntax", "'colors' only accompanies 'perm'");
    const json& p = j[kind];
    const int n = doc.n;

    auto set_k = [&](int derived) {
        if (k && *k != derived)
            throw document_error("rank", "k = " + std::to_string(*k) + " but the payload has rank "
                                             + std::to_string(derived));
        doc.k = derived;
    };

    if (kind == "necklace" || kind == "upper") {
        auto entries = subsets_from_json(p, n, kind);
        if (static_cast<int>(entries.size()) != n)
            throw document_error("sequence length", kind + " has " + std::to_string(entries.size())
                                                        + " entries, expected " + std::to_string(n));
        set_k(k.value_or(entries.front().size()));
        check_rank(entries, doc.k, kind);
        if (kind == "necklace") {
            if (v == Validation::full)
                wrap("Grassmann necklace", [&] { return GrassmannNecklace(entries); });
            doc.payload = NecklacePayload{std::move(entries)};
        } else {
            doc.payload = UpperPayload{std::move(entries)};
        }
    } else if (kind == "perm") {
        if (!p.is_array()) throw document_error("syntax", "perm must be a list of integers");
        std::vector<int> images;
        for (std::size_t i = 0; i < p.size(); ++i) images.push_back(get_int(p[i], "perm[" + std::to_string(i) + "]"));
        if (static_cast<int>(images.size()) != n)
            throw document_error("sequence length", "perm has " + std::to_string(images.size())
                                                        + " entries, expected " + std::to_string(n));
        std::vector<std::pair<int, FixedPointColor>> colors;
        if (j.contains("colors")) {
            const json& c = j["colors"];
            if (!c.is_object()) throw document_error("syntax", "colors must be an object");
            for (const auto& [key, value] : c.items()) {
                int point = 0;
                try {
                    std::size_t used = 0;
                    point = std::stoi(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw document_error("syntax", "colors key '" + key + "' is not an integer");
                }
                if (value == "+")
                    colors.emplace_back(point, FixedPointColor::loop);
                else if (value == "-")
                    colors.emplace_back(point, FixedPointColor::coloop);
                else
                    throw document_error("syntax", "color of " + key + " must be \"+\" or \"-\"");
            }
        }
        auto perm = wrap("decorated permutation", [&] { return DecoratedPermutation(std::move(images), colors); });
        set_k(perm.rank());
        doc.payload = std::move(perm);
    } else if (kind == "le") {
        if (!p.is_object() || !p.contains("shape") || !p.contains("filled"))
            throw document_error("syntax", "le must hold 'shape' and 'filled'");
        for (const auto& [key, value] : p.items())
            if (key != "shape" && key != "filled") throw document_error("syntax", "unknown le field '" + key + "'");
        if (!p["shape"].is_array()) throw document_error("syntax", "le.shape must be a list of row lengths");
        std::vector<int> rows;
        for (std::size_t i = 0; i < p["shape"].size(); ++i)
            rows.push_back(get_int(p["shape"][i], "le.shape[" + std::to_string(i) + "]"));
        auto shape = wrap("Young shape", [&] { return YoungShape(n, rows); });
        set_k(shape.k());
        const json& cells = p["filled"];
        if (!cells.is_array()) throw document_error("syntax", "le.filled must be a list of [row, col] pairs");
        std::vector<Cell> dots;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string where = "le.filled[" + std::to_string(i) + "]";
            if (!cells[i].is_array() || cells[i].size() != 2)
                throw document_error("syntax", where + " must be a [row, col] pair");
            dots.push_back({get_int(cells[i][0], where), get_int(cells[i][1], where)});
        }
        std::vector<Cell> sorted = dots;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw document_error("set semantics", "le.filled lists a cell twice");
        auto filling = wrap("cell inside shape", [&] { return Filling(shape, dots); });
        if (v == Validation::full) wrap("Le-property", [&] { return LeDiagram(filling); });
        doc.payload = std::move(filling);
    } else if (kind == "bounds") {
        if (!p.is_object() || !p.contains("I") || !p.contains("J"))
            throw document_error("syntax", "bounds must hold 'I' and 'J'");
        for (const auto& [key, value] : p.items())
            if (key != "I" && key != "J") throw document_error("syntax", "unknown bounds field '" + key + "'");
        BoundsPayload b{subset_from_json(p["I"], n, "bounds.I"), subset_from_json(p["J"], n, "bounds.J")};
        set_k(k.value_or(b.lower.size()));
        check_rank({b.lower, b.upper}, doc.k, "bounds");
        if (v == Validation::full) wrap("bounds order", [&] { return LatticePathBounds(b.lower, b.upper); });
        doc.payload = std::move(b);
    } else if (kind == "bases") {
        auto b = bases_from_json(p, n, "bases", k);
        set_k(b.rank());
        doc.payload = std::move(b);
    } else {
        if (k) throw document_error("syntax", "flag documents carry no 'k'");
        if (!p.is_array() || p.empty()) throw document_error("syntax", "flag must be a nonempty list of basis lists");
        FlagPayload f;
        for (std::size_t i = 0; i < p.size(); ++i)
            f.constituents.push_back(bases_from_json(p[i], n, "flag[" + std::to_string(i) + "]", std::nullopt));
        wrap("constituent ranks", [&] { return ConstituentList(f.constituents); });
        if (v == Validation::full)
            for (std::size_t i = 0; i < f.constituents.size(); ++i)
                if (!is_matroid(f.constituents[i]))
                    throw document_error("matroid", "flag[" + std::to_string(i) + "] violates basis exchange");
        doc.payload = std::move(f);
    }
    return doc;
}

inline ordered_json subset_json(const KSubset& s) { return ordered_json(s.elements()); }

inline ordered_json subsets_json(const std::vector<KSubset>& v)
{
    ordered_json a = ordered_json::array();
    for (const auto& s : v) a.push_back(subset_json(s));
    return a;
}

inline ordered_json bases_json(const BasisCollection& b) { return subsets_json(b.bases()); }

/// Objects one key per line; arrays of scalars inline; arrays of arrays one
/// element per line.
inline void dump_canonical(std::ostream& os, const ordered_json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
    auto scalar_array = [](const ordered_json& a) {
        return std::all_of(a.begin(), a.end(), [](const ordered_json& e) { return e.is_primitive(); });
    };
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) os << ",\n";
            os << inner << ordered_json(key).dump() << ": ";
            dump_canonical(os, value, indent + 2);
            first = false;
        }
        os << "\n" << pad << "}";
    } else if (j.is_array() && !scalar_array(j)) {
        os << "[\n";
        bool first = true;
        for (const auto& e : j) {
            if (!first) os << ",\n";
            os << inner;
            if (e.is_array() && scalar_array(e))
                os << e.dump();
            else
                dump_canonical(os, e, indent + 2);
            first = false;
        }
        os << "\n" << pad << "]";
    } else {
        os << j.dump();
    }
}

} // namespace detail

inline std::string to_canonical_text(const nlohmann::ordered_json& j)
{
    std::ostringstream os;
    detail::dump_canonical(os, j, 0);
    os << '\n';
    return os.str();
}

/// Parses and validates a document. Malformed JSON is reported with its byte
/// offset; every error is a document_error naming the rule it broke.
inline Document parse_document(const std::string& text, Validation v = Validation::full)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw document_error("syntax", "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return detail::document_from_json(j, v);
}

inline nlohmann::ordered_json document_json(const Document& doc)
{
    nlohmann::ordered_json j;
    j["n"] = doc.n;
    if (!std::holds_alternative<FlagPayload>(doc.payload)) j["k"] = doc.k;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NecklacePayload>) {
                j["necklace"] = detail::subsets_json(p.entries);
            } else if constexpr (std::is_same_v<T, UpperPayload>) {
                j["upper"] = detail::subsets_json(p.entries);
            } else if constexpr (std::is_same_v<T, DecoratedPermutation>) {
                j["perm"] = p.images();
                nlohmann::ordered_json colors = nlohmann::ordered_json::object();
                for (auto [i, c] : p.colors()) colors[std::to_string(i)] = c == FixedPointColor::loop ? "+" : "-";
                j["colors"] = colors;
            } else if constexpr (std::is_same_v<T, Filling>) {
                nlohmann::ordered_json le;
                le["shape"] = p.shape().rows();
                nlohmann::ordered_json cells = nlohmann::ordered_json::array();
                for (Cell c : p.dots()) cells.push_back({c.row, c.col});
                le["filled"] = cells;
                j["le"] = le;
            } else if constexpr (std::is_same_v<T, BoundsPayload>) {
                j["bounds"] = {{"I", detail::subset_json(p.lower)}, {"J", detail::subset_json(p.upper)}};
            } else if constexpr (std::is_same_v<T, BasisCollection>) {
                j["bases"] = detail::bases_json(p);
            } else {
                nlohmann::ordered_json parts = nlohmann::ordered_json::array();
                for (const auto& b : p.constituents) parts.push_back(detail::bases_json(b));
                j["flag"] = parts;
            }
        },
        doc.payload);
    return j;
}

inline std::string serialize(const Document& doc) { return to_canonical_text(document_json(doc)); }

inline Document make_document(const GrassmannNecklace& neck)
{
    return {neck.ground_size(), neck.rank(), NecklacePayload{neck.entries()}};
}

inline Document make_document(const DecoratedPermutation& p) { return {p.ground_size(), p.rank(), p}; }

inline Document make_document(const BasisCollection& b) { return {b.ground_size(), b.rank(), b}; }

inline Document make_document(const LeDiagram& L) { return {L.ground_size(), L.rank(), L.filling()}; }

inline Document make_document(const LatticePathBounds& b)
{
    return {b.ground_size(), b.rank(), BoundsPayload{b.lower(), b.upper()}};
}

inline Document make_upper_document(const DecoratedPermutation& p)
{
    return {p.ground_size(), p.rank(), UpperPayload{upper_necklace_from_perm(p)}};
}

} // namespace positroid
