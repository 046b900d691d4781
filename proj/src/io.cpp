#include "nova/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nova {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::size_t get_index(const Json& v, std::size_t dim, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(where + ": index must be a nonnegative integer");
    auto i = v.get<unsigned long long>();
    if (i >= dim) fail(where + ": index " + std::to_string(i) + " out of range for dim " +
                       std::to_string(dim));
    return static_cast<std::size_t>(i);
}

Scalar get_scalar(const Json& v, Field f, const std::string& where) {
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
    if (v.is_number_integer())
        return Scalar::parse(std::to_string(v.get<long long>()), f);
    fail(where + ": scalar must be a \"p/q\" string (floating literals are rejected)");
}

Mat parse_matrix_entries(const Json& entries, std::size_t dim, Field f,
                         const std::string& where) {
    if (!entries.is_array()) fail(where + ": entry list must be an array");
    Mat m(dim, dim, f);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Json& e : entries) {
        if (!e.is_array() || e.size() != 3)
            fail(where + ": each entry must be [i, j, value]");
        std::size_t i = get_index(e[0], dim, where);
        std::size_t j = get_index(e[1], dim, where);
        if (!seen.insert({i, j}).second)
            fail(where + ": duplicate entry at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
        m.at(i, j) = get_scalar(e[2], f, where);
    }
    return m;
}

Algebra parse_product_entries(const Json& entries, std::size_t dim, Field f,
                              const std::string& name) {
    if (!entries.is_array()) fail("products." + name + ": entry list must be an array");
    std::vector<TensorEntry> list;
    for (const Json& e : entries) {
        if (!e.is_array() || e.size() != 4)
            fail("products." + name + ": each entry must be [i, j, k, value]");
        TensorEntry t;
        t.i = get_index(e[0], dim, "products." + name);
        t.j = get_index(e[1], dim, "products." + name);
        t.k = get_index(e[2], dim, "products." + name);
        t.value = get_scalar(e[3], f, "products." + name);
        list.push_back(std::move(t));
    }
    return make_algebra(dim, list, f, name);
}

}  // namespace

ParsedSpec parse_spec(const Json& doc) {
    if (!doc.is_object()) fail("spec document must be a JSON object");
    static const std::set<std::string> known = {"dim", "field", "basis",
                                               "products", "maps", "forms"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key())) fail("unknown spec key '" + it.key() + "'");

    ParsedSpec spec;
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
        fail("spec needs a nonnegative integer 'dim'");
    auto dim = doc["dim"].get<unsigned long long>();
    if (dim > kMaxDim)
        fail("dim " + std::to_string(dim) + " exceeds the supported maximum " +
             std::to_string(kMaxDim));
    spec.dim = static_cast<std::size_t>(dim);

    if (!doc.contains("field") || !doc["field"].is_string())
        fail("spec needs a 'field' string (\"Q\" or \"GF(p)\")");
    spec.field = Field::parse(doc["field"].get<std::string>());

    if (doc.contains("basis")) {
        if (!doc["basis"].is_array()) fail("'basis' must be an array of names");
        for (const Json& b : doc["basis"]) {
            if (!b.is_string()) fail("'basis' must be an array of names");
            spec.basis.push_back(b.get<std::string>());
        }
        if (spec.basis.size() != spec.dim)
            fail("'basis' lists " + std::to_string(spec.basis.size()) + " names for dim " +
                 std::to_string(spec.dim));
    }

    if (doc.contains("products")) {
        if (!doc["products"].is_object()) fail("'products' must be an object");
        for (auto it = doc["products"].begin(); it != doc["products"].end(); ++it)
            spec.products.emplace(it.key(),
                                  parse_product_entries(it.value(), spec.dim, spec.field,
                                                        it.key()));
    }
    if (doc.contains("maps")) {
        if (!doc["maps"].is_object()) fail("'maps' must be an object");
        for (auto it = doc["maps"].begin(); it != doc["maps"].end(); ++it)
            spec.maps.emplace(it.key(),
                              LinearOperator{parse_matrix_entries(it.value(), spec.dim,
                                                                  spec.field,
                                                                  "maps." + it.key()),
                                             it.key()});
    }
    if (doc.contains("forms")) {
        if (!doc["forms"].is_object()) fail("'forms' must be an object");
        for (auto it = doc["forms"].begin(); it != doc["forms"].end(); ++it)
            spec.forms.emplace(it.key(),
                               BilinearForm{parse_matrix_entries(it.value(), spec.dim,
                                                                 spec.field,
                                                                 "forms." + it.key()),
                                            it.key()});
    }
    return spec;
}

ParsedSpec parse_spec_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(std::string("spec is not valid JSON: ") + e.what());
    }
    return parse_spec(doc);
}

ParsedSpec parse_spec_file(const std::string& path) {
    return parse_spec_text(read_text_file(path));
}

Json spec_to_json(const ParsedSpec& spec) {
    Json doc;
    doc["dim"] = spec.dim;
    doc["field"] = spec.field.name();
    if (!spec.basis.empty()) doc["basis"] = spec.basis;
    Json products = Json::object();
    for (const auto& [name, alg] : spec.products) {
        Json entries = Json::array();
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j)
                for (std::size_t k = 0; k < alg.dim(); ++k)
                    if (!alg.c(i, j, k).is_zero())
                        entries.push_back(Json::array({i, j, k, alg.c(i, j, k).str()}));
        products[name] = std::move(entries);
    }
    if (!products.empty()) doc["products"] = std::move(products);
    auto matrix_entries = [](const Mat& m) {
        Json entries = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero())
                    entries.push_back(Json::array({i, j, m.at(i, j).str()}));
        return entries;
    };
    Json maps = Json::object();
    for (const auto& [name, op] : spec.maps) maps[name] = matrix_entries(op.m);
    if (!maps.empty()) doc["maps"] = std::move(maps);
    Json forms = Json::object();
    for (const auto& [name, f] : spec.forms) forms[name] = matrix_entries(f.b);
    if (!forms.empty()) doc["forms"] = std::move(forms);
    return doc;
}

namespace {

template <class M>
const typename M::mapped_type* pick(const M& components, const std::optional<std::string>& chosen,
                                    const char* role, const char* section) {
    if (chosen) {
        auto it = components.find(*chosen);
        if (it == components.end())
            fail(std::string("no ") + section + " named '" + *chosen + "' to bind as " + role);
        return &it->second;
    }
    auto it = components.find(role);
    return it == components.end() ? nullptr : &it->second;
}

}  // namespace

StructureBundle bind_roles(const ParsedSpec& spec, const RoleNames& names) {
    const Algebra* dot = pick(spec.products, names.dot, "dot", "product");
    const Algebra* star = pick(spec.products, names.star, "star", "product");
    const LinearOperator* alpha = pick(spec.maps, names.alpha, "alpha", "map");
    const LinearOperator* del = pick(spec.maps, names.del, "del", "map");
    const BilinearForm* form = pick(spec.forms, names.form, "form", "form");
    // A lone product with a free-form name still binds somewhere useful:
    // it becomes the star (primary) product.
    if (!dot && !star && spec.products.size() == 1 && !names.dot && !names.star)
        star = &spec.products.begin()->second;
    auto opt = [](const auto* p) {
        return p ? std::optional<std::decay_t<decltype(*p)>>(*p) : std::nullopt;
    };
    return make_bundle(spec.dim, spec.field, opt(dot), opt(star), opt(alpha), opt(del),
                       opt(form));
}

ParsedSpec bundle_to_spec(const StructureBundle& b) {
    ParsedSpec spec;
    spec.dim = b.dim;
    spec.field = b.field;
    if (b.dot) spec.products.emplace("dot", *b.dot);
    if (b.star) spec.products.emplace("star", *b.star);
    if (b.alpha) spec.maps.emplace("alpha", *b.alpha);
    if (b.del) spec.maps.emplace("del", *b.del);
    if (b.form) spec.forms.emplace("form", *b.form);
    return spec;
}

Json witness_to_json(const Witness& w) {
    Json j;
    j["tuple"] = w.tuple;
    auto coeffs = [](const Vec& v) {
        Json a = Json::array();
        for (const Scalar& s : v) a.push_back(s.str());
        return a;
    };
    if (w.lhs_vec) j["lhs"] = coeffs(*w.lhs_vec);
    if (w.rhs_vec) j["rhs"] = coeffs(*w.rhs_vec);
    if (w.lhs_scalar) j["lhs"] = w.lhs_scalar->str();
    if (w.rhs_scalar) j["rhs"] = w.rhs_scalar->str();
    if (w.lhs_text) j["lhs"] = *w.lhs_text;
    if (w.rhs_text) j["rhs"] = *w.rhs_text;
    if (w.role) j["role"] = *w.role;
    return j;
}

Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const Report::Entry& e : r.entries) {
        Json c;
        c["identity"] = e.name;
        c["holds"] = e.verdict.holds;
        if (e.verdict.witness) c["witness"] = witness_to_json(*e.verdict.witness);
        checks.push_back(std::move(c));
    }
    return checks;
}

Json make_report_doc(const std::string& verdict, const Json& checks,
                     const std::optional<Json>& construction_output,
                     const std::optional<std::string>& error, const std::string& command,
                     const std::string& input_digest, std::uint64_t seed) {
    Json doc;
    doc["verdict"] = verdict;
    doc["checks"] = checks.is_null() ? Json::array() : checks;
    if (construction_output) doc["construction_output"] = *construction_output;
    if (error) doc["error"] = *error;
    doc["provenance"] = {{"command", command}, {"input_digest", input_digest}, {"seed", seed}};
    return doc;
}

std::string stable_dump(const Json& j) {
    // nlohmann's object storage is key-sorted, so dump() is already
    // canonical for equal documents.
    return j.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nova
