#include "bhj/manifest.hpp"

#include "bhj/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bhj {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InvariantViolation(where + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing field '" + key + "'");
    return *it;
}

std::string string_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) fail(where, "field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t size_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_unsigned()) fail(where, "field '" + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

Scalar scalar_field(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "scalars are serialized as strings");
    try {
        return Scalar::parse_exact(v.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

SuperSpace space_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_object()) fail(where, "field '" + key + "' must be an object");
    return SuperSpace(size_field(v, "even", where + "." + key),
                      size_field(v, "odd", where + "." + key));
}

Matrix matrix_field(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "matrix must be an array of rows");
    const std::size_t rows = v.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!v[0].is_array()) fail(where, "matrix rows must be arrays");
        cols = v[0].size();
    }
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!v[r].is_array() || v[r].size() != cols)
            fail(where, "matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = scalar_field(v[r][c], where + " entry (" + std::to_string(r) + "," +
                                                   std::to_string(c) + ")");
    }
    return m;
}

SuperProduct constants_field(const json& j, const SuperSpace& space,
                             const std::string& where) {
    const json& v = field(j, "constants", where);
    if (!v.is_array()) fail(where, "'constants' must be an array");
    SuperProduct p(space);
    for (const auto& entry : v) {
        if (!entry.is_array() || entry.size() != 4)
            fail(where, "each constant is [i, j, k, \"c\"]");
        if (!entry[0].is_number_unsigned() || !entry[1].is_number_unsigned() ||
            !entry[2].is_number_unsigned())
            fail(where, "constant indices must be nonnegative integers");
        std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>(),
                    k = entry[2].get<std::size_t>();
        if (p.constants().count({i, jj, k}))
            fail(where, "duplicate constant key (" + std::to_string(i) + "," +
                            std::to_string(jj) + "," + std::to_string(k) + ")");
        Scalar c = scalar_field(entry[3], where + " constant (" + std::to_string(i) + "," +
                                              std::to_string(jj) + "," + std::to_string(k) +
                                              ")");
        if (c.is_zero()) fail(where, "explicit zero constants are not stored");
        try {
            p.set(i, jj, k, std::move(c));
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    return p;
}

GradedMap graded_map_field(const json& v, const SuperSpace& domain,
                           const SuperSpace& codomain, Parity degree,
                           const std::string& where) {
    try {
        return GradedMap(domain, codomain, degree, matrix_field(v, where));
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

std::vector<GradedMap> action_family_field(const json& j, const std::string& key,
                                           const SuperSpace& algebra_space,
                                           const SuperSpace& module_space,
                                           const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_array() || v.size() != algebra_space.dim())
        fail(where, "'" + key + "' must hold one matrix per algebra basis element");
    std::vector<GradedMap> family;
    family.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        family.push_back(graded_map_field(v[i], module_space, module_space,
                                          algebra_space.parity(i),
                                          where + "." + key + "[" + std::to_string(i) + "]"));
    return family;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json space_to_json(const SuperSpace& s) {
    return json{{"even", s.even_dim()}, {"odd", s.odd_dim()}};
}

json constants_to_json(const SuperProduct& p) {
    json out = json::array();
    for (const auto& [key, c] : p.constants())
        out.push_back(json::array({key.i, key.j, key.k, c.str()}));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Serialization (with canonical reindexing of layout spaces)
// ---------------------------------------------------------------------------

json algebra_to_json(const std::string& name, const BiHomJordanSuperalgebra& J) {
    const BiHomJordanSuperalgebra* a = &J;
    BiHomJordanSuperalgebra reindexed = J;
    if (!J.space().is_canonical()) {
        GradedMap perm = canonical_reindexing(J.space());
        GradedMap back = perm.inverted();
        reindexed = BiHomJordanSuperalgebra(
            J.product().conjugated_by(perm),
            compose(perm, compose(J.alpha(), back)),
            compose(perm, compose(J.beta(), back)));
        a = &reindexed;
    }
    return json{{"kind", "algebra"},
                {"name", name},
                {"space", space_to_json(a->space())},
                {"constants", constants_to_json(a->product())},
                {"alpha", matrix_to_json(a->alpha().matrix())},
                {"beta", matrix_to_json(a->beta().matrix())}};
}

json pre_jordan_to_json(const std::string& name, const BiHomPreJordanSuperalgebra& P) {
    const BiHomPreJordanSuperalgebra* a = &P;
    BiHomPreJordanSuperalgebra reindexed = P;
    if (!P.space().is_canonical()) {
        GradedMap perm = canonical_reindexing(P.space());
        GradedMap back = perm.inverted();
        reindexed = BiHomPreJordanSuperalgebra(
            P.circ().conjugated_by(perm),
            compose(perm, compose(P.alpha(), back)),
            compose(perm, compose(P.beta(), back)));
        a = &reindexed;
    }
    return json{{"kind", "pre_jordan"},
                {"name", name},
                {"space", space_to_json(a->space())},
                {"constants", constants_to_json(a->circ())},
                {"alpha", matrix_to_json(a->alpha().matrix())},
                {"beta", matrix_to_json(a->beta().matrix())}};
}

namespace {

// Conjugates a module-space family and twists to canonical index order.
struct CanonicalModule {
    SuperSpace space;
    Matrix perm, back;

    explicit CanonicalModule(const SuperSpace& s) {
        GradedMap p = canonical_reindexing(s);
        space = p.codomain();
        perm = p.matrix();
        back = perm.inverse();
    }

    Matrix conj(const Matrix& m) const { return perm * m * back; }
};

} // namespace

json bimodule_to_json(const std::string& name, const std::string& algebra_name,
                      const Bimodule& B) {
    CanonicalModule cm(B.space());
    json left = json::array(), right = json::array();
    for (const auto& m : B.left()) left.push_back(matrix_to_json(cm.conj(m.matrix())));
    for (const auto& m : B.right()) right.push_back(matrix_to_json(cm.conj(m.matrix())));
    return json{{"kind", "bimodule"},
                {"name", name},
                {"algebra", algebra_name},
                {"space", space_to_json(cm.space)},
                {"left", std::move(left)},
                {"right", std::move(right)},
                {"alpha_v", matrix_to_json(cm.conj(B.alpha_v().matrix()))},
                {"beta_v", matrix_to_json(cm.conj(B.beta_v().matrix()))}};
}

json representation_to_json(const std::string& name, const std::string& algebra_name,
                            const Representation& R) {
    CanonicalModule cm(R.space());
    json rho = json::array();
    for (const auto& m : R.rho()) rho.push_back(matrix_to_json(cm.conj(m.matrix())));
    return json{{"kind", "representation"},
                {"name", name},
                {"algebra", algebra_name},
                {"space", space_to_json(cm.space)},
                {"rho", std::move(rho)},
                {"alpha_v", matrix_to_json(cm.conj(R.alpha_v().matrix()))},
                {"beta_v", matrix_to_json(cm.conj(R.beta_v().matrix()))},
                {"dual_level", R.dual_level()}};
}

json o_operator_to_json(const std::string& name, const std::string& rep_name,
                        const OOperator& op) {
    CanonicalModule cm(op.rep()->space());
    // Rows live in the algebra space, which manifests keep canonical.
    Matrix t = op.map().matrix() * cm.back;
    return json{{"kind", "o_operator"},
                {"name", name},
                {"representation", rep_name},
                {"parity", parity_bit(op.parity())},
                {"matrix", matrix_to_json(t)}};
}

json map_to_json(const std::string& name, const GradedMap& f) {
    CanonicalModule dom(f.domain()), cod(f.codomain());
    return json{{"kind", "map"},
                {"name", name},
                {"domain", space_to_json(dom.space)},
                {"codomain", space_to_json(cod.space)},
                {"degree", parity_bit(f.degree())},
                {"matrix", matrix_to_json(cod.perm * f.matrix() * dom.back)}};
}

std::string render_manifest_file(const std::vector<json>& manifests) {
    if (manifests.size() == 1) return manifests[0].dump(2) + "\n";
    json arr = json::array();
    for (const auto& m : manifests) arr.push_back(m);
    return arr.dump(2) + "\n";
}

std::string fnv1a64_hex(const std::string& bytes) {
    unsigned long long h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

namespace {

struct RawManifest {
    std::string kind, name, where;
    json body;
};

void parse_document(const std::string& label, const std::string& text,
                    std::vector<RawManifest>& out) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw bhj::ParseError(label + ": " + e.what());
    }
    std::vector<json> objects;
    if (doc.is_array())
        objects.assign(doc.begin(), doc.end());
    else
        objects.push_back(std::move(doc));
    for (auto& obj : objects) {
        if (!obj.is_object()) throw bhj::ParseError(label + ": manifest must be an object");
        std::string kind = string_field(obj, "kind", label);
        std::string name = string_field(obj, "name", label);
        if (name.empty()) fail(label, "manifest name must be nonempty");
        out.push_back({std::move(kind), name, label + " manifest '" + name + "'",
                       std::move(obj)});
    }
}

} // namespace

std::vector<std::string> ObjectGraph::names_of_kind(const std::string& kind) const {
    std::vector<std::string> names;
    for (const auto& [k, n] : order)
        if (k == kind) names.push_back(n);
    return names;
}

ObjectGraph load_manifest_texts(
    const std::vector<std::pair<std::string, std::string>>& docs) {
    std::vector<RawManifest> raws;
    for (const auto& [label, text] : docs) parse_document(label, text, raws);

    // Exact duplicates across files are tolerated; conflicts are not.
    std::map<std::string, const RawManifest*> by_name;
    std::vector<const RawManifest*> unique;
    for (const auto& raw : raws) {
        auto [it, inserted] = by_name.emplace(raw.name, &raw);
        if (!inserted) {
            if (it->second->body != raw.body)
                fail(raw.where, "conflicts with an earlier manifest of the same name");
            continue;
        }
        unique.push_back(&raw);
    }

    ObjectGraph g;
    auto note = [&g](const std::string& kind, const std::string& name, const json& body) {
        g.order.emplace_back(kind, name);
        g.digests[name] = fnv1a64_hex(body.dump(2) + "\n");
    };

    // Kinds form a dependency order: algebras and maps are leaves,
    // representations and bimodules reference algebras, operators reference
    // representations.
    for (const RawManifest* r : unique) {
        if (r->kind != "algebra" && r->kind != "pre_jordan") continue;
        SuperSpace space = space_field(r->body, "space", r->where);
        SuperProduct product = constants_field(r->body, space, r->where);
        GradedMap alpha = graded_map_field(field(r->body, "alpha", r->where), space, space,
                                           Parity::even, r->where + ".alpha");
        GradedMap beta = graded_map_field(field(r->body, "beta", r->where), space, space,
                                          Parity::even, r->where + ".beta");
        try {
            if (r->kind == "algebra")
                g.algebras[r->name] = std::make_shared<BiHomJordanSuperalgebra>(
                    std::move(product), std::move(alpha), std::move(beta));
            else
                g.pre_jordans[r->name] = std::make_shared<BiHomPreJordanSuperalgebra>(
                    std::move(product), std::move(alpha), std::move(beta));
        } catch (const Error& e) {
            fail(r->where, e.what());
        }
    }
    for (const RawManifest* r : unique) {
        if (r->kind != "map") continue;
        SuperSpace domain = r->body.contains("space")
                                ? space_field(r->body, "space", r->where)
                                : space_field(r->body, "domain", r->where);
        SuperSpace codomain = r->body.contains("space")
                                  ? domain
                                  : space_field(r->body, "codomain", r->where);
        std::size_t deg = size_field(r->body, "degree", r->where);
        if (deg > 1) fail(r->where, "degree must be 0 or 1");
        g.maps[r->name] = std::make_shared<GradedMap>(
            graded_map_field(field(r->body, "matrix", r->where), domain, codomain,
                             deg == 0 ? Parity::even : Parity::odd, r->where + ".matrix"));
    }
    for (const RawManifest* r : unique) {
        if (r->kind != "representation" && r->kind != "bimodule") continue;
        std::string alg_name = string_field(r->body, "algebra", r->where);
        auto it = g.algebras.find(alg_name);
        if (it == g.algebras.end())
            throw UnresolvedReference(r->where + ": unknown algebra '" + alg_name + "'");
        const AlgebraPtr& J = it->second;
        SuperSpace space = space_field(r->body, "space", r->where);
        GradedMap av = graded_map_field(field(r->body, "alpha_v", r->where), space, space,
                                        Parity::even, r->where + ".alpha_v");
        GradedMap bv = graded_map_field(field(r->body, "beta_v", r->where), space, space,
                                        Parity::even, r->where + ".beta_v");
        try {
            if (r->kind == "representation") {
                auto rho = action_family_field(r->body, "rho", J->space(), space, r->where);
                int level = 0;
                if (r->body.contains("dual_level")) {
                    level = static_cast<int>(size_field(r->body, "dual_level", r->where));
                    if (level > 1) fail(r->where, "dual_level must be 0 or 1");
                }
                g.representations[r->name] = std::make_shared<Representation>(
                    J, space, std::move(rho), std::move(av), std::move(bv), level);
            } else {
                auto left = action_family_field(r->body, "left", J->space(), space, r->where);
                auto right =
                    action_family_field(r->body, "right", J->space(), space, r->where);
                g.bimodules[r->name] = std::make_shared<Bimodule>(
                    J, space, std::move(left), std::move(right), std::move(av),
                    std::move(bv));
            }
        } catch (const Error& e) {
            fail(r->where, e.what());
        }
    }
    for (const RawManifest* r : unique) {
        if (r->kind != "o_operator") continue;
        std::string rep_name = string_field(r->body, "representation", r->where);
        auto it = g.representations.find(rep_name);
        if (it == g.representations.end())
            throw UnresolvedReference(r->where + ": unknown representation '" + rep_name +
                                      "'");
        const RepresentationPtr& rep = it->second;
        std::size_t par = size_field(r->body, "parity", r->where);
        if (par > 1) fail(r->where, "parity must be 0 or 1");
        try {
            g.operators[r->name] = std::make_shared<OOperator>(
                rep, graded_map_field(field(r->body, "matrix", r->where), rep->space(),
                                      rep->algebra()->space(),
                                      par == 0 ? Parity::even : Parity::odd,
                                      r->where + ".matrix"));
        } catch (const Error& e) {
            fail(r->where, e.what());
        }
    }
    for (const RawManifest* r : unique) {
        static const char* known[] = {"algebra",        "pre_jordan", "bimodule",
                                      "representation", "o_operator", "map"};
        bool ok = false;
        for (const char* k : known) ok = ok || r->kind == k;
        if (!ok) fail(r->where, "unknown manifest kind '" + r->kind + "'");
        note(r->kind, r->name, r->body);
    }
    return g;
}

ObjectGraph load_manifests(const std::vector<std::string>& paths) {
    std::vector<std::pair<std::string, std::string>> docs;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(path + ": cannot open file");
        std::ostringstream ss;
        ss << in.rdbuf();
        docs.emplace_back(path, ss.str());
    }
    return load_manifest_texts(docs);
}

} // namespace bhj
