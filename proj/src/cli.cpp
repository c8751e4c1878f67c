#include "bhj/cli.hpp"

#include "bhj/audit.hpp"
#include "bhj/errors.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace bhj::cli {

using nlohmann::json;

namespace {

struct Options {
    std::vector<std::string> inputs;
    std::string output;
    std::string report = "text";
    long s = 0, t = 0;
    int parity = 0;
    std::string coeffs = "-1,0,1";
    unsigned long budget = 531441; // 3^12
    unsigned jobs = 1;
};

std::string pick_name(const ObjectGraph& g, const std::string& kind, std::size_t index,
                      const char* cmd) {
    auto names = g.names_of_kind(kind);
    if (index >= names.size())
        throw UnresolvedReference(std::string(cmd) + ": needs " + std::to_string(index + 1) +
                                  " input manifest(s) of kind '" + kind + "', got " +
                                  std::to_string(names.size()));
    return names[index];
}

std::string algebra_name_of(const ObjectGraph& g, const AlgebraPtr& a) {
    for (const auto& [name, ptr] : g.algebras)
        if (ptr == a) return name;
    throw UnresolvedReference("algebra of a constructed object is not among the inputs");
}

std::vector<Scalar> parse_coeffs(const std::string& text) {
    std::vector<Scalar> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(Scalar::parse(item));
    if (out.empty()) throw InvariantViolation("--coeffs must list at least one rational");
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open for writing");
    f << content;
}

void require_output(const Options& opt, const char* cmd) {
    if (opt.output.empty())
        throw InvariantViolation(std::string(cmd) + ": --output is required");
}

int emit_audit(const Options& opt, std::ostream& out, const ObjectGraph& g,
               AuditDocument doc) {
    doc.add_inputs(g);
    std::string rendered = opt.report == "machine" ? doc.to_machine() : doc.to_text();
    if (!opt.output.empty())
        write_file(opt.output, rendered);
    else
        out << rendered;
    return doc.all_passed() ? 0 : 1;
}

// Prefixes check identities with the object name when several objects of the
// same kind are audited together.
void append_named(ReportSet& all, const std::string& name, ReportSet rs, bool prefix) {
    for (auto& r : rs.reports) {
        if (prefix) r.identity = name + ":" + r.identity;
        all.reports.push_back(std::move(r));
    }
}

template <class MapT, class Fn>
int check_each(const Options& opt, std::ostream& out, const ObjectGraph& g, const MapT& map,
               const std::string& kind, const char* cmd, Fn&& verify) {
    auto names = g.names_of_kind(kind);
    if (names.empty())
        throw UnresolvedReference(std::string(cmd) + ": no input manifest of kind '" + kind +
                                  "'");
    ReportSet all;
    for (const auto& name : names)
        append_named(all, name, verify(*map.at(name)), names.size() > 1);
    AuditDocument doc;
    doc.add_checks(all);
    return emit_audit(opt, out, g, std::move(doc));
}

int write_construction(const Options& opt, std::ostream& out, const ObjectGraph& g,
                       std::vector<json> manifests, const std::string& result_name,
                       ReportSet attached) {
    write_file(opt.output, render_manifest_file(manifests));
    AuditDocument doc;
    doc.add_inputs(g);
    doc.add_checks(attached);
    std::string rendered = opt.report == "machine" ? doc.to_machine() : doc.to_text();
    out << "wrote " << result_name << " to " << opt.output << "\n" << rendered;
    return doc.all_passed() ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
    ObjectGraph g = load_manifests(opt.inputs);

    if (cmd == "check-algebra")
        return check_each(opt, out, g, g.algebras, "algebra", "check-algebra",
                          [](const BiHomJordanSuperalgebra& J) { return verify_algebra(J); });
    if (cmd == "check-pre-jordan")
        return check_each(opt, out, g, g.pre_jordans, "pre_jordan", "check-pre-jordan",
                          [](const BiHomPreJordanSuperalgebra& P) {
                              return verify_pre_jordan(P);
                          });
    if (cmd == "check-bimodule")
        return check_each(opt, out, g, g.bimodules, "bimodule", "check-bimodule",
                          [](const Bimodule& B) { return verify_bimodule(B); });
    if (cmd == "check-rep")
        return check_each(opt, out, g, g.representations, "representation", "check-rep",
                          [](const Representation& R) { return verify_representation(R); });
    if (cmd == "check-oop")
        return check_each(opt, out, g, g.operators, "o_operator", "check-oop",
                          [](const OOperator& op) {
                              return verify_o_operator(*op.rep(), op.map());
                          });
    if (cmd == "check-rb") {
        const auto& J = g.algebras.at(pick_name(g, "algebra", 0, "check-rb"));
        const auto& R = g.maps.at(pick_name(g, "map", 0, "check-rb"));
        AuditDocument doc;
        doc.add_checks(verify_rota_baxter(*J, *R));
        return emit_audit(opt, out, g, std::move(doc));
    }
    if (cmd == "check-isom") {
        const auto& r1 = g.representations.at(pick_name(g, "representation", 0, "check-isom"));
        const auto& r2 = g.representations.at(pick_name(g, "representation", 1, "check-isom"));
        const auto& phi = g.maps.at(pick_name(g, "map", 0, "check-isom"));
        AuditDocument doc;
        doc.add_checks(check_rep_isomorphism(*r1, *r2, *phi));
        return emit_audit(opt, out, g, std::move(doc));
    }

    if (cmd == "twist") {
        require_output(opt, "twist");
        std::string jn = pick_name(g, "algebra", 0, "twist");
        const auto& a = g.maps.at(pick_name(g, "map", 0, "twist"));
        const auto& b = g.maps.at(pick_name(g, "map", 1, "twist"));
        BiHomJordanSuperalgebra twisted = yau_twist(*g.algebras.at(jn), *a, *b);
        return write_construction(opt, out, g,
                                  {algebra_to_json(jn + ".twisted", twisted)},
                                  jn + ".twisted", {});
    }
    if (cmd == "untwist") {
        require_output(opt, "untwist");
        std::string jn = pick_name(g, "algebra", 0, "untwist");
        UntwistResult r = untwist(*g.algebras.at(jn), opt.s, opt.t);
        return write_construction(opt, out, g,
                                  {algebra_to_json(jn + ".untwisted", r.algebra)},
                                  jn + ".untwisted", std::move(r.report));
    }
    if (cmd == "semidirect") {
        require_output(opt, "semidirect");
        std::string bn = pick_name(g, "bimodule", 0, "semidirect");
        BiHomJordanSuperalgebra sd = semidirect_product(*g.bimodules.at(bn));
        return write_construction(opt, out, g,
                                  {algebra_to_json(bn + ".semidirect", sd)},
                                  bn + ".semidirect", {});
    }
    if (cmd == "direct-sum") {
        require_output(opt, "direct-sum");
        std::string n1 = pick_name(g, "representation", 0, "direct-sum");
        std::string n2 = pick_name(g, "representation", 1, "direct-sum");
        const auto& r1 = g.representations.at(n1);
        Representation sum = direct_sum_rep(*r1, *g.representations.at(n2));
        std::string an = algebra_name_of(g, r1->algebra());
        std::string rn = n1 + "+" + n2;
        return write_construction(opt, out, g,
                                  {algebra_to_json(an, *r1->algebra()),
                                   representation_to_json(rn, an, sum)},
                                  rn, {});
    }
    if (cmd == "dual-rep") {
        require_output(opt, "dual-rep");
        std::string n = pick_name(g, "representation", 0, "dual-rep");
        const auto& r = g.representations.at(n);
        Representation dual = dual_rep(*r);
        std::string an = algebra_name_of(g, r->algebra());
        return write_construction(opt, out, g,
                                  {algebra_to_json(an, *r->algebra()),
                                   representation_to_json(n + ".dual", an, dual)},
                                  n + ".dual", {});
    }
    if (cmd == "coadjoint") {
        require_output(opt, "coadjoint");
        std::string jn = pick_name(g, "algebra", 0, "coadjoint");
        Representation co = coadjoint_rep(g.algebras.at(jn));
        return write_construction(opt, out, g,
                                  {algebra_to_json(jn, *g.algebras.at(jn)),
                                   representation_to_json(jn + ".coadjoint", jn, co)},
                                  jn + ".coadjoint", {});
    }
    if (cmd == "coadjoint-semidirect") {
        require_output(opt, "coadjoint-semidirect");
        std::string jn = pick_name(g, "algebra", 0, "coadjoint-semidirect");
        BiHomJordanSuperalgebra sd = coadjoint_semidirect(g.algebras.at(jn));
        return write_construction(
            opt, out, g, {algebra_to_json(jn + ".coadjoint-semidirect", sd)},
            jn + ".coadjoint-semidirect", {});
    }
    if (cmd == "reverse-rep") {
        require_output(opt, "reverse-rep");
        std::string n = pick_name(g, "representation", 0, "reverse-rep");
        const auto& r = g.representations.at(n);
        Representation rev = parity_reverse_rep(*r);
        std::string an = algebra_name_of(g, r->algebra());
        return write_construction(opt, out, g,
                                  {algebra_to_json(an, *r->algebra()),
                                   representation_to_json(n + ".reversed", an, rev)},
                                  n + ".reversed", {});
    }
    if (cmd == "pre-to-jordan") {
        require_output(opt, "pre-to-jordan");
        std::string pn = pick_name(g, "pre_jordan", 0, "pre-to-jordan");
        BiHomJordanSuperalgebra J = pre_to_jordan(*g.pre_jordans.at(pn));
        return write_construction(opt, out, g, {algebra_to_json(pn + ".jordan", J)},
                                  pn + ".jordan", {});
    }
    if (cmd == "induce") {
        require_output(opt, "induce");
        std::string on = pick_name(g, "o_operator", 0, "induce");
        const auto& op = g.operators.at(on);
        if (parity_bit(op->parity()) != static_cast<unsigned>(opt.parity))
            throw WrongParity("induce: --parity does not match the operator's parity");
        InducedPreJordan ind = opt.parity == 0 ? induce_pre_jordan_even(*op)
                                               : induce_pre_jordan_odd(*op);
        return write_construction(opt, out, g,
                                  {pre_jordan_to_json(on + ".induced", ind.algebra)},
                                  on + ".induced", std::move(ind.report));
    }
    if (cmd == "oop-suspend" || cmd == "oop-extend") {
        require_output(opt, cmd.c_str());
        std::string on = pick_name(g, "o_operator", 0, cmd.c_str());
        const auto& op = g.operators.at(on);
        std::string rn;
        for (const auto& [name, ptr] : g.representations)
            if (ptr == op->rep()) rn = name;
        OOperator result = cmd == "oop-suspend" ? o_op_suspend(*op) : o_op_extend(*op);
        std::string an = algebra_name_of(g, op->rep()->algebra());
        std::string new_rep = rn + (cmd == "oop-suspend" ? ".reversed" : ".self-sum");
        std::string new_op = on + (cmd == "oop-suspend" ? ".suspended" : ".extended");
        return write_construction(
            opt, out, g,
            {algebra_to_json(an, *op->rep()->algebra()),
             representation_to_json(new_rep, an, *result.rep()),
             o_operator_to_json(new_op, new_rep, result)},
            new_op, {});
    }
    if (cmd == "oop-via-isom") {
        require_output(opt, "oop-via-isom");
        std::string on = pick_name(g, "o_operator", 0, "oop-via-isom");
        const auto& op = g.operators.at(on);
        const auto& phi = g.maps.at(pick_name(g, "map", 0, "oop-via-isom"));
        OOperator result = o_op_via_isomorphism(*op, *phi);
        std::string rn;
        for (const auto& [name, ptr] : g.representations)
            if (ptr == op->rep()) rn = name;
        std::string an = algebra_name_of(g, op->rep()->algebra());
        return write_construction(
            opt, out, g,
            {algebra_to_json(an, *op->rep()->algebra()),
             representation_to_json(rn, an, *op->rep()),
             o_operator_to_json(on + ".via-isom", rn, result)},
            on + ".via-isom", {});
    }
    if (cmd == "search-oop") {
        require_output(opt, "search-oop");
        std::string rn = pick_name(g, "representation", 0, "search-oop");
        const auto& rep = g.representations.at(rn);
        auto found = search_o_operators(rep, opt.parity == 0 ? Parity::even : Parity::odd,
                                        parse_coeffs(opt.coeffs), opt.budget, opt.jobs);
        std::string an = algebra_name_of(g, rep->algebra());
        std::vector<json> manifests = {algebra_to_json(an, *rep->algebra()),
                                       representation_to_json(rn, an, *rep)};
        for (std::size_t i = 0; i < found.size(); ++i) {
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, ".op%03zu", i);
            manifests.push_back(o_operator_to_json(rn + suffix, rn, found[i]));
        }
        write_file(opt.output, render_manifest_file(manifests));
        out << "found " << found.size() << " operator(s), wrote " << opt.output << "\n";
        return 0;
    }
    throw InvariantViolation("unknown subcommand '" + cmd + "'");
}

} // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact structure-constant calculator for twisted Jordan superalgebras"};
    app.require_subcommand(1);
    Options opt;

    static const char* kCommands[] = {
        "check-algebra", "check-bimodule", "check-rep",  "check-pre-jordan",
        "check-oop",     "check-rb",       "twist",      "untwist",
        "semidirect",    "direct-sum",     "dual-rep",   "coadjoint",
        "coadjoint-semidirect",            "reverse-rep", "check-isom",
        "pre-to-jordan", "induce",         "oop-suspend", "oop-extend",
        "oop-via-isom",  "search-oop"};
    for (const char* name : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.inputs, "manifest file (repeatable)")
            ->required()
            ->take_all();
        sub->add_option("--output", opt.output, "output path");
        sub->add_option("--report", opt.report, "audit format")
            ->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--s", opt.s, "left twist exponent");
        sub->add_option("--t", opt.t, "right twist exponent");
        sub->add_option("--parity", opt.parity, "operator parity")
            ->check(CLI::Range(0, 1));
        sub->add_option("--coeffs", opt.coeffs, "comma-separated rationals");
        sub->add_option("--budget", opt.budget, "candidate cap for search");
        sub->add_option("--jobs", opt.jobs, "parallel workers");
    }

    std::vector<const char*> argv;
    argv.push_back("bhj");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 64;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    }
}

int run_main(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_subcommand(args, std::cout, std::cerr);
}

} // namespace bhj::cli
