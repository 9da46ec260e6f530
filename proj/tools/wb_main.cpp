#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wb/builder.hpp"
#include "wb/dnr.hpp"
#include "wb/errors.hpp"
#include "wb/etr.hpp"
#include "wb/fixed_point.hpp"
#include "wb/hierarchy.hpp"
#include "wb/json_io.hpp"
#include "wb/jump.hpp"
#include "wb/notation.hpp"
#include "wb/trace_code.hpp"
#include "wb/tree.hpp"
#include "wb/wf.hpp"

using namespace wb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitUnknown = 3;

struct Ctx {
    bool json = false;
    bool strict = false;
    bool unknown = false;  // any Unknown / OutOfBudget in the result
    RunManifest manifest;

    void param(const std::string& key, const std::string& value) {
        manifest.params[key] = value;
    }
    void emit(const Json& result, const std::string& text) {
        if (json)
            std::cout << envelope(manifest, result).dump(2) << "\n";
        else
            std::cout << text;
    }
    int exit_code() const { return strict && unknown ? kExitUnknown : kExitOk; }
};

std::string read_file(Ctx& ctx, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    ctx.manifest.input_digests[path] = digest_hex(bytes);
    return bytes;
}

Nat parse_nat(const std::string& s) {
    try {
        Nat n(s);
        require_nonneg(n, "argument");
        return n;
    } catch (const std::exception&) {
        throw ParseError("not a natural: " + s);
    }
}

std::vector<Nat> parse_inputs(const std::vector<std::string>& xs) {
    std::vector<Nat> out;
    for (const auto& x : xs) out.push_back(parse_nat(x));
    return out;
}

std::string nat_str(const Nat& n) {
    std::ostringstream out;
    out << n;
    return out.str();
}

KString parse_kstring(const std::string& text, std::uint64_t k) {
    KString s{{}, k};
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        s.values.push_back(parse_nat(tok));
    }
    return s;
}

int cmd_eval(Ctx& ctx, const std::string& e, const std::vector<std::string>& xs,
             std::uint64_t budget) {
    auto r = run_value(ProgramIndex{parse_nat(e)}, parse_inputs(xs), budget);
    if (std::holds_alternative<OutOfBudget>(r)) {
        ctx.unknown = true;
        ctx.emit(Json{{"status", "unknown"}, {"budget", budget}},
                 "unknown (budget " + std::to_string(budget) + " exhausted)\n");
    } else {
        ctx.emit(Json{{"status", "halted"}, {"value", nat_str(std::get<Nat>(r))}},
                 nat_str(std::get<Nat>(r)) + "\n");
    }
    return ctx.exit_code();
}

int cmd_trace(Ctx& ctx, const std::string& e, const std::vector<std::string>& xs,
              std::uint64_t budget, bool want_code) {
    ProgramIndex idx{parse_nat(e)};
    std::vector<Nat> inputs = parse_inputs(xs);
    EvalOutcome o = run_bounded(idx, inputs, budget);
    if (!halted(o)) {
        ctx.unknown = true;
        ctx.emit(Json{{"status", "unknown"}, {"budget", budget}},
                 "unknown (budget " + std::to_string(budget) + " exhausted)\n");
        return ctx.exit_code();
    }
    const Halted& h = std::get<Halted>(o);
    Json cfgs = Json::array();
    std::ostringstream text;
    for (const Configuration& c : h.trace.configs) {
        Json regs = Json::object();
        text << c.ip << ":";
        for (const auto& [r, v] : c.registers) {
            regs[std::to_string(r)] = nat_str(v);
            text << " r" << r << "=" << v;
        }
        cfgs.push_back(Json{{"ip", c.ip}, {"registers", regs}});
        text << "\n";
    }
    text << "output " << h.output << "\n";
    Json result{{"status", "halted"},
                {"output", nat_str(h.output)},
                {"configurations", cfgs}};
    if (want_code) {
        auto tc = min_trace_code(idx, inputs, budget);
        result["trace_code"] = nat_str(std::get<TraceCode>(tc).value);
        text << "trace code " << std::get<TraceCode>(tc).value << "\n";
    }
    ctx.emit(result, text.str());
    return ctx.exit_code();
}

int cmd_fixpoint(Ctx& ctx, const std::string& psi_file, std::uint64_t budget,
                 bool require_halts) {
    Program psi = program_from_text(read_file(ctx, psi_file));
    ProgramIndex e = fixed_point(encode_program(psi), budget, require_halts);
    ctx.emit(Json{{"index", nat_str(e.value)}}, nat_str(e.value) + "\n");
    return ctx.exit_code();
}

int cmd_etr(Ctx& ctx, const std::string& rel_file, const std::string& step_file,
            std::uint64_t budget) {
    FiniteRelation rel = parse_relation(read_file(ctx, rel_file));
    Program step = program_from_text(read_file(ctx, step_file));
    ProgramIndex e = etr_define(rel, encode_program(step), budget);
    std::ostringstream text;
    Json values = Json::object();
    for (std::uint64_t n : rel.domain) {
        auto r = run_value(e, {Nat(n)}, budget);
        values[std::to_string(n)] = nat_str(std::get<Nat>(r));
        text << n << " -> " << std::get<Nat>(r) << "\n";
    }
    text << "index " << e.value << "\n";
    ctx.emit(Json{{"index", nat_str(e.value)}, {"values", values}}, text.str());
    return ctx.exit_code();
}

int cmd_diag(Ctx& ctx, std::uint64_t range, std::uint64_t budget) {
    SeparationReport rep = inseparable_membership(range, budget);
    ctx.unknown = !rep.undecided.empty();
    std::ostringstream text;
    text << "in_a " << rep.in_a.size() << ", in_b " << rep.in_b.size()
         << ", undecided " << rep.undecided.size() << " of " << range << "\n";
    ctx.emit(separation_to_json(rep), text.str());
    return ctx.exit_code();
}

std::string kstring_text(const KString& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) out << ",";
        out << s.values[i];
    }
    return out.str();
}

int cmd_tree(Ctx& ctx, const std::string& mode, std::uint64_t depth,
             std::uint64_t budget, const std::string& stem,
             std::uint64_t lookahead) {
    TreePredicate v = dnr2_predicate(budget);
    if (mode == "levels") {
        LevelSet ls = level_set(v, depth);
        std::ostringstream text;
        for (const KString& s : ls.members) text << kstring_text(s) << "\n";
        text << ls.members.size() << " members at depth " << depth << "\n";
        ctx.emit(level_set_to_json(ls), text.str());
    } else if (mode == "leftmost") {
        auto lm = leftmost_member(v, depth);
        if (lm)
            ctx.emit(Json{{"member", kstring_to_json(*lm)}},
                     kstring_text(*lm) + "\n");
        else
            ctx.emit(Json{{"member", nullptr}}, "empty level\n");
    } else {  // dead
        KString s = parse_kstring(stem, 2);
        bool dead = is_dead(s, v, lookahead);
        ctx.emit(Json{{"dead", dead}, {"lookahead", lookahead}},
                 std::string(dead ? "dead" : "alive") + "\n");
    }
    return ctx.exit_code();
}

int cmd_ord(Ctx& ctx, const std::string& mode, const std::vector<std::string>& lits,
            std::uint64_t n) {
    CnfOrdinal a = parse_ordinal(lits.at(0));
    if (mode == "cmp") {
        Ordering o = cnf_compare(a, parse_ordinal(lits.at(1)));
        std::string s = o == Ordering::Less ? "<" : o == Ordering::Greater ? ">" : "=";
        ctx.emit(Json{{"order", s}}, s + "\n");
    } else if (mode == "add" || mode == "mul") {
        CnfOrdinal b = parse_ordinal(lits.at(1));
        CnfOrdinal r = mode == "add" ? cnf_add(a, b) : cnf_mul(a, b);
        ctx.emit(ordinal_to_json(r), ordinal_to_string(r) + "\n");
    } else {  // fseq
        CnfOrdinal r = fundamental_sequence(a, Nat(n));
        ctx.emit(ordinal_to_json(r), ordinal_to_string(r) + "\n");
    }
    return ctx.exit_code();
}

int cmd_notate(Ctx& ctx, const std::string& lit, const std::string& scheme,
               const std::string& bound) {
    CnfOrdinal a = parse_ordinal(lit);
    NotationPtr n = bound.empty() ? canonical_notation(a)
                                  : canonical_notation(a, parse_ordinal(bound));
    Json result{{"notation", notation_to_json(n)},
                {"fingerprint", notation_fingerprint(n)}};
    std::ostringstream text;
    text << notation_fingerprint(n) << "\n";
    CodeScheme cs = scheme == "kleene" ? CodeScheme::KleeneO : CodeScheme::PowerTower;
    try {
        Nat code = notation_code(n, cs);
        result["code"] = nat_str(code);
        text << "code " << code << "\n";
    } catch (const CodeTooLarge&) {
        result["code_error"] = "code exceeds the size guard";
        text << "code exceeds the size guard\n";
    }
    ctx.emit(result, text.str());
    return ctx.exit_code();
}

int cmd_denote(Ctx& ctx, const std::string& file) {
    Json j = Json::parse(read_file(ctx, file), nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed notation JSON in " + file);
    NotationPtr n = notation_from_json(j);
    CnfOrdinal a = notation_to_ordinal(n);
    ctx.emit(ordinal_to_json(a), ordinal_to_string(a) + "\n");
    return ctx.exit_code();
}

int cmd_wf(Ctx& ctx, const std::string& rel_file, const std::string& prog,
           std::uint64_t n_max, std::uint64_t budget) {
    std::variant<WfReport, Unresolved> r;
    if (!rel_file.empty())
        r = wf_check(parse_relation(read_file(ctx, rel_file)));
    else
        r = wf_check_program(ProgramIndex{parse_nat(prog)}, n_max, budget);
    if (const auto* u = std::get_if<Unresolved>(&r)) {
        ctx.unknown = true;
        ctx.emit(Json{{"verdict", "unknown"},
                      {"budget", u->budget},
                      {"at", Json::array({u->x, u->y})}},
                 "unknown (edge query (" + std::to_string(u->x) + "," +
                     std::to_string(u->y) + ") unresolved)\n");
        return ctx.exit_code();
    }
    const WfReport& rep = std::get<WfReport>(r);
    std::ostringstream text;
    if (const auto* w = std::get_if<WellFounded>(&rep)) {
        text << "well-founded, order type "
             << (w->order_type ? ordinal_to_string(*w->order_type) : "not linear")
             << "\n";
    } else {
        text << "descent:";
        for (std::uint64_t x : std::get<Descent>(rep).cycle) text << " " << x;
        text << "\n";
    }
    ctx.emit(wf_report_to_json(rep), text.str());
    return ctx.exit_code();
}

int cmd_fgh(Ctx& ctx, const std::string& lit, const std::string& x,
            std::uint64_t budget) {
    auto r = fgh_eval(parse_ordinal(lit), parse_nat(x), budget);
    if (std::holds_alternative<OutOfBudget>(r)) {
        ctx.unknown = true;
        ctx.emit(Json{{"status", "unknown"}, {"budget", budget}},
                 "unknown (unfolding budget " + std::to_string(budget) +
                     " exhausted)\n");
    } else {
        ctx.emit(Json{{"status", "resolved"}, {"value", nat_str(std::get<Nat>(r))}},
                 nat_str(std::get<Nat>(r)) + "\n");
    }
    return ctx.exit_code();
}

int cmd_jump(Ctx& ctx, std::uint64_t n, std::uint64_t stage, std::uint64_t range) {
    OracleApprox a = iterate_jump(n, stage, range);
    std::ostringstream text;
    text << "level " << a.level << ", " << a.members.size() << " members of "
         << a.range << "\n";
    ctx.emit(oracle_approx_to_json(a), text.str());
    return ctx.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"register-machine computability workbench"};
    app.require_subcommand(1);
    Ctx ctx;

    std::string e, stem, rel_file, step_file, psi_file, prog, lit, lit_x, scheme,
        bound, json_file;
    std::vector<std::string> xs, lits;
    std::uint64_t budget = 10000, depth = 8, lookahead = 4, range = 100,
                  n_max = 5, stage = 1000, fseq_n = 0, level = 1;
    bool want_code = false, require_halts = false;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", ctx.json, "emit a JSON envelope with a manifest");
        sub->add_flag("--strict", ctx.strict, "exit 3 on unknown results");
        return sub;
    };

    auto* c_eval = common(app.add_subcommand("eval", "run a program index"));
    c_eval->add_option("e", e, "program index")->required();
    c_eval->add_option("x", xs, "inputs");
    c_eval->add_option("--budget", budget, "step budget");

    auto* c_trace = common(app.add_subcommand("trace", "run and print the trace"));
    c_trace->add_option("e", e)->required();
    c_trace->add_option("x", xs);
    c_trace->add_option("--budget", budget);
    c_trace->add_flag("--code", want_code, "also print the numeric trace code");

    auto* c_fix = common(app.add_subcommand("fixpoint", "recursion-theorem fixed point"));
    c_fix->add_option("--psi", psi_file, "program transformer (text format)")->required();
    c_fix->add_option("--budget", budget);
    c_fix->add_flag("--require-halts", require_halts, "check psi halts on the result");

    auto* c_etr = common(app.add_subcommand("etr", "recursion along a finite relation"));
    c_etr->add_option("--rel", rel_file, "relation file")->required();
    c_etr->add_option("--step", step_file, "step program (text format)")->required();
    c_etr->add_option("--budget", budget);

    auto* c_diag = common(app.add_subcommand("diag", "diagonal membership sweep"));
    c_diag->add_option("--range", range);
    c_diag->add_option("--budget", budget);

    auto* c_tree = common(app.add_subcommand("tree", "DNR_2 tree queries"));
    std::string tree_mode;
    c_tree->add_option("mode", tree_mode, "levels | leftmost | dead")
        ->required()
        ->check(CLI::IsMember({"levels", "leftmost", "dead"}));
    c_tree->add_option("--depth", depth);
    c_tree->add_option("--budget", budget);
    c_tree->add_option("--string", stem, "comma-separated stem for `dead`");
    c_tree->add_option("--lookahead", lookahead);

    auto* c_ord = common(app.add_subcommand("ord", "ordinal arithmetic"));
    std::string ord_mode;
    c_ord->add_option("mode", ord_mode, "cmp | add | mul | fseq")
        ->required()
        ->check(CLI::IsMember({"cmp", "add", "mul", "fseq"}));
    c_ord->add_option("literal", lits, "ordinal literal(s)")->required();
    c_ord->add_option("--n", fseq_n, "fundamental sequence position");

    auto* c_notate = common(app.add_subcommand("notate", "canonical notation"));
    c_notate->add_option("literal", lit)->required();
    c_notate->add_option("--scheme", scheme, "tower | kleene")
        ->check(CLI::IsMember({"tower", "kleene"}));
    c_notate->add_option("--bound", bound, "ordinal bound (default w^w)");

    auto* c_denote = common(app.add_subcommand("denote", "notation JSON to ordinal"));
    c_denote->add_option("file", json_file, "notation JSON file")->required();

    auto* c_wf = common(app.add_subcommand("wf", "well-foundedness check"));
    c_wf->add_option("--rel", rel_file, "relation file");
    c_wf->add_option("--prog", prog, "relation program index");
    c_wf->add_option("--max", n_max, "domain bound for --prog");
    c_wf->add_option("--budget", budget);

    auto* c_fgh = common(app.add_subcommand("fgh", "fast-growing hierarchy"));
    c_fgh->add_option("literal", lit)->required();
    c_fgh->add_option("x", lit_x)->required();
    c_fgh->add_option("--budget", budget);

    auto* c_jump = common(app.add_subcommand("jump", "iterated jump approximation"));
    c_jump->add_option("n", level, "iterations (<= 4)")->required();
    c_jump->add_option("--stage", stage);
    c_jump->add_option("--range", range);

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    ctx.manifest.command = sub->get_name();
    ctx.param("budget", std::to_string(budget));

    try {
        if (sub == c_eval || sub == c_trace) {
            ctx.param("e", e);
            for (std::size_t i = 0; i < xs.size(); ++i)
                ctx.param("x" + std::to_string(i), xs[i]);
            if (sub == c_trace) ctx.param("code", want_code ? "1" : "0");
            return sub == c_eval ? cmd_eval(ctx, e, xs, budget)
                                 : cmd_trace(ctx, e, xs, budget, want_code);
        }
        if (sub == c_fix) {
            ctx.param("psi", psi_file);
            ctx.param("require_halts", require_halts ? "1" : "0");
            return cmd_fixpoint(ctx, psi_file, budget, require_halts);
        }
        if (sub == c_etr) {
            ctx.param("rel", rel_file);
            ctx.param("step", step_file);
            return cmd_etr(ctx, rel_file, step_file, budget);
        }
        if (sub == c_diag) {
            ctx.param("range", std::to_string(range));
            return cmd_diag(ctx, range, budget);
        }
        if (sub == c_tree) {
            ctx.param("mode", tree_mode);
            ctx.param("depth", std::to_string(depth));
            if (tree_mode == "dead") {
                ctx.param("string", stem);
                ctx.param("lookahead", std::to_string(lookahead));
            }
            return cmd_tree(ctx, tree_mode, depth, budget, stem, lookahead);
        }
        if (sub == c_ord) {
            ctx.param("mode", ord_mode);
            for (std::size_t i = 0; i < lits.size(); ++i)
                ctx.param("literal" + std::to_string(i), lits[i]);
            if (ord_mode == "fseq") ctx.param("n", std::to_string(fseq_n));
            return cmd_ord(ctx, ord_mode, lits, fseq_n);
        }
        if (sub == c_notate) {
            ctx.param("literal", lit);
            ctx.param("scheme", scheme.empty() ? "tower" : scheme);
            if (!bound.empty()) ctx.param("bound", bound);
            return cmd_notate(ctx, lit, scheme, bound);
        }
        if (sub == c_denote) {
            ctx.param("file", json_file);
            return cmd_denote(ctx, json_file);
        }
        if (sub == c_wf) {
            if (rel_file.empty() == prog.empty())
                throw ParseError("wf needs exactly one of --rel and --prog");
            if (!rel_file.empty()) ctx.param("rel", rel_file);
            if (!prog.empty()) {
                ctx.param("prog", prog);
                ctx.param("max", std::to_string(n_max));
            }
            return cmd_wf(ctx, rel_file, prog, n_max, budget);
        }
        if (sub == c_fgh) {
            ctx.param("literal", lit);
            ctx.param("x", lit_x);
            return cmd_fgh(ctx, lit, lit_x, budget);
        }
        if (sub == c_jump) {
            ctx.param("n", std::to_string(level));
            ctx.param("stage", std::to_string(stage));
            ctx.param("range", std::to_string(range));
            return cmd_jump(ctx, level, stage, range);
        }
    } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
