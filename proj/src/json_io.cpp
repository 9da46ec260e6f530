#include "wb/json_io.hpp"

#include <sstream>

#include "wb/errors.hpp"

namespace wb {

Json nat_to_json(const Nat& n) {
    std::ostringstream out;
    out << n;
    return Json(out.str());
}

Nat nat_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)
            throw ParseError("malformed natural: " + j.dump());
        return Nat(j.get<std::uint64_t>());
    }
    if (!j.is_string()) throw ParseError("expected a natural (string or number)");
    try {
        Nat n(j.get<std::string>());
        require_nonneg(n, "nat_from_json");
        return n;
    } catch (const std::exception&) {
        throw ParseError("malformed natural: " + j.dump());
    }
}

namespace {

const char* op_name(Op op) {
    switch (op) {
        case Op::Zero: return "Z";
        case Op::Succ: return "S";
        case Op::Copy: return "C";
        case Op::Jump: return "J";
        case Op::Add: return "A";
        case Op::Query: return "Q";
    }
    return "?";
}

Op op_from_name(const std::string& s) {
    if (s == "Z") return Op::Zero;
    if (s == "S") return Op::Succ;
    if (s == "C") return Op::Copy;
    if (s == "J") return Op::Jump;
    if (s == "A") return Op::Add;
    if (s == "Q") return Op::Query;
    throw ParseError("unknown opcode: " + s);
}

}  // namespace

Json program_to_json(const Program& p) {
    Json ins = Json::array();
    for (const Instruction& i : p.instructions) {
        Json row = Json::array();
        row.push_back(op_name(i.op));
        switch (i.op) {
            case Op::Zero:
            case Op::Succ:
            case Op::Query:
                row.push_back(i.a);
                break;
            case Op::Copy:
            case Op::Add:
                row.push_back(i.a);
                row.push_back(i.b);
                break;
            case Op::Jump:
                row.push_back(i.a);
                row.push_back(i.b);
                row.push_back(i.c);
                break;
        }
        ins.push_back(row);
    }
    return Json{{"arity", p.arity}, {"instructions", ins}};
}

Program program_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("instructions"))
        throw ParseError("program JSON needs arity and instructions");
    Program p;
    p.arity = j.at("arity").get<std::uint64_t>();
    for (const Json& row : j.at("instructions")) {
        if (!row.is_array() || row.empty())
            throw ParseError("instruction rows are non-empty arrays");
        Instruction i;
        i.op = op_from_name(row.at(0).get<std::string>());
        auto field = [&](std::size_t k) {
            return k < row.size() ? row.at(k).get<std::uint64_t>() : 0;
        };
        i.a = field(1);
        i.b = field(2);
        i.c = field(3);
        p.instructions.push_back(i);
    }
    return p;
}

Json kstring_to_json(const KString& s) {
    Json vals = Json::array();
    for (const Nat& v : s.values) vals.push_back(nat_to_json(v));
    return Json{{"k", s.k}, {"values", vals}};
}

KString kstring_from_json(const Json& j) {
    KString s;
    s.k = j.at("k").get<std::uint64_t>();
    for (const Json& v : j.at("values")) s.values.push_back(nat_from_json(v));
    return s;
}

Json separation_to_json(const SeparationReport& r) {
    return Json{{"in_a", r.in_a},
                {"in_b", r.in_b},
                {"undecided", r.undecided},
                {"budget", r.budget}};
}

Json consistency_to_json(const ConsistencyReport& r) {
    return Json{{"consistent", r.consistent},
                {"constraining", r.constraining},
                {"violations", r.violations},
                {"budget", r.budget}};
}

Json diag_major_to_json(const DiagMajorReport& r) {
    auto pairs = [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& v) {
        Json out = Json::array();
        for (const auto& [a, b] : v) out.push_back(Json::array({a, b}));
        return out;
    };
    return Json{{"verdict", r.verdict},
                {"clause1_violations", pairs(r.clause1_violations)},
                {"bound_violations", pairs(r.bound_violations)},
                {"separation_violations", r.separation_violations},
                {"family", separation_to_json(r.family)}};
}

Json level_set_to_json(const LevelSet& ls) {
    Json members = Json::array();
    for (const KString& s : ls.members) members.push_back(kstring_to_json(s));
    return Json{{"depth", ls.depth}, {"tag", ls.tag}, {"members", members}};
}

Json ordinal_to_json(const CnfOrdinal& a) { return Json(ordinal_to_string(a)); }

Json notation_to_json(const NotationPtr& n) {
    switch (n->kind) {
        case Notation::Kind::Zero:
            return Json{{"kind", "zero"}};
        case Notation::Kind::Succ:
            return Json{{"kind", "succ"}, {"pred", notation_to_json(n->pred)}};
        case Notation::Kind::Lim:
            return Json{{"kind", "lim"},
                        {"fseq_index", nat_to_json(n->fseq_index.value)},
                        {"denotes", ordinal_to_json(n->denoted)}};
    }
    throw std::logic_error("unreachable");
}

NotationPtr notation_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return notation_zero();
    if (kind == "succ") return notation_succ(notation_from_json(j.at("pred")));
    if (kind == "lim")
        return notation_lim(ProgramIndex{nat_from_json(j.at("fseq_index"))},
                            parse_ordinal(j.at("denotes").get<std::string>()));
    throw ParseError("unknown notation kind: " + kind);
}

Json wf_report_to_json(const WfReport& r) {
    if (const auto* w = std::get_if<WellFounded>(&r)) {
        Json out{{"verdict", "well-founded"}};
        out["order_type"] =
            w->order_type ? ordinal_to_json(*w->order_type) : Json("not-linear");
        return out;
    }
    return Json{{"verdict", "descent"},
                {"cycle", std::get<Descent>(r).cycle}};
}

Json oracle_approx_to_json(const OracleApprox& a) {
    return Json{{"level", a.level},
                {"stage", a.stage},
                {"range", a.range},
                {"members", std::vector<std::uint64_t>(a.members.begin(),
                                                       a.members.end())}};
}

Json containment_to_json(const ContainmentReport& r) {
    Json out{{"order", r.order == Ordering::Less      ? "less"
                       : r.order == Ordering::Greater ? "greater"
                                                      : "equal"},
             {"contained", r.contained}};
    if (const auto* t = std::get_if<std::uint64_t>(&r.threshold))
        out["threshold"] = *t;
    else
        out["no_witness_up_to"] = std::get<NoWitnessUpTo>(r.threshold).horizon;
    return out;
}

Json manifest_to_json(const RunManifest& m) {
    return Json{{"command", m.command},
                {"params", m.params},
                {"input_digests", m.input_digests},
                {"version", m.version}};
}

Json envelope(const RunManifest& m, Json result) {
    return Json{{"manifest", manifest_to_json(m)}, {"result", std::move(result)}};
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace wb
