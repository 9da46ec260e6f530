#include "wb/urm.hpp"

#include <array>
#include <sstream>

#include "wb/errors.hpp"

namespace wb {
namespace {

// Programs are numbered through a bit stream: e+1 written in binary is a
// sentinel 1 followed by the stream bits, least significant consumed first.
// This keeps indices linear in program size and makes every natural decode.
class BitReader {
public:
    explicit BitReader(const Nat& e) : v_(e + 1), top_(bit_length(v_) - 1) {}

    bool empty() const { return pos_ >= top_; }

    int read_bit() {
        if (empty()) return 0;  // exhausted stream reads as zeros
        return boost::multiprecision::bit_test(v_, pos_++) ? 1 : 0;
    }

    // Elias-gamma style field: L ones, a zero, then L payload bits.
    // Decodes every bit pattern; value = 2^L - 1 + payload.
    Nat read_field() {
        std::uint64_t len = 0;
        while (read_bit() == 1) {
            ++len;
            if (len > 1u << 20) return 0;  // unreachable for genuine streams
        }
        Nat payload = 0;
        for (std::uint64_t i = 0; i < len; ++i) {
            if (read_bit()) payload |= Nat(1) << i;
        }
        return (Nat(1) << len) - 1 + payload;
    }

private:
    Nat v_;
    std::uint64_t top_;
    std::uint64_t pos_ = 0;
};

class BitWriter {
public:
    void write_bit(int b) {
        if (b) boost::multiprecision::bit_set(acc_, static_cast<unsigned>(len_));
        ++len_;
    }

    void write_field(const Nat& v) {
        Nat w = v + 1;
        std::uint64_t len = bit_length(w) - 1;
        for (std::uint64_t i = 0; i < len; ++i) write_bit(1);
        write_bit(0);
        for (std::uint64_t i = 0; i < len; ++i) write_bit(static_cast<int>((w >> i) & 1));
    }

    Nat finish() const {
        Nat r = acc_;
        boost::multiprecision::bit_set(r, static_cast<unsigned>(len_));
        return r - 1;
    }

private:
    Nat acc_ = 0;
    std::uint64_t len_ = 0;
};

std::uint64_t field_to_reg(const Nat& f) {
    // Total decode: oversized operands fold to their low 64 bits.
    return static_cast<std::uint64_t>(f & Nat(std::numeric_limits<std::uint64_t>::max()));
}

constexpr int kPlainOps = 5;   // Z S C J A
constexpr int kOracleOps = 6;  // Z S C J A Q

Program decode_with_ops(const Nat& e, int op_count) {
    require_nonneg(e, "decode_program");
    BitReader r(e);
    Program p;
    p.arity = field_to_reg(r.read_field());
    while (!r.empty()) {
        Instruction ins;
        Nat raw = r.read_field();
        switch (static_cast<int>(raw % op_count)) {
            case 0: ins.op = Op::Zero; break;
            case 1: ins.op = Op::Succ; break;
            case 2: ins.op = Op::Copy; break;
            case 3: ins.op = Op::Jump; break;
            case 4: ins.op = Op::Add; break;
            default: ins.op = Op::Query; break;
        }
        switch (ins.op) {
            case Op::Zero:
            case Op::Succ:
            case Op::Query:
                ins.a = field_to_reg(r.read_field());
                break;
            case Op::Copy:
            case Op::Add:
                ins.a = field_to_reg(r.read_field());
                ins.b = field_to_reg(r.read_field());
                break;
            case Op::Jump:
                ins.a = field_to_reg(r.read_field());
                ins.b = field_to_reg(r.read_field());
                ins.c = field_to_reg(r.read_field());
                break;
        }
        p.instructions.push_back(ins);
    }
    return p;
}

Nat encode_with_ops(const Program& p, int op_count) {
    BitWriter w;
    w.write_field(Nat(p.arity));
    for (const Instruction& ins : p.instructions) {
        int code = 0;
        switch (ins.op) {
            case Op::Zero: code = 0; break;
            case Op::Succ: code = 1; break;
            case Op::Copy: code = 2; break;
            case Op::Jump: code = 3; break;
            case Op::Add: code = 4; break;
            case Op::Query: code = 5; break;
        }
        if (code >= op_count)
            throw std::invalid_argument("encode_program: instruction not in this machine model");
        w.write_field(Nat(code));
        switch (ins.op) {
            case Op::Zero:
            case Op::Succ:
            case Op::Query:
                w.write_field(Nat(ins.a));
                break;
            case Op::Copy:
            case Op::Add:
                w.write_field(Nat(ins.a));
                w.write_field(Nat(ins.b));
                break;
            case Op::Jump:
                w.write_field(Nat(ins.a));
                w.write_field(Nat(ins.b));
                w.write_field(Nat(ins.c));
                break;
        }
    }
    return w.finish();
}

// Sparse register file with a dense fast path for the low registers.
class Registers {
public:
    explicit Registers(std::size_t dense) : dense_(dense) {}

    const Nat& get(std::uint64_t i) const {
        if (i < dense_.size()) return dense_[i];
        auto it = sparse_.find(i);
        return it == sparse_.end() ? zero_ : it->second;
    }

    Nat& mut(std::uint64_t i) {
        if (i < dense_.size()) return dense_[i];
        return sparse_[i];
    }

    std::map<std::uint64_t, Nat> nonzero() const {
        std::map<std::uint64_t, Nat> out;
        for (std::uint64_t i = 0; i < dense_.size(); ++i)
            if (dense_[i] != 0) out.emplace(i, dense_[i]);
        for (const auto& [i, v] : sparse_)
            if (v != 0) out.emplace(i, v);
        return out;
    }

private:
    std::vector<Nat> dense_;
    std::map<std::uint64_t, Nat> sparse_;
    inline static const Nat zero_ = 0;
};

std::size_t dense_span(const Program& p) {
    std::uint64_t hi = p.arity;
    for (const Instruction& ins : p.instructions) {
        if (ins.op == Op::Jump) {
            hi = std::max({hi, ins.a + 1, ins.b + 1});
        } else if (ins.op == Op::Copy || ins.op == Op::Add) {
            hi = std::max({hi, ins.a + 1, ins.b + 1});
        } else {
            hi = std::max(hi, ins.a + 1);
        }
    }
    return static_cast<std::size_t>(std::min<std::uint64_t>(hi, 1 << 16));
}

EvalOutcome run_core(const Program& p, const std::vector<Nat>& inputs, std::uint64_t budget,
                     Trace* trace) {
    Registers regs(dense_span(p));
    for (std::uint64_t i = 0; i < p.arity && i < inputs.size(); ++i) {
        require_nonneg(inputs[i], "run_bounded input");
        regs.mut(i) = inputs[i];
    }
    const std::uint64_t len = p.instructions.size();
    std::uint64_t ip = 0;
    if (trace) trace->configs.push_back({0, regs.nonzero()});
    for (std::uint64_t used = 0; used < budget; ++used) {
        if (ip >= len) {
            if (trace) trace->halted = true;
            return Halted{regs.get(0), trace ? std::move(*trace) : Trace{}};
        }
        const Instruction& ins = p.instructions[ip];
        std::uint64_t next = ip + 1;
        switch (ins.op) {
            case Op::Zero: regs.mut(ins.a) = 0; break;
            case Op::Succ: ++regs.mut(ins.a); break;
            case Op::Copy: regs.mut(ins.b) = regs.get(ins.a); break;
            case Op::Add: regs.mut(ins.b) += regs.get(ins.a); break;
            case Op::Jump:
                if (regs.get(ins.a) == regs.get(ins.b)) next = ins.c;
                break;
            case Op::Query:
                throw std::invalid_argument("Query instruction outside an oracle machine");
        }
        ip = next;
        if (trace) trace->configs.push_back({ip, regs.nonzero()});
    }
    if (ip >= len) {
        if (trace) trace->halted = true;
        return Halted{regs.get(0), trace ? std::move(*trace) : Trace{}};
    }
    return OutOfBudget{budget};
}

}  // namespace

ProgramIndex encode_program(const Program& p) { return ProgramIndex{encode_with_ops(p, kPlainOps)}; }

Program decode_program(const ProgramIndex& e) { return decode_with_ops(e.value, kPlainOps); }

ProgramIndex encode_oracle_program(const Program& p) {
    return ProgramIndex{encode_with_ops(p, kOracleOps)};
}

Program decode_oracle_program(const ProgramIndex& e) { return decode_with_ops(e.value, kOracleOps); }

Configuration initial_configuration(const Program& p, const std::vector<Nat>& inputs) {
    Configuration cfg;
    for (std::uint64_t i = 0; i < p.arity && i < inputs.size(); ++i)
        if (inputs[i] != 0) cfg.registers.emplace(i, inputs[i]);
    return cfg;
}

Configuration step(const Program& p, const Configuration& cfg) {
    if (cfg.ip >= p.instructions.size())
        throw std::invalid_argument("step: configuration is terminal");
    Configuration next = cfg;
    const Instruction& ins = p.instructions[cfg.ip];
    auto get = [&](std::uint64_t r) -> Nat {
        auto it = cfg.registers.find(r);
        return it == cfg.registers.end() ? Nat(0) : it->second;
    };
    auto set = [&](std::uint64_t r, Nat v) {
        if (v == 0)
            next.registers.erase(r);
        else
            next.registers[r] = std::move(v);
    };
    next.ip = cfg.ip + 1;
    switch (ins.op) {
        case Op::Zero: set(ins.a, 0); break;
        case Op::Succ: set(ins.a, get(ins.a) + 1); break;
        case Op::Copy: set(ins.b, get(ins.a)); break;
        case Op::Add: set(ins.b, get(ins.a) + get(ins.b)); break;
        case Op::Jump:
            if (get(ins.a) == get(ins.b)) next.ip = ins.c;
            break;
        case Op::Query:
            throw std::invalid_argument("Query instruction outside an oracle machine");
    }
    return next;
}

EvalOutcome run_bounded(const Program& p, const std::vector<Nat>& inputs, std::uint64_t budget) {
    Trace trace;
    return run_core(p, inputs, budget, &trace);
}

EvalOutcome run_bounded(const ProgramIndex& e, const std::vector<Nat>& inputs,
                        std::uint64_t budget) {
    return run_bounded(decode_program(e), inputs, budget);
}

std::variant<Nat, OutOfBudget> run_value(const Program& p, const std::vector<Nat>& inputs,
                                         std::uint64_t budget) {
    EvalOutcome o = run_core(p, inputs, budget, nullptr);
    if (auto* h = std::get_if<Halted>(&o)) return std::move(h->output);
    return std::get<OutOfBudget>(o);
}

std::variant<Nat, OutOfBudget> run_value(const ProgramIndex& e, const std::vector<Nat>& inputs,
                                         std::uint64_t budget) {
    return run_value(decode_program(e), inputs, budget);
}

void emit_load_const(std::vector<Instruction>& out, std::uint64_t reg, const Nat& value) {
    out.push_back({Op::Zero, reg});
    if (value == 0) return;
    out.push_back({Op::Succ, reg});
    std::uint64_t bits = bit_length(value);
    for (std::uint64_t i = bits - 1; i-- > 0;) {
        out.push_back({Op::Add, reg, reg});
        if ((value >> i) & 1) out.push_back({Op::Succ, reg});
    }
}

Program smn_program(const Program& p, const std::vector<Nat>& fixed) {
    const std::uint64_t m = fixed.size();
    const std::uint64_t rest = p.arity > m ? p.arity - m : 0;
    Program out;
    out.arity = rest;
    if (m > 0) {
        for (std::uint64_t i = rest; i-- > 0;)
            out.instructions.push_back({Op::Copy, i, m + i});
        for (std::uint64_t k = 0; k < m; ++k)
            emit_load_const(out.instructions, k, fixed[k]);
    }
    const std::uint64_t offset = out.instructions.size();
    for (Instruction ins : p.instructions) {
        if (ins.op == Op::Jump) ins.c += offset;
        out.instructions.push_back(ins);
    }
    return out;
}

ProgramIndex smn(const ProgramIndex& e, const std::vector<Nat>& fixed) {
    return encode_program(smn_program(decode_program(e), fixed));
}

std::string program_to_text(const Program& p) {
    std::ostringstream os;
    os << "# arity " << p.arity << "\n";
    for (const Instruction& ins : p.instructions) {
        switch (ins.op) {
            case Op::Zero: os << "Z " << ins.a; break;
            case Op::Succ: os << "S " << ins.a; break;
            case Op::Copy: os << "C " << ins.a << " " << ins.b; break;
            case Op::Jump: os << "J " << ins.a << " " << ins.b << " " << ins.c; break;
            case Op::Add: os << "A " << ins.a << " " << ins.b; break;
            case Op::Query: os << "Q " << ins.a; break;
        }
        os << "\n";
    }
    return os.str();
}

Program program_from_text(const std::string& text) {
    Program p;
    bool arity_seen = false;
    std::istringstream is(text);
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        std::string comment = hash == std::string::npos ? "" : line.substr(hash + 1);
        if (!arity_seen) {
            // optional "# arity N" header; otherwise arity defaults to 1
            std::istringstream cs(comment);
            std::string kw;
            std::uint64_t n;
            if (cs >> kw >> n && kw == "arity") {
                p.arity = n;
                arity_seen = true;
            }
        }
        std::istringstream ls(body);
        std::string op;
        if (!(ls >> op)) continue;
        Instruction ins;
        auto need = [&](std::uint64_t& slot) {
            if (!(ls >> slot))
                throw ParseError("program line " + std::to_string(lineno) + ": missing operand");
        };
        if (op == "Z") { ins.op = Op::Zero; need(ins.a); }
        else if (op == "S") { ins.op = Op::Succ; need(ins.a); }
        else if (op == "C") { ins.op = Op::Copy; need(ins.a); need(ins.b); }
        else if (op == "J") { ins.op = Op::Jump; need(ins.a); need(ins.b); need(ins.c); }
        else if (op == "A") { ins.op = Op::Add; need(ins.a); need(ins.b); }
        else if (op == "Q") { ins.op = Op::Query; need(ins.a); }
        else throw ParseError("program line " + std::to_string(lineno) + ": unknown op " + op);
        p.instructions.push_back(ins);
    }
    if (!arity_seen) p.arity = 1;
    return p;
}

}  // namespace wb
