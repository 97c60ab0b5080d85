#include "vpa/io.hpp"

#include "vpa/vpts.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vpa::io {

using nlohmann::json;

LoadError::LoadError(ErrorCode c, std::string w, const std::string& msg)
    : std::runtime_error("E" + std::to_string(static_cast<int>(c)) + " at " +
                         (w.empty() ? std::string("/") : w) + ": " + msg),
      code(c), where(std::move(w))
{
}

std::string to_string(Kind k)
{
    switch (k) {
    case Kind::Vpa: return "vpa";
    case Kind::Vpts: return "vpts";
    case Kind::Iovpts: return "iovpts";
    }
    return "?";
}

namespace {

bool reserved(const std::string& s)
{
    return s == kBottom || s == kDiamond || s == kTau || s == kNone;
}

std::set<std::string> string_set(const json& j, const std::string& where, bool required)
{
    std::set<std::string> r;
    if (j.is_null()) {
        if (required)
            throw LoadError(ErrorCode::Schema, where, "missing array");
        return r;
    }
    if (!j.is_array())
        throw LoadError(ErrorCode::Schema, where, "expected an array of strings");
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            throw LoadError(ErrorCode::Schema, where + "/" + std::to_string(i), "expected a string");
        auto s = j[i].get<std::string>();
        if (s.empty())
            throw LoadError(ErrorCode::Schema, where + "/" + std::to_string(i), "empty identifier");
        if (reserved(s))
            throw LoadError(ErrorCode::ReservedId, where + "/" + std::to_string(i),
                            "'" + s + "' is reserved");
        if (!r.insert(s).second)
            throw LoadError(ErrorCode::Schema, where + "/" + std::to_string(i),
                            "duplicate entry '" + s + "'");
    }
    return r;
}

const json& field(const json& obj, const char* key)
{
    static const json null;
    auto it = obj.find(key);
    return it == obj.end() ? null : *it;
}

void check_partition(const Alphabet& a, bool io)
{
    auto overlap = [](const std::set<Symbol>& x, const std::set<Symbol>& y) -> std::string {
        for (const auto& s : x)
            if (y.count(s))
                return s;
        return {};
    };
    std::string s;
    if (!(s = overlap(a.calls, a.returns)).empty() || !(s = overlap(a.calls, a.simples)).empty() ||
        !(s = overlap(a.returns, a.simples)).empty())
        throw LoadError(ErrorCode::Partition, "/alphabet",
                        "'" + s + "' appears in more than one of calls/returns/simples");
    if (!io) {
        if (a.has_io())
            throw LoadError(ErrorCode::Partition, "/alphabet", "inputs/outputs need kind iovpts");
        return;
    }
    if (!(s = overlap(a.inputs, a.outputs)).empty())
        throw LoadError(ErrorCode::Partition, "/alphabet", "'" + s + "' is both input and output");
    std::set<Symbol> io_all = a.inputs;
    io_all.insert(a.outputs.begin(), a.outputs.end());
    if (io_all != a.all())
        throw LoadError(ErrorCode::Partition, "/alphabet",
                        "inputs and outputs must cover calls, returns and simples exactly");
}

} // namespace

ModelDocument parse(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw LoadError(ErrorCode::Parse, "byte " + std::to_string(e.byte), e.what());
    }
    if (!j.is_object())
        throw LoadError(ErrorCode::Schema, "", "document must be an object");

    ModelDocument doc;
    const json& kind = field(j, "kind");
    if (kind == "vpa")
        doc.kind = Kind::Vpa;
    else if (kind == "vpts")
        doc.kind = Kind::Vpts;
    else if (kind == "iovpts")
        doc.kind = Kind::Iovpts;
    else
        throw LoadError(ErrorCode::Schema, "/kind", "expected \"vpa\", \"vpts\" or \"iovpts\"");

    Vpa& m = doc.model;
    const json& alpha = field(j, "alphabet");
    if (!alpha.is_object())
        throw LoadError(ErrorCode::Schema, "/alphabet", "missing object");
    m.alphabet.calls = string_set(field(alpha, "calls"), "/alphabet/calls", false);
    m.alphabet.returns = string_set(field(alpha, "returns"), "/alphabet/returns", false);
    m.alphabet.simples = string_set(field(alpha, "simples"), "/alphabet/simples", false);
    m.alphabet.inputs = string_set(field(alpha, "inputs"), "/alphabet/inputs", false);
    m.alphabet.outputs = string_set(field(alpha, "outputs"), "/alphabet/outputs", false);
    check_partition(m.alphabet, doc.kind == Kind::Iovpts);

    m.states = string_set(field(j, "states"), "/states", true);
    m.initial = string_set(field(j, "initial"), "/initial", true);
    m.stack_symbols = string_set(field(j, "stack_symbols"), "/stack_symbols", false);
    if (doc.kind == Kind::Vpa)
        m.finals = string_set(field(j, "finals"), "/finals", false);
    else if (j.contains("finals"))
        throw LoadError(ErrorCode::Schema, "/finals", "only vpa documents have final states");

    for (const auto& s : m.initial)
        if (!m.states.count(s))
            throw LoadError(ErrorCode::Reference, "/initial", "'" + s + "' is not a state");
    for (const auto& s : m.finals)
        if (!m.states.count(s))
            throw LoadError(ErrorCode::Reference, "/finals", "'" + s + "' is not a state");

    const json& ts = field(j, "transitions");
    if (!ts.is_null() && !ts.is_array())
        throw LoadError(ErrorCode::Schema, "/transitions", "expected an array");
    for (std::size_t i = 0; !ts.is_null() && i < ts.size(); ++i) {
        const std::string where = "/transitions/" + std::to_string(i);
        const json& t = ts[i];
        if (!t.is_object())
            throw LoadError(ErrorCode::Schema, where, "expected an object");
        auto str = [&](const char* key) {
            const json& v = field(t, key);
            if (!v.is_string())
                throw LoadError(ErrorCode::Schema, where + "/" + key, "expected a string");
            return v.get<std::string>();
        };
        Transition tr;
        tr.from = str("from");
        tr.to = str("to");
        const json& label = field(t, "label");
        if (label.is_null()) {
            tr.label = kTau;
        } else if (label.is_string()) {
            tr.label = label.get<std::string>();
            if (reserved(tr.label))
                throw LoadError(ErrorCode::ReservedId, where + "/label", "'" + tr.label + "' is reserved");
        } else {
            throw LoadError(ErrorCode::Schema, where + "/label", "expected a string or null");
        }
        SymKind k = m.alphabet.kind(tr.label);
        if (t.contains("stack"))
            tr.stack = str("stack");
        else if (k == SymKind::Simple || k == SymKind::Internal)
            tr.stack = kDiamond;
        else
            throw LoadError(ErrorCode::Schema, where + "/stack", "push and pop transitions need a stack symbol");

        for (const auto* s : {&tr.from, &tr.to}) {
            if (reserved(*s))
                throw LoadError(ErrorCode::ReservedId, where, "'" + *s + "' is reserved");
            if (!m.states.count(*s))
                throw LoadError(ErrorCode::Reference, where, "'" + *s + "' is not a state");
        }
        switch (k) {
        case SymKind::Unknown:
            throw LoadError(ErrorCode::Partition, where + "/label", "'" + tr.label + "' is not in the alphabet");
        case SymKind::Call:
            if (!m.stack_symbols.count(tr.stack))
                throw LoadError(ErrorCode::Partition, where + "/stack", "a push needs a declared stack symbol");
            break;
        case SymKind::Return:
            if (tr.stack != kBottom && !m.stack_symbols.count(tr.stack))
                throw LoadError(ErrorCode::Partition, where + "/stack", "a pop needs a declared stack symbol or _bot");
            break;
        default:
            if (tr.stack != kDiamond)
                throw LoadError(ErrorCode::Partition, where + "/stack", "simple and internal moves carry _dia");
        }
        if (doc.kind != Kind::Vpa && k == SymKind::Internal && tr.from == tr.to)
            throw LoadError(ErrorCode::Semantic, where, "internal self-loops are not allowed");
        if (!m.transitions.insert(tr).second)
            throw LoadError(ErrorCode::Schema, where, "duplicate transition");
    }

    if (doc.kind != Kind::Vpa)
        doc.warnings = prune_unreachable(as_vpts(doc)).warnings;
    return doc;
}

ModelDocument load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw LoadError(ErrorCode::Parse, path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string serialize(const ModelDocument& doc)
{
    const Vpa& m = doc.model;
    auto arr = [](const std::set<std::string>& s) {
        std::string r = "[";
        bool first = true;
        for (const auto& x : s) {
            r += (first ? "" : ", ") + json(x).dump();
            first = false;
        }
        return r + "]";
    };
    std::string o = "{\n";
    o += "  \"alphabet\": {\n";
    o += "    \"calls\": " + arr(m.alphabet.calls) + ",\n";
    if (doc.kind == Kind::Iovpts) {
        o += "    \"inputs\": " + arr(m.alphabet.inputs) + ",\n";
        o += "    \"outputs\": " + arr(m.alphabet.outputs) + ",\n";
    }
    o += "    \"returns\": " + arr(m.alphabet.returns) + ",\n";
    o += "    \"simples\": " + arr(m.alphabet.simples) + "\n";
    o += "  },\n";
    if (doc.kind == Kind::Vpa)
        o += "  \"finals\": " + arr(m.finals) + ",\n";
    o += "  \"initial\": " + arr(m.initial) + ",\n";
    o += "  \"kind\": " + json(to_string(doc.kind)).dump() + ",\n";
    o += "  \"stack_symbols\": " + arr(m.stack_symbols) + ",\n";
    o += "  \"states\": " + arr(m.states) + ",\n";
    o += "  \"transitions\": [";
    bool first = true;
    for (const auto& t : m.transitions) {
        json label = t.label == kTau ? json(nullptr) : json(t.label);
        o += std::string(first ? "\n" : ",\n") + "    {\"from\": " + json(t.from).dump() +
             ", \"label\": " + label.dump() + ", \"stack\": " + json(t.stack).dump() +
             ", \"to\": " + json(t.to).dump() + "}";
        first = false;
    }
    o += first ? "]\n" : "\n  ]\n";
    o += "}\n";
    return o;
}

void save(const ModelDocument& doc, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << serialize(doc);
}

ModelDocument document(const Vpa& m)
{
    return ModelDocument{Kind::Vpa, m, {}};
}

ModelDocument document(const Vpts& m)
{
    ModelDocument d;
    d.kind = Kind::Vpts;
    static_cast<Automaton&>(d.model) = m;
    return d;
}

ModelDocument document(const Iovpts& m)
{
    ModelDocument d = document(static_cast<const Vpts&>(m));
    d.kind = Kind::Iovpts;
    return d;
}

Vpa as_vpa(const ModelDocument& doc)
{
    if (doc.kind == Kind::Vpa)
        return doc.model;
    return induced_vpa(as_vpts(doc));
}

Vpts as_vpts(const ModelDocument& doc)
{
    if (doc.kind == Kind::Vpa)
        return induced_vpts(doc.model);
    Vpts v;
    static_cast<Automaton&>(v) = doc.model;
    return v;
}

Iovpts as_iovpts(const ModelDocument& doc)
{
    if (doc.kind != Kind::Iovpts)
        throw DomainError("expected an iovpts document, got " + to_string(doc.kind));
    return Iovpts(as_vpts(doc));
}

} // namespace vpa::io
