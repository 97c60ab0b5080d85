// Command-line front-end over the vpa library.
//
// Exit codes: 0 conforms / empty / ok, 1 fail / nonempty / no run, 2 usage or domain error.

#include "vpa/balanced.hpp"
#include "vpa/closures.hpp"
#include "vpa/conformance.hpp"
#include "vpa/io.hpp"
#include "vpa/iovpts.hpp"
#include "vpa/semantics.hpp"
#include "vpa/vpts.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace vpa;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

io::ModelDocument load_doc(const std::string& path)
{
    auto doc = io::load(path);
    for (const auto& w : doc.warnings)
        std::cerr << path << ": warning: " << w << "\n";
    return doc;
}

void write_doc(const io::ModelDocument& doc, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << io::serialize(doc);
    else
        io::save(doc, out);
}

std::string join(const Word& w)
{
    std::string r;
    for (const auto& s : w)
        r += (r.empty() ? "" : " ") + s;
    return r;
}

int report(const std::string& verdict, bool ok, const std::optional<Word>& witness,
           const Stats& st, bool as_json, const std::string& diag = {})
{
    if (as_json) {
        json j;
        j["verdict"] = verdict;
        j["witness"] = witness ? json(*witness) : json::array();
        j["stats"] = {{"states", st.states},
                      {"transitions", st.transitions},
                      {"saturation_pairs", st.saturation_pairs}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << verdict << "\n";
        if (witness)
            std::cout << join(*witness) << "\n";
        if (!diag.empty())
            std::cerr << diag << "\n";
    }
    return ok ? kExitOk : kExitFail;
}

std::set<Symbol> split_set(const std::string& s)
{
    std::set<Symbol> r;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            r.insert(item);
    return r;
}

io::ModelDocument like(const io::ModelDocument& src, const Vpts& v)
{
    return src.kind == io::Kind::Iovpts ? io::document(Iovpts(v)) : io::document(v);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"visibly pushdown automata and conformance checking"};
    app.require_subcommand(1);

    std::string spec, impl, desired, forbidden, out, a_path, b_path, from, to, suffix;
    std::size_t max_len = 0;
    bool as_json = false;

    auto* ioco = app.add_subcommand("ioco", "ioco-like check of an implementation against a specification");
    ioco->add_option("--spec", spec)->required();
    ioco->add_option("--impl", impl)->required();
    ioco->add_flag("--json", as_json);

    auto* conf = app.add_subcommand("conf", "(D,F)-visible conformance check");
    conf->add_option("--spec", spec)->required();
    conf->add_option("--impl", impl)->required();
    conf->add_option("--desired", desired)->required();
    conf->add_option("--forbidden", forbidden)->required();
    conf->add_flag("--json", as_json);

    auto* fault = app.add_subcommand("fault-model", "build the fault model of a specification");
    fault->add_option("--spec", spec)->required();
    fault->add_option("-o", out);

    std::map<std::string, CLI::App*> binary;
    for (const char* name : {"product", "intersect", "union"}) {
        auto* c = app.add_subcommand(name, std::string(name) + " of two VPAs");
        c->add_option("A", a_path)->required();
        c->add_option("B", b_path)->required();
        c->add_option("-o", out);
        binary[name] = c;
    }

    auto* compl_cmd = app.add_subcommand("complement", "complement of a VPA");
    compl_cmd->add_option("A", a_path)->required();
    compl_cmd->add_option("-o", out);

    auto* concat = app.add_subcommand("concat", "L(A) followed by one symbol of the suffix set");
    concat->add_option("A", a_path)->required();
    concat->add_option("--suffix-set", suffix)->required();
    concat->add_option("-o", out);

    auto* empty = app.add_subcommand("empty", "emptiness check with witness");
    empty->add_option("A", a_path)->required();
    empty->add_flag("--json", as_json);

    auto* contract_cmd = app.add_subcommand("contract", "contraction of a VPTS");
    contract_cmd->add_option("M", a_path)->required();
    contract_cmd->add_option("-o", out);

    auto* balanced = app.add_subcommand("balanced", "balanced run between two states");
    balanced->add_option("M", a_path)->required();
    balanced->add_option("--from", from)->required();
    balanced->add_option("--to", to)->required();
    balanced->add_flag("--json", as_json);

    auto* format = app.add_subcommand("format", "rewrite a model document in canonical form");
    format->add_option("M", a_path)->required();
    format->add_option("-o", out);

    auto* enumerate = app.add_subcommand("enumerate", "words of L(A) up to a length");
    enumerate->add_option("A", a_path)->required();
    enumerate->add_option("--max-len", max_len)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ioco->parsed()) {
            Iovpts s = io::as_iovpts(load_doc(spec)), i = io::as_iovpts(load_doc(impl));
            Verdict v = check_ioco(s, i);
            return report(v.conforms ? "conforms" : "fail", v.conforms, v.witness, v.stats, as_json,
                          v.diagnostics);
        }
        if (conf->parsed()) {
            Iovpts s = io::as_iovpts(load_doc(spec)), i = io::as_iovpts(load_doc(impl));
            ConformanceSpec cs{io::as_vpa(load_doc(desired)), io::as_vpa(load_doc(forbidden))};
            Verdict v = check_conf(i, s, cs);
            return report(v.conforms ? "conforms" : "fail", v.conforms, v.witness, v.stats, as_json,
                          v.diagnostics);
        }
        if (fault->parsed()) {
            FaultModel fm = build_fault_model(io::as_iovpts(load_doc(spec)));
            write_doc(io::document(fm.model), out);
            std::cerr << "fail state: " << fm.fail_state << "\n";
            return kExitOk;
        }
        for (const auto& [name, cmd] : binary) {
            if (!cmd->parsed())
                continue;
            Vpa a = io::as_vpa(load_doc(a_path)), b = io::as_vpa(load_doc(b_path));
            Vpa r = name == "union" ? union_of(a, b) : name == "product" ? product(a, b) : intersect(a, b);
            write_doc(io::document(r), out);
            return kExitOk;
        }
        if (compl_cmd->parsed()) {
            write_doc(io::document(complement(io::as_vpa(load_doc(a_path)))), out);
            return kExitOk;
        }
        if (concat->parsed()) {
            write_doc(io::document(concat_suffix(io::as_vpa(load_doc(a_path)), split_set(suffix))), out);
            return kExitOk;
        }
        if (empty->parsed()) {
            Vpa a = io::as_vpa(load_doc(a_path));
            EmptinessResult e = is_empty(a);
            Stats st{a.states.size(), a.transitions.size(), e.saturation_pairs};
            return report(e.empty ? "empty" : "nonempty", e.empty, e.witness, st, as_json);
        }
        if (contract_cmd->parsed()) {
            auto doc = load_doc(a_path);
            if (doc.kind == io::Kind::Vpa)
                throw DomainError("contract expects a vpts or iovpts document");
            ContractionReport rep = contract(io::as_vpts(doc));
            for (const auto& t : rep.removed_transitions)
                std::cerr << "removed " << to_string(t) << "\n";
            write_doc(like(doc, rep.result), out);
            return kExitOk;
        }
        if (balanced->parsed()) {
            Vpts m = io::as_vpts(load_doc(a_path));
            BalancedRun run = find_balanced_run(m, from, to);
            std::optional<Word> w;
            if (run.word)
                w = erase(*run.word, {kTau});
            Stats st{m.states.size(), m.transitions.size(), run.saturation_pairs};
            return report(run.word ? "run" : "no-run", run.word.has_value(), w, st, as_json);
        }
        if (format->parsed()) {
            write_doc(load_doc(a_path), out);
            return kExitOk;
        }
        if (enumerate->parsed()) {
            for (const auto& w : enumerate_language(io::as_vpa(load_doc(a_path)), max_len))
                std::cout << (w.empty() ? "<eps>" : join(w)) << "\n";
            return kExitOk;
        }
    } catch (const io::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
