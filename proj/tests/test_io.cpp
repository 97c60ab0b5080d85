#include "support/models.hpp"
#include "support/oracle.hpp"

#include "vpa/closures.hpp"
#include "vpa/io.hpp"
#include "vpa/iovpts.hpp"
#include "vpa/semantics.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace vpa;
using corpus::word;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::ErrorCode code_of(const std::string& text)
{
    try {
        io::parse(text);
    } catch (const io::LoadError& e) {
        return e.code;
    }
    return io::ErrorCode{0};
}

const char* kTail = R"(, "initial": ["p"], "states": ["p"], "stack_symbols": ["Z"])";

} // namespace

TEST_SUITE("io")
{
    TEST_CASE("the corpus loads and is stored canonically")
    {
        for (const auto& entry : std::filesystem::directory_iterator(MODEL_DIR)) {
            const std::string path = entry.path().string();
            io::ModelDocument d;
            REQUIRE_NOTHROW(d = io::load(path));
            CHECK_MESSAGE(d.warnings.empty(), path);
            CHECK_MESSAGE(io::serialize(d) == slurp(path), path);
        }
    }

    TEST_CASE("traces of the loaded specification")
    {
        auto s = corpus::vpts_of("fig2_spec.json");
        CHECK(traces(s, 4, true).count(word("a a b b")));
    }

    TEST_CASE("save after load is the canonical form")
    {
        const char* messy = R"({
          "transitions": [
            {"to": "q", "from": "q", "label": "s"},
            {"from": "p", "label": "a", "stack": "Z", "to": "q"},
            {"from": "p", "label": null, "to": "q"}
          ],
          "states": ["q", "p"], "kind": "vpa", "finals": ["q"], "initial": ["p"],
          "stack_symbols": ["Z"],
          "alphabet": {"simples": ["s"], "returns": ["b"], "calls": ["a"]}
        })";
        io::ModelDocument d = io::parse(messy);
        std::string canon = io::serialize(d);
        CHECK(io::serialize(io::parse(canon)) == canon);
        CHECK(io::parse(canon).model == d.model);
        CHECK(canon.find("\"label\": null") != std::string::npos);
        CHECK(canon.find("{\"from\": \"p\", \"label\": \"a\", \"stack\": \"Z\", \"to\": \"q\"}") !=
              std::string::npos);
    }

    TEST_CASE("save and load through a file")
    {
        auto path = std::filesystem::temp_directory_path() / "vpa_io_roundtrip.json";
        io::ModelDocument d = corpus::doc("drink_spec.json");
        io::save(d, path.string());
        io::ModelDocument e = io::load(path.string());
        CHECK(e.kind == io::Kind::Iovpts);
        CHECK(e.model == d.model);
        std::filesystem::remove(path);
    }

    TEST_CASE("regenerated models match the shipped documents")
    {
        Vpa c = complement(corpus::vpa_of("fig2_spec.json"));
        CHECK(io::serialize(io::document(c)) == slurp(std::string(MODEL_DIR) + "/fig7_complement.json"));
        FaultModel fm = build_fault_model(corpus::iovpts_of("drink_spec.json"));
        CHECK(io::serialize(io::document(fm.model)) ==
              slurp(std::string(MODEL_DIR) + "/fig12_fault_model.json"));
        CHECK(oracle::language(c, 6) == oracle::language(corpus::vpa_of("fig7_complement.json"), 6));
    }

    TEST_CASE("error codes")
    {
        CHECK(code_of("{") == io::ErrorCode::Parse);
        CHECK(code_of("[]") == io::ErrorCode::Schema);
        CHECK(code_of(R"({"kind": "nfa"})") == io::ErrorCode::Schema);
        CHECK(code_of(std::string(R"({"kind": "vpa", "alphabet": {"calls": ["coi"], "returns": ["coi"]})") +
                      kTail + "}") == io::ErrorCode::Partition);
        CHECK(code_of(std::string(R"({"kind": "vpa", "alphabet": {"calls": ["_bot"]})") + kTail + "}") ==
              io::ErrorCode::ReservedId);
        CHECK(code_of(std::string(R"({"kind": "vpa", "alphabet": {"calls": ["a"]}, "finals": ["zz"])") +
                      kTail + "}") == io::ErrorCode::Reference);
        CHECK(code_of(std::string(R"({"kind": "vpts", "alphabet": {"simples": ["s"]}, "transitions": [{"from": "p", "label": null, "to": "p"}])") +
                      kTail + "}") == io::ErrorCode::Semantic);
        CHECK(code_of(std::string(R"({"kind": "vpa", "alphabet": {"calls": ["a"]}, "transitions": [{"from": "p", "label": "a", "stack": "_bot", "to": "p"}])") +
                      kTail + "}") == io::ErrorCode::Partition);
        CHECK(code_of(std::string(R"({"kind": "vpa", "alphabet": {"calls": ["a"]}, "transitions": [{"from": "p", "label": "a", "to": "p"}])") +
                      kTail + "}") == io::ErrorCode::Schema);
        CHECK(code_of(std::string(R"({"kind": "iovpts", "alphabet": {"calls": ["a"], "inputs": []})") + kTail + "}") ==
              io::ErrorCode::Partition);
        CHECK(code_of(std::string(R"({"kind": "vpts", "alphabet": {"calls": ["a"]}, "finals": [])") + kTail + "}") ==
              io::ErrorCode::Schema);
    }

    TEST_CASE("diagnostics carry a JSON pointer")
    {
        try {
            io::parse(std::string(R"({"kind": "vpa", "alphabet": {"calls": ["a"]}, "transitions": [{"from": "p", "label": "a", "stack": "Z", "to": "p"}, {"from": "p", "label": "zz", "stack": "Z", "to": "p"}])") +
                      kTail + "}");
            FAIL("expected a load error");
        } catch (const io::LoadError& e) {
            CHECK(e.where == "/transitions/1/label");
            CHECK(std::string(e.what()).rfind("E12 at /transitions/1/label", 0) == 0);
        }
    }

    TEST_CASE("unreachable states produce warnings")
    {
        io::ModelDocument d = io::parse(std::string(R"({"kind": "vpts", "alphabet": {"calls": ["a"]}, "initial": ["p"], "states": ["p", "q"]})"));
        REQUIRE(d.warnings.size() == 1);
        CHECK(d.warnings[0].find("'q'") != std::string::npos);
    }

    TEST_CASE("views")
    {
        io::ModelDocument d = corpus::doc("fig1_vpts.json");
        CHECK(io::as_vpa(d).finals == io::as_vpa(d).states);
        CHECK_THROWS_AS(io::as_iovpts(d), DomainError);
        CHECK(io::document(io::as_vpts(d)).kind == io::Kind::Vpts);
    }
}
