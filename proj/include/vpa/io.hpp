#pragma once

#include "vpa/model.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vpa::io {

enum class ErrorCode {
    Parse = 10,
    Schema = 11,
    Partition = 12,
    ReservedId = 13,
    Reference = 14,
    Semantic = 15,
};

struct LoadError : std::runtime_error {
    LoadError(ErrorCode c, std::string where, const std::string& msg);
    ErrorCode code;
    std::string where; // JSON pointer, or line/column for parse errors
};

enum class Kind { Vpa, Vpts, Iovpts };

std::string to_string(Kind k);

struct ModelDocument {
    Kind kind = Kind::Vpa;
    Vpa model; // finals are empty unless kind == Vpa
    std::vector<std::string> warnings;
};

ModelDocument parse(const std::string& text);
ModelDocument load(const std::string& path);

// Canonical text: sorted keys, sorted sets, one transition per line.
std::string serialize(const ModelDocument& doc);
void save(const ModelDocument& doc, const std::string& path);

ModelDocument document(const Vpa& m);
ModelDocument document(const Vpts& m);
ModelDocument document(const Iovpts& m);

// Views of a loaded document. A VPTS document converts to its induced VPA.
Vpa as_vpa(const ModelDocument& doc);
Vpts as_vpts(const ModelDocument& doc);
Iovpts as_iovpts(const ModelDocument& doc);

} // namespace vpa::io
