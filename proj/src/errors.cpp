#include "rainbow/errors.hpp"

namespace rainbow {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::invalid_graph: return "InvalidGraph";
    case Errc::disconnected: return "Disconnected";
    case Errc::palette_too_large: return "PaletteTooLarge";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::not_diameter2: return "NotDiameter2";
    case Errc::has_bridge: return "HasBridge";
    case Errc::not_pendant_structure: return "NotPendantStructure";
    case Errc::not_rc2_structure: return "NotRc2Structure";
    case Errc::completion_failed: return "CompletionFailed";
    case Errc::generation_exhausted: return "GenerationExhausted";
    case Errc::unknown_name: return "UnknownName";
    case Errc::bad_cycle_pattern: return "BadCyclePattern";
    case Errc::no_cycle: return "NoCycle";
    case Errc::parse_error: return "ParseError";
    case Errc::document_mismatch: return "DocumentMismatch";
    }
    return "UnknownError";
}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace rainbow
