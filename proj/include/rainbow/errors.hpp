#ifndef RAINBOW_ERRORS_HPP
#define RAINBOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rainbow {

enum class Errc {
    invalid_graph,
    disconnected,
    palette_too_large,
    instance_too_large,
    not_diameter2,
    has_bridge,
    not_pendant_structure,
    not_rc2_structure,
    completion_failed,
    generation_exhausted,
    unknown_name,
    bad_cycle_pattern,
    no_cycle,
    parse_error,
    document_mismatch,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace rainbow

#endif
