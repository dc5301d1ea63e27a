#ifndef MPLEX_ERROR_HPP
#define MPLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mplex {

// Every failure the library reports, so callers (and tests) can match on the
// condition instead of parsing message text.
enum class errc {
    unknown_endpoint,
    self_loop,
    empty_graph,
    unknown_node,
    malformed_record,
    duplicate_id,
    unknown_relation_kind,
    dangling_reference,
    disconnected_graph,
    no_convergence,
    exhausted_edges,
    node_set_mismatch,
    insufficient_support,
    invalid_exponent,
    annotation_mismatch,
    empty_bundle,
    config_error,
    io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace mplex

#endif
