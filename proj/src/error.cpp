#include "mplex/error.hpp"

namespace mplex {

const char* errc_name(errc c) {
    switch (c) {
        case errc::unknown_endpoint: return "UnknownEndpoint";
        case errc::self_loop: return "SelfLoop";
        case errc::empty_graph: return "EmptyGraph";
        case errc::unknown_node: return "UnknownNode";
        case errc::malformed_record: return "MalformedRecord";
        case errc::duplicate_id: return "DuplicateId";
        case errc::unknown_relation_kind: return "UnknownRelationKind";
        case errc::dangling_reference: return "DanglingReference";
        case errc::disconnected_graph: return "DisconnectedGraph";
        case errc::no_convergence: return "NoConvergence";
        case errc::exhausted_edges: return "ExhaustedEdges";
        case errc::node_set_mismatch: return "NodeSetMismatch";
        case errc::insufficient_support: return "InsufficientSupport";
        case errc::invalid_exponent: return "InvalidExponent";
        case errc::annotation_mismatch: return "AnnotationMismatch";
        case errc::empty_bundle: return "EmptyBundle";
        case errc::config_error: return "ConfigError";
        case errc::io_error: return "IoError";
    }
    return "Error";
}

} // namespace mplex
