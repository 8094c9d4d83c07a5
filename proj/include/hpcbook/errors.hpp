#pragma once

#include <stdexcept>
#include <string>

namespace hpcbook {

enum class errc {
    cyclic_graph,
    rotation_mismatch,
    not_planar_embedding,
    duplicate_edge,
    multiple_sources,
    multiple_sinks,
    contains_embedded_n,
    contains_embedded_h,
    internal_invariant_broken,
    not_hamiltonian,
    cyclic_completion,
    invalid_input,
    width_cap_exceeded,
    no_host_face,
    too_large,
    generation_exhausted,
    syntax_error,
    semantic_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::cyclic_graph:              return "CyclicGraph";
        case errc::rotation_mismatch:         return "RotationMismatch";
        case errc::not_planar_embedding:      return "NotPlanarEmbedding";
        case errc::duplicate_edge:            return "DuplicateEdge";
        case errc::multiple_sources:          return "MultipleSources";
        case errc::multiple_sinks:            return "MultipleSinks";
        case errc::contains_embedded_n:       return "ContainsEmbeddedN";
        case errc::contains_embedded_h:       return "ContainsEmbeddedH";
        case errc::internal_invariant_broken: return "InternalInvariantBroken";
        case errc::not_hamiltonian:           return "NotHamiltonian";
        case errc::cyclic_completion:         return "CyclicCompletion";
        case errc::invalid_input:             return "InvalidInput";
        case errc::width_cap_exceeded:        return "WidthCapExceeded";
        case errc::no_host_face:              return "NoHostFace";
        case errc::too_large:                 return "TooLarge";
        case errc::generation_exhausted:      return "GenerationExhausted";
        case errc::syntax_error:              return "SyntaxError";
        case errc::semantic_error:            return "SemanticError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace hpcbook
