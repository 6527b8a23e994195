#pragma once

#include <stdexcept>
#include <string>

namespace graphlib {

/**
 * Error codes for every failure mode the library reports.
 * Names mirror the condition, not the call site.
 */
enum class errc {
    loop_edge,
    duplicate_edge,
    zero_weight,
    index_out_of_range,
    unknown_family,
    bad_params,
    kind_unsupported,
    weighted_unsupported,
    directed_unsupported,
    disconnected,
    unweighted,
    too_large,
    too_small,
    non_positive_weight,
    not_eulerian,
    no_euler_path,
    bad_ordering,
    not_a_cycle,
    invalid_rotation,
    non_planar,
    ambiguous_representation,
    not_simple_star,
    outer_face_endpoint,
    invalid_flow,
    unbounded_cost,
    isolated_vertex,
    not_symmetric,
    no_convergence,
    bad_dimension,
    bad_p,
    zero_vector,
    degree_too_small,
    degenerate_baseline,
    parse_error,
};

const char* errc_name(errc c);

class GraphError : public std::runtime_error {
public:
    GraphError(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw GraphError(code, message);
}

}  // namespace graphlib
