#include "graphlib/error.hpp"

namespace graphlib {

const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::zero_weight: return "ZeroWeight";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::unknown_family: return "UnknownFamily";
        case errc::bad_params: return "BadParams";
        case errc::kind_unsupported: return "KindUnsupportedForGraph";
        case errc::weighted_unsupported: return "WeightedUnsupported";
        case errc::directed_unsupported: return "DirectedUnsupported";
        case errc::disconnected: return "Disconnected";
        case errc::unweighted: return "Unweighted";
        case errc::too_large: return "TooLarge";
        case errc::too_small: return "TooSmall";
        case errc::non_positive_weight: return "NonPositiveWeight";
        case errc::not_eulerian: return "NotEulerian";
        case errc::no_euler_path: return "NoEulerPath";
        case errc::bad_ordering: return "BadOrdering";
        case errc::not_a_cycle: return "NotACycle";
        case errc::invalid_rotation: return "InvalidRotation";
        case errc::non_planar: return "NonPlanar";
        case errc::ambiguous_representation: return "AmbiguousRepresentation";
        case errc::not_simple_star: return "NotSimpleStar";
        case errc::outer_face_endpoint: return "OuterFaceEndpoint";
        case errc::invalid_flow: return "InvalidFlow";
        case errc::unbounded_cost: return "UnboundedCost";
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::no_convergence: return "NoConvergence";
        case errc::bad_dimension: return "BadDimension";
        case errc::bad_p: return "BadP";
        case errc::zero_vector: return "ZeroVector";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::degenerate_baseline: return "DegenerateBaseline";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace graphlib
