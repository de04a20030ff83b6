#include "fractiso/errors.hpp"

namespace fractiso {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_positive_mass: return "NonPositiveMass";
        case errc::masses_not_one: return "MassesNotOne";
        case errc::value_out_of_range: return "ValueOutOfRange";
        case errc::asymmetric_declared_symmetric: return "AsymmetricDeclaredSymmetric";
        case errc::empty_graph: return "EmptyGraph";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::not_invariant: return "NotInvariant";
        case errc::inconsistent_didm: return "InconsistentDidm";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_a_tree: return "NotATree";
        case errc::too_large: return "TooLarge";
        case errc::malformed_expression: return "MalformedExpression";
        case errc::asymmetric_kernel: return "AsymmetricKernel";
        case errc::q_out_of_range: return "QOutOfRange";
        case errc::parse_error: return "ParseError";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::loop_edge: return "LoopEdge";
        case errc::base_mismatch: return "BaseMismatch";
        case errc::limit_exceeded: return "LimitExceeded";
    }
    return "UnknownError";
}

} // namespace fractiso
