#include "copbench/errors.hpp"

namespace copbench {

const char* err_name(Err e) {
    switch (e) {
        case Err::FormatError: return "FormatError";
        case Err::InternalCheckFailed: return "InternalCheckFailed";
        case Err::NotAPrimePower: return "NotAPrimePower";
        case Err::NotFactorizable: return "NotFactorizable";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::VectorOutOfRange: return "VectorOutOfRange";
        case Err::NotC4Free: return "NotC4Free";
        case Err::ModeHypothesisViolated: return "ModeHypothesisViolated";
        case Err::DegenerateDegree: return "DegenerateDegree";
        case Err::BadVectorLength: return "BadVectorLength";
        case Err::EvenOrder: return "EvenOrder";
        case Err::CycleTooShort: return "CycleTooShort";
        case Err::DisconnectedSplit: return "DisconnectedSplit";
        case Err::SplitPropertyViolated: return "SplitPropertyViolated";
        case Err::SizeExceeded: return "SizeExceeded";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::Disconnected: return "Disconnected";
        case Err::ExceedsKmax: return "ExceedsKmax";
        case Err::IllegalMove: return "IllegalMove";
        case Err::HypothesisViolated: return "HypothesisViolated";
        case Err::NotNonBipartite: return "NotNonBipartite";
        case Err::NotK2TFree: return "NotK2TFree";
        case Err::NoValidThreshold: return "NoValidThreshold";
        case Err::GirthTooSmall: return "GirthTooSmall";
        case Err::EmptyFamily: return "EmptyFamily";
        case Err::IsolatedVertex: return "IsolatedVertex";
        case Err::NotRegular: return "NotRegular";
        case Err::EmptyEdge: return "EmptyEdge";
    }
    return "UnknownError";
}

} // namespace copbench
