#include "galedesign/errors.hpp"

namespace gd {

const char* err_name(Err e) {
  switch (e) {
    case Err::LoopEdge: return "LoopEdge";
    case Err::DuplicateEdge: return "DuplicateEdge";
    case Err::Disconnected: return "Disconnected";
    case Err::NotRegular: return "NotRegular";
    case Err::NotGenerating: return "NotGenerating";
    case Err::NotSymmetricSet: return "NotSymmetricSet";
    case Err::UnknownName: return "UnknownName";
    case Err::ClusterAmbiguity: return "ClusterAmbiguity";
    case Err::UnsupportedFamily: return "UnsupportedFamily";
    case Err::BadPermutation: return "BadPermutation";
    case Err::KOutOfRange: return "KOutOfRange";
    case Err::RankDeficient: return "RankDeficient";
    case Err::NumericallyDegenerate: return "NumericallyDegenerate";
    case Err::NotAFace: return "NotAFace";
    case Err::NotCombinatorial: return "NotCombinatorial";
    case Err::NotStable: return "NotStable";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NoSuchCode: return "NoSuchCode";
    case Err::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace gd
