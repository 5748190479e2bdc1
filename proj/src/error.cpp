#include "numdiag/error.hpp"

namespace numdiag {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotStartingAtZero: return "NotStartingAtZero";
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::NonProperInput: return "NonProperInput";
    case ErrorCode::NotASemigroup: return "NotASemigroup";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::LeftIdentityUndefined: return "LeftIdentityUndefined";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAlmostSymmetric: return "NotAlmostSymmetric";
    case ErrorCode::ExcludedBaseCase: return "ExcludedBaseCase";
    case ErrorCode::TypeTooSmall: return "TypeTooSmall";
    case ErrorCode::BlockSplit: return "BlockSplit";
    case ErrorCode::NonConsecutivePF: return "NonConsecutivePF";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
  }
  return "UnknownError";
}

}  // namespace numdiag
