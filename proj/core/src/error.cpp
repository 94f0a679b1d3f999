#include "cotlar/error.hpp"

namespace cotlar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::OffDiagonalOne: return "OffDiagonalOne";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::WordTooLong: return "WordTooLong";
    case ErrorCode::NestedConditionViolated: return "NestedConditionViolated";
    case ErrorCode::WrongSystem: return "WrongSystem";
    case ErrorCode::RepDiscoveryFailed: return "RepDiscoveryFailed";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

WordTooLong::WordTooLong(std::size_t requested, std::size_t cap)
    : Error(ErrorCode::WordTooLong,
            "word of length " + std::to_string(requested) + " exceeds max_word_len " +
                std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

}  // namespace cotlar
