#include "ccindex/error.hpp"

namespace ccindex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGame: return "EmptyGame";
    case ErrorCode::NonpositiveQuota: return "NonpositiveQuota";
    case ErrorCode::QuotaUnreachable: return "QuotaUnreachable";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::DuplicatePlayerInBlock: return "DuplicatePlayerInBlock";
    case ErrorCode::DuplicateBlock: return "DuplicateBlock";
    case ErrorCode::PlayerOutOfRange: return "PlayerOutOfRange";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::PlayerCountMismatch: return "PlayerCountMismatch";
    case ErrorCode::BlockDoesNotContainPlayer: return "BlockDoesNotContainPlayer";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ccindex
