#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace docarl {

enum class Errc {
  DelimiterCollision,
  FieldCountMismatch,
  SerialOverflow,
  InvalidArgument,
  IoError,
  PlacementOverflow,
  RangeError,
  SchemaError,
  DegenerateAnchor,
  UnknownClass,
  EmptyCrop,
  NoDocumentFound,
  AnchorNotFound,
  BadImage,
  NotFound,
  UnresolvableImage,
  InvalidBox,
  SubprocessError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::DelimiterCollision: return "DelimiterCollision";
    case Errc::FieldCountMismatch: return "FieldCountMismatch";
    case Errc::SerialOverflow: return "SerialOverflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::PlacementOverflow: return "PlacementOverflow";
    case Errc::RangeError: return "RangeError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::DegenerateAnchor: return "DegenerateAnchor";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::EmptyCrop: return "EmptyCrop";
    case Errc::NoDocumentFound: return "NoDocumentFound";
    case Errc::AnchorNotFound: return "AnchorNotFound";
    case Errc::BadImage: return "BadImage";
    case Errc::NotFound: return "NotFound";
    case Errc::UnresolvableImage: return "UnresolvableImage";
    case Errc::InvalidBox: return "InvalidBox";
    case Errc::SubprocessError: return "SubprocessError";
  }
  return "Unknown";
}

/// Every failure raised by the library. what() reads "Name: detail".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace docarl
