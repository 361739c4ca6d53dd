#pragma once

#include <stdexcept>
#include <string>

namespace opalg {

// Every library failure derives from Error so callers can map to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct NotExact : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct AxiomError : Error { using Error::Error; };
struct IllDefinedQuotient : Error { using Error::Error; };
struct NotFreeModule : Error { using Error::Error; };
struct NotAChainMap : Error { using Error::Error; };
struct NoWitness : Error { using Error::Error; };

// A computation needed data beyond the arity, weight or degree caps.
struct TruncationExceeded : Error {
  TruncationExceeded(const std::string& construction, const std::string& detail)
      : Error("truncation exceeded in " + construction + ": " + detail), construction(construction) {}
  std::string construction;
};

}  // namespace opalg
