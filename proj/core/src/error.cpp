#include "prefixgroup/error.hpp"

namespace prefixgroup {

const char *to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::InfeasibleSize: return "infeasible-size";
    case ErrorKind::IncompleteCode: return "incomplete-code";
    case ErrorKind::Overlap: return "overlap";
    case ErrorKind::NoMovedPoint: return "no-moved-point";
    case ErrorKind::DegenerateRegion: return "degenerate-region";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace prefixgroup
