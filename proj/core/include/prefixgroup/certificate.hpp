#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prefixgroup/witnesses.hpp"

namespace prefixgroup {

/// One factor of a factorization certificate: an element that fixes a
/// clopen set pointwise.
struct FixingFactor {
  PrefixMap element;
  ClopenSet fixes;
  bool operator==(const FixingFactor &) const = default;
};

/// target = factors[0] · factors[1] · ..., each factor fixing its set.
struct Factorization {
  int arity = 2;
  std::vector<FixingFactor> factors;
  bool operator==(const Factorization &) const = default;
};

using CertificateBody = std::variant<NormalWord, CommutatorWord, Factorization>;

/// A witness together with the element it claims to evaluate to.
struct Certificate {
  CertificateBody body;
  PrefixMap target;

  /// "normal_word", "commutator_word" or "factorization".
  std::string kind() const;
  int arity() const noexcept { return target.arity(); }
  bool operator==(const Certificate &) const = default;
};

struct Verdict {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Re-evaluates the body and compares reduced forms with the target.
Verdict verify(const Certificate &cert);

std::string to_json(const Certificate &cert, int indent = -1);
/// {"certificates": [...]}
std::string to_json(const std::vector<Certificate> &bundle, int indent = -1);

/// Accepts a single certificate object or a bundle. Malformed JSON, unknown
/// kinds and bad literals raise ParseError.
std::vector<Certificate> parse_certificates(std::string_view json_text);

}  // namespace prefixgroup
