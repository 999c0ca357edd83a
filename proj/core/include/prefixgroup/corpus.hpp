#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace prefixgroup {

struct CorpusOptions {
  std::uint64_t seed = 42;
  int arity = 2;
  std::size_t depth = 5;  // max tree depth of random elements
  int orbit_window = 8;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
  std::string first_failure;

  bool passed() const noexcept { return cases > 0 && failures == 0; }
};

// Each suite draws its cases from its own stream derived from options.seed.
SuiteResult suite_group_laws(const CorpusOptions &opt, std::size_t cases = 500);
SuiteResult suite_decompose2(const CorpusOptions &opt, std::size_t cases = 500);
SuiteResult suite_transporter(const CorpusOptions &opt, std::size_t cases = 1000);
SuiteResult suite_wandering(const CorpusOptions &opt, std::size_t cases = 200);
SuiteResult suite_join_compression(const CorpusOptions &opt, std::size_t cases = 200);
SuiteResult suite_shift_identity(const CorpusOptions &opt, std::size_t cases = 200);
SuiteResult suite_monolith(const CorpusOptions &opt, std::size_t cases = 200);
SuiteResult suite_simple_witness(const CorpusOptions &opt, std::size_t cases = 100);
SuiteResult suite_derived_conjugator(const CorpusOptions &opt, std::size_t cases = 300);
SuiteResult suite_cover3(const CorpusOptions &opt);
SuiteResult suite_claim1(const CorpusOptions &opt, std::size_t cases = 100);
SuiteResult suite_claim2(const CorpusOptions &opt, std::size_t cases = 200);
SuiteResult suite_claim3(const CorpusOptions &opt, std::size_t cases = 100);
SuiteResult suite_commuting_chain(const CorpusOptions &opt, std::size_t cases = 100);

/// Every suite above with its default case count, in a fixed order.
std::vector<SuiteResult> run_corpus(const CorpusOptions &opt);

}  // namespace prefixgroup
