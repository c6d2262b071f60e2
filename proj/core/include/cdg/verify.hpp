#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdg/graph.hpp"
#include "cdg/group.hpp"
#include "cdg/report.hpp"

namespace cdg {

// One swept parameter: the closed-form answer against the general
// recognizer (or, for the oracle family, the brute-force oracle against
// the recognizer).
struct TheoremCase {
  std::string param;
  bool predicate = false;
  std::optional<bool> recognizer;  // empty when no data backs a recomputation
  bool agree = false;
  bool certified = true;  // the recognizer's certificate or witness validated
  std::string note;
};

struct TheoremReport {
  std::string family;
  std::vector<TheoremCase> cases;

  bool all_agree() const;
  std::size_t disagreements() const;
  std::size_t predicate_true() const;
};

struct VerifyOptions {
  std::vector<std::string> families;      // empty: every family
  std::optional<std::uint64_t> max_n;     // upper end of dihedral/dicyclic/symmetric/alternating sweeps
  std::size_t oracle_cases = 10'000;      // random graphs on 6..8 vertices
  std::uint64_t seed = 7;
  std::size_t threads = 0;                // 0: COPRIME_DIVISOR_THREADS or hardware concurrency
};

const std::vector<std::string>& verification_families();

// Throws OutOfRange for an unknown family name.
TheoremReport verify_family(std::string_view family, const VerifyOptions& options = {});
std::vector<TheoremReport> verify_paper(const VerifyOptions& options = {});

// {"family": ..., "cases": [{"param", "predicate", "recognizer", "agree", ...}], "all_agree": ...}
Json report_json(const TheoremReport& report);
std::string summary_table(const std::vector<TheoremReport>& reports);

// Pairwise non-isomorphic graphs on 1..max_vertices vertices (max 6).
std::vector<Graph> small_graph_corpus(std::size_t max_vertices);

// G(n, p) with p drawn per case in [0.15, 0.85]; deterministic in
// (seed, case_index) across platforms.
Graph random_graph(std::size_t n, std::uint64_t seed, std::uint64_t case_index);

// Thirty enumerable groups of order at most 200.
const std::vector<std::string>& structure_test_groups();

// Z_4, Z_9, Z_6, S_3, D_10, A_5, Z_30, Z_2 x Z_3.
const std::vector<std::string>& direct_product_factors();

// The seven non-divisor products listed as examples of the direct-product
// theorem, as (H, K) spec texts.
const std::vector<std::pair<std::string, std::string>>& direct_product_examples();

// COPRIME_DIVISOR_THREADS when set and positive, else hardware concurrency.
std::size_t sweep_threads();

}  // namespace cdg
