#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "connsets/counting.hpp"
#include "connsets/graph.hpp"

namespace connsets {

enum class Status { pass, fail, informational };
std::string to_string(Status s);

// A graph attaining a reported value, optionally at a specific vertex.
struct Attainer {
  std::string certificate;  // graph6 of the canonical form
  std::optional<std::string> family;
  std::optional<Vertex> vertex;  // in the canonical labeling
};

struct ReportRow {
  std::string item;
  int n = 0;
  std::optional<Count> expected;
  std::string formula;
  std::optional<Count> observed;
  Status status = Status::informational;
  std::vector<Attainer> attainers;
  std::string note;
  bool guard = false;  // enumeration sanity row rather than a claim
};

struct VerificationReport {
  std::string claim;
  int n_min = 0;
  int n_max = 0;
  std::vector<ReportRow> rows;
  Status status = Status::informational;
  std::vector<std::string> failures;  // counterexamples as graph6 with context
  std::chrono::nanoseconds runtime{0};

  bool passed() const { return status != Status::fail; }
};

struct VerifyOptions {
  int workers = 1;            // 1: serial; 0: OpenMP default; k: k threads
  int enumeration_cap = 11;   // largest n passed to the bicyclic enumerator
  int crosscheck_cap = 8;     // largest n compared against the labeled generator
};

struct LemmaTrials {
  int identify = 500;
  int pendant = 200;
  int branch = 200;
  static LemmaTrials uniform(int k) { return {k, k, k}; }
};

// Minimum of N over all n-vertex bicyclic graphs against (n+6)(n-1)/2 and
// the minimizer set ({L5, A5} at n = 5, {L_n} above).
VerificationReport verify_minimum(int n, const VerifyOptions& opt = {});
// Asserted for n >= 8: unique maximizer B_n, every other graph at most
// N(R_n). For 5 <= n <= 7 the extremes are reported without assertion.
VerificationReport verify_maximum(int n, const VerifyOptions& opt = {});
// N(G)_v >= n + 3 for all graphs and vertices, 4 <= n <= 9; equality cases
// are listed. At n = 4 equality must occur exactly at A4's degree-2 vertices.
VerificationReport verify_vertex_bound(int n, const VerifyOptions& opt = {});
// Every closed-form family up to max_n against the oracle, plus the tabulated
// small graphs and the theta table with its rooted bounds.
VerificationReport verify_closed_forms(int max_n = 16, const VerifyOptions& opt = {});
// Gluing, pendant-extension and branch-shift identities on seeded random
// instances of at most 12 vertices.
VerificationReport verify_lemma_algebra(const LemmaTrials& trials, std::uint64_t seed,
                                        const VerifyOptions& opt = {});
// N(T)_v <= 2^(n-1) over all trees and roots, equality exactly at star centres.
VerificationReport verify_tree_bound(int max_n = 9, const VerifyOptions& opt = {});
// Core-based enumeration against the labeled generator, n = 4..max_n.
VerificationReport verify_generators(int max_n = 8, const VerifyOptions& opt = {});

// JSON of one report or a list; runtime is omitted unless requested so that
// identical runs serialize to identical bytes.
std::string to_json(const VerificationReport& r, bool with_runtime = false);
std::string to_json(const std::vector<VerificationReport>& rs, bool with_runtime = false);
// CSV rows: claim,n,item,expected,observed,status (with header).
std::string to_csv(const std::vector<VerificationReport>& rs);
// Short human-readable summary.
std::string to_text(const VerificationReport& r);

}  // namespace connsets
