#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassmetric/ninner.hpp"

#include <nlohmann/json_fwd.hpp>

namespace grassmetric::axioms {

enum class Verdict { pass, fail, undecided };
const char* to_string(Verdict v);

struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::pass;
  long trials = 0;
  Scalar max_residual = 0.0;
  std::optional<std::string> witness;  // serialized counterexample, set on fail
  std::optional<std::string> note;

  nlohmann::json to_json() const;
};

/// Deterministic sampling plan: same seed, same verdicts.
struct SampleConfig {
  std::uint64_t seed = 0;
  long trials = 200;
  std::size_t m = 3;
  std::size_t n = 2;
  Scalar tol = 1e-8;
};

// Definition 2.1 checkers. Failures are reported, never thrown.
AxiomReport check_axiom_positivity(const NInnerForm& form, const SampleConfig& cfg);
AxiomReport check_axiom_symmetry(const NInnerForm& form, const SampleConfig& cfg);
AxiomReport check_axiom_homogeneity(const NInnerForm& form, const SampleConfig& cfg);
AxiomReport check_axiom_alternating(const NInnerForm& form, const SampleConfig& cfg);
AxiomReport check_axiom_additivity(const NInnerForm& form, const SampleConfig& cfg);

/// Condition vi: the orthogonal vector is found by solving the homogeneous
/// linear system of the n replacement products, not by random search.
/// Vacuously passes when m <= n; empty nullspace gives undecided.
AxiomReport check_axiom_vi(const NInnerForm& form, const SampleConfig& cfg);

/// Misiak's five conditions applied to the reduced (n+1)-argument product.
std::vector<AxiomReport> check_definition_1_1(const NInnerForm& form,
                                              const SampleConfig& cfg);

/// Every checker above, reports in fixed axiom-id order.
std::vector<AxiomReport> check_all(const NInnerForm& form, const SampleConfig& cfg);

bool all_pass(const std::vector<AxiomReport>& reports);

}  // namespace grassmetric::axioms
