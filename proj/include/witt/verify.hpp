#pragma once

#include "witt/loop_algebra.hpp"
#include "witt/prng.hpp"
#include "witt/tensor_module.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace witt {

/// Knobs shared by the verification sweeps. Suites with criterion-pinned
/// bounds (lemma3.1, psi, barpsi) ignore the window and sampling knobs.
struct SuiteConfig {
    int m = 2;
    int n = 2;
    int window = 2;          // |alpha_i| bound for sampled sweeps
    std::uint64_t seed = 0;
    long samples = 1500;     // tuple count for sampled sweeps
    bool exhaustive = false; // run the full acceptance-scale sweep instead
};

struct CheckFailure {
    std::string pair; // reproducer witness: the exact inputs
    std::string lhs;
    std::string rhs;
};

struct SuiteResult {
    std::string suite;
    long checked = 0;
    std::vector<CheckFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// Known suites: jacobi, lemma3.1, psi, barpsi, module-axiom-3.9,
/// module-axiom-4.2, glz, lemma5.1.
std::vector<std::string> suite_names();

/// Runs one named invariant sweep. Throws PreconditionError for unknown
/// names.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

/// Deterministic unimodular test matrices: seeded products of elementary row
/// operations.
LatticeMatrix sample_unimodular(int m, Rng& rng, int ops = 6);

} // namespace witt
