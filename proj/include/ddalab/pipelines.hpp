#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddalab/io.hpp"

namespace ddalab {

// Runs tasks on up to `threads` workers; results keep the task order.
std::vector<Report> run_parallel(const std::vector<std::function<Report()>>& tasks, std::size_t threads);
// DDA_LAB_THREADS when set, otherwise the hardware concurrency.
std::size_t default_threads();

// Largest End(_N M_N) taken through the double algebra suite; dimension 16 takes about a minute.
inline constexpr std::size_t kMaxEndoDim = 16;

struct PipelineResult {
  Report report;
  std::optional<Json> output;  // document written by the build commands
};

// Validity suite of the double algebra (and the Hopf data it came from). Extension
// instances are first taken through the endomorphism construction.
PipelineResult check_dda(const Instance& in);
// Base data, bialgebroid views and the solved antipode; compared with the transported
// Hopf antipode on group instances. Output: the antipode and the base dimensions.
PipelineResult derive_hopf(const Instance& in);
// Module algebra laws, the six Galois conditions, Kreimer-Takeuchi, the structure theorem
// conditions, Frobenius / balanced / D2 on Galois instances and the phi comparison.
PipelineResult check_galois(const Instance& in, std::size_t threads = 1);
// H#M; with scalars, also the centralizer, H#C and A#C suites and E = H#C.
// Output: H#M as an algebra, or A#C as a double algebra with scalars.
PipelineResult build_smash(const Instance& in, bool scalars);
// Endomorphism double algebra of the extension (or of N = M^H in M) with M as module algebra.
PipelineResult build_endo(const Instance& in);
// Gamma_RB, the opmonoidal constraints, left distributivity and M-reflexivity.
PipelineResult check_duality(const Instance& in, std::size_t threads = 1);

}  // namespace ddalab
