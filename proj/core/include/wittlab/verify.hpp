#pragma once

#include "wittlab/basis.hpp"
#include "wittlab/report.hpp"

#include <cstdint>
#include <optional>

namespace wittlab {

struct VerifyOptions {
  int window = 6;
  std::optional<AlgebraKind> algebra;  // jacobi only: restrict to one algebra
  std::uint64_t seed = 20260811;       // randomized sweeps are reproducible
};

/// Jacobi identity on every window basis triple, per algebra. window >= 1.
ReportDocument verify_jacobi(const VerifyOptions& options);

/// Second-cohomology suite: window stability of the degree-0 dimension,
/// vanishing in nearby degrees, the invariant-form space, cocycle sweeps
/// for alpha and beta, their non-coboundary certificates and the
/// decomposition identities. window >= 3.
ReportDocument verify_cocycles(const VerifyOptions& options);

/// Derivation suite: outer dimension per degree with window stability,
/// reduction of the outer basis onto the known generator, the I-valued
/// space, the lifted space on wtilde, vanishing of Hom(I, L) and the
/// degree-zero two-unknown computation. window >= 4.
ReportDocument verify_derivations(const VerifyOptions& options);

/// Automorphism suite: composition/inverse laws and the generator
/// relations on randomized parameters, apply/compose compatibility,
/// normal-form soundness on random words, homomorphism certification on
/// w and wtilde, parameter uniqueness and the sequence encoding.
/// window >= 2.
ReportDocument verify_automorphisms(const VerifyOptions& options);

/// All of the above concatenated.
ReportDocument verify_all(const VerifyOptions& options);

}  // namespace wittlab
