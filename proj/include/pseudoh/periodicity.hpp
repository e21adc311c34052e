#pragma once

#include <vector>

#include "pseudoh/algebra.hpp"
#include "pseudoh/catalog.hpp"
#include "pseudoh/module.hpp"
#include "pseudoh/morphism.hpp"

namespace pseudoh {

// Tensoring with V^{mu,nu}_min for (mu,nu) in {(8,0),(0,8),(4,4)}.
struct PeriodicityStep {
  int mu = 8;
  int nu = 0;
  std::vector<Blade> T;  // T_1..T_4 over the appended generators zeta_1..zeta_8

  Signature sig() const { return Signature{mu, nu}; }
  bool operator==(const PeriodicityStep& o) const { return mu == o.mu && nu == o.nu; }
};

PeriodicityStep make_step(int mu, int nu);
std::vector<PeriodicityStep> all_steps();

// Generator numbering on (r+mu, s+nu): z_i (i <= r) -> i, zeta_a (a <= mu) -> r+a,
// z_{r+j} -> r+mu+j, zeta_{mu+b} -> r+mu+s+b.
int map_generator(Signature base, const PeriodicityStep& step, int i);
int map_zeta(Signature base, const PeriodicityStep& step, int alpha);
Blade map_blade(Signature base, const PeriodicityStep& step, Blade b);

// PI_{r+mu,s+nu} = PI_{r,s} together with T_1..T_4 on the appended generators.
InvolutionSystem extend_system(const InvolutionSystem& base, const PeriodicityStep& step);
// Catalog system for basic signatures, otherwise reduced through periodicity steps.
InvolutionSystem extended_system(Signature sig);
// Index of the three-generator involution carrying the branch choice, -1 if none.
int branch_involution(const InvolutionSystem& sys);

// build_minimal for any signature.
AdmissibleModule build_extended_minimal(const ModuleSpec& spec);

// V^{mu,nu}_min rebased to v, J_{zeta_j} v (j = 1..8), J_{zeta_1} J_{zeta_j} v (j = 2..8).
AdmissibleModule block_module(const PeriodicityStep& step, int metric_sign = 1);

// V (x) V^{mu,nu}_min with basis index k * dim V + i.
AdmissibleModule tensor_extend_module(const AdmissibleModule& V, const PeriodicityStep& step);
// Common 1-eigenspace of T_1..T_4 as a module over the base signature.
AdmissibleModule restrict_module(const AdmissibleModule& W, const PeriodicityStep& step);

struct ExtendedMorphism {
  LieMorphism morphism;
  HTypeAlgebra src;
  HTypeAlgebra dst;
};

// A (x) Id and C + Id_8, twisted by J_Omega where A^tau A = -Id. Verified before returning.
ExtendedMorphism extend_morphism(const LieMorphism& f, const AdmissibleModule& src, const AdmissibleModule& dst,
                                 const PeriodicityStep& step);

// Block assembly from a map A1 between the E_0 blocks of two block-ordered modules.
// zeta lists the generator numbers of zeta_1..zeta_8.
LieMorphism extend_from_E(const RatMatrix& A1, const AdmissibleModule& src, const AdmissibleModule& dst,
                          const std::vector<int>& zeta);

}  // namespace pseudoh
