#pragma once

// Automorphisms of extensions: compatible pairs, the Wells derivation omega,
// restriction rho, inducibility and the Sylow reduction.

#include <optional>
#include <vector>

#include "brace/extension.hpp"

namespace brace {

struct CompatiblePair {
  Perm phi;    // brace automorphism of H
  Perm theta;  // additive automorphism of I

  friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
  friend auto operator<=>(const CompatiblePair&, const CompatiblePair&) = default;
};

/// (phi1 phi2, theta1 theta2); classes are acted on from the right.
CompatiblePair compose(const CompatiblePair& a, const CompatiblePair& b);
CompatiblePair identity_pair(int h_order, int i_order);
bool is_automorphism_pair(const ActionPair& a, const CompatiblePair& p);
/// nu_h = theta^-1 nu_phi(h) theta and the same for sigma.
bool is_compatible(const ActionPair& a, const CompatiblePair& p);

/// Sorted; the identity pair comes first.
std::vector<CompatiblePair> compatible_pairs(const ActionPair& a);

/// f^(phi,theta)(h1, h2) = theta^-1 f(phi h1, phi h2)
Cochain act_on_cochain(const Cochain& f, const CompatiblePair& p);
Cocycle2 act_on_cocycle(const ActionPair& a, const Cocycle2& c, const CompatiblePair& p);
IntVector act_on_class(const SecondCohomology& h2, const IntVector& coords, const CompatiblePair& p);

/// iota' = iota theta, proj' = phi^-1 proj, section' = section phi.
Extension act_on_extension(const Extension& x, const CompatiblePair& p);

/// Class of c^p - c.
IntVector omega_of(const SecondCohomology& h2, const Cocycle2& c, const CompatiblePair& p);

struct WellsData {
  Extension extension;
  Extracted extracted;
  SecondCohomology h2;
  std::vector<CompatiblePair> pairs;
  std::vector<std::vector<int>> product;  // indices into pairs
  std::vector<IntVector> omega;
  bool derivation_law = false;
  bool omega_is_homomorphism = false;

  int index_of(const CompatiblePair& p) const;
  std::vector<int> kernel() const;
};

WellsData wells_map(const Extension& x);

/// rho(gamma) = (proj gamma section, iota^-1 gamma iota)
CompatiblePair restrict_automorphism(const Extension& x, const Perm& gamma);

struct AutbNormalizing {
  std::vector<Perm> autb_i;  // automorphisms of E with gamma(I) = I
  std::vector<Perm> kernel;  // identity on I and on H
};

AutbNormalizing autb_normalizing(const Extension& x, int bound = default_search_bound());

/// eta(lambda)(s(h) + iota(y)) = s(h) + iota(lambda(h) + y)
Perm eta(const Extension& x, const Cochain& lambda);
/// zeta(gamma)(h) = iota^-1(gamma(s(h)) - s(h))
Cochain zeta(const Extension& x, const Perm& gamma);

struct EtaIsomorphism {
  std::vector<Cochain> derivations;
  std::vector<Perm> automorphisms;  // eta of each derivation
  bool homomorphism = false;        // eta(l1 + l2) = eta(l1) eta(l2)
  bool inverse = false;             // zeta eta = id and eta zeta = id on the kernel
  bool onto_kernel = false;
  bool ok() const { return homomorphism && inverse && onto_kernel; }
};

EtaIsomorphism eta_isomorphism(const Extension& x, const AutbNormalizing& autb);

struct ModuleCriterion {
  bool bimodule_iso = false;
  bool classes_equal = false;
};

ModuleCriterion module_criterion(const Extension& x, const CompatiblePair& p);

struct Inducibility {
  bool inducible = false;
  std::optional<Perm> witness;
  IntVector obstruction;  // omega(p)
  bool by_omega = false;
  bool by_search = false;
  bool by_module = false;
  bool routes_agree() const { return by_omega == by_search && by_search == by_module; }
};

Inducibility is_inducible(const Extension& x, const CompatiblePair& p);
Inducibility is_inducible(const Extension& x, const CompatiblePair& p, const SecondCohomology& h2,
                          const AutbNormalizing& autb);

struct ExactnessReport {
  bool kernel_of_rho = false;       // ker rho = Autb^{H,I}(E)
  bool eta = false;                 // Autb^{H,I}(E) = Z^1_N via eta
  bool image_equals_kernel = false; // Im rho = Ker omega
  bool derivation_law = false;
  bool ok() const { return kernel_of_rho && eta && image_equals_kernel && derivation_law; }
};

ExactnessReport check_exactness(const WellsData& w, const AutbNormalizing& autb);

struct PrimeVerdict {
  int prime = 0;
  std::vector<int> sylow;  // elements of P in H
  CompatiblePair restricted;
  bool inducible = false;
  bool routes_agree = false;
  bool square_commutes = false;  // res(omega(p)) = omega_P(r(p))
};

struct SylowVerdict {
  std::vector<PrimeVerdict> primes;
  bool all_primes_inducible = false;
  bool globally_inducible = false;
  bool implication_holds = false;  // all primes => global
  bool converse_holds = false;     // global => all primes; checked, not claimed in general
};

SylowVerdict sylow_reduction(const Extension& x, const CompatiblePair& p);

}  // namespace brace
