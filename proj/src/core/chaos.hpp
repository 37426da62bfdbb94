#ifndef MONO_CHAOS_HPP
#define MONO_CHAOS_HPP

#include <string>
#include <vector>

#include "orbits.hpp"

namespace mono {

enum class ChaosMethod { Period3, Snapback };

// Certified: chaos established with the listed witnesses.
// None: the certificate's hypotheses provably fail at these parameters.
// Undetermined: parameters sit exactly on a boundary case the method
// does not decide.
enum class CertStatus { Certified, None, Undetermined };

struct CertifiedInequality {
    std::string description;
    RatInterval enclosure; // certifying enclosure of the relevant quantity
};

struct ChaosCertificate {
    ChaosMethod method = ChaosMethod::Period3;
    CertStatus status = CertStatus::None;

    std::vector<Orbit> witness_orbits;      // period3: one 3-cycle
    RatInterval equilibrium;                // snapback: repelling fixed point
    RatInterval preimage;                   // snapback: homoclinic point y
    unsigned steps = 2;                     // snapback: m with F^m(y) = x*
    std::vector<CertifiedInequality> conditions;

    bool certified() const { return status == CertStatus::Certified; }
    std::string str(unsigned decimals = 9) const;
};

// Li-Yorke via an exact 3-cycle; Certified iff enumerate_cycles(map, 3)
// is nonempty. Propagates NonHyperbolicError from enumeration.
ChaosCertificate certify_period3(const IterMap& map);

// Snapback-repeller certificate for Model 1 with m = 2: the equilibrium
// is repelling and some y != x*, y > 0 in the repelling region satisfies
// F^m(y) = x* with nonzero derivatives along the connecting orbit. All
// inequalities certified in exact arithmetic; parameters exactly on the
// known boundary (e^2 f^3 in {8/27, 64/27}) come back Undetermined.
ChaosCertificate certify_snapback(const IterMap& map, unsigned m = 2);

} // namespace mono

#endif
