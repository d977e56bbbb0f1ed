#pragma once

#include "pam/matching.hpp"
#include "pam/schroeder.hpp"

namespace pam {

/// Maps a Schroeder path of semilength n without peaks at level one to a
/// matching on [2n] avoiding 12312 and 121323. A leading H wraps the image
/// of the remainder in the edge (1, 2n); an excursion U P' D P'' splits P'
/// at its base-level UD factors and rebuilds through the double
/// decomposition. Peaks become crossings. Throws DomainError on a low peak.
Matching phi(const SchroederPath& p);

/// Inverse of phi. Throws DomainError unless m avoids both patterns.
SchroederPath phi_inv(const Matching& m);

}  // namespace pam
