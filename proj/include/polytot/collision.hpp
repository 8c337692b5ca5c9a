#pragma once

#include "polytot/bignat.hpp"
#include "polytot/field.hpp"
#include "polytot/poly.hpp"
#include "polytot/totient.hpp"

#include <map>
#include <vector>

namespace polytot {

// Decides Phi(f) == Phi(g) from the signatures alone; never evaluates Phi.
//   q not in {2,3}: equal degree and equal counts.
//   q == 3: m_d equal for d >= 3, m_1 + 3 m_2 equal, deg + m_2 equal.
//   q == 2: m_d equal for d >= 2, deg - m_1 equal.
bool same_phi(const Signature& a, const Signature& b, const Field& field);

// Monic polynomials of degree 1..max_degree grouped by their exact Phi value.
std::map<BigNat, std::vector<Poly>> phi_classes(const Field& field, unsigned max_degree);

}  // namespace polytot
