#pragma once

#include "spincount/partition.hpp"
#include "spincount/weyl.hpp"

namespace spincount {

// The restriction of the equal-pair character chi_{(lam,lam)} to the index-2
// subgroup W'_{2t} (kernel of the product of signs) splits into two
// irreducibles chi_plus and chi_minus with
//     chi_{+-}(x) = (chi_{(lam,lam)}(x) +- twisted_value(lam, x)) / 2.
// The twisted character is the trace of rho(x) composed with the block-swap
// intertwiner on the induced model of chi_{(lam,lam)}; it reduces to
// symmetric-group character values and needs no explicit matrices.
long long twisted_value(const Partition& lam, const SignedPerm& x);

// chi_plus / chi_minus evaluated at one element of W'_{2t}.
std::pair<Rat, Rat> split_char_values(const Partition& lam, const SignedPerm& x);

} // namespace spincount
