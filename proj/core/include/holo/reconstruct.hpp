#ifndef HOLO_RECONSTRUCT_HPP
#define HOLO_RECONSTRUCT_HPP

#include <optional>
#include <utility>
#include <vector>

#include <holo/rat.hpp>

namespace holo {

// Wang-style rational reconstruction with the symmetric bound
// N = D = floor(sqrt((m-1)/2)): returns a/b with |a| <= N, 0 < b <= N,
// b*residue = a (mod m), gcd(a,b) = 1, gcd(b,m) = 1; absent if none exists.
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus);

// unique r mod M with r = r_i (mod m_i); throws if moduli are not pairwise coprime
std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& residues);

}  // namespace holo

#endif
