#pragma once

#include "instance.hpp"

namespace mdim {

// Witness sets addressed by their catalog names, resolved against the
// instance's family labeling.
//
// Stacked products (cp/cpm), catalog-style 1-based in-copy indices, members in
// copy 1 unless stated:
//   M<i>, N<j>          two-element layer-V1 sets (odd n, single copy)
//   A<i>, B<j>          M/N plus the compatible layer-V_k vertex
//   C<i>                A<i> plus the copy-2 compatible V_k vertex (m >= 2)
//   D<i>                A<i> plus the copy-m compatible V_k vertex (m >= 2)
//   E1, E2, E3          even-n analogues on a single copy
//   E4 (alias E)        E3 plus the copy-m compatible V_k vertex (m >= 2)
//   T                   layer V1 of copy 1 and of copy m (m >= 2)
// H(n):
//   R1[:omit=<r>]       all points except v_omit (default omit = n)
//   R2                  v1v2 .. v1v(n-1)
//   P<i>                {v_i v_(i+1), v_i v_(i+2)}
//   P                   P1 u P4 u ... (requires 3 | n)
// L(n):
//   C3[:r=<r>]          N(W_r)
//   C2[:r=<r>]          N(W_r) minus its last element
//   C1[:r=<r>]          N(W_r) minus its last two elements
//
// Indices may be given as trailing digits of the name ("D1") or as params
// ("D:i=1"); both at once must agree.
vertex_set build_named_set(const family_instance &inst,
                           const std::string &set_spec);

// Canonical display name ("D1", "E", "T", "C2"), for table headers.
std::string named_set_display(const family_instance &inst,
                              const std::string &set_spec);

} // namespace mdim
