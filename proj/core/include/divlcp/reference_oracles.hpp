#pragma once

#include <vector>

#include "divlcp/text_model.hpp"

// Slow, obviously correct implementations. They share no code with the
// construction pipeline so they can be used to check it.
namespace divlcp::oracle {

template <IndexCell I>
std::vector<I> naive_sa(Text text);

template <IndexCell I>
std::vector<I> naive_lcp(Text text, const std::vector<I>& sa);

// Kasai et al.: walk the text in order, reusing h-1 from the previous suffix.
template <IndexCell I>
std::vector<I> kasai_lcp(Text text, const std::vector<I>& sa);

// Dense Phi variant: predecessor array in text order, then permute.
template <IndexCell I>
std::vector<I> phi_lcp(Text text, const std::vector<I>& sa);

// True iff sa is a permutation of [0, n) in strictly increasing suffix order.
template <IndexCell I>
bool verify_sa(Text text, const std::vector<I>& sa);

}  // namespace divlcp::oracle
