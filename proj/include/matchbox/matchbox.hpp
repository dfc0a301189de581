#ifndef MATCHBOX_MATCHBOX_HPP
#define MATCHBOX_MATCHBOX_HPP

// Umbrella header.

#include "matchbox/combinatorics.hpp"
#include "matchbox/distribution.hpp"
#include "matchbox/hypergeometric.hpp"
#include "matchbox/identity.hpp"
#include "matchbox/montecarlo.hpp"
#include "matchbox/rational.hpp"

#endif  // MATCHBOX_MATCHBOX_HPP
