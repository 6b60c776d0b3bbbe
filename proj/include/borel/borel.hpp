#pragma once

// Umbrella header. oracles.hpp and verify.hpp are not included; they pull
// in the brute-force reference code and are meant for tests and tooling.

#include "bijections.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "orders.hpp"
#include "poset.hpp"
#include "reachability.hpp"
#include "termorders.hpp"
#include "young.hpp"
