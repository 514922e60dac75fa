#pragma once

// Deliberately broken algebras for negative-path tests.

#include "homlie/algebra.hpp"

namespace homlie::testing {

/// W_q with [L_n, L_m] = L_{n+m} for n < m (constant structure constant 1).
HomAlgebra make_corrupted_wq();

}  // namespace homlie::testing
