#pragma once

// Exact computation of zero-sum invariants of finite abelian groups:
// sequence algebra, sumset dynamic programming, irreducible factorization
// machinery, exhaustive solvers for k, K, K1, D, N1, and executable checks
// of the structural results those invariants satisfy.

#include "zslab/rational.hpp"
#include "zslab/group.hpp"
#include "zslab/sequence.hpp"
#include "zslab/sumset.hpp"
#include "zslab/factor.hpp"
#include "zslab/invariants.hpp"
#include "zslab/oracle.hpp"
#include "zslab/verify.hpp"
