#pragma once

// Umbrella header: the whole library in dependency order.

#include "nk/rational.hpp"

#include "nk/algebra.hpp"
#include "nk/basis_algebra.hpp"
#include "nk/builtin.hpp"
#include "nk/cech.hpp"
#include "nk/chain.hpp"
#include "nk/cyclic.hpp"
#include "nk/differentials.hpp"
#include "nk/eulerian.hpp"
#include "nk/groebner.hpp"
#include "nk/hochschild.hpp"
#include "nk/kunneth.hpp"
#include "nk/matrix.hpp"
#include "nk/module.hpp"
#include "nk/monomial.hpp"
#include "nk/nk_table.hpp"
#include "nk/poly.hpp"
#include "nk/polyext.hpp"
#include "nk/ratfun.hpp"
#include "nk/ringdsl.hpp"
#include "nk/semigroup.hpp"
#include "nk/upoly.hpp"
#include "nk/witt.hpp"
