// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_GENTLECERT_HPP
#define GENTLECERT_GENTLECERT_HPP

#include "gentlecert/certify.hpp"
#include "gentlecert/gentle_povm.hpp"
#include "gentlecert/harness.hpp"
#include "gentlecert/hermitian_basis.hpp"
#include "gentlecert/lowerbound.hpp"
#include "gentlecert/rng.hpp"
#include "gentlecert/serialize.hpp"
#include "gentlecert/spectral.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/superop.hpp"
#include "gentlecert/two_design.hpp"
#include "gentlecert/types.hpp"

#endif  // GENTLECERT_GENTLECERT_HPP
