// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "keccak/bench.hpp"
#include "keccak/errors.hpp"
#include "keccak/hex.hpp"
#include "keccak/kat.hpp"
#include "keccak/permutation.hpp"
#include "keccak/selftest.hpp"
#include "keccak/sha3.hpp"
#include "keccak/sponge.hpp"
#include "keccak/state.hpp"
