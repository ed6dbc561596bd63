///
/// \file vhlfiht.hpp
///
/// Umbrella header.
///
#ifndef VHLFIHT_VHLFIHT_HPP
#define VHLFIHT_VHLFIHT_HPP

#include "vhlfiht/types.hpp"
#include "vhlfiht/version.hpp"
#include "vhlfiht/hankel.hpp"
#include "vhlfiht/fft.hpp"
#include "vhlfiht/fast_hankel.hpp"
#include "vhlfiht/model.hpp"
#include "vhlfiht/lowrank.hpp"
#include "vhlfiht/solver.hpp"
#include "vhlfiht/diagnostics.hpp"
#include "vhlfiht/experiment.hpp"

#endif /* VHLFIHT_VHLFIHT_HPP */
