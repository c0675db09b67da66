#pragma once

#include <string>
#include <vector>

#include "gammakit/perm.hpp"

namespace gammakit {

// The three-way partition of TildeD_{n,i} used to prove the excedance
// recurrence d_{n,i}^B = d_{n,i-1}^B + d_{n-1,i-1}^B.
enum class TildeTag {
  B1,  // -n is a singleton
  B2,  // no singletons at all
  B3,  // some singleton, but -n is not one
};

// Requires sigma in TildeD_{n,i} for some i >= 1.
TildeTag tilde_tag(const SignedPerm& sigma);

// Deletes the singleton cycle (-n); lands in TildeD_{n-1,i-1}.
SignedPerm phi1(const SignedPerm& sigma);
SignedPerm phi1_inverse(const SignedPerm& sigma);

// Order-preserving relabel of the cycle entries of a singleton-free sigma in
// TildeD_{n,i}: positive values shift up by one, -(n-i+1) becomes 1, deeper
// negatives stay. Preserves exc; i is the negative-entry count of sigma.
SignedPerm phi2(const SignedPerm& sigma, int i);
SignedPerm phi2_inverse(const SignedPerm& sigma, int i);

// Singleton cycles (-k) shift to (-(k+1)); the remaining cycle entries are
// transported by the order-preserving map between the two value sets.
// Preserves exc; i is the negative-entry count of sigma.
SignedPerm phi3(const SignedPerm& sigma, int i);
SignedPerm phi3_inverse(const SignedPerm& sigma, int i);

enum class CycleValueClass {
  CycleDoubleAscent,
  CycleDoubleDescent,
  CyclePeak,
  CycleValley,
  None,  // cycle minima and fixed points
};

CycleValueClass classify_cycle_value(const Perm& p, int x);

// Modified Foata-Strehl move: a cycle double ascent x hops forward to the
// first slot (c_j, c_{j+1}) with c_j > x > c_{j+1}; a cycle double descent
// hops backward to the last slot with c_j < x < c_{j+1}; peaks, valleys,
// minima and fixed points stay put.
Perm mfs_action(const Perm& p, int x);

}  // namespace gammakit
