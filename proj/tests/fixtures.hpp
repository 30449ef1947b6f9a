#pragma once

// Hand-built systems shared across the test suites.

#include "wonder/system.hpp"

namespace wonder::fixtures {

// rank 1 on A1: sp empty, sigma = [alpha], two colors pairing (1)
inline SphericalSystem a1_rank1() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A1");
  s.sigma = {{1}};
  s.a_rows = {{"D1", {1}}, {"D2", {1}}};
  return s;
}

// rank 0 on A1: the single-color flag variety
inline SphericalSystem a1_rank0() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A1");
  return s;
}

inline SphericalSystem a1_double() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A1");
  s.sigma = {{2}};
  return s;
}

// sigma = [alpha1, alpha2] on A2 with the standard four colors
inline SphericalSystem a2_full() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A2");
  s.sigma = {{1, 0}, {0, 1}};
  s.a_rows = {{"Dp1", {1, 0}}, {"Dm1", {1, -1}}, {"Dp2", {0, 1}}, {"Dm2", {-1, 1}}};
  return s;
}

// sigma = [alpha + alpha'] on A1xA1: one merged b-color
inline SphericalSystem a1a1_diag() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A1xA1");
  s.sigma = {{1, 1}};
  return s;
}

// product of two rank-1 systems on A1xA1
inline SphericalSystem a1a1_product() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A1xA1");
  s.sigma = {{1, 0}, {0, 1}};
  s.a_rows = {{"Dp1", {1, 0}}, {"Dm1", {1, 0}}, {"Dp2", {0, 1}}, {"Dm2", {0, 1}}};
  return s;
}

// sigma = [alpha, alpha'] with the shared comb color
inline SphericalSystem a1a1_shared_comb() {
  SphericalSystem s;
  s.rs = RootSystem::parse("A1xA1");
  s.sigma = {{1, 0}, {0, 1}};
  s.a_rows = {{"D0", {1, 1}}, {"D1", {1, -1}}, {"D2", {-1, 1}}};
  return s;
}

}  // namespace wonder::fixtures
