#pragma once

#include <optional>
#include <vector>

#include "g2cy/parabolic.hpp"

namespace g2cy {

/// One published row: a parabolic and the summands of E in the printed order.
struct ReferenceRow {
  int number;
  G2Parabolic parabolic;
  std::vector<Weight> summands;
};

/// Published invariants for the threefolds where they were computed.
struct ReportedInvariants {
  G2Parabolic parabolic;
  std::vector<Weight> summands;
  Int deg, c2H, h11, h12;
};

/// Table n lists complete intersections of dimension 6 - n (table 1: fivefolds ... table 4: K3 surfaces).
inline int table_dimension(int table) {
  if (table < 1 || table > 4) throw Error(ErrorCode::OutOfRange, "table number must be 1..4");
  return 6 - table;
}

inline const std::vector<ReferenceRow>& reference_table(int table) {
  using enum G2Parabolic;
  static const std::vector<ReferenceRow> t1 = {
      {1, B, {{2, 2}}},
  };
  static const std::vector<ReferenceRow> t2 = {
      {1, P1, {{3, 0}}},
      {2, P2, {{0, 5}}},
      {3, B, {{0, 1}, {2, 1}}},
      {4, B, {{1, 1}, {1, 1}}},
      {5, B, {{0, 2}, {2, 0}}},
  };
  static const std::vector<ReferenceRow> t3 = {
      {1, P1, {{1, 1}}},
      {2, P1, {{1, 0}, {2, 0}}},
      {3, P2, {{1, 1}}},
      {4, P2, {{0, 1}, {0, 4}}},
      {5, P2, {{0, 2}, {0, 3}}},
      {6, B, {{0, 1}, {0, 1}, {2, 0}}},
      {7, B, {{0, 1}, {1, 0}, {1, 1}}},
      {8, B, {{0, 2}, {1, 0}, {1, 0}}},
  };
  static const std::vector<ReferenceRow> t4 = {
      {1, P1, {{0, 2}}},
      {2, P1, {{0, 1}, {2, 0}}},
      {3, P1, {{1, 0}, {1, 0}, {1, 0}}},
      {4, P2, {{1, 0}, {0, 2}}},
      {5, P2, {{0, 1}, {0, 1}, {0, 3}}},
      {6, P2, {{0, 1}, {0, 2}, {0, 2}}},
      {7, B, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}},
  };
  switch (table) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
  }
  throw Error(ErrorCode::OutOfRange, "table number must be 1..4");
}

inline const std::vector<ReportedInvariants>& reported_invariants() {
  using enum G2Parabolic;
  static const std::vector<ReportedInvariants> rows = {
      {P1, {{1, 1}}, 42, 84, 1, 50},
      {P2, {{1, 1}}, 14, 50, 1, 50},
  };
  return rows;
}

}  // namespace g2cy
