#pragma once

#include <string_view>

#include "bturan/pattern.hpp"

namespace bturan {

// Pattern literal grammar (whitespace is not allowed anywhere):
//
//   literal := family | pattern
//   family  := "T" INT "," INT                  T_{k,l}, 1 <= k <= l
//   pattern := path | star | spider | dstar | cat | union
//   path    := "P" INT                          path on INT >= 2 vertices
//   star    := "K1," INT | "K2"                 K_{1,k}; K2 is K_{1,1}
//   spider  := "S" leg ("," leg)+               at least 3 legs after expansion
//   leg     := INT | INT "*" INT                h*l expands to h legs of length l
//   dstar   := "D" INT "," INT                  double star D_{s,t}
//   cat     := "Prst:" INT "," INT "," INT      caterpillar P_{r,s,t}
//   union   := "U(" pattern ("," pattern)+ ")"  vertex-disjoint union
//   INT     := [0-9]+
//
// Examples: P5, K1,4, S3,1,1, S2,3*1, D2,2, Prst:1,1,2, T3,3, U(P3,K2).

/// Throws InvalidArgument naming the offset of the first unexpected character.
PatternFamily parse_pattern_literal(std::string_view text);

}  // namespace bturan
