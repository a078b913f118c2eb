#pragma once

#include <string>
#include <vector>

#include "pfr/frame.hpp"
#include "pfr/space.hpp"

namespace pfr::builtin {

inline FramePtr trivial() { return validate_frame("1", {"0"}, {}); }
inline FramePtr two() { return validate_frame("2", {"0", "1"}, {{"0", "1"}}); }

/// Chain 0 < a < 1; the opens of the Sierpiński space.
inline FramePtr C3() { return validate_frame("C3", {"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}); }

inline FramePtr C4() { return validate_frame("C4", {"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}}); }

/// Four-element Boolean algebra with atoms u, w.
inline FramePtr D4() {
  return validate_frame("D4", {"0", "u", "w", "1"}, {{"0", "u"}, {"0", "w"}, {"u", "1"}, {"w", "1"}});
}

/// Opens ∅, {p}, {q}, {p,q}, X of a three-point space: x = {p}, y = {q}, xy = {p,q}.
inline FramePtr W5() {
  return validate_frame("W5", {"0", "x", "y", "xy", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "xy"}, {"y", "xy"}, {"xy", "1"}});
}

/// Eight-element Boolean algebra.
inline FramePtr B8() {
  return validate_frame("B8", {"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "ab"}, {"a", "ac"}, {"b", "ab"}, {"b", "bc"},
                         {"c", "ac"}, {"c", "bc"}, {"ab", "1"}, {"ac", "1"}, {"bc", "1"}});
}

/// Diamond M3: a lattice that is not distributive.
inline std::vector<std::pair<std::string, std::string>> M5_covers() {
  return {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}};
}

inline std::vector<FramePtr> named_frames() { return {trivial(), two(), C3(), C4(), D4(), W5(), B8()}; }

/// Points p, q with p open.
inline SpacePtr sierpinski() {
  return std::make_shared<const FiniteSpace>(std::vector<std::string>{"p", "q"}, std::vector<PointSet>{0b00, 0b01, 0b11},
                                             "sierpinski");
}

/// Points p, q, r with opens ∅, {p}, {q}, {p,q}, X.
inline SpacePtr three_point() {
  return std::make_shared<const FiniteSpace>(std::vector<std::string>{"p", "q", "r"},
                                             std::vector<PointSet>{0b000, 0b001, 0b010, 0b011, 0b111}, "threept");
}

}  // namespace pfr::builtin
