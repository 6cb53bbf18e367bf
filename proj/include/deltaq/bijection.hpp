#pragma once

#include "deltaq/dyck.hpp"
#include "deltaq/sequences.hpp"

namespace deltaq {

/// Reads a decorated path as an M-sequence. Every row starting a vertical
/// run of length b with area a gives (a, b) at its North step; every other
/// undecorated row with area c gives (c, 0), carried North-East along its
/// diagonal to the first point where an East step starts and attached to
/// the East step ending there. Pairs are listed in path order, followed by
/// (0, 0) when the origin is undecorated. The decorated area equals the
/// weight of the image.
MSequence phi(const DecoratedDyckPath& d);

/// Inverse of phi. Throws std::invalid_argument naming the first violated
/// inequality when s is not an M-sequence, and std::logic_error if a label
/// cannot be placed (which would contradict bijectivity).
DecoratedDyckPath phi_inverse(const MSequence& s);

}  // namespace deltaq
