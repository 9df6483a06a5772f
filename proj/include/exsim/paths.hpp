// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file paths.hpp
 * @brief Mode labels of the two-source interferometer.
 *
 *   source L --BS_L--> A  (to region V), A' (to region E)
 *   source R --BS_R--> B  (to region V), B' (to region E, through the phase shifter)
 *   BS_V: A, B   -> D1,  D2
 *   BS_E: A', B' -> D1', D2'
 *
 * vL and vR are the unused (vacuum) input ports of BS_L and BS_R.
 */

#pragma once

#include <optional>

#include "exsim/coincidence.hpp"
#include "exsim/fock.hpp"

namespace exsim::path {

inline const ModeId L{"L"};
inline const ModeId R{"R"};
inline const ModeId vL{"vL"};
inline const ModeId vR{"vR"};
inline const ModeId A{"A"};
inline const ModeId Ap{"A'"};
inline const ModeId B{"B"};
inline const ModeId Bp{"B'"};
inline const ModeId D1{"D1"};
inline const ModeId D2{"D2"};
inline const ModeId D1p{"D1'"};
inline const ModeId D2p{"D2'"};

inline ModeId detector_mode(Detector d) { return ModeId{std::string(label(d))}; }

inline std::optional<Detector> as_detector(const ModeId& mode) {
  return detector_from_label(mode.label);
}

}  // namespace exsim::path
