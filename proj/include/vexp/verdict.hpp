#pragma once

namespace vexp {

// Resolution-bounded decision outcome. A desk tool searching a continuous
// parameter box can certify a witness or a violation only at its resolution;
// anything else stays inconclusive.
enum class VerdictKind { WitnessFound, ViolationFound, Inconclusive };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::WitnessFound:
      return "WitnessFound";
    case VerdictKind::ViolationFound:
      return "ViolationFound";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace vexp
