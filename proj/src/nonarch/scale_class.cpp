#include "asymptotica/nonarch/scale_class.hpp"

namespace asymptotica::nonarch {

const char* label(Magnitude m) {
  switch (m) {
    case Magnitude::Infinitesimal: return "Infinitesimal";
    case Magnitude::FiniteAppreciable: return "FiniteAppreciable";
    case Magnitude::InfinitelyLarge: return "InfinitelyLarge";
  }
  return "?";
}

const char* label(RhoScale r) {
  switch (r) {
    case RhoScale::RhoNull: return "RhoNull";
    case RhoScale::RhoInfinitesimalProper: return "RhoInfinitesimal";
    case RhoScale::RhoConstant: return "RhoConstant";
    case RhoScale::RhoFiniteOnly: return "RhoFiniteOnly";
    case RhoScale::RhoModerateOnly: return "RhoModerateOnly";
  }
  return "?";
}

ScaleClass classifyValuation(int m) {
  if (m >= 1) return {Magnitude::Infinitesimal, RhoScale::RhoInfinitesimalProper};
  if (m == 0) return {Magnitude::FiniteAppreciable, RhoScale::RhoConstant};
  return {Magnitude::InfinitelyLarge, RhoScale::RhoModerateOnly};
}

}  // namespace asymptotica::nonarch
