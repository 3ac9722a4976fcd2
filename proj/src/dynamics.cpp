#include "josephus/dynamics.hpp"

namespace josephus {

std::string_view failure_name(Failure f) noexcept {
  switch (f) {
    case Failure::none: return "none";
    case Failure::not_morphism: return "not-morphism";
    case Failure::not_injective: return "not-injective";
    case Failure::not_surjective: return "not-surjective";
    case Failure::inverse_not_morphism: return "inverse-not-morphism";
    case Failure::outside_target: return "outside-target";
  }
  return "?";
}

}  // namespace josephus
