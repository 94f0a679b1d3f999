#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace cotlar {

/// A discrete group with canonical, totally ordered, hashable elements.
/// Equality of elements is equality of group elements.
template <class G>
concept Group = requires(const G& group, const typename G::Element& a, std::size_t radius) {
  typename G::Element;
  requires std::totally_ordered<typename G::Element>;
  { group.identity() } -> std::convertible_to<typename G::Element>;
  { group.multiply(a, a) } -> std::convertible_to<typename G::Element>;
  { group.invert(a) } -> std::convertible_to<typename G::Element>;
  { group.ball(radius) } -> std::convertible_to<std::vector<typename G::Element>>;
  { group.label(a) } -> std::convertible_to<std::string>;
};

}  // namespace cotlar
