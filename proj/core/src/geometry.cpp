#include "cotlar/geometry.hpp"

#include <string>

#include "cotlar/error.hpp"

namespace cotlar {

std::string_view to_string(HalfSpaceSide side) {
  return side == HalfSpaceSide::Positive ? "Positive" : "Negative";
}

std::string_view to_string(SixClass c) {
  switch (c) {
    case SixClass::InWT: return "InWT";
    case SixClass::InWTs: return "InWTs";
    case SixClass::NsTimesS: return "NsTimesS";
    case SixClass::SNsS: return "SNsS";
    case SixClass::InNs: return "InNs";
    case SixClass::SNs: return "SNs";
  }
  return "?";
}

std::string_view relation_text(SixClass c) {
  switch (c) {
    case SixClass::InWT: return "g·H+ = H+";
    case SixClass::InWTs: return "g·H+ = H-";
    case SixClass::NsTimesS: return "g·H+ ⊊ H+";
    case SixClass::SNsS: return "g·H+ ⊊ H-";
    case SixClass::InNs: return "g·H- ⊊ H+";
    case SixClass::SNs: return "g·H- ⊊ H-";
  }
  return "?";
}

SixClass strict_class(HalfSpaceSide x, HalfSpaceSide y) {
  const bool xp = x == HalfSpaceSide::Positive;
  const bool yp = y == HalfSpaceSide::Positive;
  if (xp) return yp ? SixClass::NsTimesS : SixClass::SNsS;
  return yp ? SixClass::InNs : SixClass::SNs;
}

bool asserts_strict(SixClass c, HalfSpaceSide x, HalfSpaceSide y) { return strict_class(x, y) == c; }

SixClass inverse_class(SixClass c) {
  switch (c) {
    case SixClass::NsTimesS: return SixClass::SNs;
    case SixClass::SNs: return SixClass::NsTimesS;
    default: return c;
  }
}

HalfSpaceSide halfspace_side(const CoxeterSystem& system, Generator s, const CanonicalElement& g) {
  return system.is_left_descent(s, g) ? HalfSpaceSide::Negative : HalfSpaceSide::Positive;
}

std::vector<std::pair<Generator, std::uint32_t>> nested_offenders(const CoxeterSystem& system,
                                                                  Generator s) {
  if (s >= system.rank()) throw Error(ErrorCode::InvalidGenerator, "index " + std::to_string(s));
  std::vector<std::pair<Generator, std::uint32_t>> out;
  for (std::size_t i = 0; i < system.rank(); ++i) {
    const auto u = static_cast<Generator>(i);
    if (u == s) continue;
    const auto m = system.order(s, u);
    if (m != 2 && m != kInfiniteOrder) out.emplace_back(u, m);
  }
  return out;
}

bool nested_condition(const CoxeterSystem& system, Generator s) {
  return nested_offenders(system, s).empty();
}

SixClass classify(const CoxeterSystem& system, Generator s, const CanonicalElement& g) {
  if (!nested_condition(system, s)) {
    throw Error(ErrorCode::NestedConditionViolated,
                "generator '" + system.name(s) + "' has m_su outside {2, inf}");
  }
  const auto ts = system.commuting_set(s);
  if (system.in_parabolic(ts, g)) return SixClass::InWT;
  const auto gs = system.multiply(g, system.generator_element(s));
  if (system.in_parabolic(ts, gs)) return SixClass::InWTs;
  const bool left = system.is_left_descent(s, g);
  const bool right = system.is_right_descent(g, s);
  if (left) return right ? SixClass::SNsS : SixClass::SNs;
  return right ? SixClass::NsTimesS : SixClass::InNs;
}

InclusionWitness root_relation_check(const CoxeterSystem& system, Generator s,
                                     const CanonicalElement& g, std::size_t radius) {
  if (radius + g.length() + 1 > system.max_word_len()) {
    throw WordTooLong(radius + g.length() + 1, system.max_word_len());
  }
  const auto g_inv = system.invert(g);
  InclusionWitness out;
  out.verified_radius = radius;
  auto visit = [&](const CanonicalElement& h, const CanonicalElement& g_inv_h) {
    const bool base_negative = halfspace_side(system, s, h) == HalfSpaceSide::Negative;
    const bool moved_negative = halfspace_side(system, s, g_inv_h) == HalfSpaceSide::Negative;
    auto& slot = out.intersections[2 * base_negative + moved_negative];
    if (!slot) slot = h;
  };
  const auto ball = system.ball(radius);
  for (const auto& h : ball) visit(h, system.multiply(g_inv, h));
  for (const auto& k : ball) visit(system.multiply(g, k), k);
  const auto& [pp, pn, np, nn] = out.intersections;
  if (!pn && !np) {
    out.relation = SixClass::InWT;
  } else if (!pp && !nn) {
    out.relation = SixClass::InWTs;
  } else if (!np && pn) {
    out.relation = SixClass::NsTimesS;
  } else if (!pp && nn) {
    out.relation = SixClass::SNsS;
  } else if (!nn && pp) {
    out.relation = SixClass::InNs;
  } else if (!pn && np) {
    out.relation = SixClass::SNs;
  }
  return out;
}

StabilizerResult stabilizer_test(const CoxeterSystem& system, Generator s, const CanonicalElement& g,
                                 std::size_t fallback_radius) {
  if (nested_condition(system, s)) return {classify(system, s, g) == SixClass::InWT, std::nullopt};
  const auto witness = root_relation_check(system, s, g, fallback_radius);
  return {witness.relation == SixClass::InWT, fallback_radius};
}

}  // namespace cotlar
