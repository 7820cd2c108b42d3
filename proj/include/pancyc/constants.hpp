#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "pancyc/error.hpp"

namespace pancyc {

using Count = std::uint64_t;
inline constexpr Count kSaturated = std::numeric_limits<Count>::max();

inline Count sat_mul(Count a, Count b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}
inline Count sat_add(Count a, Count b) { return a > kSaturated - b ? kSaturated : a + b; }
inline Count sat_pow(Count base, std::uint64_t e) {
  Count r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

/// a_p = 10 * 3^p
inline Count paper_a(int p) { return sat_mul(10, sat_pow(3, static_cast<std::uint64_t>(p))); }
/// b_p = 1000^p * 4^(p^2)
inline Count paper_b(int p) {
  return sat_mul(sat_pow(1000, static_cast<std::uint64_t>(p)), sat_pow(4, static_cast<std::uint64_t>(p) * p));
}

/// Level-dependent quantities of the recursive independent-set argument.
/// Paper mode evaluates the closed forms (saturating at 2^64-1); desk mode
/// keeps the structure but lets the thresholds be small.
struct Constants {
  enum class Mode { Paper, Desk };

  Mode mode = Mode::Desk;
  int p = 1;
  Count x = 1;
  Count a = 0;            // required arc length a_p * x (informational)
  Count b = 0;            // required system size b_p * x^(p(p-1)/2) (informational)
  Count a_p = 0, b_p = 0;
  Count t_good = 1;       // per-vertex demand for goodness
  Count t_assign = 1;     // per-vertex demand in the semi-triangle search
  Count target = 2;       // x^p + 1
  Count collection = 1;   // x^(p-1): size of the low-edge sub-collection

  std::optional<Count> t_good_override;
  std::optional<Count> t_assign_override;
  std::optional<Count> collection_override;

  Constants at_level(int q) const {
    Constants c = *this;
    c.p = q;
    c.recompute();
    return c;
  }

  void recompute() {
    require(p >= 1, Errc::PreconditionViolation, "level p must be at least 1");
    require(x >= 1, Errc::PreconditionViolation, "scale x must be at least 1");
    const auto up = static_cast<std::uint64_t>(p);
    a_p = paper_a(p);
    b_p = paper_b(p);
    a = sat_mul(a_p, x);
    b = sat_mul(b_p, sat_pow(x, up * (up - 1) / 2));
    Count base = p >= 2 ? sat_mul(paper_b(p - 1), sat_pow(x, (up - 1) * (up >= 2 ? up - 2 : 0) / 2)) : 1;
    target = sat_add(sat_pow(x, up), 1);
    collection = sat_pow(x, up - 1);
    if (mode == Mode::Paper) {
      t_good = sat_mul(4, base);
      t_assign = sat_add(base, 1);
    } else {
      t_good = 2;
      t_assign = t_good / 4 + 1;
    }
    if (t_good_override) {
      t_good = *t_good_override;
      if (!t_assign_override) t_assign = t_good / 4 + 1;
    }
    if (t_assign_override) t_assign = *t_assign_override;
    if (collection_override) collection = *collection_override;
    require(t_good >= 1 && t_assign >= 1, Errc::PreconditionViolation, "thresholds must be at least 1");
  }
};

inline Constants paper_constants(int p, Count x) {
  Constants c;
  c.mode = Constants::Mode::Paper;
  c.p = p;
  c.x = x;
  c.recompute();
  return c;
}

inline Constants desk_constants(int p, Count x, std::optional<Count> t_good = std::nullopt,
                                std::optional<Count> t_assign = std::nullopt,
                                std::optional<Count> collection = std::nullopt) {
  Constants c;
  c.mode = Constants::Mode::Desk;
  c.p = p;
  c.x = x;
  c.t_good_override = t_good;
  c.t_assign_override = t_assign;
  c.collection_override = collection;
  c.recompute();
  return c;
}

inline std::string mode_name(Constants::Mode m) { return m == Constants::Mode::Paper ? "paper" : "desk"; }

}  // namespace pancyc
