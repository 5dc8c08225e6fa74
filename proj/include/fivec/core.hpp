#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fivec {

using Dart = std::int32_t;
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr Dart kNoDart = -1;
inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr FaceId kNoFace = -1;

enum class Errc {
  inconsistent_rotation,
  outer_face_not_found,
  disconnected,
  non_planar,
  bad_outer_face,
  non_triangular_inner_face,
  apex_degree_not_5,
  result_not_5c,
  generation_failed,
  invalid_labeling,
  invalid_wood,
  propagation_conflict,
  nonterminating_path,
  infeasible,
  non_unique_star,
  not_accessible,
  not_5c,
  cycle_detected,
  non_positive_weight,
  no_automorphism_provided,
  parse_error,
  check_failed,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

/// Report-style validation result: empty means all checks passed.
struct Violation {
  std::string rule;
  std::string detail;
};

struct Report {
  std::vector<Violation> items;
  bool ok() const { return items.empty(); }
  void add(std::string rule, std::string detail) {
    items.push_back({std::move(rule), std::move(detail)});
  }
  std::string to_string() const;
};

/// Canonical representative in 0..4.
inline int mod5(int x) {
  x %= 5;
  return x < 0 ? x + 5 : x;
}

/// Label jump delta in 0..4 with a + delta == b (mod 5).
inline int jump5(int a, int b) { return mod5(b - a); }

}  // namespace fivec
