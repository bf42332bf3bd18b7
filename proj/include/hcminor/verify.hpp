#ifndef HCMINOR_VERIFY_HPP
#define HCMINOR_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hcminor/graph.hpp"
#include "hcminor/model.hpp"

namespace hcminor {

enum class ViolationCode {
  BadVertexWidth,
  BranchDisconnected,
  BranchOverlap,
  PathNotPath,
  PathEndpointWrong,
  PathInternalHitsBranch,
  PathsIntersect,
  EdgeMissing,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;

  bool has(ViolationCode code) const;
};

// Checks a claimed minor model against the guest using only Q_d adjacency.
// Never throws on malformed models; problems become violations.
VerifyReport verify(const Graph& g, const MinorModel& model);

}  // namespace hcminor

#endif  // HCMINOR_VERIFY_HPP
