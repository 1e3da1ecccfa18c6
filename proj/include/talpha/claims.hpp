#pragma once

#include <string>
#include <utility>
#include <vector>

#include "talpha/error.hpp"

namespace talpha {

/// One checked structural claim: an id, its outcome and a short note.
struct ClaimCheck {
  std::string id;
  bool ok = true;
  std::string detail;
};

using Transcript = std::vector<ClaimCheck>;

/// A structural claim the pipeline depends on did not hold.
class AssertionFailed : public Error {
 public:
  AssertionFailed(std::string claim, const std::string& detail, Transcript transcript)
      : Error("assertion " + claim + " failed: " + detail), claim_(std::move(claim)), transcript_(std::move(transcript)) {}
  const std::string& claim() const { return claim_; }
  const Transcript& transcript() const { return transcript_; }

 private:
  std::string claim_;
  Transcript transcript_;
};

/// Appends a check; throws AssertionFailed (carrying the whole transcript) when it fails.
inline void require_claim(Transcript& t, const std::string& id, bool ok, const std::string& detail = {}) {
  t.push_back({id, ok, detail});
  if (!ok) throw AssertionFailed(id, detail, t);
}

}  // namespace talpha
